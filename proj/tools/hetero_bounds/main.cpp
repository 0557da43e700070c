// hetero-bounds: certified bounds for Fisher-Kolmogorov heteroclinic orbits.
//
// Exit codes: 0 ok, 1 runtime failure or failed oracle check, 2 invalid
// configuration, 3 ceiling exceeded without --expensive, 4 certificate failed,
// 5 hypothesis violated.

#include "commands.hpp"

#include "hetero/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_output(CLI::App* sub, hb::RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out, "Output path (written atomically; default stdout)");
  sub->add_option("--digits", cfg.digits, "Significant digits of decimal columns");
}

void add_oracle(CLI::App* sub, hb::RunConfig& cfg) {
  sub->add_option("--tol", cfg.tol, "Oracle local error tolerance");
}

}  // namespace

int main(int argc, char** argv) {
  hb::RunConfig cfg;
  CLI::App app{"Certified bounds for heteroclinic orbits of Fisher-Kolmogorov systems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hetero-bounds 0.1.0");

  auto* bounds = app.add_subcommand("bounds", "Phase-plane bounds h_n < gamma < R_m on a grid");
  bounds->add_option("--preset", cfg.preset, "Reaction preset");
  bounds->add_option("--r", cfg.r, "Wave parameter r = p/q in (0, sqrt2 - 1]");
  bounds->add_option("--n", cfg.n, "Taylor degree of the lower bound (default 20)");
  bounds->add_option("--m", cfg.m, "Pade order of the upper bound");
  bounds->add_option("--grid", cfg.grid, "Grid points x = j/grid, j = 1..grid");
  bounds->add_flag("--no-oracle", cfg.no_oracle, "Skip the oracle column");
  bounds->add_flag("--expensive", cfg.expensive, "Lift the degree ceilings");
  add_oracle(bounds, cfg);
  add_output(bounds, cfg);

  auto* certify = app.add_subcommand("certify", "Build or verify a certificate bundle");
  certify->add_option("--lower", cfg.lower, "Certify h_n < gamma");
  certify->add_option("--upper", cfg.upper, "Certify gamma < R_m and R_m < R_{m-1}");
  certify->add_option("--verify", cfg.verify, "Re-verify an existing bundle");
  certify->add_flag("--expensive", cfg.expensive, "Lift the certificate ceilings (lower 30, upper 10)");
  certify->add_option("--out", cfg.out, "Bundle path (written atomically; default stdout)");

  auto* timeparam = app.add_subcommand("timeparam", "Time-parametrized bounds for x(t), x(0) = 1/2");
  timeparam->add_option("--preset", cfg.preset, "Reaction preset");
  timeparam->add_option("--r", cfg.r, "Wave parameter r = p/q");
  timeparam->add_option("--n", cfg.n, "Phi-Pade order for X_n (2..8), or a range a..b with --limits");
  timeparam->add_option("--t-min", cfg.t_min, "First time");
  timeparam->add_option("--t-max", cfg.t_max, "Last time");
  timeparam->add_option("--t-grid", cfg.t_grid, "Number of times");
  timeparam->add_flag("--exact-case", cfg.exact_case, "Compare with the closed form at r = 1/sqrt(6)");
  timeparam->add_flag("--limits", cfg.limits, "Table of limit errors E_n");
  timeparam->add_flag("--expensive", cfg.expensive, "Lift the Phi-Pade ceiling (8)");
  add_oracle(timeparam, cfg);
  add_output(timeparam, cfg);

  auto* general = app.add_subcommand("general", "Lambda bounds, phase bounds and time sandwich for a preset");
  general->add_option("--preset", cfg.preset, "fisher, nws or zeldovich(alpha)");
  general->add_option("--r", cfg.r, "c = 1/r - r");
  general->add_option("--grid", cfg.grid, "Phase rows at x = j/grid, j = 1..grid-1")->default_val(20);
  general->add_option("--domain", cfg.domain, "Domain for the f'' < 0 check, e.g. [0,1] (default: the real line)");
  general->add_option("--t-min", cfg.t_min, "First time")->default_val("-5");
  general->add_option("--t-max", cfg.t_max, "Last time")->default_val("5");
  general->add_option("--t-grid", cfg.t_grid, "Number of times")->default_val(11);
  general->add_flag("--no-certify", cfg.no_certify, "Allow presets that fail the hypotheses (oracle rows only)");
  add_oracle(general, cfg);
  add_output(general, cfg);

  auto* check = app.add_subcommand("oracle-check", "Check every bound against the oracle");
  check->add_option("--preset", cfg.preset, "Reaction preset");
  check->add_option("--r", cfg.r, "Wave parameter r = p/q");
  check->add_option("--n", cfg.n, "Taylor degree (default 20)");
  check->add_option("--m", cfg.m, "Pade order");
  check->add_option("--grid", cfg.grid, "Interior phase points x = j/(grid + 1)");
  check->add_option("--t-min", cfg.t_min, "First time");
  check->add_option("--t-max", cfg.t_max, "Last time");
  check->add_option("--t-grid", cfg.t_grid, "Number of times");
  check->add_flag("--expensive", cfg.expensive, "Lift the degree ceilings");
  add_oracle(check, cfg);
  add_output(check, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? hb::kOk : hb::kInvalidConfig;
  }

  try {
    if (bounds->parsed()) return cfg.command = "bounds", hb::cmd_bounds(cfg);
    if (certify->parsed()) return cfg.command = "certify", hb::cmd_certify(cfg);
    if (timeparam->parsed()) return cfg.command = "timeparam", hb::cmd_timeparam(cfg);
    if (general->parsed()) return cfg.command = "general", hb::cmd_general(cfg);
    if (check->parsed()) return cfg.command = "oracle-check", hb::cmd_oracle_check(cfg);
  } catch (const hb::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hb::kInvalidConfig;
  } catch (const hb::CeilingExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hb::kCeiling;
  } catch (const hetero::CertificateFailed& e) {
    std::cerr << "error: " << e.what() << " (stage " << e.stage() << ")\n";
    return hb::kCertificateFailed;
  } catch (const hetero::HypothesisViolated& e) {
    std::cerr << "error: " << e.what() << "; pass --no-certify for oracle-only output\n";
    return hb::kHypothesis;
  } catch (const hetero::OutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hb::kInvalidConfig;
  } catch (const hetero::SpeedTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hb::kInvalidConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hb::kInvalidConfig;
  } catch (const hb::CheckFailed& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return hb::kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hb::kFailure;
  }
  return hb::kFailure;
}
