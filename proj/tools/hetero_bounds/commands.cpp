#include "commands.hpp"

#include "hetero/genbounds/genbounds.hpp"
#include "hetero/oracle/oracle.hpp"
#include "hetero/ratpoly/serialize.hpp"
#include "hetero/separatrix/separatrix.hpp"
#include "hetero/timeparam/timeparam.hpp"

#include <fstream>
#include <future>
#include <iostream>

namespace hb {

using namespace hetero;

namespace {

constexpr int kBoundsLowerCeiling = 100;
constexpr int kBoundsUpperCeiling = 40;
constexpr int kCertifyLowerCeiling = 30;
constexpr int kCertifyUpperCeiling = 10;
constexpr int kPhiPadeCeiling = 8;

const char* kOracleProvenance = "numerical reference: Taylor-series integration in 160-digit MPFR (estimate, not a bound)";
const char* kErrorProvenance = "oracle error estimate (tol run vs tighter reference run)";

int emit(const Table& t, const RunConfig& cfg) {
  if (cfg.format == "json") write_atomic(cfg.out, t.to_json().dump(2) + "\n");
  else write_atomic(cfg.out, t.csv());
  return kOk;
}

int parse_int(const std::string& text, int fallback, const char* flag) {
  if (text.empty()) return fallback;
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string(flag) + " expects an integer, got '" + text + "'");
}

std::pair<int, int> parse_range(const std::string& text, std::pair<int, int> fallback) {
  if (text.empty()) return fallback;
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = parse_int(text, 0, "--n");
    return {v, v};
  }
  int a = parse_int(text.substr(0, dots), 0, "--n");
  int b = parse_int(text.substr(dots + 2), 0, "--n");
  if (a > b) throw UsageError("--n range '" + text + "' is empty");
  return {a, b};
}

OracleOptions oracle_options(const RunConfig& cfg) {
  OracleOptions opt;
  try {
    opt.tol = Real(cfg.tol);
  } catch (const std::exception&) {
    throw UsageError("--tol expects a number, got '" + cfg.tol + "'");
  }
  if (!(opt.tol > 0) || opt.tol > Real("1e-3")) throw UsageError("--tol must lie in (0, 1e-3]");
  opt.reference_tol = opt.tol * Real("1e-25");
  return opt;
}

WaveParam fisher_param(const RunConfig& cfg) {
  if (cfg.r.empty()) throw UsageError("--r is required");
  return make_wave_param(parse_r(cfg.r));
}

void require_fisher(const RunConfig& cfg) {
  if (cfg.preset != "fisher")
    throw UsageError(cfg.command + " is specific to --preset fisher; use `general` for '" + cfg.preset + "'");
}

std::vector<Rat> time_grid(const RunConfig& cfg) {
  Rat a = parse_rat(cfg.t_min), b = parse_rat(cfg.t_max);
  if (cfg.t_grid < 1) throw UsageError("--t-grid must be >= 1");
  if (cfg.t_grid > 1 && a >= b) throw UsageError("--t-min must be below --t-max");
  std::vector<Rat> ts;
  for (int k = 0; k < cfg.t_grid; ++k) ts.push_back(cfg.t_grid == 1 ? a : Rat(a + (b - a) * k / (cfg.t_grid - 1)));
  return ts;
}

void check_common(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json") throw UsageError("--format must be csv or json");
  if (cfg.digits < 5 || cfg.digits > 150) throw UsageError("--digits must lie in [5, 150]");
}

/// +1 / -1 when the oracle value is clear of the enclosure by more than its error, else 0.
int resolved_sign(const Real& value, const Real& error, const Enclosure& e) {
  if (value - error > to_real(e.hi)) return 1;
  if (value + error < to_real(e.lo)) return -1;
  return 0;
}

int resolved_sign(const Real& value, const Real& error, const Real& b) {
  if (value - error > b) return 1;
  if (value + error < b) return -1;
  return 0;
}

std::string sign_str(int s) { return s > 0 ? "1" : (s < 0 ? "-1" : "0"); }

}  // namespace

int cmd_bounds(const RunConfig& cfg) {
  check_common(cfg);
  require_fisher(cfg);
  WaveParam wp = fisher_param(cfg);
  const int n = parse_int(cfg.n, 20, "--n");
  const int m = cfg.m;
  if (n < 1 || m < 1) throw UsageError("--n and --m must be >= 1");
  if (cfg.grid < 1) throw UsageError("--grid must be >= 1");
  if (!cfg.expensive && (n > kBoundsLowerCeiling || m > kBoundsUpperCeiling))
    throw CeilingExceeded("bounds ceiling is n <= " + std::to_string(kBoundsLowerCeiling) + ", m <= " +
                          std::to_string(kBoundsUpperCeiling) + "; pass --expensive to go beyond");

  TaylorSeparatrix ts = taylor_coeffs(wp.r, n);
  PadeBound pb = pade_bound(wp.r, m);

  std::vector<Rat> xs;
  for (int j = 1; j <= cfg.grid; ++j) xs.push_back(make_rat(Int(j), Int(cfg.grid)));
  struct Exact {
    Rat h, R;
  };
  std::vector<Exact> ex(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { ex[i] = {ts.eval(xs[i]), pb.eval(xs[i])}; });

  std::optional<OrbitSample> sample;
  if (!cfg.no_oracle) {
    std::vector<Rat> interior;
    for (const auto& x : xs)
      if (x < 1) interior.push_back(x);
    if (!interior.empty()) sample = integrate_phase(preset("fisher"), wp.r, interior, oracle_options(cfg));
  }

  Table t;
  t.meta = {{"command", "bounds"}, {"preset", "fisher"}, {"r", to_string(wp.r)}, {"c", to_string(wp.c)},
            {"n", n}, {"m", m}, {"grid", cfg.grid}};
  if (sample) t.meta["oracle_tol"] = cfg.tol;
  t.add_column("x", "grid point j/grid");
  t.add_column("h_n", "lower bound: degree-n Taylor polynomial of the unstable manifold at the saddle (exact)");
  t.add_column("h_n_decimal", "correctly rounded h_n");
  t.add_column("R_m", "upper bound: r x (x - 1) A_m / C_m from the (m, m) Pade approximant (exact)");
  t.add_column("R_m_decimal", "correctly rounded R_m");
  t.add_column("gap_decimal", "R_m - h_n, correctly rounded");
  if (!cfg.no_oracle) {
    t.add_column("oracle", kOracleProvenance);
    t.add_column("oracle_error", kErrorProvenance);
    t.add_column("inside", "yes if h_n < oracle < R_m beyond the oracle error");
  }
  const int d = cfg.digits;
  std::vector<std::vector<std::string>> rows(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    const auto& [h, R] = ex[i];
    rows[i] = {to_string(xs[i]), to_string(h), decimal(h, d), to_string(R), decimal(R, d), decimal(Rat(R - h), d)};
  });
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (cfg.no_oracle) continue;
    if (xs[i] == 1) {
      // gamma(1) = 0 = R_m(1): the node itself.
      rows[i].insert(rows[i].end(), {decimal(Rat(0), d), decimal(Rat(0), d), "endpoint"});
      continue;
    }
    const Real& v = sample->values[i];
    const Real& e = sample->errors[i];
    int lo = resolved_sign(v, e, to_real(ex[i].h));
    int hi = resolved_sign(v, e, to_real(ex[i].R));
    std::string inside = (lo > 0 && hi < 0) ? "yes" : ((lo < 0 || hi > 0) ? "no" : "unresolved");
    rows[i].insert(rows[i].end(), {decimal(v, d), decimal(e, 3), inside});
  }
  t.rows = std::move(rows);
  return emit(t, cfg);
}

namespace {

json stage(const std::string& name, const PositivityCertificate& c) { return {{"name", name}, {"certificate", to_json(c)}}; }

/// Deep re-verification of every stage; returns the failures.
std::vector<std::string> verify_stages(const json& entry) {
  std::vector<std::string> failures;
  for (const auto& s : entry.at("stages")) {
    PositivityCertificate c = certificate_from_json(s.at("certificate"));
    VerifyResult v = verify(c, true);
    if (!v) failures.push_back(entry.at("kind").get<std::string>() + "/" + s.at("name").get<std::string>() + ": " + v.reason);
  }
  return failures;
}

int verify_bundle(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw UsageError("cannot read bundle " + path);
  json bundle;
  try {
    bundle = json::parse(is);
  } catch (const std::exception& e) {
    throw UsageError("bundle " + path + " is not valid JSON: " + e.what());
  }
  if (!bundle.contains("certificates")) throw UsageError("bundle " + path + " has no certificates");
  std::vector<std::string> failures;
  std::size_t stages = 0;
  for (const auto& entry : bundle.at("certificates")) {
    stages += entry.at("stages").size();
    for (auto& f : verify_stages(entry)) failures.push_back(std::move(f));
  }
  for (const auto& f : failures) std::cerr << "verify failed: " << f << "\n";
  std::cerr << stages - failures.size() << "/" << stages << " stages verified\n";
  return failures.empty() ? kOk : kCertificateFailed;
}

json lower_entry(int n) {
  LowerCertificate lc = lower_certificate(n);
  json stages = json::array({stage("contact", lc.contact_cert), stage("endpoint", lc.endpoint_cert)});
  for (std::size_t k = 0; k < lc.coefficient_certs.size(); ++k)
    stages.push_back(stage("h_" + std::to_string(k + 2), lc.coefficient_certs[k]));
  return {{"kind", "lower"}, {"n", n}, {"claim", "h_n < gamma on (0, 1) for every r > 0"},
          {"seconds", lc.seconds}, {"stages", stages}};
}

json upper_entries(int m) {
  json out = json::array();
  UpperCertificate uc = upper_certificate(m);
  json e = {{"kind", "upper"}, {"n", m}, {"claim", "gamma < R_n on (0, 1) for every r > 0"}, {"seconds", uc.seconds},
            {"r_power", uc.r_power}, {"x_power", uc.x_power},
            {"discriminant_degrees", {{"B", uc.dis_degree_B}, {"C", uc.dis_degree_C}}}};
  if (uc.table_B && uc.table_C) e["published_degrees"] = {{"B", *uc.table_B}, {"C", *uc.table_C}};
  e["stages"] = json::array({stage("B", uc.B_cert), stage("C", uc.C_cert)});
  out.push_back(e);
  if (m >= 2) {
    OrderingCertificate oc = ordering_check(uc.bound, pade_bound(m - 1));
    out.push_back({{"kind", "ordering"}, {"k", m}, {"claim", "R_k < R_{k-1} on (0, 1) for every r > 0"},
                   {"x_power", oc.x_power}, {"r_power", oc.r_power}, {"stages", json::array({stage("D", oc.D_cert)})}});
  }
  return out;
}

}  // namespace

int cmd_certify(const RunConfig& cfg) {
  if (!cfg.verify.empty()) {
    if (cfg.lower || cfg.upper) throw UsageError("--verify cannot be combined with --lower/--upper");
    return verify_bundle(cfg.verify);
  }
  if (!cfg.lower && !cfg.upper) throw UsageError("certify needs --lower N, --upper M or --verify FILE");
  if (cfg.lower && *cfg.lower < 2) throw UsageError("--lower must be >= 2");
  if (cfg.upper && *cfg.upper < 1) throw UsageError("--upper must be >= 1");
  if (!cfg.expensive) {
    if (cfg.lower && *cfg.lower > kCertifyLowerCeiling)
      throw CeilingExceeded("--lower " + std::to_string(*cfg.lower) + " exceeds the ceiling " +
                            std::to_string(kCertifyLowerCeiling) + "; pass --expensive");
    if (cfg.upper && *cfg.upper > kCertifyUpperCeiling)
      throw CeilingExceeded("--upper " + std::to_string(*cfg.upper) + " exceeds the ceiling " +
                            std::to_string(kCertifyUpperCeiling) + "; pass --expensive");
  }

  const bool concurrent = cfg.lower && cfg.upper && thread_count() > 1;
  const auto policy = concurrent ? std::launch::async : std::launch::deferred;
  std::future<json> lower, upper;
  if (cfg.lower) lower = std::async(policy, lower_entry, *cfg.lower);
  if (cfg.upper) upper = std::async(policy, upper_entries, *cfg.upper);

  json certs = json::array();
  if (lower.valid()) certs.push_back(lower.get());
  if (upper.valid())
    for (auto& e : upper.get()) certs.push_back(std::move(e));

  std::vector<std::string> failures;
  for (const auto& e : certs)
    for (auto& f : verify_stages(e)) failures.push_back(std::move(f));

  json bundle = {{"format", "hetero-bounds certificate bundle"}, {"version", 1}};
  json inputs = json::object();
  if (cfg.lower) inputs["lower"] = *cfg.lower;
  if (cfg.upper) inputs["upper"] = *cfg.upper;
  bundle["inputs"] = inputs;
  bundle["certificates"] = certs;
  bundle["verified"] = failures.empty();
  write_atomic(cfg.out, bundle.dump(2) + "\n");
  for (const auto& f : failures) std::cerr << "certificate failed at " << f << "\n";
  return failures.empty() ? kOk : kCertificateFailed;
}

namespace {

int timeparam_exact_case(const RunConfig& cfg) {
  if (!cfg.r.empty()) throw UsageError("--exact-case fixes r = 1/sqrt(6); drop --r");
  std::vector<Rat> ts = time_grid(cfg);
  std::vector<Real> tr;
  for (const auto& t : ts) tr.push_back(to_real(t));
  const Real r = 1 / sqrt(Real(6));
  const Real c = 5 / sqrt(Real(6));
  OrbitSample s = integrate_time(preset("fisher"), c, tr, oracle_options(cfg));

  Table t;
  t.meta = {{"command", "timeparam"}, {"mode", "exact-case"}, {"r", "1/sqrt(6)"}, {"c", "5/sqrt(6)"}};
  t.add_column("t", "time grid");
  t.add_column("X", "closed form X = (2 + 2sqrt2 + e^{rt}) e^{rt} / (1 + sqrt2 + e^{rt})^2, exact solution at r = 1/sqrt(6)");
  t.add_column("oracle", kOracleProvenance);
  t.add_column("oracle_error", kErrorProvenance);
  t.add_column("abs_difference", "|oracle - X|");
  Real worst = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    Real X = closed_form_X(r, tr[i]);
    Real diff = abs(s.values[i] - X);
    if (diff > worst) worst = diff;
    t.rows.push_back({to_string(ts[i]), decimal(X, cfg.digits), decimal(s.values[i], cfg.digits), decimal(s.errors[i], 3),
                      decimal(diff, 3)});
  }
  t.meta["max_abs_difference"] = decimal(worst, 3);
  return emit(t, cfg);
}

int timeparam_limits(const RunConfig& cfg) {
  auto [a, b] = parse_range(cfg.n, {2, 8});
  if (a < 2) throw UsageError("--n must start at 2 or above");
  if (b > kPhiPadeCeiling && !cfg.expensive)
    throw CeilingExceeded("Phi-Pade order above " + std::to_string(kPhiPadeCeiling) + " needs --expensive");
  std::vector<int> ns;
  for (int k = a; k <= b; ++k) ns.push_back(k);
  LimitTable lt = limit_errors(ns);

  Table t;
  t.meta = {{"command", "timeparam"},   {"mode", "limits"},
            {"ordered", lt.ordered},    {"decreasing", lt.decreasing},
            {"E_2_closed_form", "3 - 4 sqrt(5) / 3"}, {"E_2_closed_form_decimal", decimal([](unsigned bits) { return enclose(e2_closed_form(), bits); }, 17)}};
  t.add_column("n", "order of the (n, n) Phi-Pade approximant");
  t.add_column("b_n", "leading numerator coefficient b_n(r) (exact)");
  t.add_column("c_n", "leading denominator coefficient c_n(r) (exact)");
  t.add_column("E_n", "max over r in (0, 1/sqrt6) of b_n/c_n - 1 (numerical maximization)");
  t.add_column("argmax_r", "where the maximum is attained");
  for (const auto& row : lt.rows) {
    char e[64], x[64];
    std::snprintf(e, sizeof e, "%.17g", row.E);
    std::snprintf(x, sizeof x, "%.17g", row.argmax);
    t.rows.push_back({std::to_string(row.n), to_string(row.b), to_string(row.c), e, x});
  }
  return emit(t, cfg);
}

}  // namespace

int cmd_timeparam(const RunConfig& cfg) {
  check_common(cfg);
  require_fisher(cfg);
  if (cfg.exact_case && cfg.limits) throw UsageError("--exact-case and --limits are exclusive");
  if (cfg.exact_case) return timeparam_exact_case(cfg);
  if (cfg.limits) return timeparam_limits(cfg);

  WaveParam wp = fisher_param(cfg);
  const TrichotomyCase which = classify(wp.r);
  std::optional<RescaledBound> xn;
  int n = 0;
  if (!cfg.n.empty()) {
    n = parse_int(cfg.n, 0, "--n");
    if (n < 2) throw UsageError("--n must be >= 2");
    if (n > kPhiPadeCeiling && !cfg.expensive)
      throw CeilingExceeded("Phi-Pade order above " + std::to_string(kPhiPadeCeiling) + " needs --expensive");
    if (which != TrichotomyCase::Below) throw UsageError("X_n needs r < 1/sqrt(6)");
    xn = rescale_rho0(phi_pade(n), wp.r, make_rat(1, pow(Int(10), static_cast<unsigned>(cfg.digits + 20))));
  }
  std::vector<Rat> ts = time_grid(cfg);
  OrbitSample s = integrate_time(preset("fisher"), wp.r, ts, oracle_options(cfg));

  const std::string xn_name = "X_" + std::to_string(n);
  Table t;
  t.meta = {{"command", "timeparam"}, {"preset", "fisher"}, {"r", to_string(wp.r)}, {"c", to_string(wp.c)},
            {"case", to_string(which)}};
  if (xn) t.meta["rho0"] = {{"lo", to_string(xn->rho_lo)}, {"hi", to_string(xn->rho_hi)}};
  t.add_column("t", "time grid");
  t.add_column("U", "crude bound from h_2: U = (2r^2 + 1) / (1 + (4r^2 + 1) e^{-rt}), sgn(x - U) = -sgn(t)");
  t.add_column("X", "closed-form curve X, sgn(x - X) = -sgn(t), 0, sgn(t) for 6r^2 <, =, > 1");
  if (xn) t.add_column(xn_name, "rescaled Phi-Pade bound X_n, sgn(x - X_n) = -sgn(t) for r < 1/sqrt6");
  t.add_column("oracle", kOracleProvenance);
  t.add_column("oracle_error", kErrorProvenance);
  t.add_column("sign_x_minus_U", "observed sign, 0 if within the oracle error");
  t.add_column("sign_x_minus_X", "observed sign, 0 if within the oracle error");
  if (xn) t.add_column("sign_x_minus_" + xn_name, "observed sign, 0 if within the oracle error");
  t.add_column("lower", "best certified lower bound at t");
  t.add_column("lower_source", "bound attaining the lower column");
  t.add_column("upper", "best certified upper bound at t");
  t.add_column("upper_source", "bound attaining the upper column");

  const int d = cfg.digits;
  const int x_pred = which == TrichotomyCase::Below ? -1 : (which == TrichotomyCase::Above ? 1 : 0);
  std::vector<std::vector<std::string>> rows(ts.size());
  parallel_for(ts.size(), [&](std::size_t i) {
    const Rat& tt = ts[i];
    struct B {
      std::string name;
      std::function<Enclosure(unsigned)> enc;
      int predicted;
    };
    const int st = sgn(tt);
    std::vector<B> bounds = {
        {"U", [&](unsigned bits) { return crude_bound_U(wp.r, tt, bits); }, -st},
        {"X", [&](unsigned bits) { return closed_form_X(wp.r, tt, bits); }, x_pred * st},
    };
    if (xn) bounds.push_back({xn_name, [&](unsigned bits) { return xn->eval(tt, bits); }, -st});

    std::vector<std::string> row = {to_string(tt)};
    std::vector<Enclosure> enc;
    for (auto& b : bounds) {
      enc.push_back(b.enc(256));
      row.push_back(decimal(b.enc, d));
    }
    row.push_back(decimal(s.values[i], d));
    row.push_back(decimal(s.errors[i], 3));
    for (const auto& e : enc) row.push_back(sign_str(resolved_sign(s.values[i], s.errors[i], e)));

    // x - B has the predicted sign: B is a lower bound when it is +, upper when -.
    int lo = -1, hi = -1;
    for (std::size_t k = 0; k < bounds.size(); ++k) {
      if (bounds[k].predicted >= 0 && (lo < 0 || enc[k].mid() > enc[lo].mid())) lo = static_cast<int>(k);
      if (bounds[k].predicted <= 0 && (hi < 0 || enc[k].mid() < enc[hi].mid())) hi = static_cast<int>(k);
    }
    row.push_back(lo >= 0 ? row[1 + lo] : "");
    row.push_back(lo >= 0 ? bounds[lo].name : "");
    row.push_back(hi >= 0 ? row[1 + hi] : "");
    row.push_back(hi >= 0 ? bounds[hi].name : "");
    rows[i] = std::move(row);
  });
  t.rows = std::move(rows);
  return emit(t, cfg);
}

int cmd_general(const RunConfig& cfg) {
  check_common(cfg);
  ReactionTerm rt;
  try {
    rt = preset(cfg.preset);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Domain domain = cfg.domain.empty() ? Domain::real_line() : parse_domain(cfg.domain);
  bool certified = true;
  std::string why;
  try {
    rt = check_hypotheses(rt.f, domain, rt.name);
  } catch (const HypothesisViolated& e) {
    if (!cfg.no_certify) throw;
    certified = false;
    why = e.what();
  }

  if (cfg.r.empty()) throw UsageError("--r is required");
  Rat r = parse_r(cfg.r);
  if (rt.name == "fisher") make_wave_param(r);
  else if (sgn(r) <= 0 || r >= 1) throw UsageError("r must lie in (0, 1) so that c = 1/r - r > 0");
  const Rat c = 1 / r - r;
  if (cfg.grid < 2) throw UsageError("--grid must be >= 2");

  std::optional<LambdaBounds> lb;
  if (certified) lb = lambda_bounds(rt, c);  // SpeedTooSmall maps to exit 2

  OracleOptions opt = oracle_options(cfg);
  opt.allow_partial = !certified;
  std::vector<Rat> xs;
  for (int j = 1; j < cfg.grid; ++j) xs.push_back(make_rat(Int(j), Int(cfg.grid)));
  std::vector<Rat> ts = time_grid(cfg);

  auto oracle_or_partial = [&](auto&& run) -> std::optional<OrbitSample> {
    try {
      return run();
    } catch (const StepFailure& e) {
      if (certified) throw;
      return std::nullopt;
    }
  };
  auto phase = oracle_or_partial([&] { return integrate_phase(rt, r, xs, opt); });
  auto time = oracle_or_partial([&] { return integrate_time(rt, r, ts, opt); });

  const int d = cfg.digits;
  const std::string mark = certified ? "yes" : "uncertified";
  Table t;
  t.meta = {{"command", "general"}, {"preset", rt.name}, {"f", to_string(rt.f)}, {"r", to_string(r)},
            {"c", to_string(c)}, {"hypotheses", certified ? "verified" : why}};
  t.add_column("kind", "lambda | phase | time");
  t.add_column("abscissa", "x for phase rows, t for time rows");
  t.add_column("lower", "lambda_under; lambda_under g(x); min of the time sandwich (exact where available)");
  t.add_column("lower_decimal", "correctly rounded lower");
  t.add_column("upper", "lambda_over; lambda_over g(x); max of the time sandwich (exact where available)");
  t.add_column("upper_decimal", "correctly rounded upper");
  t.add_column("oracle", kOracleProvenance);
  t.add_column("oracle_error", kErrorProvenance);
  t.add_column("certified", "yes when hypothesis H was verified for the preset");
  t.add_column("source", "how the bound columns were obtained");

  auto oracle_cells = [&](const std::optional<OrbitSample>& s, std::size_t i) -> std::pair<std::string, std::string> {
    if (!s || i >= s->size()) return {"", ""};
    return {decimal(s->values[i], d), decimal(s->errors[i], 3)};
  };
  if (lb) {
    t.rows.push_back({"lambda", "", lb->lambda_under.str(), decimal(lb->lambda_under, d), lb->lambda_over.str(),
                      decimal(lb->lambda_over, d), "", "", mark, "eigenvalue bounds of the general theorem"});
  } else {
    t.rows.push_back({"lambda", "", mark, "", mark, "", "", "", mark, "hypotheses fail: " + why});
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto [ov, oe] = oracle_cells(phase, i);
    if (lb) {
      // g < 0 on (0, 1) and lambda_under > lambda_over, so lambda_under g is the lower curve.
      auto [under, over] = phase_bounds(rt, c, xs[i]);
      t.rows.push_back({"phase", to_string(xs[i]), under.str(), decimal(under, d), over.str(), decimal(over, d), ov, oe,
                        mark, "lambda g(x)"});
    } else {
      t.rows.push_back({"phase", to_string(xs[i]), mark, "", mark, "", ov, oe, mark, ""});
    }
  }
  for (std::size_t i = 0; i < ts.size(); ++i) {
    auto [ov, oe] = oracle_cells(time, i);
    if (lb) {
      TimeSandwich ws = time_sandwich(rt, c, ts[i]);
      t.rows.push_back({"time", to_string(ts[i]), "", decimal(ws.hull.lo, d), "", decimal(ws.hull.hi, d), ov, oe, mark,
                        "scalar problems dx/dt = -lambda g(x), " + ws.source});
    } else {
      t.rows.push_back({"time", to_string(ts[i]), mark, "", mark, "", ov, oe, mark, ""});
    }
  }
  return emit(t, cfg);
}

int cmd_oracle_check(const RunConfig& cfg) {
  check_common(cfg);
  require_fisher(cfg);
  WaveParam wp = fisher_param(cfg);
  const int n = parse_int(cfg.n, 20, "--n");
  const int m = cfg.m;
  if (n < 1 || m < 1 || cfg.grid < 1) throw UsageError("--n, --m and --grid must be >= 1");
  if (!cfg.expensive && (n > kBoundsLowerCeiling || m > kBoundsUpperCeiling))
    throw CeilingExceeded("oracle-check ceiling is n <= " + std::to_string(kBoundsLowerCeiling) + ", m <= " +
                          std::to_string(kBoundsUpperCeiling) + "; pass --expensive to go beyond");
  const ReactionTerm rt = preset("fisher");
  const OracleOptions opt = oracle_options(cfg);
  TaylorSeparatrix ts = taylor_coeffs(wp.r, n);
  PadeBound pb = pade_bound(wp.r, m);
  LambdaBounds lb = lambda_bounds(rt, wp.c);

  // Interior grid j/(grid + 1) keeps clear of both equilibria.
  std::vector<Rat> xs;
  for (int j = 1; j <= cfg.grid; ++j) xs.push_back(make_rat(Int(j), Int(cfg.grid + 1)));
  OrbitSample phase = integrate_phase(rt, wp.r, xs, opt);
  std::vector<Rat> tts = time_grid(cfg);
  OrbitSample time = integrate_time(rt, wp.r, tts, opt);

  Table t;
  t.meta = {{"command", "oracle-check"}, {"preset", "fisher"}, {"r", to_string(wp.r)}, {"c", to_string(wp.c)},
            {"n", n}, {"m", m}, {"grid", cfg.grid}, {"oracle_tol", cfg.tol}};
  t.add_column("check", "h_n<gamma<R_m | lambda | time");
  t.add_column("abscissa", "x or t");
  t.add_column("lower", "h_n(x); lambda_under g(x); min of the time sandwich");
  t.add_column("oracle", kOracleProvenance);
  t.add_column("upper", "R_m(x); lambda_over g(x); max of the time sandwich");
  t.add_column("margin", "min(oracle - lower, upper - oracle)");
  t.add_column("oracle_error", kErrorProvenance);
  t.add_column("ok", "yes if the margin exceeds the oracle error");

  const int d = cfg.digits;
  struct Row {
    std::vector<std::string> cells;
    bool ok;
  };
  std::vector<Row> rows(2 * xs.size() + tts.size());
  auto make = [&](const std::string& kind, const Rat& at, const Real& lo, const Real& v, const Real& hi,
                  const Real& err) {
    Real margin = std::min(Real(v - lo), Real(hi - v));
    // A collapsed sandwich (t = 0: both ends 1/2) can only be matched, not cleared.
    bool ok = margin > err || (lo == hi && abs(v - lo) <= err);
    return Row{{kind, to_string(at), decimal(lo, d), decimal(v, d), decimal(hi, d), decimal(margin, 3), decimal(err, 3),
                ok ? "yes" : "no"},
               ok};
  };
  parallel_for(xs.size(), [&](std::size_t i) {
    const Rat& x = xs[i];
    rows[i] = make("h_n<gamma<R_m", x, to_real(ts.eval(x)), phase.values[i], to_real(pb.eval(x)), phase.errors[i]);
    Real gx = to_real(rt.g.eval(x));
    rows[xs.size() + i] = make("lambda", x, to_real(lb.lambda_under) * gx, phase.values[i], to_real(lb.lambda_over) * gx,
                               phase.errors[i]);
  });
  for (std::size_t i = 0; i < tts.size(); ++i) {
    TimeSandwich ws = time_sandwich(rt, wp.c, tts[i]);
    rows[2 * xs.size() + i] = make("time", tts[i], to_real(ws.hull.lo), time.values[i], to_real(ws.hull.hi), time.errors[i]);
  }
  std::size_t failed = 0;
  for (auto& r : rows) {
    failed += r.ok ? 0 : 1;
    t.rows.push_back(std::move(r.cells));
  }
  t.meta["failed"] = failed;
  emit(t, cfg);
  if (failed) throw CheckFailed(std::to_string(failed) + " of " + std::to_string(rows.size()) + " oracle checks failed");
  return kOk;
}

}  // namespace hb
