#pragma once

// General lambda-bounds for the heteroclinic orbit of
//   x' = -y,  y' = -c y + g(x),   g(x) = -f(1 - x),
// (Fisher-Kolmogorov-type reaction f, saddle at x = 0, node at x = 1) and the
// time sandwich built from the scalar problems dx/dt = -lambda g(x), x(0) = 1/2.

#include "hetero/enclosure.hpp"
#include "hetero/errors.hpp"
#include "hetero/ratpoly/poly.hpp"
#include "hetero/ratpoly/quad.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hetero {

/// Wave speed parameter: c = 1/r - r with 0 < r <= sqrt2 - 1.
struct WaveParam {
  Rat r;
  Rat c;
};

/// Throws OutOfRange unless r is in (0, sqrt2 - 1].
WaveParam make_wave_param(const Rat& r);
bool admissible_r(const Rat& r);

/// Closed interval of the real line; a missing end is infinite.
struct Domain {
  std::optional<Rat> lo;
  std::optional<Rat> hi;

  static Domain real_line() { return {}; }
  bool contains(const Rat& v) const { return (!lo || *lo <= v) && (!hi || v <= *hi); }
  std::string str() const;
};

Domain parse_domain(const std::string& text);

struct ReactionTerm {
  std::string name;
  PolyQ f;
  PolyQ g;
  Rat fp0;
  Rat fp1;
  /// Domain on which f'' < 0 was certified; empty when hypotheses were not checked.
  std::optional<Domain> hypothesis_domain;
};

/// Builds a ReactionTerm without checking hypothesis H (oracle-only use).
ReactionTerm reaction_term(PolyQ f, std::string name = {});

/// Verifies f(0) = f(1) = 0, f'(0) > 0, f'(1) < 0 and f'' < 0 on `domain`.
/// Throws HypothesisViolated naming the failing condition.
ReactionTerm check_hypotheses(const PolyQ& f, const Domain& domain = Domain::real_line(), std::string name = {});

/// Named presets: "fisher", "nws", "zeldovich" (alpha = 1/2) and "zeldovich(a)".
ReactionTerm preset(const std::string& name);
std::vector<std::string> preset_names();

struct LambdaBounds {
  Surd lambda_under;
  Surd lambda_over;
};

/// Throws SpeedTooSmall when c^2 < 4 f'(0).
LambdaBounds lambda_bounds(const ReactionTerm& rt, const Rat& c);

struct EigenData {
  std::pair<Surd, Surd> saddle;  // (lambda_s^+, lambda_s^-)
  std::optional<std::pair<Surd, Surd>> node;
};

EigenData eigen_data(const ReactionTerm& rt, const Rat& c);

struct ContactReport {
  /// sign of N_lambda(x) = 1 - c lambda + g'(x) lambda^2 at each point.
  std::vector<int> signs;
  /// True when g'' > 0 is certified on the hypothesis domain, so N_lambda is increasing.
  bool increasing = false;
};

ContactReport contact_sign(const ReactionTerm& rt, const Rat& c, const Surd& lambda, const std::vector<Rat>& at);

/// (lambda_under g(x), lambda_over g(x)); throws OutOfRange unless 0 < x < 1.
std::pair<Surd, Surd> phase_bounds(const ReactionTerm& rt, const Rat& c, const Rat& x);

/// If g(x) = x^m - x exactly, returns m.
std::optional<unsigned> power_law_exponent(const ReactionTerm& rt);

/// w_lambda(t) for g = x^m - x: (1 + (2^{m-1} - 1) e^{-(m-1) lambda t})^{-1/(m-1)}.
Enclosure logistic_w(unsigned m, const Enclosure& lambda, const Rat& t, unsigned bits = 256);

struct TimeSandwich {
  /// Unordered hull of w_under(t) and w_over(t).
  Enclosure hull;
  Enclosure w_under;
  Enclosure w_over;
  /// "closed-form" or "oracle".
  std::string source;
};

/// Interval containing x_c(t). Closed form for g = x^m - x; otherwise the
/// scalar problem is integrated numerically.
TimeSandwich time_sandwich(const ReactionTerm& rt, const Rat& c, const Rat& t);

template <class T>
std::pair<T, T> to_pde_frame(const T& x, const T& t) {
  return {T(1) - x, t};
}

}  // namespace hetero
