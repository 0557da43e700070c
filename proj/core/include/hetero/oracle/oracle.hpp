#pragma once

// Numerical reference for the heteroclinic orbit.
//
// All integrators are high-order Taylor-series methods in 160-digit MPFR
// arithmetic. The phase integrator follows the graph y = gamma(x) from the
// saddle; the time integrator follows the planar system from the same seed and
// anchors t = 0 at x = 1/2. Error bounds are estimated by repeating each run at
// a much tighter tolerance; they are estimates, not enclosures.

#include "hetero/genbounds/genbounds.hpp"
#include "hetero/ratpoly/quad.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hetero {

constexpr unsigned kOracleDigits = 160;
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<kOracleDigits, boost::multiprecision::allocate_stack>,
    boost::multiprecision::et_off>;

Real to_real(const Rat& v);
Real to_real(const Surd& s);
Rat to_rat(const Real& v);
/// Scientific rendering with `digits` significant digits.
std::string to_string(const Real& v, int digits);

struct OracleOptions {
  /// Local error target per step (absolute).
  Real tol{"1e-110"};
  /// Tolerance of the comparison run used for the error estimate.
  Real reference_tol{"1e-135"};
  /// Distance from the saddle where the seed series is evaluated.
  Real eps{"1e-6"};
  /// The phase integration stops at x = 1 - delta.
  Real delta{"1e-6"};
  int seed_degree = 30;
  /// Taylor order per step; 0 picks one from tol.
  int order = 0;
  /// Return what was computed instead of throwing StepFailure.
  bool allow_partial = false;
  /// Skip the comparison run (error column then holds only the floor).
  bool estimate_error = true;
};

enum class Frame { Phase, Time };

struct OrbitSample {
  Frame frame = Frame::Phase;
  std::vector<Real> abscissas;
  std::vector<Real> values;
  std::vector<Real> errors;
  std::string reaction;
  /// Wave-speed description, e.g. "r=1/10" or "c=5/sqrt(6)".
  std::string params;
  Real c;
  /// False when the integration stopped early (allow_partial).
  bool complete = true;
  Real reached;

  std::size_t size() const { return abscissas.size(); }
  Real max_error() const;
  void write_csv(std::ostream& os, int digits = 40) const;
  std::string to_json(int digits = 40) const;
};

/// Speed c = 1/r - r for rational r (which need not be admissible for non-Fisher presets).
Real speed_from_r(const Rat& r);

/// Unstable-manifold series gamma(x) = sum_{m>=1} gamma_m x^m at the saddle, through x^degree.
std::vector<Real> separatrix_seed(const PolyQ& g, const Real& c, int degree);

/// gamma(x) on an increasing grid in (0, 1).
OrbitSample integrate_phase(const ReactionTerm& rt, const Real& c, const std::vector<Real>& grid,
                            const OracleOptions& opt = {});
OrbitSample integrate_phase(const ReactionTerm& rt, const Rat& r, const std::vector<Rat>& grid,
                            const OracleOptions& opt = {});

/// x(t) with x(0) = 1/2 on an increasing grid of times.
OrbitSample integrate_time(const ReactionTerm& rt, const Real& c, const std::vector<Real>& t_grid,
                           const OracleOptions& opt = {});
OrbitSample integrate_time(const ReactionTerm& rt, const Rat& r, const std::vector<Rat>& t_grid,
                           const OracleOptions& opt = {});

struct ScalarResult {
  Real value;
  Real error;
};

/// Solution at time t of dx/dt = -lambda g(x), x(0) = 1/2.
ScalarResult integrate_scalar(const PolyQ& g, const Real& lambda, const Real& t, const OracleOptions& opt = {});

/// Least-squares coefficients a_1..a_n of x(t) ~ sum a_j (kappa e^{rate t})^j,
/// normalized so a_1 = 1. Throws IllConditioned if the scaled design matrix is
/// too close to singular.
std::vector<Real> fit_phi_expansion(const OrbitSample& sample, const Real& rate, int n,
                                    const Real& max_condition = Real("1e60"));

}  // namespace hetero
