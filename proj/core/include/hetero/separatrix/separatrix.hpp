#pragma once

// Phase-plane bounds for the Fisher separatrix y = gamma^r(x) of
//   x' = -y,  y' = (r - 1/r) y + x (x - 1).
//
// Lower bounds are the Taylor polynomials h^r_n of the unstable manifold at the
// saddle; upper bounds are r x (x - 1) A_n / C_n built from (n, n) Pade
// approximants. Both come in a symbolic-in-r mode (for certificates) and a
// fixed rational r mode (for grids and gaps).

#include "hetero/ratpoly/certificate.hpp"
#include "hetero/ratpoly/pade.hpp"
#include "hetero/ratpoly/rfun.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hetero {

struct TaylorSeparatrix {
  /// Set in fixed-r mode.
  std::optional<Rat> r;
  int n = 0;
  /// h_1..h_n; symbolic holds them in symbolic mode, values in fixed mode.
  std::vector<RFun> symbolic;
  std::vector<Rat> values;

  bool is_symbolic() const { return !r.has_value(); }
  /// h_k for 1 <= k <= n, as a function of r (fixed mode returns a constant).
  RFun coeff(int k) const;
  /// Fixed mode: h_n as a polynomial in x.
  PolyQ polynomial() const;
  /// Fixed mode: h_n(x).
  Rat eval(const Rat& x) const;
  /// Symbolic mode: D(r) h_n(x) with D the common positive denominator.
  PolyQR cleared(RFun::FactorMap* den = nullptr) const;
};

TaylorSeparatrix taylor_coeffs(int n);
TaylorSeparatrix taylor_coeffs(const Rat& r, int n);

/// (r - 1/r + h') h - x + x^2 with h truncated at degree n.
struct Residual {
  /// Coefficients in x, multiplied by the positive factor `den`.
  PolyQR cleared;
  RFun::FactorMap den;
  /// x-coefficient k of the residual as a rational function of r.
  RFun coeff(int k) const { return RFun(cleared.coeff(static_cast<std::size_t>(k)), den); }
  /// Lowest order with a nonzero coefficient (-1 if identically zero).
  int first_nonzero() const { return cleared.valuation(); }
};

Residual residual_identity_check(const TaylorSeparatrix& ts);

struct LowerCertificate {
  int n = 0;
  /// M^r_n(x): the contact function along y = h^r_n(x), cleared by `den`.
  Residual contact;
  /// Nonnegative monomials of the cleared M_n in (x, r).
  PositivityCertificate contact_cert;
  /// -h_n(1) times its positive denominator.
  PositivityCertificate endpoint_cert;
  /// h_k > 0 for 2 <= k <= n, one certificate per numerator.
  std::vector<PositivityCertificate> coefficient_certs;
  RFun h_at_1;
  double seconds = 0;
};

/// Certifies h^r_n < gamma^r on (0, 1) for every r > 0.
/// Throws CertificateFailed on any failing stage.
LowerCertificate lower_certificate(int n);

struct PadeBound {
  int n = 0;
  std::optional<Rat> r;
  /// r-polynomial coefficients (constants in fixed mode); bound = r x (x - 1) A / C.
  PolyQR A;
  PolyQR C;

  Rat eval(const Rat& x, const Rat& r_value) const;
  /// Fixed mode only.
  Rat eval(const Rat& x) const;
};

/// Degree used for the Taylor source of R^r: 22, raised to 2n + 2 for n > 10.
int pade_source_degree(int n);

/// Taylor coefficients of h_{source}(x) / (r x (x - 1)) through x^order, symbolic.
std::vector<RFun> pade_source_series(int order);

PadeBound pade_bound(int n);
PadeBound pade_bound(const Rat& r, int n);

struct UpperCertificate {
  int n = 0;
  PadeBound bound;
  /// N^r_n = r^{r_power} x^{2n+2} (x - 1) B / C^3 times a positive rational.
  PolyQR B;
  int r_power = 0;
  int x_power = 0;
  Rat scale{1};
  PositivityCertificate B_cert;
  PositivityCertificate C_cert;
  int dis_degree_B = -1;
  int dis_degree_C = -1;
  std::optional<int> table_B;
  std::optional<int> table_C;
  double seconds = 0;
};

/// Published discriminant degrees for n = 2..10 (b_n, c_n).
std::optional<std::pair<int, int>> table_discriminant_degrees(int n);

/// Certifies gamma^r < R^r_n on (0, 1) for every r > 0.
UpperCertificate upper_certificate(int n, const Rat& witness = Rat(1, 10));

struct OrderingCertificate {
  int k = 0;
  /// R_k - R_{k-1} = x^{x_power} (x - 1) r^{r_power} scale D_k(r^2) / (C_k C_{k-1}).
  int x_power = 0;
  int r_power = 0;
  Rat scale{1};
  PolyQ D;
  PositivityCertificate D_cert;
};

OrderingCertificate ordering_check(int k);
/// Same, reusing already computed bounds R_k and R_{k-1}.
OrderingCertificate ordering_check(const PadeBound& rk, const PadeBound& rk1);

struct GapReport {
  Rat r;
  int lower_n = 0;
  int upper_m = 0;
  /// -h_n(1), exact.
  Rat gap_at_1;
  Rat grid_sup;
  int grid = 0;
  Rat location_of_max;
};

GapReport gap_report(const Rat& r, int n, int m, int grid);

/// Root-test estimate of the radius of convergence of sum h_k x^k from the tail
/// |h_k|^{-1/k}, k in (n/2, n]. Diagnostic only.
double radius_estimate(const Rat& r, int n);

}  // namespace hetero
