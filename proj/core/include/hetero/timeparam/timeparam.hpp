#pragma once

// Time parametrization of the Fisher heteroclinic orbit x^r(t), x^r(0) = 1/2,
// in terms of Phi = e^{rt}: the closed-form curve X^r(t), the crude bound
// U^r(t), the Phi-series of x^r and its (n, n) Pade approximants.

#include "hetero/enclosure.hpp"
#include "hetero/oracle/oracle.hpp"
#include "hetero/ratpoly/certificate.hpp"
#include "hetero/ratpoly/pade.hpp"
#include "hetero/ratpoly/quad.hpp"
#include "hetero/ratpoly/rfun.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hetero {

using PolyQ2 = Poly<Q2>;        // in r
using PolyQ2R = Poly<PolyQ2>;   // in Phi, coefficients in Q(sqrt2)[r]

/// X^r(t) = (2 + 2sqrt2 + e^{rt}) e^{rt} / (1 + sqrt2 + e^{rt})^2.
Enclosure closed_form_X(const Rat& r, const Rat& t, unsigned bits = 256);
Real closed_form_X(const Real& r, const Real& t);

/// U^r(t) = (2r^2 + 1) / (1 + (4r^2 + 1) e^{-rt}).
Enclosure crude_bound_U(const Rat& r, const Rat& t, unsigned bits = 256);
Real crude_bound_U(const Real& r, const Real& t);

/// Contact function of the curve (X, -X') for x' = -y, y' = (r - 1/r) y + x(x - 1),
/// where X = N(Phi)/Q(Phi): M = numerator / Q^5.
template <class C>
struct PhiResidual {
  Poly<Poly<C>> numerator;
  Poly<Poly<C>> Q;
};

template <class C>
PhiResidual<C> residual_M(const Poly<Poly<C>>& N, const Poly<Poly<C>>& Q) {
  using P = Poly<Poly<C>>;
  const Poly<C> r = Poly<C>::variable();
  const Poly<C> r2 = r * r;
  const Poly<C> one(C(1));
  const P phi = P::variable();
  // D = Phi d/dPhi, so d/dt = r D.
  P A = phi * (N.derivative() * Q - N * Q.derivative());        // D X = A / Q^2
  P B = phi * (A.derivative() * Q - (A * Q.derivative()) * Poly<C>(C(2)));  // D^2 X = B / Q^3
  P inner = B * r2 - (A * Q) * (r2 - one) + N * Q * (N - Q);
  return {A * inner * r, Q};
}

/// The curve of the closed form: N = Phi^2 + (2 + 2sqrt2) Phi, Q = (1 + sqrt2 + Phi)^2.
std::pair<PolyQ2R, PolyQ2R> exact_curve();

struct ExactCurveIdentity {
  PolyQ2R numerator;
  /// 2 (17 + 12 sqrt2) r (1 - 6r^2) Phi^3 (1 + sqrt2 + Phi)^3, i.e. the expected
  /// residual after cancelling (1 + sqrt2 + Phi)^7 against Q^5.
  PolyQ2R expected;
  bool matches = false;
  /// Every r-coefficient is divisible by 1 - 6r^2, so M vanishes at r = 1/sqrt6.
  bool vanishes_at_inv_sqrt6 = false;
};

ExactCurveIdentity exact_curve_identity();

/// Shape check of the two-parameter ansatz
///   X = (beta Phi + alpha Phi^2) / (1 + (alpha + 2 beta - 1) Phi + alpha Phi^2)
/// at rational (alpha, beta): the residual numerator is
/// Phi^3 (alpha (alpha + beta - 1) Phi^2 + 2 alpha Phi + beta) P(Phi) with deg P <= 3.
struct AnsatzShape {
  Rat alpha;
  Rat beta;
  bool phi_cubed = false;
  bool quadratic_factor = false;
  int p_degree = -1;
};

AnsatzShape ansatz_shape(const Rat& alpha, const Rat& beta);
inline AnsatzShape ansatz_shape(const Rat& beta) { return ansatz_shape(1 - beta, beta); }

enum class TrichotomyCase { Below, Exact, Above };  // 6r^2 < 1, = 1, > 1
std::string to_string(TrichotomyCase c);
TrichotomyCase classify(const Rat& r);

struct TrichotomyRow {
  Rat t;
  Real oracle;
  Real X;
  Real difference;
  Real error;
  int predicted = 0;
  int observed = 0;
};

struct TrichotomyReport {
  Rat r;
  TrichotomyCase which = TrichotomyCase::Below;
  std::vector<TrichotomyRow> rows;
  bool all_match = false;
  /// min over rows of |difference| / error.
  Real min_margin;
};

/// Checks sgn(x^r(t) - X^r(t)) against the predicted sign; throws OracleInconclusive
/// when a difference does not exceed the oracle error estimate.
TrichotomyReport sign_trichotomy(const Rat& r, const std::vector<Rat>& t_samples, const OracleOptions& opt = {});

struct ExactCaseReport {
  Real max_difference;
  Real max_oracle_error;
  Real worst_t;
};

/// r = 1/sqrt6 (c = 5/sqrt6): oracle x(t) against X(t) on the given times.
ExactCaseReport exact_case_check(const std::vector<Real>& t_grid, const OracleOptions& opt = {});

/// x(t) = sum_{j>=1} a_j Phi^j, a_1 = 1, a_j (j - 1)(j r^2 + 1) = -sum_{k=1}^{j-1} a_k a_{j-k}.
struct PhiSeries {
  std::optional<Rat> r;
  int n = 0;
  /// a_1..a_{2n}, index 0 holds a_0 = 0.
  std::vector<RFun> symbolic;
  std::vector<Rat> values;

  Rat coeff_at(int j) const;
};

PhiSeries phi_series(int n);
PhiSeries phi_series(const Rat& r, int n);

struct PhiPade {
  int n = 0;
  /// num = sum_{j=1}^n b_j Phi^j, den = sum_{j=0}^n c_j Phi^j; polynomials in r.
  RatFuncQR z;

  PolyQ b(int j) const { return z.num.coeff(static_cast<std::size_t>(j)); }
  PolyQ c(int j) const { return z.den.coeff(static_cast<std::size_t>(j)); }
  /// Limit at t -> infinity as (b_n, c_n).
  std::pair<PolyQ, PolyQ> limit() const { return {b(n), c(n)}; }
};

PhiPade phi_pade(int n);

struct PhiPadeCertificate {
  int n = 0;
  PhiPade pade;
  PolyQR residual;  // numerator of M_n over Q_n^5
  int phi_power = 0;
  int r_power = 0;
  /// residual = Phi^phi_power r^r_power (1 - 6r^2) scale P(Phi).
  PolyQR P;
  Rat scale;
  std::vector<PositivityCertificate> P_certs;
  std::vector<PositivityCertificate> Q_certs;
  PositivityCertificate factor_cert;  // 1 - 6r^2
  double seconds = 0;
};

/// Throws CertificateFailed with the stage ("shape", "P", "Q") on failure.
PhiPadeCertificate certify_phi_pade(int n);

struct RescaledBound {
  int n = 0;
  Rat r;
  PolyQ num;  // b_j(r) at fixed r
  PolyQ den;
  Rat rho_lo;
  Rat rho_hi;

  /// W_n(t, rho) = Z_n(rho Phi) with rho ranging over the enclosure.
  Enclosure eval(const Rat& t, unsigned bits = 256) const;
  Real eval(const Real& t) const;
  Rat limit() const { return num.leading() / den.leading(); }
};

/// Bisection for W_n(0, rho) = 1/2 on (0, 1); throws NoSignChange if there is no bracket.
RescaledBound rescale_rho0(const PhiPade& pade, const Rat& r, const Rat& tol = make_rat(1, pow(Int(10), 30)));

struct LimitRow {
  int n = 0;
  PolyQ b;
  PolyQ c;
  /// max over r in (0, 1/sqrt6) of b/c - 1 and where it is attained.
  double E = 0;
  double argmax = 0;
};

struct LimitTable {
  std::vector<LimitRow> rows;
  /// 1 < b_N/c_N < ... < b_2/c_2 at every sample r, checked exactly.
  bool ordered = false;
  /// E_k strictly decreasing in k.
  bool decreasing = false;
  std::vector<Rat> samples;
};

LimitTable limit_errors(const std::vector<int>& ns, const std::vector<PhiPade>* pades = nullptr);

/// 3 - 4 sqrt5 / 3.
Q5 e2_closed_form();

}  // namespace hetero
