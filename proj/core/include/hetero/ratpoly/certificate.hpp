#pragma once

// Positivity certificates: machine-checkable evidence that a polynomial has no
// sign change on a stated domain, plus the verifier that re-runs each check.

#include "hetero/ratpoly/poly.hpp"
#include "hetero/ratpoly/quad.hpp"

#include <optional>
#include <string>

namespace hetero {

enum class CertMethod {
  /// Every monomial (in x and r) has a nonnegative coefficient and one is positive.
  AllCoefficientsNonneg,
  /// p(x; r) > 0 on x in (0,1) for all r > 0: p(0), p(1), Dis(p, x) have
  /// nonnegative coefficients in r and a Sturm count at one witness r is zero.
  EndpointDiscriminantSturm,
  /// p(r) > 0 on r in (0, 1/sqrt 6) via r = z^2 / (sqrt6 (1 + z^2)) and Descartes in z.
  DescartesAfterSubstitution,
};

std::string to_string(CertMethod m);
CertMethod parse_cert_method(const std::string& s);

/// Open interval (lo, hi); hi == nullopt means +infinity.
struct OpenInterval {
  Rat lo{0};
  std::optional<Rat> hi;
};

struct PositivityCertificate {
  CertMethod method = CertMethod::AllCoefficientsNonneg;
  std::string subject;
  /// Human-readable statement of what positivity was established for.
  std::string domain;
  OpenInterval interval;

  // AllCoefficientsNonneg: the polynomial whose monomials were inspected.
  PolyQR checked;

  // EndpointDiscriminantSturm.
  PolyQR family;
  PolyQ at_lo;
  PolyQ at_hi;
  PolyQ discriminant;  // empty when deg_x family < 2
  Rat witness{0};
  int witness_roots = -1;

  // DescartesAfterSubstitution.
  PolyQ original;
  Poly<Q6> substituted;
};

struct VerifyResult {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Re-checks the stored evidence. With deep = true, derived evidence
/// (endpoint values, discriminant, substitution) is recomputed from the
/// primary polynomial and compared as well.
VerifyResult verify(const PositivityCertificate& cert, bool deep = false);

/// Succeeds when every coefficient is >= 0 and one is > 0, so p > 0 for all
/// arguments > 0. Failure is not a disproof.
std::optional<PositivityCertificate> positive_on_positive_axis(const PolyQ& p, std::string subject = {});

/// Bivariate form of the same test (all monomials of p(x, r) nonnegative).
std::optional<PositivityCertificate> positive_on_positive_quadrant(const PolyQR& p, std::string subject = {});

/// Endpoint + discriminant + Sturm argument for p(x; r) > 0 on (0,1), r > 0.
/// Returns the certificate, or nullopt with `why` filled in.
std::optional<PositivityCertificate> positive_on_unit_interval(const PolyQR& p, const Rat& witness, std::string subject,
                                                               std::string* why = nullptr);

/// Numerator of p(z^2 / (sqrt6 (1 + z^2))) after multiplying by (1 + z^2)^deg p.
Poly<Q6> substitute_sqrt6(const PolyQ& p);

/// Descartes certificate for r in (0, 1/sqrt 6) through substitute_sqrt6.
std::optional<PositivityCertificate> positive_below_inv_sqrt6(const PolyQ& p, std::string subject = {});

}  // namespace hetero
