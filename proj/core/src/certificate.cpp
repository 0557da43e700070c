#include "hetero/ratpoly/certificate.hpp"

#include "hetero/ratpoly/resultant.hpp"
#include "hetero/ratpoly/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace hetero {

std::string to_string(CertMethod m) {
  switch (m) {
    case CertMethod::AllCoefficientsNonneg: return "all-coefficients-nonneg";
    case CertMethod::EndpointDiscriminantSturm: return "endpoint+discriminant+sturm";
    case CertMethod::DescartesAfterSubstitution: return "descartes-after-substitution";
  }
  return "unknown";
}

CertMethod parse_cert_method(const std::string& s) {
  if (s == "all-coefficients-nonneg") return CertMethod::AllCoefficientsNonneg;
  if (s == "endpoint+discriminant+sturm") return CertMethod::EndpointDiscriminantSturm;
  if (s == "descartes-after-substitution") return CertMethod::DescartesAfterSubstitution;
  throw std::invalid_argument("unknown certificate method '" + s + "'");
}

namespace {

bool positive_for_positive_argument(const PolyQ& p) { return !p.is_zero() && all_nonnegative(p); }

bool nonneg_with_positive(const PolyQR& p) { return !p.is_zero() && all_nonnegative(p); }

template <int D>
bool nonneg_with_positive(const Poly<QuadExt<D>>& p) {
  if (p.is_zero()) return false;
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const QuadExt<D>& c) { return c.sign() >= 0; });
}

VerifyResult fail(std::string why) { return {false, std::move(why)}; }

}  // namespace

std::optional<PositivityCertificate> positive_on_positive_axis(const PolyQ& p, std::string subject) {
  if (p.is_zero()) throw std::invalid_argument("positivity test on the zero polynomial");
  if (!all_nonnegative(p)) return std::nullopt;
  PositivityCertificate c;
  c.method = CertMethod::AllCoefficientsNonneg;
  c.subject = std::move(subject);
  c.domain = "argument > 0";
  c.checked = lift(p);
  return c;
}

std::optional<PositivityCertificate> positive_on_positive_quadrant(const PolyQR& p, std::string subject) {
  if (p.is_zero()) throw std::invalid_argument("positivity test on the zero polynomial");
  if (!all_nonnegative(p)) return std::nullopt;
  PositivityCertificate c;
  c.method = CertMethod::AllCoefficientsNonneg;
  c.subject = std::move(subject);
  c.domain = "x > 0, r > 0";
  c.checked = p;
  return c;
}

std::optional<PositivityCertificate> positive_on_unit_interval(const PolyQR& p, const Rat& witness, std::string subject,
                                                               std::string* why) {
  auto reject = [&](std::string msg) -> std::optional<PositivityCertificate> {
    if (why) *why = std::move(msg);
    return std::nullopt;
  };
  if (p.degree() < 1) return reject("degree in x below one");
  if (sgn(witness) <= 0) return reject("witness must be positive");
  PositivityCertificate c;
  c.method = CertMethod::EndpointDiscriminantSturm;
  c.subject = std::move(subject);
  c.domain = "x in (0,1), r > 0";
  c.interval = {Rat(0), Rat(1)};
  c.family = p;
  c.at_lo = eval_outer(p, Rat(0));
  c.at_hi = eval_outer(p, Rat(1));
  if (!positive_for_positive_argument(c.at_lo)) return reject("value at x=0 not certified positive in r");
  if (!positive_for_positive_argument(c.at_hi)) return reject("value at x=1 not certified positive in r");
  if (p.degree() >= 2) {
    c.discriminant = discriminant(p);
    if (!positive_for_positive_argument(c.discriminant)) return reject("discriminant has a negative coefficient");
  }
  c.witness = witness;
  c.witness_roots = sturm_count(specialize(p, witness), Rat(0), Rat(1));
  if (c.witness_roots != 0) return reject("Sturm count at witness is " + std::to_string(c.witness_roots));
  return c;
}

Poly<Q6> substitute_sqrt6(const PolyQ& p) {
  if (p.is_zero()) throw std::invalid_argument("substitution into the zero polynomial");
  // r^k -> z^{2k} (1 + z^2)^{d-k} / sqrt6^k.
  const int d = p.degree();
  Poly<Q6> one_plus_z2(std::vector<Q6>{Q6(1), Q6(0), Q6(1)});
  std::vector<Poly<Q6>> powers{Poly<Q6>(Q6(1))};
  for (int k = 1; k <= d; ++k) powers.push_back(powers.back() * one_plus_z2);
  Poly<Q6> out;
  for (int k = 0; k <= d; ++k) {
    const Rat& ck = p[static_cast<std::size_t>(k)];
    if (sgn(ck) == 0) continue;
    // 1/sqrt6^k = 6^{-k/2} for even k, sqrt6 / 6^{(k+1)/2} for odd k.
    Rat scale = Rat(1) / pow(Rat(6), static_cast<unsigned>((k + 1) / 2));
    Q6 factor = k % 2 == 0 ? Q6(ck * scale, Rat(0)) : Q6(Rat(0), ck * scale);
    out += (powers[static_cast<std::size_t>(d - k)] * factor).shift(static_cast<std::size_t>(2 * k));
  }
  return out;
}

std::optional<PositivityCertificate> positive_below_inv_sqrt6(const PolyQ& p, std::string subject) {
  Poly<Q6> s = substitute_sqrt6(p);
  if (!nonneg_with_positive(s)) return std::nullopt;
  PositivityCertificate c;
  c.method = CertMethod::DescartesAfterSubstitution;
  c.subject = std::move(subject);
  c.domain = "r in (0, 1/sqrt(6)) via z > 0";
  c.original = p;
  c.substituted = std::move(s);
  return c;
}

VerifyResult verify(const PositivityCertificate& cert, bool deep) {
  switch (cert.method) {
    case CertMethod::AllCoefficientsNonneg:
      if (!nonneg_with_positive(cert.checked)) return fail("checked polynomial has a negative or no positive coefficient");
      return {true, {}};
    case CertMethod::EndpointDiscriminantSturm: {
      if (cert.family.degree() < 1) return fail("family has degree < 1 in x");
      if (!positive_for_positive_argument(cert.at_lo)) return fail("p(0; r) not nonnegative-coefficient");
      if (!positive_for_positive_argument(cert.at_hi)) return fail("p(1; r) not nonnegative-coefficient");
      if (eval_outer(cert.family, Rat(0)) != cert.at_lo) return fail("stored p(0; r) does not match family");
      if (eval_outer(cert.family, Rat(1)) != cert.at_hi) return fail("stored p(1; r) does not match family");
      if (cert.family.degree() >= 2) {
        if (!positive_for_positive_argument(cert.discriminant)) return fail("discriminant not nonnegative-coefficient");
        if (deep && discriminant(cert.family) != cert.discriminant) return fail("stored discriminant does not match family");
      }
      if (sgn(cert.witness) <= 0) return fail("witness not positive");
      int roots = sturm_count(specialize(cert.family, cert.witness), Rat(0), Rat(1));
      if (roots != 0 || roots != cert.witness_roots) return fail("Sturm count at witness is " + std::to_string(roots));
      return {true, {}};
    }
    case CertMethod::DescartesAfterSubstitution:
      if (cert.original.is_zero()) return fail("empty original polynomial");
      if (deep && substitute_sqrt6(cert.original) != cert.substituted) return fail("stored substitution does not match");
      if (!nonneg_with_positive(cert.substituted)) return fail("substituted polynomial has a sign change");
      return {true, {}};
  }
  return fail("unknown method");
}

}  // namespace hetero
