#pragma once

// Resultants and discriminants by the subresultant pseudo-remainder sequence.
//
// The subresultant scheme performs only exact divisions in the coefficient
// domain, so over Z[r] the intermediate polynomials stay integral and their
// size grows linearly instead of exponentially.

#include "hetero/errors.hpp"
#include "hetero/ratpoly/poly.hpp"

namespace hetero {

namespace detail {

template <class C>
C power(const C& base, unsigned e) {
  C out = Ring<C>::from_int(1);
  C b = base;
  while (e) {
    if (e & 1u) out = out * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return out;
}

}  // namespace detail

/// Res(a, b) over an integral domain C (Int, PolyZ, Rat, ...).
template <class C>
C resultant(Poly<C> a, Poly<C> b) {
  if (a.is_zero() || b.is_zero()) return C{};
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -1;
  }
  if (b.degree() == 0) {
    C out = detail::power(b.leading(), static_cast<unsigned>(a.degree()));
    return s < 0 ? C(-out) : out;
  }
  C g = Ring<C>::from_int(1);
  C h = Ring<C>::from_int(1);
  while (true) {
    int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    Poly<C> rem = pseudo_rem(a, b);
    a = std::move(b);
    if (rem.is_zero()) return C{};
    b = exact_scalar_div(rem, C(g * detail::power(h, static_cast<unsigned>(delta))));
    g = a.leading();
    if (delta > 0)
      h = exact_quotient(detail::power(g, static_cast<unsigned>(delta)), detail::power(h, static_cast<unsigned>(delta - 1)));
    if (b.degree() == 0) break;
  }
  unsigned da = static_cast<unsigned>(a.degree());
  C out = exact_quotient(detail::power(b.leading(), da), detail::power(h, da - 1));
  return s < 0 ? C(-out) : out;
}

/// Dis(p) = (-1)^{n(n-1)/2} Res(p, p') / lc(p) over a domain.
template <class C>
C discriminant_generic(const Poly<C>& p) {
  int n = p.degree();
  if (n < 2) throw DegreeTooLow("discriminant needs degree >= 2, got " + std::to_string(n));
  C res = resultant(p, p.derivative());
  C out = exact_quotient(res, p.leading());
  if ((n * (n - 1) / 2) % 2 == 1) out = -out;
  return out;
}

/// Discriminant in x of a polynomial whose coefficients are polynomials in r.
PolyQ discriminant(const PolyQR& p);

/// Discriminant of a univariate rational polynomial.
Rat discriminant(const PolyQ& p);

}  // namespace hetero
