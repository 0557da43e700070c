#include "hetero/ratpoly/resultant.hpp"

namespace hetero {

PolyQ discriminant(const PolyQR& p) {
  int n = p.degree();
  if (n < 2) throw DegreeTooLow("discriminant needs degree >= 2 in x, got " + std::to_string(n));
  // p = r^v * P / s with P primitive over Z[r]; Dis(p) = r^{v(2n-2)} Dis(P) / s^{2n-2}.
  int v = -1;
  for (const auto& c : p.coeffs()) {
    int cv = c.valuation();
    if (cv >= 0 && (v < 0 || cv < v)) v = cv;
  }
  PolyQR stripped = p.map([&](const PolyQ& c) { return c.unshift(static_cast<std::size_t>(v)); });
  Rat s = integer_scale(stripped);
  PolyZR ip = primitive_integer(stripped);
  PolyZ dis = discriminant_generic(ip);
  unsigned e = static_cast<unsigned>(2 * n - 2);
  PolyQ out = to_rational(dis) * (Rat(1) / pow(s, e));
  return out.shift(static_cast<std::size_t>(v) * e);
}

Rat discriminant(const PolyQ& p) { return discriminant_generic(p); }

}  // namespace hetero
