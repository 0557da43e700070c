#pragma once

// Closed intervals with exact rational endpoints. Transcendental steps go
// through MPFR with directed rounding, so every enclosure really contains the
// true value; all other operations are exact on the endpoints.

#include "hetero/ratpoly/quad.hpp"
#include "hetero/ratpoly/rat.hpp"

#include <string>

namespace hetero {

struct Enclosure {
  Rat lo{0};
  Rat hi{0};

  Enclosure() = default;
  Enclosure(Rat v) : lo(v), hi(std::move(v)) {}
  Enclosure(Rat l, Rat h);

  Rat mid() const { return (lo + hi) / 2; }
  Rat width() const { return hi - lo; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  /// +1 / -1 when the whole interval has that sign, 0 when it touches or straddles zero.
  int sign() const { return sgn(lo) > 0 ? 1 : (sgn(hi) < 0 ? -1 : 0); }
  double approx() const { return to_double(mid()); }
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
/// Throws std::domain_error when b contains zero.
Enclosure operator/(const Enclosure& a, const Enclosure& b);

/// Smallest interval containing both.
Enclosure hull(const Enclosure& a, const Enclosure& b);

/// Enclosure of a surd to about `bits` bits.
Enclosure enclose(const Surd& s, unsigned bits = 256);
template <int D>
Enclosure enclose(const QuadExt<D>& q, unsigned bits = 256) {
  auto [l, h] = q.enclose(bits);
  return {l, h};
}

Enclosure exp(const Enclosure& x, unsigned bits = 256);
Enclosure log(const Enclosure& x, unsigned bits = 256);
/// x^(1/k) for x >= 0, k >= 1.
Enclosure root(const Enclosure& x, unsigned long k, unsigned bits = 256);
/// Integer power (monotone pieces handled exactly).
Enclosure pow(const Enclosure& x, unsigned e);

}  // namespace hetero
