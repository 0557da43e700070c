#pragma once

// Pade approximants of power series whose coefficients are polynomials in r.

#include "hetero/errors.hpp"
#include "hetero/ratpoly/poly.hpp"

#include <span>
#include <vector>

namespace hetero {

/// num(x; r) / den(x; r). den is never identically zero; when den(0; r) != 0 it
/// is stored with den(0; r) > 0 for small r > 0.
struct RatFuncQR {
  PolyQR num;
  PolyQR den;

  /// Exact value at (x, r).
  Rat eval(const Rat& x, const Rat& r) const;
  /// Specialization at a fixed parameter value, as a pair of univariate polynomials in x.
  std::pair<PolyQ, PolyQ> at(const Rat& r) const;
};

/// Cancels the common factor of all coefficients (over Z[r]) and fixes the sign of den.
void normalize(RatFuncQR& f);

/// (m, n) Pade approximant: deg num <= m, deg den <= n, den(0) != 0 and
/// num - den * series = O(x^{m+n+1}). Requires series.size() > m + n.
/// Throws SingularPadeTable when the Hankel block is singular.
RatFuncQR pade(std::span<const PolyQ> series, int m, int n);

/// True when num - den * series vanishes through x^order.
bool matches_series(const RatFuncQR& f, std::span<const PolyQ> series, int order);

/// Taylor coefficients of num/den at x = 0 through x^order, at a fixed r.
std::vector<Rat> expand_at(const RatFuncQR& f, const Rat& r, int order);

}  // namespace hetero
