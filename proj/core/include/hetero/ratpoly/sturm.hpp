#pragma once

#include "hetero/errors.hpp"
#include "hetero/ratpoly/poly.hpp"

#include <vector>

namespace hetero {

/// Sturm chain p, p', -rem(p, p'), ... with each member rescaled by a positive
/// rational to a primitive integer polynomial (signs are preserved).
std::vector<PolyQ> sturm_sequence(const PolyQ& p);

/// Number of sign changes in the chain evaluated at x (zeros skipped).
int sign_variations(const std::vector<PolyQ>& chain, const Rat& x);

/// Number of sign changes at +infinity (dir = +1) or -infinity (dir = -1).
int sign_variations_at_infinity(const std::vector<PolyQ>& chain, int dir);

/// Distinct real roots of p in (lo, hi]. Throws EndpointRoot if p(lo) or p(hi) is zero.
int sturm_count(const PolyQ& p, const Rat& lo, const Rat& hi);

/// Distinct real roots of p on the whole line.
int sturm_count_real(const PolyQ& p);

/// Distinct real roots of p in (lo, +infinity). Throws EndpointRoot if p(lo) is zero.
int sturm_count_above(const PolyQ& p, const Rat& lo);

/// Distinct real roots of p in (-infinity, hi). Throws EndpointRoot if p(hi) is zero.
int sturm_count_below(const PolyQ& p, const Rat& hi);

}  // namespace hetero
