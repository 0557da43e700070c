#pragma once

// Exact scalars: arbitrary-precision integers and reduced rationals.
//
// Int and Rat are thin aliases over GMP's C++ classes; mpq_class keeps every
// value canonical (gcd(num, den) = 1, den > 0) after each operation that goes
// through the public operators. Helpers in this header never round.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace hetero {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign(const Int& v) { return sgn(v); }
inline int sign(const Rat& v) { return sgn(v); }

inline bool is_zero(const Int& v) { return sgn(v) == 0; }
inline bool is_zero(const Rat& v) { return sgn(v) == 0; }

Rat make_rat(const Int& num, const Int& den);

/// Parses "p", "-p", "p/q" or a finite decimal such as "0.125" or "1e-3".
/// Throws std::invalid_argument on anything else (including q = 0).
Rat parse_rat(std::string_view text);

/// Canonical "p/q" (or "p" when q = 1) rendering; inverse of parse_rat.
std::string to_string(const Rat& v);
std::string to_string(const Int& v);

Rat pow(const Rat& base, unsigned exponent);
Int pow(const Int& base, unsigned exponent);

/// Exact square root when v is the square of a rational.
std::optional<Rat> exact_sqrt(const Rat& v);

/// Rational bounds lo <= sqrt(v) <= hi with hi - lo <= 2^-bits. Requires v >= 0.
std::pair<Rat, Rat> sqrt_enclosure(const Rat& v, unsigned bits);

/// Lowest-terms common denominator helper: lcm of the denominators seen so far.
Int lcm(const Int& a, const Int& b);

/// Correctly rounded scientific rendering with `digits` significant digits,
/// round-half-away-from-zero, e.g. "-2.500000e-01".
std::string to_scientific(const Rat& v, int digits);

/// Nearest double (GMP truncates; adequate for plotting columns only).
double to_double(const Rat& v);

/// floor(log10 |v|) for v != 0, computed exactly.
long floor_log10(const Rat& v);

}  // namespace hetero
