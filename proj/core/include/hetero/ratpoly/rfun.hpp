#pragma once

// Rational functions of r whose denominators are products of known factors.
//
// The recurrences for the Taylor and Phi coefficients only ever divide by r and
// by k r^2 + 1, so carrying the denominator as an exponent map keeps every
// operation a polynomial multiplication plus bookkeeping, and makes the
// positivity of the denominator on r > 0 evident.

#include "hetero/ratpoly/poly.hpp"

#include <map>
#include <string>

namespace hetero {

class RFun {
 public:
  /// Factor id 0 is r itself; id k >= 1 is k r^2 + 1.
  using FactorMap = std::map<int, int>;

  RFun() = default;
  RFun(Rat c) : num_(std::move(c)) {}
  /// No cancellation is attempted; see reduced().
  explicit RFun(PolyQ num, FactorMap den = {});

  static PolyQ factor(int id);
  static PolyQ product(const FactorMap& den);

  const PolyQ& numerator() const { return num_; }
  const FactorMap& factors() const { return den_; }
  PolyQ denominator() const { return product(den_); }
  bool is_zero() const { return num_.is_zero(); }

  /// Divides by factor(id)^e, cancelling that factor against the numerator when exact.
  RFun divided_by(int id, int e = 1) const;
  /// Cancels every denominator factor that divides the numerator.
  RFun reduced() const;
  /// Numerator after bringing this to the (larger) denominator `common`.
  PolyQ numerator_over(const FactorMap& common) const;

  Rat eval(const Rat& r) const;

  friend RFun operator+(const RFun& a, const RFun& b);
  friend RFun operator-(const RFun& a, const RFun& b);
  friend RFun operator-(const RFun& a) { return RFun(-a.num_, a.den_); }
  friend RFun operator*(const RFun& a, const RFun& b);
  RFun& operator+=(const RFun& o) { return *this = *this + o; }
  RFun& operator-=(const RFun& o) { return *this = *this - o; }
  RFun& operator*=(const RFun& o) { return *this = *this * o; }

  /// Equality as rational functions.
  friend bool operator==(const RFun& a, const RFun& b);

  std::string str() const;

 private:
  void reduce();

  PolyQ num_;
  FactorMap den_;
};

/// Least common multiple of factor maps (elementwise max exponent).
RFun::FactorMap common_factors(const RFun::FactorMap& a, const RFun::FactorMap& b);

/// Builds (coefficients in x) -> PolyQR by clearing the common denominator; returns it via `den`.
PolyQR clear_denominators(const std::vector<RFun>& coeffs, RFun::FactorMap* den = nullptr);

}  // namespace hetero
