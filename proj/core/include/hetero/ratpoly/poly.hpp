#pragma once

// Dense univariate polynomials over an exact coefficient ring.
//
// Poly<C> stores coefficients low-to-high with trailing zeros trimmed, so the
// zero polynomial is the empty vector and degree() == -1 for it. Nesting gives
// the bivariate carriers used throughout: Poly<Poly<Rat>> is a polynomial in x
// whose coefficients are polynomials in r.

#include "hetero/ratpoly/rat.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace hetero {

template <class C>
class Poly;

/// Integer embedding and zero tests for every coefficient ring we nest.
template <class C>
struct Ring {
  static C from_int(long v) { return C(v); }
  static bool zero(const C& c) { return is_zero(c); }
};

template <class D>
struct Ring<Poly<D>> {
  static Poly<D> from_int(long v) { return Poly<D>(Ring<D>::from_int(v)); }
  static bool zero(const Poly<D>& p) { return p.is_zero(); }
};

namespace detail {
std::vector<Int> kronecker_mul(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Rat> rational_mul(const std::vector<Rat>& a, const std::vector<Rat>& b);
}  // namespace detail

template <class C>
class Poly {
 public:
  using coeff_type = C;

  Poly() = default;
  explicit Poly(C constant) {
    if (!Ring<C>::zero(constant)) c_.push_back(std::move(constant));
  }
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(C c, std::size_t k) {
    if (Ring<C>::zero(c)) return {};
    std::vector<C> v(k + 1);
    v[k] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly variable() { return monomial(Ring<C>::from_int(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<C>& coeffs() const { return c_; }
  const C& operator[](std::size_t k) const { return c_[k]; }
  C coeff(std::size_t k) const { return k < c_.size() ? c_[k] : C{}; }
  const C& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!Ring<C>::zero(c_[k])) return static_cast<int>(k);
    return -1;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const C& s) {
    if (Ring<C>::zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Poly operator*(Poly a, const C& s) { return a *= s; }
  friend Poly operator*(const C& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if constexpr (std::is_same_v<C, Int>) {
      if (a.size() > 6 && b.size() > 6) return Poly(detail::kronecker_mul(a.c_, b.c_));
    } else if constexpr (std::is_same_v<C, Rat>) {
      if (a.size() > 6 && b.size() > 6) return Poly(detail::rational_mul(a.c_, b.c_));
    }
    std::vector<C> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (Ring<C>::zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<C> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Ring<C>::from_int(static_cast<long>(k));
    return Poly(std::move(d));
  }

  /// Horner evaluation; T must be constructible from C.
  template <class T>
  T eval(const T& t) const {
    T acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + T(*it);
    return acc;
  }

  /// Remainder modulo x^n.
  Poly truncate(std::size_t n) const {
    if (c_.size() <= n) return *this;
    return Poly(std::vector<C>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  /// Multiply by x^k.
  Poly shift(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<C> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }

  /// Exact division by x^k; throws if a coefficient below k is nonzero.
  Poly unshift(std::size_t k) const {
    for (std::size_t i = 0; i < std::min(k, c_.size()); ++i)
      if (!Ring<C>::zero(c_[i])) throw std::domain_error("polynomial not divisible by x^k");
    if (k >= c_.size()) return {};
    return Poly(std::vector<C>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

  template <class F>
  auto map(F&& f) const {
    using R = std::decay_t<decltype(f(std::declval<const C&>()))>;
    std::vector<R> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(f(c));
    return Poly<R>(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && Ring<C>::zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

using PolyZ = Poly<Int>;
using PolyQ = Poly<Rat>;
using PolyZR = Poly<PolyZ>;
/// Polynomial in x whose coefficients are polynomials in the parameter r.
using PolyQR = Poly<PolyQ>;

template <class C>
Poly<C> pow(const Poly<C>& p, unsigned e) {
  Poly<C> out(Ring<C>::from_int(1));
  Poly<C> base = p;
  while (e) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return out;
}

/// p(q(t)) by Horner.
template <class C>
Poly<C> compose(const Poly<C>& p, const Poly<C>& q) {
  Poly<C> acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * q + Poly<C>(p[static_cast<std::size_t>(k)]);
  return acc;
}

// ---------------------------------------------------------------------------
// Exact coefficient division, used by exact_div and the fraction-free solvers.

inline Int exact_quotient(const Int& a, const Int& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw std::domain_error("inexact integer division");
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Rat exact_quotient(const Rat& a, const Rat& b) { return a / b; }

template <class C>
Poly<C> exact_quotient(const Poly<C>& a, const Poly<C>& b);

/// Quotient a / b in a domain; throws std::domain_error when b does not divide a.
template <class C>
Poly<C> exact_div(const Poly<C>& a, const Poly<C>& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<C> rem = a.coeffs();
  const std::size_t nb = b.size();
  std::vector<C> q(a.size() - nb + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const C& top = rem[k + nb - 1];
    if (Ring<C>::zero(top)) continue;
    C t = exact_quotient(top, b.leading());
    for (std::size_t j = 0; j < nb; ++j) rem[k + j] -= t * b[j];
    q[k] = std::move(t);
  }
  for (const auto& c : rem)
    if (!Ring<C>::zero(c)) throw std::domain_error("inexact polynomial division");
  return Poly<C>(std::move(q));
}

template <class C>
Poly<C> exact_quotient(const Poly<C>& a, const Poly<C>& b) {
  return exact_div(a, b);
}

/// Divides every coefficient exactly by the scalar s.
template <class C>
Poly<C> exact_scalar_div(const Poly<C>& p, const C& s) {
  return p.map([&](const C& c) { return exact_quotient(c, s); });
}

/// Euclidean division over a field: a = q b + r, deg r < deg b.
template <class C>
std::pair<Poly<C>, Poly<C>> divrem(const Poly<C>& a, const Poly<C>& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.degree() < b.degree()) return {Poly<C>{}, a};
  std::vector<C> rem = a.coeffs();
  const std::size_t nb = b.size();
  std::vector<C> q(a.size() - nb + 1);
  C inv_lead = Ring<C>::from_int(1) / b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    C t = rem[k + nb - 1] * inv_lead;
    if (Ring<C>::zero(t)) continue;
    for (std::size_t j = 0; j < nb; ++j) rem[k + j] -= t * b[j];
    q[k] = std::move(t);
  }
  rem.resize(nb - 1);
  return {Poly<C>(std::move(q)), Poly<C>(std::move(rem))};
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) a mod b, computed without division.
template <class C>
Poly<C> pseudo_rem(const Poly<C>& a, const Poly<C>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<C> rem = a.coeffs();
  const std::size_t nb = b.size();
  const C& lb = b.leading();
  int steps = a.degree() - b.degree() + 1;
  for (int k = a.degree(); k >= b.degree(); --k) {
    C top = rem[static_cast<std::size_t>(k)];
    for (auto& c : rem) c *= lb;
    if (!Ring<C>::zero(top)) {
      std::size_t off = static_cast<std::size_t>(k) - (nb - 1);
      for (std::size_t j = 0; j < nb; ++j) rem[off + j] -= top * b[j];
    }
    --steps;
    rem.resize(static_cast<std::size_t>(k));
  }
  (void)steps;
  return Poly<C>(std::move(rem));
}

// ---------------------------------------------------------------------------
// Integer/rational helpers.

/// gcd of the integer coefficients (nonnegative; 0 for the zero polynomial).
Int content(const PolyZ& p);
/// Integer content of a bivariate polynomial.
Int content(const PolyZR& p);

/// Scales p by a positive rational so it has coprime integer coefficients.
PolyZ primitive_integer(const PolyQ& p);
/// Same, for a bivariate polynomial (one common scale for all coefficients).
PolyZR primitive_integer(const PolyQR& p);

/// Positive rational scale s with s * p integral and primitive.
Rat integer_scale(const PolyQ& p);
Rat integer_scale(const PolyQR& p);

PolyQ to_rational(const PolyZ& p);
PolyQR to_rational(const PolyZR& p);

/// Monic-up-to-sign gcd over Q[r], normalized to a primitive integer polynomial
/// with positive leading coefficient.
PolyZ gcd(const PolyZ& a, const PolyZ& b);
PolyQ gcd(const PolyQ& a, const PolyQ& b);

/// Evaluates every r-coefficient of a bivariate polynomial at r = value.
PolyQ specialize(const PolyQR& p, const Rat& value);

/// Evaluates the x-variable: returns sum_j c_j(r) * x^j as a polynomial in r.
PolyQ eval_outer(const PolyQR& p, const Rat& x);

/// Swaps the roles of x and r.
PolyQR transpose(const PolyQR& p);

/// Constant polynomial in x with coefficient q(r).
inline PolyQR lift(const PolyQ& q) { return PolyQR(q); }

/// True if every coefficient is >= 0.
bool all_nonnegative(const PolyQ& p);
bool all_nonnegative(const PolyQR& p);

/// Pretty-printer for debugging and human-readable output, variable name given.
std::string to_string(const PolyQ& p, const std::string& var = "r");
std::string to_string(const PolyZ& p, const std::string& var = "r");
std::string to_string(const PolyQR& p, const std::string& xvar = "x", const std::string& rvar = "r");

}  // namespace hetero
