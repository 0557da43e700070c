#pragma once

// Elements of real quadratic fields.
//
// QuadExt<D> is a + b*sqrt(D) with a fixed squarefree radicand D; it is a field
// type and can be used as a polynomial coefficient (Poly<QuadExt<6>> etc.).
// Surd carries its radicand at runtime and is used for values like
// (c - sqrt(c^2 - 4 f'(0))) / (2 f'(0)) whose radicand depends on input data.

#include "hetero/ratpoly/rat.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace hetero {

/// Exact sign of a + b*sqrt(d) for d >= 0.
int sign_of_surd(const Rat& a, const Rat& b, const Rat& d);

/// Exact sign of a + b*sqrt(p) + c*sqrt(q) for p, q >= 0.
int sign_of_two_surds(const Rat& a, const Rat& b, const Rat& p, const Rat& c, const Rat& q);

template <int D>
struct QuadExt {
  static_assert(D > 1, "radicand must exceed one");
  Rat a;
  Rat b;

  QuadExt() = default;
  QuadExt(Rat a_, Rat b_ = Rat(0)) : a(std::move(a_)), b(std::move(b_)) {}
  QuadExt(long v) : a(v), b(0) {}

  static QuadExt root() { return {Rat(0), Rat(1)}; }

  QuadExt conj() const { return {a, -b}; }
  Rat norm() const { return a * a - Rat(D) * b * b; }

  QuadExt& operator+=(const QuadExt& o) { a += o.a; b += o.b; return *this; }
  QuadExt& operator-=(const QuadExt& o) { a -= o.a; b -= o.b; return *this; }
  QuadExt& operator*=(const QuadExt& o) {
    Rat na = a * o.a + Rat(D) * b * o.b;
    b = a * o.b + b * o.a;
    a = std::move(na);
    return *this;
  }
  QuadExt& operator/=(const QuadExt& o) {
    Rat n = o.norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero in quadratic field");
    *this *= o.conj();
    a /= n;
    b /= n;
    return *this;
  }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator-(const QuadExt& x) { return {-x.a, -x.b}; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  int sign() const { return sign_of_surd(a, b, Rat(D)); }

  /// Rational enclosure [lo, hi] of width <= |b| 2^-bits.
  std::pair<Rat, Rat> enclose(unsigned bits) const {
    auto [lo, hi] = sqrt_enclosure(Rat(D), bits);
    if (sgn(b) >= 0) return {a + b * lo, a + b * hi};
    return {a + b * hi, a + b * lo};
  }

  std::string str() const {
    if (sgn(b) == 0) return to_string(a);
    std::string s = sgn(a) == 0 ? "" : to_string(a) + (sgn(b) > 0 ? " + " : " - ");
    if (sgn(a) == 0 && sgn(b) < 0) s += "-";
    return s + to_string(Rat(abs(b))) + "*sqrt(" + std::to_string(D) + ")";
  }
};

template <int D>
bool is_zero(const QuadExt<D>& q) {
  return sgn(q.a) == 0 && sgn(q.b) == 0;
}
template <int D>
int sign(const QuadExt<D>& q) {
  return q.sign();
}

using Q2 = QuadExt<2>;
using Q5 = QuadExt<5>;
using Q6 = QuadExt<6>;

/// a + b*sqrt(d) with a runtime radicand d >= 0. Perfect-square radicands are folded into a.
class Surd {
 public:
  Surd() = default;
  Surd(Rat a) : a_(std::move(a)) {}
  Surd(Rat a, Rat b, Rat d);

  const Rat& rational_part() const { return a_; }
  const Rat& surd_coeff() const { return b_; }
  const Rat& radicand() const { return d_; }
  bool is_rational() const { return sgn(b_) == 0; }

  int sign() const { return sign_of_surd(a_, b_, d_); }
  std::pair<Rat, Rat> enclose(unsigned bits) const;
  double approx() const;
  std::string str() const;

  /// Arithmetic with rationals keeps the radicand.
  Surd operator*(const Rat& s) const { return Surd(a_ * s, b_ * s, d_); }
  Surd operator+(const Rat& s) const { return Surd(a_ + s, b_, d_); }
  Surd operator-(const Rat& s) const { return Surd(a_ - s, b_, d_); }
  Surd operator-() const { return Surd(-a_, -b_, d_); }

  /// Sum/product require a shared radicand (or one side rational).
  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y);
  friend Surd operator*(const Surd& x, const Surd& y);

  /// Exact comparison between surds with arbitrary radicands.
  friend int compare(const Surd& x, const Surd& y);
  friend bool operator<(const Surd& x, const Surd& y) { return compare(x, y) < 0; }
  friend bool operator==(const Surd& x, const Surd& y) { return compare(x, y) == 0; }

 private:
  Rat a_{0};
  Rat b_{0};
  Rat d_{0};
};

}  // namespace hetero
