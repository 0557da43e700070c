#include "hetero/ratpoly/quad.hpp"

#include <sstream>

namespace hetero {

int sign_of_surd(const Rat& a, const Rat& b, const Rat& d) {
  if (sgn(d) < 0) throw std::domain_error("negative radicand");
  int sa = sgn(a);
  int sb = sgn(b) * (sgn(d) > 0 ? 1 : 0);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d.
  int c = cmp(a * a, b * b * d);
  return c == 0 ? 0 : (c > 0 ? sa : sb);
}

int sign_of_two_surds(const Rat& a, const Rat& b, const Rat& p, const Rat& c, const Rat& q) {
  // s1 = a + b sqrt(p), s2 = c sqrt(q).
  int s1 = sign_of_surd(a, b, p);
  int s2 = sgn(c) * (sgn(q) > 0 ? 1 : 0);
  if (s2 == 0) return s1;
  if (s1 == 0 || s1 == s2) return s2;
  // |s1| vs |s2|: s1^2 - s2^2 = a^2 + b^2 p - c^2 q + 2ab sqrt(p).
  int m = sign_of_surd(a * a + b * b * p - c * c * q, 2 * a * b, p);
  return m == 0 ? 0 : (m > 0 ? s1 : s2);
}

Surd::Surd(Rat a, Rat b, Rat d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (sgn(d_) < 0) throw std::domain_error("negative radicand");
  if (sgn(b_) == 0 || sgn(d_) == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  if (auto s = exact_sqrt(d_)) {
    a_ += b_ * *s;
    b_ = 0;
    d_ = 0;
    return;
  }
  // sqrt(p/q) = sqrt(p q)/q, then pull small square factors out of p q.
  Int den = d_.get_den();
  Int rad = d_.get_num() * den;
  b_ /= den;
  Int k = 1;
  for (unsigned long f = 2; f < 10000 && f * f <= rad; ++f) {
    Int sq = f * f;
    while (mpz_divisible_p(rad.get_mpz_t(), sq.get_mpz_t())) {
      rad /= sq;
      k *= f;
    }
  }
  b_ *= k;
  d_ = rad;
}

std::pair<Rat, Rat> Surd::enclose(unsigned bits) const {
  if (is_rational()) return {a_, a_};
  auto [lo, hi] = sqrt_enclosure(d_, bits);
  if (sgn(b_) > 0) return {a_ + b_ * lo, a_ + b_ * hi};
  return {a_ + b_ * hi, a_ + b_ * lo};
}

double Surd::approx() const {
  auto [lo, hi] = enclose(80);
  return to_double((lo + hi) / 2);
}

std::string Surd::str() const {
  if (is_rational()) return to_string(a_);
  std::ostringstream os;
  if (sgn(a_) != 0) os << to_string(a_) << (sgn(b_) > 0 ? " + " : " - ");
  else if (sgn(b_) < 0) os << "-";
  Rat mag = abs(b_);
  if (mag != 1) os << to_string(mag) << "*";
  os << "sqrt(" << to_string(d_) << ")";
  return os.str();
}

namespace {

Rat shared_radicand(const Surd& x, const Surd& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational() || x.radicand() == y.radicand()) return x.radicand();
  throw std::domain_error("surd arithmetic across different radicands");
}

}  // namespace

Surd operator+(const Surd& x, const Surd& y) {
  Rat d = shared_radicand(x, y);
  return Surd(x.a_ + y.a_, x.b_ + y.b_, d);
}

Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

Surd operator*(const Surd& x, const Surd& y) {
  Rat d = shared_radicand(x, y);
  return Surd(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
}

int compare(const Surd& x, const Surd& y) {
  // sign(x - y) = sign(x.a - y.a + x.b sqrt(x.d) - y.b sqrt(y.d)).
  return sign_of_two_surds(x.a_ - y.a_, x.b_, x.d_, -y.b_, y.d_);
}

}  // namespace hetero
