#include "hetero/enclosure.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>

namespace hetero {

Enclosure::Enclosure(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("enclosure with lo > hi");
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Enclosure operator-(const Enclosure& a, const Enclosure& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Enclosure operator-(const Enclosure& a) { return {-a.hi, -a.lo}; }

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.sign() == 0) throw std::domain_error("division by an enclosure containing zero");
  return a * Enclosure(1 / b.hi, 1 / b.lo);
}

Enclosure hull(const Enclosure& a, const Enclosure& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

Enclosure enclose(const Surd& s, unsigned bits) {
  auto [l, h] = s.enclose(bits);
  return {l, h};
}

namespace {

class Mpfr {
 public:
  explicit Mpfr(unsigned bits) { mpfr_init2(v_, static_cast<mpfr_prec_t>(bits)); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }
  Rat to_rat() {
    Rat q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

 private:
  mpfr_t v_;
};

template <class F>
Rat directed(const Rat& x, unsigned bits, mpfr_rnd_t rnd, F&& f) {
  // Rounding the input in the same direction keeps the result one-sided
  // because every function used here is increasing.
  Mpfr in(bits + 32), out(bits);
  mpfr_set_q(in.get(), x.get_mpq_t(), rnd);
  f(out.get(), in.get(), rnd);
  return out.to_rat();
}

}  // namespace

Enclosure exp(const Enclosure& x, unsigned bits) {
  auto f = [](mpfr_ptr o, mpfr_ptr i, mpfr_rnd_t r) { mpfr_exp(o, i, r); };
  return {directed(x.lo, bits, MPFR_RNDD, f), directed(x.hi, bits, MPFR_RNDU, f)};
}

Enclosure log(const Enclosure& x, unsigned bits) {
  if (sgn(x.lo) <= 0) throw std::domain_error("log of an enclosure reaching zero");
  auto f = [](mpfr_ptr o, mpfr_ptr i, mpfr_rnd_t r) { mpfr_log(o, i, r); };
  return {directed(x.lo, bits, MPFR_RNDD, f), directed(x.hi, bits, MPFR_RNDU, f)};
}

Enclosure root(const Enclosure& x, unsigned long k, unsigned bits) {
  if (k == 0) throw std::invalid_argument("zeroth root");
  if (sgn(x.lo) < 0) throw std::domain_error("root of a negative enclosure");
  auto f = [k](mpfr_ptr o, mpfr_ptr i, mpfr_rnd_t r) { mpfr_rootn_ui(o, i, k, r); };
  return {directed(x.lo, bits, MPFR_RNDD, f), directed(x.hi, bits, MPFR_RNDU, f)};
}

Enclosure pow(const Enclosure& x, unsigned e) {
  if (e == 0) return Enclosure(Rat(1));
  Rat a = pow(x.lo, e), b = pow(x.hi, e);
  if (e % 2 == 1 || sgn(x.lo) >= 0) return {std::min(a, b), std::max(a, b)};
  if (sgn(x.hi) <= 0) return {b, a};
  return {Rat(0), std::max(a, b)};
}

}  // namespace hetero
