#include "hetero/errors.hpp"
#include "hetero/separatrix/separatrix.hpp"

#include <chrono>

namespace hetero {

RFun TaylorSeparatrix::coeff(int k) const {
  if (k < 1 || k > n) throw std::out_of_range("Taylor coefficient index " + std::to_string(k));
  if (is_symbolic()) return symbolic[static_cast<std::size_t>(k - 1)];
  return RFun(values[static_cast<std::size_t>(k - 1)]);
}

PolyQ TaylorSeparatrix::polynomial() const {
  if (is_symbolic()) throw std::logic_error("polynomial() needs a fixed r");
  std::vector<Rat> c(values.size() + 1);
  std::copy(values.begin(), values.end(), c.begin() + 1);
  return PolyQ(std::move(c));
}

Rat TaylorSeparatrix::eval(const Rat& x) const {
  if (is_symbolic()) throw std::logic_error("eval() needs a fixed r");
  Rat acc = 0;
  for (auto it = values.rbegin(); it != values.rend(); ++it) acc = (acc + *it) * x;
  return acc;
}

PolyQR TaylorSeparatrix::cleared(RFun::FactorMap* den) const {
  std::vector<RFun> c{RFun()};
  if (is_symbolic()) {
    c.insert(c.end(), symbolic.begin(), symbolic.end());
  } else {
    for (const auto& v : values) c.emplace_back(v);
  }
  return clear_denominators(c, den);
}

TaylorSeparatrix taylor_coeffs(int n) {
  if (n < 1) throw std::invalid_argument("Taylor order must be >= 1");
  TaylorSeparatrix ts;
  ts.n = n;
  const PolyQ r = PolyQ::variable();
  auto& h = ts.symbolic;
  h.push_back(RFun(-r));
  if (n >= 2) h.push_back(RFun(r).divided_by(2));
  for (int k = 3; k <= n; ++k) {
    // h_k = r sum_{j=2}^{k-1} j h_j h_{k+1-j} / (k r^2 + 1); pair j with k+1-j.
    RFun sum;
    for (int j = 2; 2 * j <= k + 1; ++j) {
      int i = k + 1 - j;
      long w = i == j ? j : i + j;
      sum += RFun(Rat(w)) * h[static_cast<std::size_t>(j - 1)] * h[static_cast<std::size_t>(i - 1)];
    }
    h.push_back((RFun(r) * sum).divided_by(k));
  }
  return ts;
}

TaylorSeparatrix taylor_coeffs(const Rat& r, int n) {
  if (n < 1) throw std::invalid_argument("Taylor order must be >= 1");
  if (sgn(r) <= 0) throw std::invalid_argument("r must be positive");
  TaylorSeparatrix ts;
  ts.r = r;
  ts.n = n;
  auto& h = ts.values;
  h.push_back(-r);
  Rat r2 = r * r;
  if (n >= 2) h.push_back(r / (2 * r2 + 1));
  for (int k = 3; k <= n; ++k) {
    Rat sum = 0;
    for (int j = 2; 2 * j <= k + 1; ++j) {
      int i = k + 1 - j;
      long w = i == j ? j : i + j;
      sum += w * h[static_cast<std::size_t>(j - 1)] * h[static_cast<std::size_t>(i - 1)];
    }
    h.push_back(r * sum / (k * r2 + 1));
  }
  return ts;
}

Residual residual_identity_check(const TaylorSeparatrix& ts) {
  Residual out;
  const PolyQR quad(std::vector<PolyQ>{PolyQ{}, PolyQ(Rat(-1)), PolyQ(Rat(1))});  // x^2 - x
  if (ts.is_symbolic()) {
    // With H = D h: r D^2 M = (r H' + (r^2 - 1) D) H + r D^2 (x^2 - x).
    RFun::FactorMap d;
    PolyQR H = ts.cleared(&d);
    const PolyQ r = PolyQ::variable();
    PolyQ dpoly = RFun::product(d);
    PolyQR lin = H.derivative() * r + lift(PolyQ(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)}) * dpoly);
    out.cleared = lin * H + quad * (r * dpoly * dpoly);
    for (const auto& [id, e] : d) out.den[id] = 2 * e;
    out.den[0] += 1;
  } else {
    const Rat& r = *ts.r;
    PolyQ h = ts.polynomial();
    PolyQ lin = h.derivative() + PolyQ(Rat(r - 1 / r));
    PolyQ m = lin * h + PolyQ(std::vector<Rat>{Rat(0), Rat(-1), Rat(1)});
    out.cleared = m.map([](const Rat& c) { return PolyQ(c); });
  }
  return out;
}

LowerCertificate lower_certificate(int n) {
  if (n < 2) throw std::invalid_argument("lower certificate needs n >= 2");
  auto start = std::chrono::steady_clock::now();
  LowerCertificate out;
  out.n = n;
  TaylorSeparatrix ts = taylor_coeffs(n);
  out.contact = residual_identity_check(ts);
  const std::string tag = "lower n=" + std::to_string(n);
  int v = out.contact.first_nonzero();
  if (v >= 0 && v <= n) throw CertificateFailed(tag + " residual", "nonzero coefficient at x^" + std::to_string(v));
  auto contact = positive_on_positive_quadrant(out.contact.cleared, "M_" + std::to_string(n) + " (cleared)");
  if (!contact) {
    std::string where;
    for (std::size_t k = 0; k < out.contact.cleared.size(); ++k)
      if (!all_nonnegative(out.contact.cleared[k])) {
        where = "x^" + std::to_string(k);
        break;
      }
    throw CertificateFailed(tag + " contact", "negative monomial in coefficient of " + where);
  }
  out.contact_cert = std::move(*contact);

  for (int k = 2; k <= n; ++k) {
    auto c = positive_on_positive_axis(ts.coeff(k).numerator(), "numerator of h_" + std::to_string(k));
    if (!c) throw CertificateFailed(tag + " coefficients", "h_" + std::to_string(k) + " not certified positive");
    out.coefficient_certs.push_back(std::move(*c));
  }

  RFun sum;
  for (int k = 1; k <= n; ++k) sum += ts.coeff(k);
  out.h_at_1 = sum;
  auto end = positive_on_positive_axis(-sum.numerator(), "-h_" + std::to_string(n) + "(1) numerator");
  if (!end) throw CertificateFailed(tag + " endpoint", "-h_n(1) numerator has a negative coefficient");
  out.endpoint_cert = std::move(*end);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace hetero
