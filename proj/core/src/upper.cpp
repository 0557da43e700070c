#include "hetero/errors.hpp"
#include "hetero/ratpoly/resultant.hpp"
#include "hetero/separatrix/separatrix.hpp"

#include <chrono>
#include <cmath>

namespace hetero {

namespace {

const PolyQR& x_squared_minus_x() {
  static const PolyQR p(std::vector<PolyQ>{PolyQ{}, PolyQ(Rat(-1)), PolyQ(Rat(1))});
  return p;
}

}  // namespace

Rat PadeBound::eval(const Rat& x, const Rat& r_value) const {
  Rat den = eval_outer(C, x).eval(r_value);
  if (sgn(den) == 0) throw std::domain_error("pole of the Pade bound");
  return r_value * x * (x - 1) * eval_outer(A, x).eval(r_value) / den;
}

Rat PadeBound::eval(const Rat& x) const {
  if (!r) throw std::logic_error("eval(x) needs a fixed r");
  return eval(x, *r);
}

int pade_source_degree(int n) { return n > 10 ? 2 * n + 2 : 22; }

std::vector<RFun> pade_source_series(int order) {
  // h(x) / (r x (x - 1)) = -(1/r) sum_K x^K sum_{k <= K+1} h_k; every h_k carries a factor r.
  TaylorSeparatrix ts = taylor_coeffs(order + 1);
  std::vector<RFun> out;
  RFun partial;
  for (int K = 0; K <= order; ++K) {
    partial += ts.coeff(K + 1);
    out.emplace_back(-partial.numerator().unshift(1), partial.factors());
  }
  return out;
}

PadeBound pade_bound(int n) {
  if (n < 1) throw std::invalid_argument("Pade bound order must be >= 1");
  auto s = pade_source_series(2 * n);
  RFun::FactorMap d;
  for (const auto& c : s) d = common_factors(d, c.factors());
  std::vector<PolyQ> series;
  for (const auto& c : s) series.push_back(c.numerator_over(d));
  RatFuncQR f = pade(series, n, n);
  RatFuncQR g{f.num, f.den * RFun::product(d)};
  normalize(g);
  return {n, std::nullopt, std::move(g.num), std::move(g.den)};
}

PadeBound pade_bound(const Rat& r, int n) {
  if (n < 1) throw std::invalid_argument("Pade bound order must be >= 1");
  TaylorSeparatrix ts = taylor_coeffs(r, 2 * n + 1);
  std::vector<PolyQ> series;
  Rat partial = 0;
  for (int K = 0; K <= 2 * n; ++K) {
    partial += ts.values[static_cast<std::size_t>(K)];
    series.emplace_back(Rat(-partial / r));
  }
  RatFuncQR f = pade(series, n, n);
  return {n, r, std::move(f.num), std::move(f.den)};
}

std::optional<std::pair<int, int>> table_discriminant_degrees(int n) {
  static const int b[] = {40, 212, 624, 1480, 2900, 5028, 8260, 12560, 18180};
  static const int c[] = {24, 100, 264, 584, 1100, 1860, 2996, 4496, 6444};
  if (n < 2 || n > 10) return std::nullopt;
  return std::pair{b[n - 2], c[n - 2]};
}

UpperCertificate upper_certificate(int n, const Rat& witness) {
  auto start = std::chrono::steady_clock::now();
  const std::string tag = "upper n=" + std::to_string(n);
  UpperCertificate out;
  out.n = n;
  out.bound = pade_bound(n);
  const PolyQR& A = out.bound.A;
  const PolyQR& C = out.bound.C;
  const PolyQR& P = x_squared_minus_x();
  const PolyQ r = PolyQ::variable();
  const PolyQ r2 = r * r;

  // N C^3 = r^2 P A (P' A C + P (A' C - A C')) + (r^2 - 1) P A C^2 + P C^3.
  PolyQR AC = A * C;
  PolyQR C2 = C * C;
  PolyQR inner = P.derivative() * AC + P * (A.derivative() * C - A * C.derivative());
  PolyQR nc3 = P * A * inner * r2 + P * A * C2 * (r2 - PolyQ(Rat(1))) + P * C2 * C;

  out.x_power = nc3.valuation();
  if (out.x_power != 2 * n + 2)
    throw CertificateFailed(tag + " factor", "contact vanishes to order " + std::to_string(out.x_power) + " at x=0");
  PolyQR q = nc3.unshift(static_cast<std::size_t>(out.x_power));
  try {
    q = exact_div(q, PolyQR(std::vector<PolyQ>{PolyQ(Rat(-1)), PolyQ(Rat(1))}));
  } catch (const std::domain_error&) {
    throw CertificateFailed(tag + " factor", "contact not divisible by x - 1");
  }
  int rv = -1;
  for (const auto& c : q.coeffs())
    if (!c.is_zero()) rv = rv < 0 ? c.valuation() : std::min(rv, c.valuation());
  out.r_power = rv;
  q = q.map([&](const PolyQ& c) { return c.unshift(static_cast<std::size_t>(rv)); });
  Rat s = integer_scale(q);
  out.B = q * PolyQ(s);
  out.scale = 1 / s;
  if (sgn(out.B.coeff(0).coeff(static_cast<std::size_t>(std::max(0, out.B.coeff(0).valuation())))) < 0) {
    out.B = -out.B;
    out.scale = -out.scale;
  }
  if (sgn(out.scale) < 0) throw CertificateFailed(tag + " sign", "B changes the expected sign of the contact");

  std::string why;
  auto bc = positive_on_unit_interval(out.B, witness, "B_" + std::to_string(n), &why);
  if (!bc) throw CertificateFailed(tag + " B", why);
  auto cc = positive_on_unit_interval(C, witness, "C_" + std::to_string(n), &why);
  if (!cc) throw CertificateFailed(tag + " C", why);
  out.B_cert = std::move(*bc);
  out.C_cert = std::move(*cc);
  out.dis_degree_B = out.B_cert.discriminant.degree();
  out.dis_degree_C = out.C_cert.discriminant.degree();
  if (auto t = table_discriminant_degrees(n)) {
    out.table_B = t->first;
    out.table_C = t->second;
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

OrderingCertificate ordering_check(const PadeBound& rk, const PadeBound& rk1) {
  const int k = rk.n;
  const std::string tag = "ordering k=" + std::to_string(k);
  if (rk1.n != k - 1) throw std::invalid_argument("ordering_check needs consecutive orders");
  OrderingCertificate out;
  out.k = k;
  PolyQR diff = rk.A * rk1.C - rk1.A * rk.C;
  int nonzero = 0, at = -1;
  for (std::size_t j = 0; j < diff.size(); ++j)
    if (!diff[j].is_zero()) {
      ++nonzero;
      at = static_cast<int>(j);
    }
  if (nonzero != 1) throw CertificateFailed(tag + " factor", "difference numerator is not a single power of x");
  out.x_power = at + 1;
  PolyQ q = diff[static_cast<std::size_t>(at)];
  int v = q.valuation();
  out.r_power = v + 1;
  q = q.unshift(static_cast<std::size_t>(v));
  std::vector<Rat> even;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i % 2 == 1) {
      if (sgn(q[i]) != 0) throw CertificateFailed(tag + " factor", "cofactor is not a polynomial in r^2");
    } else {
      even.push_back(q[i]);
    }
  }
  PolyQ D(std::move(even));
  Rat s = integer_scale(D);
  out.D = D * s;
  out.scale = 1 / s;
  auto c = positive_on_positive_axis(out.D, "D_" + std::to_string(k));
  if (!c) throw CertificateFailed(tag + " sign", "D_k has a negative coefficient");
  out.D_cert = std::move(*c);
  return out;
}

OrderingCertificate ordering_check(int k) {
  if (k < 2) throw std::invalid_argument("ordering_check needs k >= 2");
  return ordering_check(pade_bound(k), pade_bound(k - 1));
}

GapReport gap_report(const Rat& r, int n, int m, int grid) {
  GapReport g;
  g.r = r;
  g.lower_n = n;
  g.upper_m = m;
  g.grid = grid;
  TaylorSeparatrix ts = taylor_coeffs(r, n);
  g.gap_at_1 = -ts.eval(Rat(1));
  g.grid_sup = g.gap_at_1;
  g.location_of_max = 1;
  if (grid > 1) {
    PadeBound R = pade_bound(r, m);
    for (int j = 1; j < grid; ++j) {
      Rat x = make_rat(j, grid);
      Rat gap = R.eval(x) - ts.eval(x);
      if (gap > g.grid_sup) {
        g.grid_sup = gap;
        g.location_of_max = x;
      }
    }
  }
  return g;
}

double radius_estimate(const Rat& r, int n) {
  TaylorSeparatrix ts = taylor_coeffs(r, n);
  auto log_abs = [](const Rat& v) {
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, v.get_num_mpz_t());
    double md = mpz_get_d_2exp(&ed, v.get_den_mpz_t());
    return std::log(std::abs(mn / md)) + static_cast<double>(en - ed) * std::log(2.0);
  };
  double acc = 0;
  int count = 0;
  for (int k = std::max(3, n / 2 + 1); k <= n; ++k) {
    acc += -log_abs(ts.values[static_cast<std::size_t>(k - 1)]) / k;
    ++count;
  }
  return count ? std::exp(acc / count) : 0.0;
}

}  // namespace hetero
