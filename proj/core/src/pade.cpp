#include "hetero/ratpoly/pade.hpp"

#include <utility>

namespace hetero {

Rat RatFuncQR::eval(const Rat& x, const Rat& r) const {
  Rat d = eval_outer(den, x).eval(r);
  if (sgn(d) == 0) throw std::domain_error("rational function pole");
  return eval_outer(num, x).eval(r) / d;
}

std::pair<PolyQ, PolyQ> RatFuncQR::at(const Rat& r) const { return {specialize(num, r), specialize(den, r)}; }

namespace {

PolyZ common_gcd(const std::vector<const PolyZ*>& polys) {
  PolyZ g;
  for (const PolyZ* p : polys) {
    if (p->is_zero()) continue;
    g = g.is_zero() ? *p : gcd(g, *p);
    if (g.degree() == 0) return PolyZ(Int(1));
  }
  return g.is_zero() ? PolyZ(Int(1)) : gcd(g, g);
}

}  // namespace

void normalize(RatFuncQR& f) {
  if (f.den.is_zero()) throw std::domain_error("rational function with zero denominator");
  // One common integer scale makes numerator and denominator integral together.
  Int l = 1;
  for (const auto* part : {&f.num, &f.den})
    for (const auto& c : part->coeffs())
      for (const auto& q : c.coeffs()) l = lcm(l, q.get_den());
  auto to_z = [&](const PolyQR& p) {
    return p.map([&](const PolyQ& c) { return c.map([&](const Rat& q) { return Int(q.get_num() * (l / q.get_den())); }); });
  };
  PolyZR num = to_z(f.num), den = to_z(f.den);
  std::vector<const PolyZ*> all;
  for (const auto& c : num.coeffs()) all.push_back(&c);
  for (const auto& c : den.coeffs()) all.push_back(&c);
  PolyZ g = common_gcd(all);
  if (g.degree() > 0) {
    num = num.map([&](const PolyZ& c) { return exact_div(c, g); });
    den = den.map([&](const PolyZ& c) { return exact_div(c, g); });
  }
  Int ic = content(num);
  mpz_gcd(ic.get_mpz_t(), ic.get_mpz_t(), content(den).get_mpz_t());
  if (ic > 1) {
    num = num.map([&](const PolyZ& c) { return exact_scalar_div(c, ic); });
    den = den.map([&](const PolyZ& c) { return exact_scalar_div(c, ic); });
  }
  // Sign: make den(0; r) positive as r -> 0+, falling back to the lowest x-coefficient.
  const PolyZ* lead = nullptr;
  for (const auto& c : den.coeffs())
    if (!c.is_zero()) {
      lead = &c;
      break;
    }
  if (lead && sgn((*lead)[static_cast<std::size_t>(lead->valuation())]) < 0) {
    num = -num;
    den = -den;
  }
  f.num = to_rational(num);
  f.den = to_rational(den);
}

namespace {

using Matrix = std::vector<std::vector<PolyZ>>;

// Fraction-free solve of A y = b (A square, entries in Z[r]). Returns the Cramer
// numerators det(A) * y together with det(A), both exact.
std::pair<std::vector<PolyZ>, PolyZ> bareiss_solve(Matrix a, int m, int n) {
  const std::size_t size = a.size();
  PolyZ prev(Int(1));
  int swaps = 0;
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t piv = k;
    while (piv < size && a[piv][k].is_zero()) ++piv;
    if (piv == size) throw SingularPadeTable(m, n);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j <= size; ++j) {
        PolyZ t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = exact_div(t, prev);
      }
      a[i][k] = PolyZ{};
    }
    prev = a[k][k];
  }
  PolyZ det = a[size - 1][size - 1];
  std::vector<PolyZ> x(size);
  for (std::size_t i = size; i-- > 0;) {
    PolyZ acc = det * a[i][size];
    for (std::size_t j = i + 1; j < size; ++j) acc -= a[i][j] * x[j];
    x[i] = exact_div(acc, a[i][i]);
  }
  (void)swaps;  // a row swap flips det and every numerator together
  return {std::move(x), std::move(det)};
}

}  // namespace

RatFuncQR pade(std::span<const PolyQ> series, int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("Pade orders must be nonnegative");
  if (static_cast<int>(series.size()) <= m + n)
    throw std::invalid_argument("Pade (" + std::to_string(m) + "," + std::to_string(n) + ") needs " +
                                std::to_string(m + n + 1) + " series coefficients");
  const std::size_t len = static_cast<std::size_t>(m + n + 1);
  Int l = 1;
  for (std::size_t k = 0; k < len; ++k)
    for (const auto& q : series[k].coeffs()) l = lcm(l, q.get_den());
  std::vector<PolyZ> t;
  t.reserve(len);
  for (std::size_t k = 0; k < len; ++k)
    t.push_back(series[k].map([&](const Rat& q) { return Int(q.get_num() * (l / q.get_den())); }));
  auto term = [&](int k) { return k < 0 ? PolyZ{} : t[static_cast<std::size_t>(k)]; };

  std::vector<PolyZ> q(static_cast<std::size_t>(n) + 1);
  if (n == 0) {
    q[0] = PolyZ(Int(1));
  } else {
    // Rows k = m+1 .. m+n of sum_j q_j t_{k-j} = 0 with q_0 moved to the right.
    Matrix a(static_cast<std::size_t>(n), std::vector<PolyZ>(static_cast<std::size_t>(n) + 1));
    for (int i = 0; i < n; ++i) {
      int k = m + 1 + i;
      for (int j = 1; j <= n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] = term(k - j);
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] = -term(k);
    }
    auto [x, det] = bareiss_solve(std::move(a), m, n);
    q[0] = det;
    for (int j = 1; j <= n; ++j) q[static_cast<std::size_t>(j)] = std::move(x[static_cast<std::size_t>(j - 1)]);
  }
  std::vector<PolyZ> p(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k)
    for (int j = 0; j <= std::min(k, n); ++j) p[static_cast<std::size_t>(k)] += q[static_cast<std::size_t>(j)] * term(k - j);

  RatFuncQR out;
  out.num = to_rational(PolyZR(std::move(p)));
  out.den = to_rational(PolyZR(std::move(q))) * PolyQ(Rat(l));
  if (out.den.is_zero() || out.den.coeff(0).is_zero()) throw SingularPadeTable(m, n);
  normalize(out);
  return out;
}

bool matches_series(const RatFuncQR& f, std::span<const PolyQ> series, int order) {
  PolyQR s(std::vector<PolyQ>(series.begin(), series.begin() + std::min<std::ptrdiff_t>(order + 1, static_cast<std::ptrdiff_t>(series.size()))));
  PolyQR resid = (f.num - f.den * s).truncate(static_cast<std::size_t>(order) + 1);
  return resid.is_zero();
}

std::vector<Rat> expand_at(const RatFuncQR& f, const Rat& r, int order) {
  auto [num, den] = f.at(r);
  if (sgn(den.coeff(0)) == 0) throw std::domain_error("expansion at a pole");
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
  Rat inv = Rat(1) / den.coeff(0);
  for (int k = 0; k <= order; ++k) {
    Rat acc = num.coeff(static_cast<std::size_t>(k));
    for (int j = 1; j <= std::min(k, den.degree()); ++j) acc -= den[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - j)];
    c[static_cast<std::size_t>(k)] = acc * inv;
  }
  return c;
}

}  // namespace hetero
