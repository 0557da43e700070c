#include "hetero/ratpoly/poly.hpp"

#include <algorithm>

namespace hetero {
namespace detail {
namespace {

std::size_t max_bits(const std::vector<Int>& v) {
  std::size_t m = 0;
  for (const auto& c : v)
    if (sgn(c) != 0) m = std::max(m, mpz_sizeinbase(c.get_mpz_t(), 2));
  return m;
}

// sum_{i in [lo, hi)} v[i] 2^{(i - lo) k}, split recursively so each shift is paid once per level.
Int pack(const std::vector<Int>& v, std::size_t lo, std::size_t hi, std::size_t k) {
  if (hi - lo == 1) return v[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  Int high = pack(v, mid, hi, k);
  mpz_mul_2exp(high.get_mpz_t(), high.get_mpz_t(), (mid - lo) * k);
  return pack(v, lo, mid, k) + high;
}

// Splits value into `count` base-2^k digits, all but the top one in [0, 2^k).
void unpack(const Int& value, std::size_t count, std::size_t k, Int* out) {
  if (count == 1) {
    out[0] = value;
    return;
  }
  std::size_t half = count / 2;
  Int low, high;
  mpz_fdiv_r_2exp(low.get_mpz_t(), value.get_mpz_t(), half * k);
  mpz_fdiv_q_2exp(high.get_mpz_t(), value.get_mpz_t(), half * k);
  unpack(low, half, k, out);
  unpack(high, count - half, k, out + half);
}

}  // namespace

std::vector<Int> kronecker_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::size_t lg = 1;
  while ((std::size_t{1} << lg) < n) ++lg;
  const std::size_t k = max_bits(a) + max_bits(b) + lg + 2;
  Int pa = pack(a, 0, a.size(), k);
  Int pb = pack(b, 0, b.size(), k);
  Int prod = pa * pb;
  std::vector<Int> out(a.size() + b.size() - 1);
  unpack(prod, out.size(), k, out.data());
  // Convert the unsigned digits to the balanced range (-2^{k-1}, 2^{k-1}].
  Int base, half;
  mpz_setbit(base.get_mpz_t(), k);
  mpz_setbit(half.get_mpz_t(), k - 1);
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    if (out[i] >= half) {
      out[i] -= base;
      out[i + 1] += 1;
    }
  }
  return out;
}

std::vector<Rat> rational_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  auto scale = [](const std::vector<Rat>& v, Int& l) {
    l = 1;
    for (const auto& c : v) l = lcm(l, c.get_den());
    std::vector<Int> out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(c.get_num() * (l / c.get_den()));
    return out;
  };
  Int la, lb;
  auto ia = scale(a, la);
  auto ib = scale(b, lb);
  auto prod = kronecker_mul(ia, ib);
  Int den = la * lb;
  std::vector<Rat> out;
  out.reserve(prod.size());
  for (auto& c : prod) out.push_back(make_rat(c, den));
  return out;
}

}  // namespace detail

Int content(const PolyZ& p) {
  Int g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Int content(const PolyZR& p) {
  Int g = 0;
  for (const auto& c : p.coeffs()) {
    Int h = content(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

void accumulate_scale(const PolyQ& p, Int& den_lcm, Int& num_gcd) {
  for (const auto& c : p.coeffs()) {
    den_lcm = lcm(den_lcm, c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
  }
}

}  // namespace

Rat integer_scale(const PolyQ& p) {
  if (p.is_zero()) return Rat(1);
  Int l = 1, g = 0;
  accumulate_scale(p, l, g);
  return make_rat(l, g);
}

Rat integer_scale(const PolyQR& p) {
  if (p.is_zero()) return Rat(1);
  Int l = 1, g = 0;
  for (const auto& c : p.coeffs()) accumulate_scale(c, l, g);
  return make_rat(l, g);
}

PolyZ primitive_integer(const PolyQ& p) {
  Rat s = integer_scale(p);
  return p.map([&](const Rat& c) {
    Rat v = c * s;
    return Int(v.get_num());
  });
}

PolyZR primitive_integer(const PolyQR& p) {
  Rat s = integer_scale(p);
  return p.map([&](const PolyQ& q) {
    return q.map([&](const Rat& c) {
      Rat v = c * s;
      return Int(v.get_num());
    });
  });
}

PolyQ to_rational(const PolyZ& p) {
  return p.map([](const Int& c) { return Rat(c); });
}

PolyQR to_rational(const PolyZR& p) {
  return p.map([](const PolyZ& c) { return to_rational(c); });
}

namespace {

PolyZ primitive_part(const PolyZ& p) {
  if (p.is_zero()) return p;
  Int g = content(p);
  if (sgn(p.leading()) < 0) g = -g;
  return exact_scalar_div(p, g);
}

}  // namespace

PolyZ gcd(const PolyZ& a, const PolyZ& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  int v = std::min(a.valuation(), b.valuation());
  PolyZ x = primitive_part(a.unshift(static_cast<std::size_t>(a.valuation())));
  PolyZ y = primitive_part(b.unshift(static_cast<std::size_t>(b.valuation())));
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero() && y.degree() > 0) {
    PolyZ rem = pseudo_rem(x, y);
    x = std::move(y);
    y = primitive_part(rem);
  }
  PolyZ g = y.is_zero() ? x : PolyZ(Int(1));
  return primitive_part(g).shift(static_cast<std::size_t>(v));
}

PolyQ gcd(const PolyQ& a, const PolyQ& b) {
  return to_rational(gcd(primitive_integer(a), primitive_integer(b)));
}

PolyQ specialize(const PolyQR& p, const Rat& value) {
  return p.map([&](const PolyQ& c) { return c.eval(value); });
}

PolyQ eval_outer(const PolyQR& p, const Rat& x) {
  PolyQ acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + p[static_cast<std::size_t>(k)];
  return acc;
}

PolyQR transpose(const PolyQR& p) {
  std::size_t rdeg = 0;
  for (const auto& c : p.coeffs()) rdeg = std::max(rdeg, c.size());
  std::vector<std::vector<Rat>> rows(rdeg, std::vector<Rat>(p.size()));
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i = 0; i < p[j].size(); ++i) rows[i][j] = p[j][i];
  std::vector<PolyQ> out;
  out.reserve(rdeg);
  for (auto& row : rows) out.emplace_back(std::move(row));
  return PolyQR(std::move(out));
}

bool all_nonnegative(const PolyQ& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Rat& c) { return sgn(c) >= 0; });
}

bool all_nonnegative(const PolyQR& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const PolyQ& c) { return all_nonnegative(c); });
}

namespace {

template <class C>
std::string render(const Poly<C>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const C& c = p[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    auto mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = mag == 1;
    if (!unit || k == 0) os << to_string(C(mag));
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace

std::string to_string(const PolyQ& p, const std::string& var) { return render(p, var); }
std::string to_string(const PolyZ& p, const std::string& var) { return render(p, var); }

std::string to_string(const PolyQR& p, const std::string& xvar, const std::string& rvar) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const PolyQ& c = p[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << to_string(c, rvar) << ")";
    if (k > 0) os << "*" << xvar << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return os.str();
}

}  // namespace hetero
