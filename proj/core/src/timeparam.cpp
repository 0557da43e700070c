#include "hetero/timeparam/timeparam.hpp"

#include "hetero/genbounds/genbounds.hpp"
#include "hetero/ratpoly/pade.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hetero {

namespace {

const Q2 kS(Rat(1), Rat(1));  // 1 + sqrt2

Enclosure horner(const PolyQ& p, const Enclosure& u) {
  Enclosure acc(Rat(0));
  for (int k = p.degree(); k >= 0; --k) acc = acc * u + Enclosure(p[static_cast<std::size_t>(k)]);
  return acc;
}

Real horner(const PolyQ& p, const Real& u) {
  Real acc = 0;
  for (int k = p.degree(); k >= 0; --k) acc = acc * u + to_real(p[static_cast<std::size_t>(k)]);
  return acc;
}

// Exact division of p(Phi; r) by a polynomial in Phi with rational coefficients.
std::optional<PolyQR> divide_by(const PolyQR& p, const PolyQ& l) {
  if (p.degree() < l.degree()) return std::nullopt;
  std::vector<PolyQ> rem = p.coeffs();
  const std::size_t dl = static_cast<std::size_t>(l.degree());
  std::vector<PolyQ> q(rem.size() - dl);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = rem[k + dl] * (Rat(1) / l.leading());
    for (std::size_t i = 0; i <= dl; ++i) rem[k + i] -= q[k] * l[i];
  }
  for (const auto& c : rem)
    if (!c.is_zero()) return std::nullopt;
  return PolyQR(std::move(q));
}

}  // namespace

Enclosure closed_form_X(const Rat& r, const Rat& t, unsigned bits) {
  Enclosure phi = exp(Enclosure(r * t), bits);
  Enclosure s = enclose(kS, bits);
  Enclosure d = s + phi;
  return (s + s + phi) * phi / (d * d);
}

Real closed_form_X(const Real& r, const Real& t) {
  Real phi = exp(r * t);
  Real s = 1 + sqrt(Real(2));
  return (2 * s + phi) * phi / ((s + phi) * (s + phi));
}

Enclosure crude_bound_U(const Rat& r, const Rat& t, unsigned bits) {
  Enclosure e = exp(Enclosure(-r * t), bits);
  Rat r2 = r * r;
  return Enclosure(2 * r2 + 1) / (Enclosure(Rat(1)) + Enclosure(Rat(4 * r2 + 1)) * e);
}

Real crude_bound_U(const Real& r, const Real& t) {
  Real r2 = r * r;
  return (2 * r2 + 1) / (1 + (4 * r2 + 1) * exp(-r * t));
}

std::pair<PolyQ2R, PolyQ2R> exact_curve() {
  PolyQ2R N(std::vector<PolyQ2>{PolyQ2(), PolyQ2(kS * Q2(2)), PolyQ2(Q2(1))});
  PolyQ2R Q(std::vector<PolyQ2>{PolyQ2(kS * kS), PolyQ2(kS * Q2(2)), PolyQ2(Q2(1))});
  return {N, Q};
}

ExactCurveIdentity exact_curve_identity() {
  auto [N, Q] = exact_curve();
  ExactCurveIdentity out;
  out.numerator = residual_M<Q2>(N, Q).numerator;
  // 2 (17 + 12 sqrt2) r (1 - 6 r^2)
  PolyQ2 lead(std::vector<Q2>{Q2(0), Q2(34, 24), Q2(0), Q2(-204, -144)});
  PolyQ2R lin(std::vector<PolyQ2>{PolyQ2(kS), PolyQ2(Q2(1))});
  out.expected = (pow(lin, 3) * lead).shift(3);
  out.matches = out.numerator == out.expected;
  PolyQ2 f(std::vector<Q2>{Q2(1), Q2(0), Q2(-6)});
  out.vanishes_at_inv_sqrt6 = std::all_of(out.numerator.coeffs().begin(), out.numerator.coeffs().end(),
                                          [&](const PolyQ2& c) { return divrem(c, f).second.is_zero(); });
  return out;
}

AnsatzShape ansatz_shape(const Rat& alpha, const Rat& beta) {
  AnsatzShape out;
  out.alpha = alpha;
  out.beta = beta;
  PolyQR N(std::vector<PolyQ>{PolyQ(), PolyQ(beta), PolyQ(alpha)});
  PolyQR Q(std::vector<PolyQ>{PolyQ(Rat(1)), PolyQ(Rat(alpha + 2 * beta - 1)), PolyQ(alpha)});
  PolyQR num = residual_M<Rat>(N, Q).numerator;
  out.phi_cubed = num.valuation() >= 3;
  if (!out.phi_cubed) return out;
  num = num.unshift(3);
  auto q = divide_by(num, PolyQ(std::vector<Rat>{beta, 2 * alpha, alpha * (alpha + beta - 1)}));
  out.quadratic_factor = q.has_value();
  if (q) out.p_degree = q->degree();
  return out;
}

std::string to_string(TrichotomyCase c) {
  switch (c) {
    case TrichotomyCase::Below: return "r < 1/sqrt(6)";
    case TrichotomyCase::Exact: return "r = 1/sqrt(6)";
    case TrichotomyCase::Above: return "r > 1/sqrt(6)";
  }
  return "?";
}

TrichotomyCase classify(const Rat& r) {
  int c = cmp(6 * r * r, Rat(1));
  return c < 0 ? TrichotomyCase::Below : (c == 0 ? TrichotomyCase::Exact : TrichotomyCase::Above);
}

TrichotomyReport sign_trichotomy(const Rat& r, const std::vector<Rat>& t_samples, const OracleOptions& opt) {
  TrichotomyReport rep;
  rep.r = r;
  rep.which = classify(r);
  std::vector<Rat> ts = t_samples;
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  OrbitSample s = integrate_time(preset("fisher"), r, ts, opt);
  const Real rr = to_real(r);
  rep.all_match = true;
  bool first = true;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    TrichotomyRow row;
    row.t = ts[i];
    row.oracle = s.values[i];
    row.X = closed_form_X(rr, to_real(ts[i]));
    row.difference = row.oracle - row.X;
    row.error = s.errors[i];
    int st = sgn(ts[i]);
    row.predicted = rep.which == TrichotomyCase::Below ? -st : st;
    if (st == 0) {
      row.observed = 0;
    } else {
      if (abs(row.difference) <= row.error)
        throw OracleInconclusive("|x(t) - X(t)| below the oracle error at t = " + to_string(ts[i]));
      row.observed = row.difference > 0 ? 1 : -1;
      Real margin = abs(row.difference) / row.error;
      if (first || margin < rep.min_margin) rep.min_margin = margin;
      first = false;
    }
    if (row.observed != row.predicted) rep.all_match = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

ExactCaseReport exact_case_check(const std::vector<Real>& t_grid, const OracleOptions& opt) {
  const Real r = 1 / sqrt(Real(6));
  OrbitSample s = integrate_time(preset("fisher"), Real(1 / r - r), t_grid, opt);
  ExactCaseReport rep;
  rep.max_difference = 0;
  rep.max_oracle_error = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Real d = abs(s.values[i] - closed_form_X(r, t_grid[i]));
    if (d >= rep.max_difference) {
      rep.max_difference = d;
      rep.worst_t = t_grid[i];
    }
    rep.max_oracle_error = std::max(rep.max_oracle_error, s.errors[i]);
  }
  return rep;
}

Rat PhiSeries::coeff_at(int j) const {
  if (!r) throw std::logic_error("symbolic Phi-series has no numeric coefficients");
  return values.at(static_cast<std::size_t>(j));
}

PhiSeries phi_series(int n) {
  if (n < 1) throw std::invalid_argument("phi_series needs n >= 1");
  PhiSeries s;
  s.n = n;
  s.symbolic.assign(static_cast<std::size_t>(2 * n) + 1, RFun());
  s.symbolic[1] = RFun(Rat(1));
  for (int j = 2; j <= 2 * n; ++j) {
    RFun acc;
    for (int k = 1; 2 * k <= j; ++k) {
      RFun term = s.symbolic[static_cast<std::size_t>(k)] * s.symbolic[static_cast<std::size_t>(j - k)];
      acc += 2 * k == j ? term : term * RFun(Rat(2));
    }
    s.symbolic[static_cast<std::size_t>(j)] = (acc * RFun(Rat(-1, j - 1))).divided_by(j);
  }
  return s;
}

PhiSeries phi_series(const Rat& r, int n) {
  if (n < 1) throw std::invalid_argument("phi_series needs n >= 1");
  PhiSeries s;
  s.r = r;
  s.n = n;
  s.values.assign(static_cast<std::size_t>(2 * n) + 1, Rat(0));
  s.values[1] = 1;
  const Rat r2 = r * r;
  for (int j = 2; j <= 2 * n; ++j) {
    Rat acc = 0;
    for (int k = 1; k < j; ++k) acc += s.values[static_cast<std::size_t>(k)] * s.values[static_cast<std::size_t>(j - k)];
    s.values[static_cast<std::size_t>(j)] = -acc / ((j - 1) * (j * r2 + 1));
  }
  return s;
}

PhiPade phi_pade(int n) {
  if (n < 1) throw std::invalid_argument("phi_pade needs n >= 1");
  PhiSeries s = phi_series(n);
  RFun::FactorMap den;
  PolyQR cleared = clear_denominators(s.symbolic, &den);
  std::vector<PolyQ> series(static_cast<std::size_t>(2 * n) + 1);
  for (std::size_t j = 0; j < series.size(); ++j) series[j] = cleared.coeff(j);
  PhiPade out;
  out.n = n;
  out.z = pade(series, n, n);
  out.z.den = out.z.den * RFun::product(den);
  normalize(out.z);
  // Expansion match, checked at one rational parameter.
  const Rat probe(1, 10);
  PhiSeries fixed = phi_series(probe, n);
  std::vector<Rat> ex = expand_at(out.z, probe, 2 * n);
  for (int j = 0; j <= 2 * n; ++j)
    if (ex[static_cast<std::size_t>(j)] != fixed.values[static_cast<std::size_t>(j)])
      throw std::logic_error("Phi-Pade expansion does not match the series at order " + std::to_string(j));
  return out;
}

PhiPadeCertificate certify_phi_pade(int n) {
  auto start = std::chrono::steady_clock::now();
  PhiPadeCertificate cert;
  cert.n = n;
  cert.pade = phi_pade(n);
  cert.residual = residual_M<Rat>(cert.pade.z.num, cert.pade.z.den).numerator;
  if (cert.residual.is_zero()) throw CertificateFailed("shape", "residual vanishes identically");
  cert.phi_power = cert.residual.valuation();
  PolyQR rest = cert.residual.unshift(static_cast<std::size_t>(cert.phi_power));
  int rp = -1;
  for (const auto& c : rest.coeffs())
    if (!c.is_zero()) rp = rp < 0 ? c.valuation() : std::min(rp, c.valuation());
  cert.r_power = rp;
  const PolyQ f(std::vector<Rat>{Rat(1), Rat(0), Rat(-6)});
  std::vector<PolyQ> pc;
  for (const auto& c : rest.coeffs()) {
    PolyQ u = c.unshift(static_cast<std::size_t>(rp));
    auto [q, rem] = divrem(u, f);
    if (!rem.is_zero()) throw CertificateFailed("shape", "a residual coefficient is not divisible by 1 - 6r^2");
    pc.push_back(q);
  }
  PolyQR P(std::move(pc));
  Rat s = integer_scale(P);
  cert.scale = 1 / s;
  cert.P = to_rational(primitive_integer(P));
  if (cert.phi_power != 2 * n + 2 || cert.r_power != 3 || cert.P.degree() != 3 * n - 3)
    throw CertificateFailed("shape", "residual is Phi^" + std::to_string(cert.phi_power) + " r^" +
                                         std::to_string(cert.r_power) + " (1 - 6r^2) P with deg P = " +
                                         std::to_string(cert.P.degree()));
  for (int j = 0; j <= cert.P.degree(); ++j) {
    const PolyQ& c = cert.P[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    auto pcert = positive_below_inv_sqrt6(c, "P coefficient of Phi^" + std::to_string(j));
    if (!pcert) throw CertificateFailed("P", "coefficient of Phi^" + std::to_string(j) + " not certified");
    cert.P_certs.push_back(std::move(*pcert));
  }
  for (int j = 0; j <= cert.pade.z.den.degree(); ++j) {
    const PolyQ& c = cert.pade.z.den[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    auto qcert = positive_below_inv_sqrt6(c, "c_" + std::to_string(j));
    if (!qcert) throw CertificateFailed("Q", "c_" + std::to_string(j) + " not certified");
    cert.Q_certs.push_back(std::move(*qcert));
  }
  auto fc = positive_below_inv_sqrt6(f, "1 - 6r^2");
  if (!fc) throw CertificateFailed("shape", "1 - 6r^2 not certified");
  cert.factor_cert = std::move(*fc);
  cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

Enclosure RescaledBound::eval(const Rat& t, unsigned bits) const {
  Enclosure u = Enclosure(rho_lo, rho_hi) * exp(Enclosure(r * t), bits);
  return horner(num, u) / horner(den, u);
}

Real RescaledBound::eval(const Real& t) const {
  Real u = to_real((rho_lo + rho_hi) / 2) * exp(to_real(r) * t);
  return horner(num, u) / horner(den, u);
}

RescaledBound rescale_rho0(const PhiPade& pade, const Rat& r, const Rat& tol) {
  RescaledBound out;
  out.n = pade.n;
  out.r = r;
  auto [num, den] = pade.z.at(r);
  out.num = num;
  out.den = den;
  // W_n(0, rho) - 1/2 has the sign of 2 num(rho) - den(rho) while den > 0.
  auto f = [&](const Rat& rho) {
    Rat d = den.eval(rho);
    if (sgn(d) <= 0) throw NoSignChange("denominator not positive at rho = " + to_string(rho));
    return sgn(Rat(2 * num.eval(rho) - d));
  };
  Rat lo(0), hi(1);
  if (f(lo) >= 0 || f(hi) <= 0) throw NoSignChange("W_n(0, rho) - 1/2 does not change sign on (0, 1)");
  while (hi - lo > tol) {
    Rat mid = (lo + hi) / 2;
    int s = f(mid);
    if (s == 0) {
      lo = hi = mid;
      break;
    }
    (s < 0 ? lo : hi) = mid;
  }
  out.rho_lo = lo;
  out.rho_hi = hi;
  return out;
}

namespace {

Real ratio_minus_one(const PolyQ& b, const PolyQ& c, const Real& r) { return horner(b, r) / horner(c, r) - 1; }

}  // namespace

LimitTable limit_errors(const std::vector<int>& ns, const std::vector<PhiPade>* pades) {
  LimitTable table;
  const Real inv_sqrt6 = 1 / sqrt(Real(6));
  const int grid = 10000;
  const Int grid_den(24495);  // 10000/24495 < 1/sqrt6
  for (std::size_t i = 0; i < ns.size(); ++i) {
    PhiPade p = pades ? (*pades)[i] : phi_pade(ns[i]);
    LimitRow row;
    row.n = ns[i];
    std::tie(row.b, row.c) = p.limit();
    int best = 1;
    Real best_v = ratio_minus_one(row.b, row.c, to_real(make_rat(Int(1), grid_den)));
    for (int k = 2; k <= grid; ++k) {
      Real v = ratio_minus_one(row.b, row.c, to_real(make_rat(Int(k), grid_den)));
      if (v > best_v) {
        best_v = v;
        best = k;
      }
    }
    // Golden-section refinement on the bracketing cells.
    Real a = to_real(make_rat(Int(best - 1), grid_den));
    Real b = best == grid ? inv_sqrt6 : to_real(make_rat(Int(best + 1), grid_den));
    const Real g = (sqrt(Real(5)) - 1) / 2;
    Real x1 = b - g * (b - a), x2 = a + g * (b - a);
    Real f1 = ratio_minus_one(row.b, row.c, x1), f2 = ratio_minus_one(row.b, row.c, x2);
    while (b - a > Real("1e-13")) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + g * (b - a);
        f2 = ratio_minus_one(row.b, row.c, x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - g * (b - a);
        f1 = ratio_minus_one(row.b, row.c, x1);
      }
    }
    Real xm = (a + b) / 2;
    Real vm = ratio_minus_one(row.b, row.c, xm);
    if (vm < best_v) {
      vm = best_v;
      xm = to_real(make_rat(Int(best), grid_den));
    }
    row.E = static_cast<double>(vm);
    row.argmax = static_cast<double>(xm);
    table.rows.push_back(std::move(row));
  }
  std::vector<std::size_t> order(table.rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return table.rows[x].n < table.rows[y].n; });
  for (int k = 1; k <= 10; ++k) table.samples.push_back(make_rat(Int(k), Int(25)));
  table.ordered = true;
  for (const auto& r : table.samples) {
    Rat prev;
    bool have = false;
    for (std::size_t idx : order) {
      const auto& row = table.rows[idx];
      Rat v = row.b.eval(r) / row.c.eval(r);
      if (v <= 1 || (have && !(v < prev))) table.ordered = false;
      prev = v;
      have = true;
    }
  }
  table.decreasing = true;
  for (std::size_t i = 1; i < order.size(); ++i)
    if (!(table.rows[order[i]].E < table.rows[order[i - 1]].E)) table.decreasing = false;
  return table;
}

Q5 e2_closed_form() { return Q5(Rat(3), Rat(-4, 3)); }

}  // namespace hetero
