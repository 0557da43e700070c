#include <doctest.h>

#include "hetero/oracle/oracle.hpp"
#include "hetero/timeparam/timeparam.hpp"

using namespace hetero;

namespace {

PolyQ pq(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return PolyQ(std::move(v));
}

}  // namespace

TEST_CASE("closed-form curve and crude bound") {
  CHECK(closed_form_X(Rat(1, 10), Rat(0)).contains(Rat(1, 2)));
  CHECK(closed_form_X(Rat(1, 10), Rat(-2000)).hi < Rat(1, 1000000));
  CHECK(closed_form_X(Rat(1, 10), Rat(2000)).lo > Rat(999999, 1000000));
  CHECK(crude_bound_U(Rat(1, 10), Rat(0)).contains(Rat(1, 2)));
  Rat r(1, 10);
  CHECK(crude_bound_U(r, Rat(5000)).contains(2 * r * r + 1) == false);
  CHECK(abs(crude_bound_U(r, Rat(5000)).mid() - (2 * r * r + 1)) < Rat(1, 1000000));
  Real x = closed_form_X(Real("0.3"), Real("1.7"));
  CHECK(closed_form_X(Rat(3, 10), Rat(17, 10)).contains(to_rat(x)) == true);
}

TEST_CASE("exact residual identity for the closed-form curve") {
  ExactCurveIdentity id = exact_curve_identity();
  CHECK(id.matches);
  CHECK(id.vanishes_at_inv_sqrt6);
  for (Rat beta : {Rat(1, 3), Rat(1, 2), Rat(3, 4)}) {
    AnsatzShape a = ansatz_shape(beta);
    CHECK(a.phi_cubed);
    CHECK(a.quadratic_factor);
    CHECK(a.p_degree <= 3);
  }
  AnsatzShape general = ansatz_shape(Rat(1, 3), Rat(1, 2));
  CHECK(general.quadratic_factor);
  CHECK(general.p_degree == 3);
}

TEST_CASE("trichotomy classification") {
  CHECK(classify(Rat(1, 10)) == TrichotomyCase::Below);
  CHECK(classify(Rat(41, 100)) == TrichotomyCase::Above);
  CHECK(classify(Rat(2, 5)) == TrichotomyCase::Below);
}

TEST_CASE("sign of x - X at r = 1/10") {
  TrichotomyReport rep = sign_trichotomy(Rat(1, 10), {Rat(-5), Rat(-1), Rat(0), Rat(1), Rat(5)});
  CHECK(rep.all_match);
  CHECK(rep.min_margin > 10);
  for (const auto& row : rep.rows) CHECK(row.observed == -sgn(row.t));
}

TEST_CASE("crude bound against the oracle") {
  const Rat r(1, 10);
  std::vector<Rat> ts{Rat(-10), Rat(-3), Rat(3), Rat(10)};
  OrbitSample s = integrate_time(preset("fisher"), r, ts);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    Real u = crude_bound_U(to_real(r), to_real(ts[i]));
    int sign = s.values[i] - u > s.errors[i] ? 1 : (u - s.values[i] > s.errors[i] ? -1 : 0);
    CHECK(sign == -sgn(ts[i]));
  }
}

TEST_CASE("Phi-series coefficients") {
  PhiSeries s = phi_series(3);
  CHECK(s.symbolic[2] == RFun(pq({-1}), {{2, 1}}));
  CHECK(s.symbolic[3] == RFun(pq({1}), {{2, 1}, {3, 1}}));
  PhiSeries f = phi_series(Rat(1, 10), 3);
  for (int j = 1; j <= 6; ++j) CHECK(f.coeff_at(j) == s.symbolic[static_cast<std::size_t>(j)].eval(Rat(1, 10)));
  CHECK_THROWS_AS(s.coeff_at(2), std::logic_error);
}

TEST_CASE("Phi-series matches the oracle fit") {
  const Rat r(1, 10);
  std::vector<Rat> ts;
  for (int k = 0; k < 60; ++k) ts.push_back(Rat(-200 + 2 * k));
  OrbitSample s = integrate_time(preset("fisher"), r, ts);
  std::vector<Real> a = fit_phi_expansion(s, to_real(r), 14);
  PhiSeries ps = phi_series(r, 2);
  CHECK(abs(a[3] - to_real(ps.coeff_at(4))) < Real("1e-10"));
}

TEST_CASE("Phi-Pade approximant of order (2, 2)") {
  PhiPade p = phi_pade(2);
  PolyQ f2 = pq({1, 0, 2}), f3 = pq({1, 0, 3}), f4 = pq({1, 0, 4});
  PolyQ lead = f2 * f3 * f4 * Rat(3);
  PolyQR num(std::vector<PolyQ>{PolyQ(), lead, pq({-1, 0, 1}) * f3 * Rat(-2)});
  PolyQR den(std::vector<PolyQ>{lead, f2 * f3 * Rat(5), pq({2, 0, 3})});
  CHECK(p.z.num == num);
  CHECK(p.z.den == den);
  auto [b, c] = p.limit();
  CHECK(b == pq({-1, 0, 1}) * f3 * Rat(-2));
  CHECK(c == pq({2, 0, 3}));
}

TEST_CASE("Phi-Pade certificates") {
  for (int n = 2; n <= 3; ++n) {
    PhiPadeCertificate c = certify_phi_pade(n);
    CHECK(c.phi_power == 2 * n + 2);
    CHECK(c.r_power == 3);
    CHECK(c.P.degree() == 3 * n - 3);
    CHECK(sgn(c.scale) != 0);
    for (const auto& pc : c.P_certs) CHECK(verify(pc, true));
    for (const auto& qc : c.Q_certs) CHECK(verify(qc, true));
    CHECK(verify(c.factor_cert, true));
  }
}

TEST_CASE("rescaling to W_n(0, rho_0) = 1/2") {
  PhiPade p = phi_pade(2);
  const Rat tol = make_rat(1, pow(Int(10), 20));
  RescaledBound b = rescale_rho0(p, Rat(1, 10), tol);
  CHECK(b.rho_lo > 0);
  CHECK(b.rho_hi < 1);
  CHECK(b.rho_hi - b.rho_lo <= tol);
  Rat mid = (b.rho_lo + b.rho_hi) / 2;
  Rat w0 = b.num.eval(mid) / b.den.eval(mid);
  CHECK(abs(w0 - Rat(1, 2)) < tol);
  CHECK(b.eval(Rat(0)).contains(Rat(1, 2)));
  CHECK(b.limit() > 1);
  // X_2 sits above x^r for t > 0 and below for t < 0.
  std::vector<Rat> ts{Rat(-5), Rat(5)};
  OrbitSample s = integrate_time(preset("fisher"), Rat(1, 10), ts);
  CHECK(b.eval(Rat(-5)).hi < to_rat(Real(s.values[0] - s.errors[0])));
  CHECK(b.eval(Rat(5)).lo > to_rat(Real(s.values[1] + s.errors[1])));
}

TEST_CASE("limit errors E_2 and E_3") {
  LimitTable t = limit_errors({2, 3});
  REQUIRE(t.rows.size() == 2);
  auto [lo, hi] = e2_closed_form().enclose(100);
  CHECK(std::abs(t.rows[0].E - to_double(lo)) < 1e-10);
  CHECK(t.rows[1].E < t.rows[0].E);
  CHECK(t.ordered);
  CHECK(t.decreasing);
}
