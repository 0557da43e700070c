#include <doctest.h>

#include "hetero/ratpoly/sturm.hpp"
#include "hetero/separatrix/separatrix.hpp"

using namespace hetero;

namespace {

PolyQ pq(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return PolyQ(std::move(v));
}

RFun over(PolyQ num, RFun::FactorMap den) { return RFun(std::move(num), std::move(den)); }

}  // namespace

TEST_CASE("Taylor coefficients of the separatrix") {
  TaylorSeparatrix ts = taylor_coeffs(5);
  CHECK(ts.coeff(1) == RFun(pq({0, -1})));
  CHECK(ts.coeff(2) == over(pq({0, 1}), {{2, 1}}));
  CHECK(ts.coeff(3) == over(pq({0, 0, 0, 2}), {{2, 2}, {3, 1}}));
  CHECK(ts.coeff(4) == over(pq({0, 0, 0, 0, 0, 10}), {{2, 3}, {3, 1}, {4, 1}}));
  // 12 r^7 (19 r^2 + 6)
  CHECK(ts.coeff(5) == over(pq({0, 0, 0, 0, 0, 0, 0, 72, 0, 228}), {{2, 4}, {3, 2}, {4, 1}, {5, 1}}));

  TaylorSeparatrix fixed = taylor_coeffs(Rat(1, 10), 100);
  for (int k = 1; k <= 5; ++k) CHECK(fixed.coeff(k) == RFun(ts.coeff(k).eval(Rat(1, 10))));
  for (int k = 3; k <= 100; ++k) REQUIRE(sgn(fixed.coeff(k).eval(Rat(0))) > 0);
}

TEST_CASE("residual of the invariance equation") {
  CHECK(residual_identity_check(taylor_coeffs(2)).first_nonzero() == 3);
  Residual r3 = residual_identity_check(taylor_coeffs(3));
  CHECK(r3.first_nonzero() == 4);
  Residual big = residual_identity_check(taylor_coeffs(Rat(1, 10), 100));
  CHECK(big.first_nonzero() == 101);
}

TEST_CASE("lower bound certificate for n = 3") {
  LowerCertificate c = lower_certificate(3);
  CHECK(c.contact.first_nonzero() == 4);
  CHECK(c.contact.coeff(4) == over(pq({0, 0, 0, 0, 10}), {{2, 3}, {3, 1}}));
  CHECK(c.contact.coeff(5) == over(pq({0, 0, 0, 0, 0, 0, 12}), {{2, 4}, {3, 2}}));
  CHECK(c.contact.cleared.degree() == 5);
  // -2 r^5 (5 + 6 r^2) / ((1 + 2r^2)^2 (1 + 3r^2))
  CHECK(c.h_at_1 == over(pq({0, 0, 0, 0, 0, -10, 0, -12}), {{2, 2}, {3, 1}}));
  CHECK(verify(c.contact_cert, true));
  CHECK(verify(c.endpoint_cert, true));
  // At r = sqrt2 - 1 the value is about -0.054.
  auto [lo, hi] = Surd(Rat(-1), Rat(1), Rat(2)).enclose(200);
  Rat mid = (lo + hi) / 2;
  double v = to_double(c.h_at_1.eval(mid));
  CHECK(v == doctest::Approx(-0.054).epsilon(0.01));
  for (int n = 2; n <= 8; ++n) CHECK_NOTHROW(lower_certificate(n));
}

TEST_CASE("Pade upper bounds") {
  PadeBound b1 = pade_bound(1);
  // (2r^2+1)(3r^2+1) - 3 r^2 x over (2r^2+1)(3r^2+1) - r^2 (6r^2+5) x
  PolyQ k = pq({1, 0, 5, 0, 6});
  const Rat r(1, 10);
  for (int j = 1; j < 10; ++j) {
    Rat x(j, 10);
    Rat kr = k.eval(r);
    Rat expect = r * x * (x - 1) * (kr - 3 * r * r * x) / (kr - r * r * (6 * r * r + 5) * x);
    CHECK(b1.eval(x, r) == expect);
  }
  // Tangency: R_2 - h_6 = O(x^6) (x times a series matched through x^4).
  PadeBound b2 = pade_bound(Rat(1, 10), 2);
  TaylorSeparatrix ts = taylor_coeffs(Rat(1, 10), 6);
  std::vector<Rat> xs{Rat(1, 1000), Rat(1, 2000)};
  Rat d1 = b2.eval(xs[0]) - ts.eval(xs[0]);
  Rat d2 = b2.eval(xs[1]) - ts.eval(xs[1]);
  // Halving x divides the difference by about 64.
  CHECK(to_double(d1 / d2) == doctest::Approx(64).epsilon(0.01));
  CHECK(pade_bound(Rat(1, 10), 10).eval(Rat(1)) == 0);
}

TEST_CASE("upper bound certificates with Table 1 degrees") {
  UpperCertificate u1 = upper_certificate(1);
  CHECK(u1.x_power == 4);
  CHECK(u1.r_power == 6);
  UpperCertificate u2 = upper_certificate(2);
  CHECK(u2.dis_degree_B == 40);
  CHECK(u2.dis_degree_C == 24);
  CHECK(u2.B_cert.witness_roots == 0);
  CHECK(u2.C_cert.witness_roots == 0);
  CHECK(verify(u2.B_cert, true));
  CHECK(verify(u2.C_cert, true));
  UpperCertificate u3 = upper_certificate(3);
  CHECK(u3.dis_degree_B == 212);
  CHECK(u3.dis_degree_C == 100);
  CHECK(sturm_count(specialize(u3.B, Rat(1, 10)), Rat(0), Rat(1)) == 0);
}

TEST_CASE("ordering of consecutive Pade bounds") {
  for (int k = 2; k <= 3; ++k) {
    OrderingCertificate o = ordering_check(k);
    CHECK(o.x_power == 2 * k);
    CHECK(o.r_power == 4 * k - 1);
    CHECK(verify(o.D_cert));
  }
  const Rat r(1, 10), x(1, 2);
  CHECK(pade_bound(r, 3).eval(x) < pade_bound(r, 2).eval(x));
  PadeBound a = pade_bound(r, 3), b = pade_bound(r, 2);
  CHECK(a.eval(Rat(0)) - b.eval(Rat(0)) == 0);
  CHECK(a.eval(Rat(1)) - b.eval(Rat(1)) == 0);
}

TEST_CASE("chain of bounds at r = 1/10") {
  const Rat r(1, 10);
  std::vector<TaylorSeparatrix> lower;
  for (int n = 2; n <= 12; ++n) lower.push_back(taylor_coeffs(r, n));
  std::vector<PadeBound> upper;
  for (int m = 1; m <= 4; ++m) upper.push_back(pade_bound(r, m));
  for (int j = 1; j < 40; ++j) {
    Rat x(j, 40);
    for (std::size_t i = 1; i < lower.size(); ++i) REQUIRE(lower[i - 1].eval(x) < lower[i].eval(x));
    for (std::size_t i = 1; i < upper.size(); ++i) REQUIRE(upper[i].eval(x) < upper[i - 1].eval(x));
    REQUIRE(lower.back().eval(x) < upper.back().eval(x));
  }
}

TEST_CASE("gap report") {
  GapReport g = gap_report(Rat(1, 10), 12, 4, 50);
  CHECK(g.gap_at_1 == -taylor_coeffs(Rat(1, 10), 12).eval(Rat(1)));
  CHECK(sgn(g.gap_at_1) > 0);
  CHECK(g.grid_sup >= g.gap_at_1);
  CHECK(g.location_of_max == 1);
  CHECK(table_discriminant_degrees(5) == std::pair{1480, 584});
}
