#include <doctest.h>

#include "hetero/ratpoly.hpp"

#include <random>

using namespace hetero;

namespace {

PolyQ pq(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return PolyQ(std::move(v));
}

PolyQ rpoly(std::initializer_list<Rat> c) { return PolyQ(std::vector<Rat>(c)); }

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK(parse_rat("-0.125") == Rat(-1, 8));
  CHECK(parse_rat("1e-3") == Rat(1, 1000));
  CHECK(to_string(Rat(-3, 2)) == "-3/2");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
  CHECK(to_scientific(Rat(-1, 4), 7) == "-2.500000e-01");
  CHECK(to_scientific(Rat(9, 10000000), 2) == "9.0e-07");
  CHECK(floor_log10(Rat(1, 1000)) == -3);
  CHECK(floor_log10(Rat(999)) == 2);
}

TEST_CASE("polynomial arithmetic, including the Kronecker path") {
  PolyQ a = pq({1, 2, 3});
  PolyQ b = pq({-1, 0, 1});
  CHECK(a * b == pq({-1, -2, -2, 2, 3}));
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> d(-1000, 1000);
  std::vector<Rat> u(20), v(15);
  for (auto& x : u) x = make_rat(d(gen), 1 + (d(gen) & 7));
  for (auto& x : v) x = make_rat(d(gen), 1 + (d(gen) & 7));
  PolyQ pu(u), pv(v);
  std::vector<Rat> naive(u.size() + v.size() - 1);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) naive[i + j] += u[i] * v[j];
  CHECK(pu * pv == PolyQ(naive));
  CHECK(exact_div(pu * pv, pv) == pu);
  PolyZ zu = primitive_integer(pu);
  CHECK(content(zu) == 1);
}

TEST_CASE("gcd over Z[r]") {
  PolyZ a = primitive_integer(pq({-1, 0, 1}));  // (r-1)(r+1)
  PolyZ b = primitive_integer(pq({1, 2, 1}));   // (r+1)^2
  CHECK(gcd(a, b) == primitive_integer(pq({1, 1})));
}

TEST_CASE("pade examples") {
  std::vector<PolyQ> exps{PolyQ(Rat(1)), PolyQ(Rat(1)), PolyQ(Rat(1, 2))};
  RatFuncQR f = pade(exps, 1, 1);
  // (1 + x/2)/(1 - x/2)
  CHECK(f.eval(Rat(1, 3), Rat(1)) == Rat(7, 5));
  CHECK(matches_series(f, exps, 2));
  auto back = expand_at(f, Rat(1), 2);
  CHECK(back[0] == 1);
  CHECK(back[1] == 1);
  CHECK(back[2] == Rat(1, 2));

  std::vector<PolyQ> constant{PolyQ(Rat(1)), PolyQ{}, PolyQ{}};
  RatFuncQR g = pade(constant, 0, 0);
  CHECK(g.eval(Rat(5), Rat(1)) == 1);

  std::vector<PolyQ> zero_lead{PolyQ{}, PolyQ{}, PolyQ(Rat(1))};
  CHECK_THROWS_AS(pade(zero_lead, 0, 1), SingularPadeTable);
}

TEST_CASE("discriminant") {
  // x^2 + b x + c with constants b = 3, c = 2.
  PolyQR p(std::vector<PolyQ>{PolyQ(Rat(2)), PolyQ(Rat(3)), PolyQ(Rat(1))});
  CHECK(discriminant(p) == PolyQ(Rat(1)));
  // x^2 + r x + r: r^2 - 4r.
  PolyQR q(std::vector<PolyQ>{PolyQ::variable(), PolyQ::variable(), PolyQ(Rat(1))});
  CHECK(discriminant(q) == pq({0, -4, 1}));
  // (x - 1)^2 (x - 3)
  CHECK(discriminant(pq({1, -2, 1}) * pq({-3, 1})) == 0);
  CHECK(discriminant(pq({-2, 0, 1})) == 8);
  CHECK(discriminant(pq({0, -1, 0, 1})) == 4);  // x^3 - x: -4(-1)^3 = 4
  CHECK_THROWS_AS(discriminant(PolyQR(std::vector<PolyQ>{PolyQ(Rat(1)), PolyQ(Rat(1))})), DegreeTooLow);
}

TEST_CASE("sturm counts") {
  CHECK(sturm_count(pq({-2, 0, 1}), Rat(0), Rat(2)) == 1);
  CHECK(sturm_count(pq({0, -1, 0, 1}), Rat(-2), Rat(2)) == 3);
  CHECK(sturm_count_real(pq({1, 0, 1})) == 0);
  CHECK_THROWS_AS(sturm_count(pq({-1, 1}), Rat(0), Rat(1)), EndpointRoot);
  CHECK(sturm_count_above(pq({0, -1, 0, 1}), Rat(1, 2)) == 1);
  CHECK(sturm_count_below(pq({0, -1, 0, 1}), Rat(1, 2)) == 2);
}

TEST_CASE("positivity certificates") {
  auto c = positive_on_positive_axis(pq({1, 2, 3}));
  REQUIRE(c);
  CHECK(verify(*c, true));
  CHECK_FALSE(positive_on_positive_axis(pq({-1, 0, 1})));

  Poly<Q6> s = substitute_sqrt6(pq({1, 0, -6}));
  // (1 + z^2)^2 - z^4 = 1 + 2 z^2
  CHECK(s == Poly<Q6>(std::vector<Q6>{Q6(1), Q6(0), Q6(2)}));
  CHECK(substitute_sqrt6(PolyQ(Rat(5))) == Poly<Q6>(Q6(5)));
  Poly<Q6> sr = substitute_sqrt6(PolyQ::variable());
  // z^2 / sqrt6 = z^2 sqrt6 / 6
  CHECK(sr == Poly<Q6>::monomial(Q6(Rat(0), Rat(1, 6)), 2));
  auto d = positive_below_inv_sqrt6(pq({1, 0, -6}), "1-6r^2");
  REQUIRE(d);
  CHECK(verify(*d, true));
  CHECK_FALSE(positive_below_inv_sqrt6(pq({-1, 0, 12})));
}

TEST_CASE("certificate json round trip") {
  PolyQR fam(std::vector<PolyQ>{PolyQ(Rat(1)), pq({2, 1}), PolyQ(Rat(1))});  // x^2 + (r + 2) x + 1
  std::string why;
  auto c = positive_on_unit_interval(fam, Rat(1, 10), "demo", &why);
  INFO(why);
  REQUIRE(c);
  json j = to_json(*c);
  auto back = certificate_from_json(json::parse(j.dump()));
  CHECK(verify(back, true));
  back.at_lo = pq({-1, 1});
  CHECK_FALSE(verify(back));
}

TEST_CASE("factored rational functions") {
  RFun a = RFun(PolyQ::variable()).divided_by(2);  // r/(2r^2+1)
  RFun b = RFun(Rat(1)).divided_by(3);
  RFun s = a + b;
  CHECK(s.eval(Rat(1)) == Rat(1, 3) + Rat(1, 4));
  RFun cancel = RFun(RFun::factor(2) * PolyQ::variable()).divided_by(2);
  CHECK(cancel.factors().empty());
  CHECK(cancel == RFun(PolyQ::variable()));
  CHECK((a * b).eval(Rat(1, 2)) == Rat(1, 2) / Rat(3, 2) / Rat(7, 4));
}

TEST_CASE("quadratic surds compare exactly") {
  Surd s(Rat(-1), Rat(1), Rat(2));  // sqrt2 - 1
  CHECK(s.sign() > 0);
  CHECK(s < Surd(Rat(1, 2)));
  CHECK(Surd(Rat(0), Rat(1), Rat(4)).is_rational());
  Q5 e2 = Q5(Rat(3), Rat(-4, 3));
  CHECK(e2.sign() > 0);
  auto [lo, hi] = e2.enclose(60);
  CHECK(to_double(lo) == doctest::Approx(0.018576).epsilon(1e-4));
  CHECK(hi >= lo);
}
