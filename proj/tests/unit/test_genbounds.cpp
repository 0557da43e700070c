#include <doctest.h>

#include "hetero/genbounds/genbounds.hpp"
#include "hetero/oracle/oracle.hpp"

#include <random>

using namespace hetero;

namespace {

PolyQ pq(std::initializer_list<Rat> c) { return PolyQ(std::vector<Rat>(c)); }

// g = x^m - x  <=>  f(u) = (1 - u) - (1 - u)^m
ReactionTerm power_law(unsigned m) {
  PolyQ one_minus_u = pq({Rat(1), Rat(-1)});
  return reaction_term(one_minus_u - pow(one_minus_u, m), "power" + std::to_string(m));
}

}  // namespace

TEST_CASE("hypothesis H on the presets") {
  ReactionTerm fisher = check_hypotheses(pq({Rat(0), Rat(1), Rat(-1)}));
  CHECK(fisher.g == pq({Rat(0), Rat(-1), Rat(1)}));
  CHECK(fisher.fp0 == 1);
  CHECK(fisher.fp1 == -1);
  REQUIRE(fisher.hypothesis_domain);
  CHECK_FALSE(fisher.hypothesis_domain->lo);

  try {
    check_hypotheses(pq({Rat(0), Rat(1), Rat(0), Rat(-1)}));
    FAIL("u(1 - u^2) accepted");
  } catch (const HypothesisViolated& e) {
    CHECK(e.which() == "f'' < 0");
  }
  try {
    check_hypotheses(preset("zeldovich(1/2)").f);
    FAIL("zeldovich accepted");
  } catch (const HypothesisViolated& e) {
    CHECK(e.which() == "f'' < 0");
  }
  CHECK_THROWS_AS(check_hypotheses(pq({Rat(1), Rat(1), Rat(-2)})), HypothesisViolated);
  // The cubic is concave on [1, 2] but f'(0) < 0 for alpha = 1/2.
  try {
    check_hypotheses(preset("zeldovich").f, parse_domain("[1, 2]"));
    FAIL("zeldovich accepted on [1, 2]");
  } catch (const HypothesisViolated& e) {
    CHECK(e.which() == "f'(0) > 0");
  }
  // u(1 - u^2) is concave on [1/100, inf): accepted there, and the domain is recorded.
  ReactionTerm nws = check_hypotheses(preset("nws").f, parse_domain("[1/100, inf)"));
  CHECK(nws.hypothesis_domain->lo == Rat(1, 100));
  CHECK_FALSE(nws.hypothesis_domain->hi);
  CHECK_THROWS_AS(preset("kpp"), std::invalid_argument);
}

TEST_CASE("wave parameter range") {
  CHECK(make_wave_param(Rat(1, 10)).c == Rat(99, 10));
  CHECK(make_wave_param(Rat(2, 5)).c == Rat(21, 10));
  CHECK_THROWS_AS(make_wave_param(Rat(3, 2)), OutOfRange);
  CHECK_THROWS_AS(make_wave_param(Rat(5, 12)), OutOfRange);
  CHECK_THROWS_AS(make_wave_param(Rat(0)), OutOfRange);
  CHECK(admissible_r(Rat(41, 100)));
}

TEST_CASE("lambda bounds") {
  ReactionTerm fisher = preset("fisher");
  LambdaBounds b = lambda_bounds(fisher, Rat(2));
  CHECK(b.lambda_under == Surd(Rat(1)));
  CHECK(b.lambda_over == Surd(Rat(-1), Rat(1), Rat(2)));
  CHECK(lambda_bounds(fisher, Rat(99, 10)).lambda_over == Surd(Rat(1, 10)));
  CHECK(Surd(Rat(0)) < b.lambda_over);
  CHECK(b.lambda_over < b.lambda_under);
  CHECK_THROWS_AS(lambda_bounds(fisher, Rat(1)), SpeedTooSmall);

  std::mt19937 gen(11);
  std::uniform_int_distribution<int> num(1, 400), den(1, 50);
  for (int i = 0; i < 200; ++i) {
    Rat a(num(gen), den(gen));
    a.canonicalize();
    ReactionTerm rt = reaction_term(pq({Rat(0), a, Rat(-a)}));
    // c >= 2 sqrt(a): take c = 2a + 1/2 + extra, since (2a + 1/2)^2 > 4a.
    Rat c = 2 * a + Rat(1, 2) + Rat(num(gen), 100);
    LambdaBounds lb = lambda_bounds(rt, c);
    REQUIRE(Surd(Rat(0)) < lb.lambda_over);
    REQUIRE(lb.lambda_over < lb.lambda_under);
  }
}

TEST_CASE("eigenvalues at the equilibria") {
  EigenData e = eigen_data(preset("fisher"), Rat(99, 10));
  CHECK(e.saddle.first == Surd(Rat(1, 10)));
  CHECK(e.saddle.second == Surd(Rat(-10)));
  REQUIRE(e.node);
  CHECK(e.node->first.sign() < 0);
  CHECK(e.node->second.sign() < 0);
  CHECK_FALSE(eigen_data(preset("fisher"), Rat(1)).node);
}

TEST_CASE("contact function signs") {
  ReactionTerm fisher = preset("fisher");
  LambdaBounds b = lambda_bounds(fisher, Rat(2));
  CHECK(contact_sign(fisher, Rat(2), b.lambda_over, {Rat(0)}).signs == std::vector<int>{0});
  CHECK(contact_sign(fisher, Rat(2), b.lambda_under, {Rat(1)}).signs == std::vector<int>{0});
  ContactReport rep = contact_sign(fisher, Rat(2), Surd(Rat(1)), {Rat(1, 2)});
  CHECK(rep.signs == std::vector<int>{-1});
  CHECK(rep.increasing);
  // N at lambda_over is >= 0 on [0, 1], N at lambda_under is <= 0.
  std::vector<Rat> xs;
  for (int k = 1; k < 10; ++k) xs.push_back(make_rat(Int(k), Int(10)));
  for (int s : contact_sign(fisher, Rat(2), b.lambda_over, xs).signs) CHECK(s > 0);
  for (int s : contact_sign(fisher, Rat(2), b.lambda_under, xs).signs) CHECK(s < 0);
}

TEST_CASE("phase bounds") {
  ReactionTerm fisher = preset("fisher");
  auto [lo, hi] = phase_bounds(fisher, Rat(2), Rat(1, 2));
  CHECK(lo == Surd(Rat(-1, 4)));
  CHECK(hi == Surd(Rat(1, 4), Rat(-1, 4), Rat(2)));
  CHECK(phase_bounds(fisher, Rat(99, 10), Rat(1, 2)).second == Surd(Rat(-1, 40)));
  for (int k = 1; k < 20; ++k) {
    auto [l, h] = phase_bounds(fisher, Rat(21, 10), make_rat(Int(k), Int(20)));
    CHECK(l < h);
    CHECK(h.sign() < 0);
  }
  CHECK_THROWS_AS(phase_bounds(fisher, Rat(2), Rat(0)), OutOfRange);
  CHECK_THROWS_AS(phase_bounds(fisher, Rat(2), Rat(1)), OutOfRange);
}

TEST_CASE("time sandwich closed forms") {
  ReactionTerm fisher = preset("fisher");
  TimeSandwich s0 = time_sandwich(fisher, Rat(2), Rat(0));
  CHECK(s0.source == "closed-form");
  CHECK(s0.w_under.contains(Rat(1, 2)));
  CHECK(s0.w_over.contains(Rat(1, 2)));
  CHECK(s0.hull.width() < Rat(1, 1000000000));

  ReactionTerm cubic = power_law(3);
  REQUIRE(power_law_exponent(cubic) == 3u);
  CHECK(time_sandwich(cubic, Rat(3), Rat(0)).hull.contains(Rat(1, 2)));

  // Fisher endpoints are logistic curves 1 / (1 + e^{-lambda t}).
  const Rat c(99, 10);
  for (long t : {-7L, -1L, 3L, 12L}) {
    TimeSandwich s = time_sandwich(fisher, c, Rat(t));
    LambdaBounds lb = lambda_bounds(fisher, c);
    Real wu = 1 / (1 + exp(-to_real(lb.lambda_under) * t));
    Real wo = 1 / (1 + exp(-to_real(lb.lambda_over) * t));
    CHECK(s.w_under.contains(to_rat(wu)));
    CHECK(s.w_over.contains(to_rat(wo)));
    CHECK(s.hull.contains(to_rat(wu)));
    if (t < 0) CHECK(s.w_under.hi < s.w_over.lo);
    if (t > 0) CHECK(s.w_over.hi < s.w_under.lo);
  }
}

TEST_CASE("logistic w solves the scalar Cauchy problem") {
  for (unsigned m : {2u, 3u, 4u}) {
    const Real lambda("0.75");
    const unsigned k = m - 1;
    const Real K = Real(1u << k) - 1;
    auto w = [&](const Real& t) { return pow(1 + K * exp(-Real(k) * lambda * t), -1 / Real(k)); };
    for (const char* ts : {"-3", "0", "0.5", "4"}) {
      Real t(ts);
      Real h("1e-40");
      Real dw = (w(t + h) - w(t - h)) / (2 * h);
      Real wt = w(t);
      Real rhs = -lambda * (pow(wt, static_cast<int>(m)) - wt);
      CHECK(abs(dw - rhs) < Real("1e-70"));
    }
    // The enclosure agrees with the direct formula.
    Enclosure e = logistic_w(m, Enclosure(Rat(3, 4)), Rat(5, 2));
    CHECK(e.contains(to_rat(w(Real("2.5")))));
  }
}

TEST_CASE("time sandwich through the scalar integrator") {
  // g(x) = x^2 - x shifted to a non power-law form with the same qualitative shape.
  ReactionTerm rt = reaction_term(pq({Rat(0), Rat(3, 2), Rat(-1), Rat(-1, 2)}));
  REQUIRE_FALSE(power_law_exponent(rt));
  TimeSandwich s = time_sandwich(rt, Rat(4), Rat(1));
  CHECK(s.source == "oracle");
  CHECK(s.w_under.width() < Rat(1, 1000000000));
  CHECK(s.hull.lo > Rat(1, 2));
}

TEST_CASE("PDE frame") {
  CHECK(to_pde_frame(Rat(0), Rat(0)) == std::pair{Rat(1), Rat(0)});
  CHECK(to_pde_frame(Rat(1, 2), Rat(5)) == std::pair{Rat(1, 2), Rat(5)});
  CHECK(to_pde_frame(Rat(1), Rat(-3)) == std::pair{Rat(0), Rat(-3)});
  for (int k = -5; k <= 5; ++k) {
    auto [u, s] = to_pde_frame(make_rat(Int(k), Int(7)), Rat(k));
    CHECK(to_pde_frame(u, s) == std::pair{make_rat(Int(k), Int(7)), Rat(k)});
  }
}
