#include "hetero/genbounds/genbounds.hpp"

#include "hetero/oracle/oracle.hpp"
#include "hetero/ratpoly/sturm.hpp"

#include <regex>

namespace hetero {

bool admissible_r(const Rat& r) { return sgn(r) > 0 && sgn(r * r + 2 * r - 1) <= 0; }

WaveParam make_wave_param(const Rat& r) {
  if (!admissible_r(r))
    throw OutOfRange("r = " + to_string(r) + " is outside (0, sqrt(2) - 1] (need r > 0 and r^2 + 2r - 1 <= 0)");
  return {r, 1 / r - r};
}

std::string Domain::str() const {
  return std::string(lo ? "[" + to_string(*lo) : "(-inf") + ", " + (hi ? to_string(*hi) + "]" : "+inf)");
}

Domain parse_domain(const std::string& text) {
  if (text.empty() || text == "R" || text == "real") return Domain::real_line();
  static const std::regex re(R"(^\s*[\[(]?\s*([^,\s]+)\s*,\s*([^\])\s]+)\s*[\])]?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("cannot parse domain '" + text + "'");
  Domain d;
  auto end = [](const std::string& s) -> std::optional<Rat> {
    if (s == "-inf" || s == "inf" || s == "+inf") return std::nullopt;
    return parse_rat(s);
  };
  d.lo = end(m[1].str());
  d.hi = end(m[2].str());
  if (d.lo && d.hi && *d.lo >= *d.hi) throw std::invalid_argument("empty domain '" + text + "'");
  return d;
}

ReactionTerm reaction_term(PolyQ f, std::string name) {
  ReactionTerm rt;
  rt.name = std::move(name);
  // g(x) = -f(1 - x)
  rt.g = -compose(f, PolyQ(std::vector<Rat>{Rat(1), Rat(-1)}));
  PolyQ fp = f.derivative();
  rt.fp0 = fp.eval(Rat(0));
  rt.fp1 = fp.eval(Rat(1));
  rt.f = std::move(f);
  return rt;
}

ReactionTerm check_hypotheses(const PolyQ& f, const Domain& domain, std::string name) {
  if (sgn(f.eval(Rat(0))) != 0) throw HypothesisViolated("f(0) = 0", "f(0) = " + to_string(f.eval(Rat(0))));
  if (sgn(f.eval(Rat(1))) != 0) throw HypothesisViolated("f(1) = 0", "f(1) = " + to_string(f.eval(Rat(1))));
  PolyQ fpp = f.derivative().derivative();
  const std::string where = "u in " + domain.str();
  if (fpp.is_zero()) throw HypothesisViolated("f'' < 0", "f'' is identically zero");
  for (const auto& end : {domain.lo, domain.hi})
    if (end && sgn(fpp.eval(*end)) >= 0)
      throw HypothesisViolated("f'' < 0", "f''(" + to_string(*end) + ") = " + to_string(fpp.eval(*end)));
  int roots = 0;
  if (fpp.degree() > 0) {
    if (domain.lo && domain.hi) roots = sturm_count(fpp, *domain.lo, *domain.hi);
    else if (domain.lo) roots = sturm_count_above(fpp, *domain.lo);
    else if (domain.hi) roots = sturm_count_below(fpp, *domain.hi);
    else roots = sturm_count_real(fpp);
  }
  if (roots > 0) throw HypothesisViolated("f'' < 0", "f'' has " + std::to_string(roots) + " real root(s) for " + where);
  Rat sample = domain.lo ? *domain.lo : (domain.hi ? *domain.hi : Rat(0));
  if (sgn(fpp.eval(sample)) >= 0) throw HypothesisViolated("f'' < 0", "f'' >= 0 at u = " + to_string(sample));
  ReactionTerm rt = reaction_term(f, std::move(name));
  if (sgn(rt.fp0) <= 0) throw HypothesisViolated("f'(0) > 0", "f'(0) = " + to_string(rt.fp0));
  if (sgn(rt.fp1) >= 0) throw HypothesisViolated("f'(1) < 0", "f'(1) = " + to_string(rt.fp1));
  rt.hypothesis_domain = domain;
  return rt;
}

namespace {

PolyQ poly_from(std::initializer_list<Rat> c) { return PolyQ(std::vector<Rat>(c)); }

}  // namespace

ReactionTerm preset(const std::string& name) {
  if (name == "fisher") return check_hypotheses(poly_from({Rat(0), Rat(1), Rat(-1)}), Domain::real_line(), "fisher");
  if (name == "nws") return reaction_term(poly_from({Rat(0), Rat(1), Rat(0), Rat(-1)}), "nws");
  static const std::regex zel(R"(^zeldovich(?:\(([^)]+)\))?$)");
  std::smatch m;
  if (std::regex_match(name, m, zel)) {
    Rat a = m[1].matched ? parse_rat(m[1].str()) : Rat(1, 2);
    if (sgn(a) <= 0 || a >= 1) throw std::invalid_argument("zeldovich alpha must lie in (0, 1)");
    // u (1 - u)(u - a) = -a u + (1 + a) u^2 - u^3
    return reaction_term(poly_from({Rat(0), Rat(-a), Rat(1 + a), Rat(-1)}), "zeldovich(" + to_string(a) + ")");
  }
  throw std::invalid_argument("unknown preset '" + name + "' (known: fisher, nws, zeldovich(alpha))");
}

std::vector<std::string> preset_names() { return {"fisher", "nws", "zeldovich(alpha)"}; }

LambdaBounds lambda_bounds(const ReactionTerm& rt, const Rat& c) {
  Rat d0 = c * c - 4 * rt.fp0;
  if (sgn(d0) < 0) throw SpeedTooSmall("c^2 = " + to_string(Rat(c * c)) + " < 4 f'(0) = " + to_string(Rat(4 * rt.fp0)));
  if (sgn(rt.fp0) == 0 || sgn(rt.fp1) == 0) throw HypothesisViolated("f'(0) != 0 and f'(1) != 0", "lambda bounds");
  Rat d1 = c * c - 4 * rt.fp1;
  if (sgn(d1) < 0) throw HypothesisViolated("c^2 >= 4 f'(1)", "lambda bounds");
  Rat i0 = 1 / (2 * rt.fp0), i1 = 1 / (2 * rt.fp1);
  return {Surd(c * i0, -i0, d0), Surd(c * i1, -i1, d1)};
}

EigenData eigen_data(const ReactionTerm& rt, const Rat& c) {
  EigenData e;
  Rat ds = c * c - 4 * rt.fp1;  // g'(0) = f'(1)
  if (sgn(ds) < 0) throw HypothesisViolated("saddle at the origin", "c^2 - 4 g'(0) < 0");
  e.saddle = {Surd(-c / 2, Rat(1, 2), ds), Surd(-c / 2, Rat(-1, 2), ds)};
  Rat dn = c * c - 4 * rt.fp0;  // g'(1) = f'(0)
  if (sgn(dn) >= 0) e.node = std::pair{Surd(-c / 2, Rat(1, 2), dn), Surd(-c / 2, Rat(-1, 2), dn)};
  return e;
}

ContactReport contact_sign(const ReactionTerm& rt, const Rat& c, const Surd& lambda, const std::vector<Rat>& at) {
  if (lambda.sign() == 0) throw std::invalid_argument("contact_sign needs lambda != 0");
  ContactReport out;
  PolyQ gp = rt.g.derivative();
  Surd l2 = lambda * lambda;
  for (const auto& x : at) {
    Surd n = l2 * gp.eval(x) - lambda * c + Rat(1);
    out.signs.push_back(n.sign());
  }
  // g''(x) = -f''(1 - x): positive on [0, 1] when f'' < 0 was certified on a domain containing [0, 1].
  out.increasing = rt.hypothesis_domain && rt.hypothesis_domain->contains(Rat(0)) && rt.hypothesis_domain->contains(Rat(1));
  return out;
}

std::pair<Surd, Surd> phase_bounds(const ReactionTerm& rt, const Rat& c, const Rat& x) {
  if (sgn(x) <= 0 || x >= 1) throw OutOfRange("phase bounds need 0 < x < 1, got x = " + to_string(x));
  LambdaBounds lb = lambda_bounds(rt, c);
  Rat gx = rt.g.eval(x);
  return {lb.lambda_under * gx, lb.lambda_over * gx};
}

std::optional<unsigned> power_law_exponent(const ReactionTerm& rt) {
  int m = rt.g.degree();
  if (m < 2) return std::nullopt;
  PolyQ expect = PolyQ::monomial(Rat(1), static_cast<std::size_t>(m)) - PolyQ::variable();
  if (rt.g != expect) return std::nullopt;
  return static_cast<unsigned>(m);
}

Enclosure logistic_w(unsigned m, const Enclosure& lambda, const Rat& t, unsigned bits) {
  if (m < 2) throw std::invalid_argument("logistic_w needs m >= 2");
  const unsigned k = m - 1;
  Enclosure e = exp(lambda * Enclosure(Rat(-static_cast<long>(k)) * t), bits);
  Enclosure base = Enclosure(Rat(1)) + Enclosure(Rat(pow(Int(2), k) - 1)) * e;
  return Enclosure(Rat(1)) / root(base, k, bits);
}

TimeSandwich time_sandwich(const ReactionTerm& rt, const Rat& c, const Rat& t) {
  LambdaBounds lb = lambda_bounds(rt, c);
  TimeSandwich out;
  if (auto m = power_law_exponent(rt)) {
    out.w_under = logistic_w(*m, enclose(lb.lambda_under), t);
    out.w_over = logistic_w(*m, enclose(lb.lambda_over), t);
    out.source = "closed-form";
  } else {
    auto eval = [&](const Surd& l) {
      ScalarResult s = integrate_scalar(rt.g, to_real(l), to_real(t));
      return Enclosure(to_rat(Real(s.value - s.error)), to_rat(Real(s.value + s.error)));
    };
    out.w_under = eval(lb.lambda_under);
    out.w_over = eval(lb.lambda_over);
    out.source = "oracle";
  }
  out.hull = hull(out.w_under, out.w_over);
  return out;
}

}  // namespace hetero
