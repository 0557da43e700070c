#include "hetero/ratpoly/rfun.hpp"

#include <algorithm>
#include <sstream>

namespace hetero {

RFun::RFun(PolyQ num, FactorMap den) : num_(std::move(num)), den_(std::move(den)) {
  for (auto it = den_.begin(); it != den_.end();) it = it->second == 0 ? den_.erase(it) : std::next(it);
  if (num_.is_zero()) den_.clear();
}

RFun RFun::reduced() const {
  RFun out = *this;
  out.reduce();
  return out;
}

PolyQ RFun::factor(int id) {
  if (id == 0) return PolyQ::variable();
  return PolyQ(std::vector<Rat>{Rat(1), Rat(0), Rat(id)});
}

PolyQ RFun::product(const FactorMap& den) {
  PolyQ out(Rat(1));
  for (const auto& [id, e] : den) out = out * pow(factor(id), static_cast<unsigned>(e));
  return out;
}

void RFun::reduce() {
  for (auto it = den_.begin(); it != den_.end();) {
    if (num_.is_zero()) {
      it = den_.erase(it);
      continue;
    }
    PolyQ f = factor(it->first);
    while (it->second > 0) {
      auto [q, rem] = divrem(num_, f);
      if (!rem.is_zero()) break;
      num_ = std::move(q);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

RFun RFun::divided_by(int id, int e) const {
  // Cancel only the factor being introduced; other factors are left alone.
  PolyQ num = num_;
  PolyQ f = factor(id);
  int left = e;
  while (left > 0 && !num.is_zero()) {
    auto [q, rem] = divrem(num, f);
    if (!rem.is_zero()) break;
    num = std::move(q);
    --left;
  }
  FactorMap d = den_;
  d[id] += left;
  return RFun(std::move(num), std::move(d));
}

PolyQ RFun::numerator_over(const FactorMap& common) const {
  PolyQ out = num_;
  for (const auto& [id, e] : common) {
    auto it = den_.find(id);
    int have = it == den_.end() ? 0 : it->second;
    if (have > e) throw std::domain_error("target denominator does not contain this one");
    if (e > have) out = out * pow(factor(id), static_cast<unsigned>(e - have));
  }
  for (const auto& [id, e] : den_)
    if (!common.count(id)) throw std::domain_error("target denominator does not contain this one");
  return out;
}

Rat RFun::eval(const Rat& r) const {
  Rat d = product(den_).eval(r);
  if (sgn(d) == 0) throw std::domain_error("pole of rational function");
  return num_.eval(r) / d;
}

RFun::FactorMap common_factors(const RFun::FactorMap& a, const RFun::FactorMap& b) {
  RFun::FactorMap out = a;
  for (const auto& [id, e] : b) out[id] = std::max(out[id], e);
  return out;
}

RFun operator+(const RFun& a, const RFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  auto d = common_factors(a.den_, b.den_);
  return RFun(a.numerator_over(d) + b.numerator_over(d), d);
}

RFun operator-(const RFun& a, const RFun& b) { return a + (-b); }

RFun operator*(const RFun& a, const RFun& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RFun::FactorMap d = a.den_;
  for (const auto& [id, e] : b.den_) d[id] += e;
  return RFun(a.num_ * b.num_, std::move(d));
}

bool operator==(const RFun& a, const RFun& b) {
  auto d = common_factors(a.den_, b.den_);
  return a.numerator_over(d) == b.numerator_over(d);
}

std::string RFun::str() const {
  if (den_.empty()) return to_string(num_);
  std::ostringstream os;
  os << "(" << to_string(num_) << ")/(";
  bool first = true;
  for (const auto& [id, e] : den_) {
    if (!first) os << "*";
    os << (id == 0 ? std::string("r") : "(" + std::to_string(id) + "*r^2 + 1)");
    if (e > 1) os << "^" << e;
    first = false;
  }
  os << ")";
  return os.str();
}

PolyQR clear_denominators(const std::vector<RFun>& coeffs, RFun::FactorMap* den) {
  RFun::FactorMap d;
  for (const auto& c : coeffs) d = common_factors(d, c.factors());
  std::vector<PolyQ> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.numerator_over(d));
  if (den) *den = d;
  return PolyQR(std::move(out));
}

}  // namespace hetero
