#include "hetero/ratpoly/sturm.hpp"

namespace hetero {

namespace {

PolyQ positive_rescale(const PolyQ& p) {
  if (p.is_zero()) return p;
  return p * integer_scale(p);
}

int sign_at_infinity(const PolyQ& p, int dir) {
  int s = sgn(p.leading());
  if (dir < 0 && p.degree() % 2 == 1) s = -s;
  return s;
}

int count_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

void require_nonzero(const PolyQ& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm count of the zero polynomial");
}

}  // namespace

std::vector<PolyQ> sturm_sequence(const PolyQ& p) {
  require_nonzero(p);
  std::vector<PolyQ> chain{positive_rescale(p)};
  if (p.degree() == 0) return chain;
  chain.push_back(positive_rescale(p.derivative()));
  while (chain.back().degree() > 0) {
    auto [q, rem] = divrem(chain[chain.size() - 2], chain.back());
    if (rem.is_zero()) break;
    chain.push_back(positive_rescale(-rem));
  }
  return chain;
}

int sign_variations(const std::vector<PolyQ>& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sgn(q.eval(x)));
  return count_changes(signs);
}

int sign_variations_at_infinity(const std::vector<PolyQ>& chain, int dir) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sign_at_infinity(q, dir));
  return count_changes(signs);
}

int sturm_count(const PolyQ& p, const Rat& lo, const Rat& hi) {
  require_nonzero(p);
  if (!(lo < hi)) throw std::invalid_argument("Sturm interval must satisfy lo < hi");
  if (sgn(p.eval(lo)) == 0) throw EndpointRoot("polynomial vanishes at lower endpoint " + to_string(lo));
  if (sgn(p.eval(hi)) == 0) throw EndpointRoot("polynomial vanishes at upper endpoint " + to_string(hi));
  auto chain = sturm_sequence(p);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int sturm_count_real(const PolyQ& p) {
  require_nonzero(p);
  auto chain = sturm_sequence(p);
  return sign_variations_at_infinity(chain, -1) - sign_variations_at_infinity(chain, +1);
}

int sturm_count_above(const PolyQ& p, const Rat& lo) {
  require_nonzero(p);
  if (sgn(p.eval(lo)) == 0) throw EndpointRoot("polynomial vanishes at lower endpoint " + to_string(lo));
  auto chain = sturm_sequence(p);
  return sign_variations(chain, lo) - sign_variations_at_infinity(chain, +1);
}

int sturm_count_below(const PolyQ& p, const Rat& hi) {
  require_nonzero(p);
  if (sgn(p.eval(hi)) == 0) throw EndpointRoot("polynomial vanishes at upper endpoint " + to_string(hi));
  auto chain = sturm_sequence(p);
  return sign_variations_at_infinity(chain, -1) - sign_variations(chain, hi);
}

}  // namespace hetero
