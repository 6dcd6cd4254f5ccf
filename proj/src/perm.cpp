#include "ghecke/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace ghecke {

PermutationGroup PermutationGroup::generate(std::size_t degree, const std::vector<Permutation>& generators,
                                            std::size_t bound) {
  PermutationGroup g;
  g.degree_ = degree;
  for (const auto& p : generators) {
    if (p.size() != degree) throw std::invalid_argument("permutation has the wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto x : p) {
      if (x >= degree || hit[x]) throw std::invalid_argument("generator is not a permutation");
      hit[x] = true;
    }
  }
  g.generators_ = generators;
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  g.elements_.push_back(id);
  g.index_.emplace(id, 0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& s : generators) {
      Permutation next(degree);
      const Permutation cur = g.elements_[head];
      for (std::size_t x = 0; x < degree; ++x) next[x] = s[cur[x]];
      if (g.index_.count(next)) continue;
      if (g.elements_.size() >= bound) throw std::invalid_argument("group order exceeds bound " + std::to_string(bound));
      g.index_.emplace(next, g.elements_.size());
      g.elements_.push_back(std::move(next));
    }
  }
  return g;
}

PermutationGroup PermutationGroup::symmetric(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[i], p[i + 1]);
    gens.push_back(p);
  }
  return generate(n, gens);
}

PermutationGroup PermutationGroup::cyclic(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return generate(n, {p});
}

std::size_t PermutationGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("permutation is not in the group");
  return it->second;
}

std::size_t PermutationGroup::multiply(std::size_t a, std::size_t b) const {
  Permutation p(degree_);
  for (std::size_t x = 0; x < degree_; ++x) p[x] = elements_[a][elements_[b][x]];
  return index_of(p);
}

std::size_t PermutationGroup::inverse(std::size_t a) const {
  Permutation p(degree_);
  for (std::size_t x = 0; x < degree_; ++x) p[elements_[a][x]] = x;
  return index_of(p);
}

std::vector<std::size_t> PermutationGroup::orbit(std::size_t x) const {
  std::set<std::size_t> pts;
  for (const auto& g : elements_) pts.insert(g.at(x));
  return {pts.begin(), pts.end()};
}

PermutationGroup PermutationGroup::stabilizer(std::size_t x) const {
  std::vector<Permutation> gens;
  for (const auto& g : elements_)
    if (g.at(x) == x) gens.push_back(g);
  return generate(degree_, gens);
}

std::vector<std::vector<std::size_t>> PermutationGroup::conjugacy_classes() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t g = 0; g < size(); ++g) {
    if (seen[g]) continue;
    std::set<std::size_t> cls;
    for (std::size_t h = 0; h < size(); ++h) cls.insert(multiply(multiply(h, g), inverse(h)));
    for (auto c : cls) seen[c] = true;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

}  // namespace ghecke
