#include "ghecke/crossed.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ghecke {

HomologyCensus crossed_product_census(const ExtendedWeylGroup& group, std::size_t n_max, std::size_t truncation) {
  HomologyCensus census;
  census.truncation = truncation;
  census.n_max = n_max;
  census.hh_totals.assign(n_max + 1, std::vector<Integer>(truncation + 1, Integer(0)));
  const std::size_t rank_t = group.datum().ambient_dim();

  for (const auto& cls : group.classes()) {
    ClassHomology entry;
    entry.representative = cls.representative;
    entry.class_size = cls.members.size();
    entry.fixed_dim = cls.fixed_dim();
    std::vector<RMatrix> action;
    action.reserve(cls.centralizer.size());
    for (auto h : cls.centralizer) action.push_back(restrict_operator(group[h].matrix, cls.fixed_basis));

    const std::size_t top = std::max(n_max, entry.fixed_dim);
    std::vector<PoincareSeries> all;
    for (std::size_t n = 0; n <= top; ++n) all.push_back(molien_forms(action, entry.fixed_dim, n, truncation));

    // d preserves the weight (polynomial degree + form degree) and the invariant complex is acyclic
    // in positive weight.
    for (std::size_t m = 0; m <= truncation; ++m) {
      Integer chi = 0;
      for (std::size_t n = 0; n <= std::min(m, top); ++n)
        chi += (n % 2 == 0 ? 1 : -1) * all[n].coefficients[m - n];
      if (chi != (m == 0 ? 1 : 0)) entry.euler_check = false;
    }

    for (std::size_t n = 0; n <= n_max; ++n) {
      for (std::size_t d = 0; d <= truncation; ++d) census.hh_totals[n][d] += all[n].coefficients[d];
      entry.forms.push_back(all[n]);
    }
    census.hp0 += all[0].coefficients[0] == 1 ? 1 : 0;
    census.classes.push_back(std::move(entry));
  }

  for (std::size_t n = rank_t + 1; n <= n_max; ++n)
    for (const auto& c : census.hh_totals[n])
      if (c != 0) census.vanishing_above_rank = false;
  census.hp1 = 0;
  return census;
}

PeriodicHomology hp_census_hecke(const HeckeAlgebra& alg) {
  return {alg.group().classes().size(), 0, alg.parameters()};
}

FiniteAction FiniteAction::natural(const PermutationGroup& g) {
  return FiniteAction{g, g.degree(), g.elements()};
}

FiniteAction FiniteAction::from_generators(const PermutationGroup& g, std::size_t points,
                                           const std::vector<Permutation>& generator_images) {
  if (generator_images.size() != g.generators().size())
    throw std::invalid_argument("one point permutation per group generator is required");
  for (const auto& p : generator_images)
    if (p.size() != points) throw std::invalid_argument("generator image has the wrong degree");
  FiniteAction a{g, points, std::vector<Permutation>(g.size())};
  std::vector<bool> known(g.size(), false);
  a.act[0].resize(points);
  for (std::size_t y = 0; y < points; ++y) a.act[0][y] = y;
  known[0] = true;
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t e = queue[head];
    for (std::size_t s = 0; s < generator_images.size(); ++s) {
      const std::size_t f = g.multiply(g.index_of(g.generators()[s]), e);
      Permutation img(points);
      for (std::size_t y = 0; y < points; ++y) img[y] = generator_images[s].at(a.act[e][y]);
      if (known[f]) {
        if (a.act[f] != img) throw std::invalid_argument("generator images do not define a group action");
        continue;
      }
      a.act[f] = std::move(img);
      known[f] = true;
      queue.push_back(f);
    }
  }
  return a;
}

MatrixRep crossed_point_module(const FiniteAction& a, std::size_t x) {
  if (x >= a.points) throw std::invalid_argument("point outside the action domain");
  const PermutationGroup& g = a.group;
  const std::size_t n = g.size();
  MatrixRep rep;
  rep.dim = n;
  for (const auto& s : g.generators()) {
    const std::size_t si = g.index_of(s);
    CMatrix m(n, n);
    for (std::size_t b = 0; b < n; ++b) m(g.multiply(si, b), b) = 1;
    rep.generators.push_back(std::move(m));
  }
  for (std::size_t y = 0; y < a.points; ++y) {
    CMatrix m(n, n);
    for (std::size_t b = 0; b < n; ++b)
      if (a.act[b][x] == y) m(b, b) = 1;
    rep.generators.push_back(std::move(m));
  }
  return rep;
}

CrossedPointReport analyse_crossed_point(const FiniteAction& a, std::size_t x) {
  CrossedPointReport r;
  r.point = x;
  r.dim = a.group.size();
  std::set<std::size_t> orbit;
  for (const auto& p : a.act) orbit.insert(p.at(x));
  r.orbit.assign(orbit.begin(), orbit.end());
  r.stabilizer_order = a.group.size() / r.orbit.size();
  r.constituents = constituent_count(crossed_point_module(a, x));
  return r;
}

bool isomorphic(const MatrixRep& a, const MatrixRep& b) {
  if (a.dim != b.dim || a.generators.size() != b.generators.size()) return false;
  const auto hom = hom_space(a, b).size();
  return hom == commutant(a).size() && hom == commutant(b).size();
}

}  // namespace ghecke
