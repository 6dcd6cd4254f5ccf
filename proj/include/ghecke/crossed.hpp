#pragma once

#include "ghecke/hecke.hpp"
#include "ghecke/molien.hpp"
#include "ghecke/perm.hpp"
#include "ghecke/rep.hpp"

#include <vector>

namespace ghecke {

struct ClassHomology {
  std::size_t representative = 0;
  std::size_t class_size = 0;
  std::size_t fixed_dim = 0;
  std::vector<PoincareSeries> forms;  // index n = form degree, n <= n_max
  bool euler_check = true;            // weight-graded Euler characteristic of invariant de Rham complex is 1, 0, 0, ...
};

struct HomologyCensus {
  std::size_t truncation = 0;
  std::size_t n_max = 0;
  std::vector<ClassHomology> classes;
  std::vector<std::vector<Integer>> hh_totals;  // [n][d]
  bool vanishing_above_rank = true;             // HH_n = 0 for n > dim t
  std::size_t hp0 = 0;
  std::size_t hp1 = 0;
};

/// HH_n of W' x| S(t*) as the sum over classes of invariant n-forms on the fixed spaces.
HomologyCensus crossed_product_census(const ExtendedWeylGroup& group, std::size_t n_max, std::size_t truncation);

struct PeriodicHomology {
  std::size_t hp0 = 0;
  std::size_t hp1 = 0;
  ParameterMap parameters;
};

/// (HP_0, HP_1) of the extended graded Hecke algebra: (#classes(W'), 0).
PeriodicHomology hp_census_hecke(const HeckeAlgebra& alg);

/// Action of a finite group on {0, .., points-1}, not necessarily faithful.
struct FiniteAction {
  PermutationGroup group;
  std::size_t points = 0;
  std::vector<Permutation> act;  // act[g][y] = g.y, per element index of `group`

  /// The permutation action of the group on its own domain.
  static FiniteAction natural(const PermutationGroup& g);
  /// Extends images of the group generators to all elements; throws when they do not define an action.
  static FiniteAction from_generators(const PermutationGroup& g, std::size_t points,
                                      const std::vector<Permutation>& generator_images);
};

/// I_x = span{v_g : g in G}, with G acting by left translation and the functions on the points
/// acting on v_g through evaluation at g.x.  Generators: the group generators, then the
/// indicator functions of all points.
MatrixRep crossed_point_module(const FiniteAction& a, std::size_t x);

struct CrossedPointReport {
  std::size_t point = 0;
  std::size_t dim = 0;
  std::vector<std::size_t> orbit;
  std::size_t stabilizer_order = 0;
  std::size_t constituents = 0;
};

CrossedPointReport analyse_crossed_point(const FiniteAction& a, std::size_t x);

/// Mutual isomorphism of two representations with matching generators, by intertwiner dimensions.
bool isomorphic(const MatrixRep& a, const MatrixRep& b);

}  // namespace ghecke
