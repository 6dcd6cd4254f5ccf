#pragma once

#include "ghecke/perm.hpp"
#include "ghecke/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace ghecke {

using SparseVector = std::map<std::size_t, Rational>;

/// Finite-dimensional unital associative algebra over Q given by structure constants.
class FinDimAlgebra {
 public:
  /// products[i][j] = e_i e_j; associativity and the unit laws are checked.
  static FinDimAlgebra from_structure(std::vector<std::vector<SparseVector>> products, SparseVector unit);
  static FinDimAlgebra field();
  static FinDimAlgebra matrix_algebra(std::size_t n);
  static FinDimAlgebra group_algebra(const PermutationGroup& g);

  std::size_t dim() const { return products_.size(); }
  const SparseVector& unit() const { return unit_; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i][j]; }

 private:
  std::vector<std::vector<SparseVector>> products_;
  SparseVector unit_;
};

constexpr std::size_t kDefaultChainBound = 1000000;

/// dim HH_0 .. HH_{n_max} from the Hochschild complex C_n = A^{(n+1)}.
std::vector<std::size_t> hochschild_homology(const FinDimAlgebra& a, std::size_t n_max,
                                             std::size_t bound = kDefaultChainBound);

/// dim HC_0 .. HC_{n_max} from the total complex of the mixed complex (b, B).
std::vector<std::size_t> cyclic_homology(const FinDimAlgebra& a, std::size_t n_max,
                                         std::size_t bound = kDefaultChainBound);

struct MixedComplexCheck {
  bool bb_zero = true;         // b b = 0
  bool anticommute = true;     // b B + B b = 0
  bool BB_zero = true;         // B B = 0
  bool ok() const { return bb_zero && anticommute && BB_zero; }
};

/// Checks the mixed-complex identities on every basis chain up to degree n_max.
MixedComplexCheck verify_mixed_complex(const FinDimAlgebra& a, std::size_t n_max,
                                       std::size_t bound = kDefaultChainBound);

/// Rank of a family of sparse rational vectors, by fraction-free elimination over Z.
std::size_t sparse_rank(const std::vector<SparseVector>& vectors);

}  // namespace ghecke
