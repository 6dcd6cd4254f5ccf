#pragma once

#include "ghecke/matrix.hpp"
#include "ghecke/upoly.hpp"

#include <stdexcept>
#include <vector>

namespace ghecke {

/// A representation of a finitely generated algebra over Q(i), given by generator matrices.
struct MatrixRep {
  std::size_t dim = 0;
  std::vector<CMatrix> generators;
};

/// Raised when a splitting needs a field beyond Q(i).
class FieldExtensionRequired : public std::runtime_error {
 public:
  explicit FieldExtensionRequired(CPoly minimal_polynomial);
  const CPoly& minimal_polynomial() const { return poly_; }

 private:
  CPoly poly_;
};

class NotCompletelyReducible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Basis of {T : T a = b T for every generator pair}; T is (b.dim x a.dim).
std::vector<CMatrix> hom_space(const MatrixRep& a, const MatrixRep& b);
std::vector<CMatrix> commutant(const MatrixRep& v);

/// Dimension of the unital algebra generated by the generator matrices.
std::size_t generated_algebra_dimension(const MatrixRep& v);
/// Basis of the unital algebra generated by the generator matrices.
std::vector<CMatrix> generated_algebra(const MatrixRep& v);

/// Burnside test: the generators span all of End(V).
bool is_absolutely_irreducible(const MatrixRep& v);

/// Center of the algebra spanned by `basis` (assumed closed under products).
std::vector<CMatrix> algebra_center(const std::vector<CMatrix>& basis);

/// Trace-form radical of the algebra spanned by `basis`; empty iff semisimple.
std::vector<CMatrix> trace_radical(const std::vector<CMatrix>& basis);

/// Number of pairwise inequivalent absolutely irreducible constituents of a completely
/// reducible V: the dimension of the center of its commutant.
std::size_t constituent_count(const MatrixRep& v);

MatrixRep restrict_rep(const MatrixRep& v, const CMatrix& basis);

struct IsotypicPart {
  std::vector<CMatrix> copies;  // each a column basis (in V) of one irreducible copy
  std::size_t multiplicity() const { return copies.size(); }
};

/// Splits a completely reducible V into irreducible summands grouped by isomorphism type,
/// in order of first appearance.
std::vector<IsotypicPart> decompose(const MatrixRep& v);

}  // namespace ghecke
