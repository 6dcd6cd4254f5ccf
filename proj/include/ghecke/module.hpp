#pragma once

#include "ghecke/hecke.hpp"
#include "ghecke/rep.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ghecke {

/// Finite-dimensional module over an extended graded Hecke algebra, with matrices over Q(i).
struct FinModule {
  AlgebraPtr algebra;
  std::size_t dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<CMatrix> reflections;  // one per simple root
  std::vector<CMatrix> gammas;       // one per element of Gamma (closure order); gammas[0] = I
  std::vector<CMatrix> coordinates;  // one per coordinate x_i of t*
  std::string tag;

  CMatrix group_matrix(std::size_t w) const;
  CMatrix act(const HeckeElement& h) const;
  /// Generators: reflections, Gamma generators, coordinates.
  MatrixRep as_rep() const;
};

class ModuleRelationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnsplitSpectrum : public std::runtime_error {
 public:
  UnsplitSpectrum(const std::string& where, const CPoly& p);
  const CPoly& polynomial() const { return poly_; }

 private:
  CPoly poly_;
};

/// Throws ModuleRelationError naming the first relation that fails.
void verify_module(const FinModule& m);

/// Submodule spanned by the columns of `basis` (must be invariant).
FinModule submodule(const FinModule& m, const CMatrix& basis, std::string tag = {});

/// Builds a module from explicit generator matrices and verifies it.
FinModule make_module(AlgebraPtr algebra, std::vector<CMatrix> reflections, std::vector<CMatrix> gamma_generators,
                      std::vector<CMatrix> coordinates, std::string tag);

/// Levi algebra H_P = H(R_P, k|_P), without diagram automorphisms.
AlgebraPtr levi_algebra(const HeckeAlgebra& alg, const std::vector<std::size_t>& subset);

/// All one-dimensional modules of an algebra without diagram automorphisms.
std::vector<FinModule> one_dim_modules(const AlgebraPtr& alg);

struct InductionDatum {
  std::vector<std::size_t> subset;  // P, sorted
  FinModule delta;                  // module over levi_algebra(P)
  CVector lambda;                   // point of t^P in ambient coordinates
};

/// pi(P, delta, lambda) (extended = false) or pi'(P, delta, lambda) (extended = true).
FinModule induce(const AlgebraPtr& alg, const InductionDatum& xi, bool extended);

struct Weight {
  CVector point;
  std::size_t multiplicity = 0;
};

/// Generalized joint spectrum of the coordinate matrices, sorted by point.
std::vector<Weight> weights(const FinModule& m);

/// The W'-orbit of a point of t, sorted.
std::vector<CVector> orbit(const ExtendedWeylGroup& g, const CVector& point);

struct CentralCharacter {
  std::vector<CVector> orbit;
  bool real = true;
};

/// Throws std::runtime_error when the weights span several W'-orbits.
CentralCharacter central_character(const FinModule& m);

bool is_tempered(const FinModule& m);
bool is_irreducible(const FinModule& m);
bool is_discrete_series(const FinModule& m);

std::vector<CMatrix> commutant(const FinModule& m);
/// Basis of Hom(a, b) as (b.dim x a.dim) matrices.
std::vector<CMatrix> intertwiner_space(const FinModule& a, const FinModule& b);

struct ModuleConstituent {
  FinModule module;
  std::size_t multiplicity = 0;
};
std::vector<ModuleConstituent> decompose(const FinModule& m);

/// Traces of the W'-matrices on class representatives, in class order.
std::vector<GaussianRational> restriction_character(const FinModule& m);

/// Association action of w on (P, delta, lambda): delta is relabelled along w|_P.
InductionDatum transport(const HeckeAlgebra& alg, std::size_t w, const InductionDatum& xi);

/// Squared norm of the real part of a point of t (Gram form).
Rational squared_norm(const RootDatum& d, const CVector& point);

}  // namespace ghecke
