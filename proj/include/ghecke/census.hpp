#pragma once

#include "ghecke/module.hpp"

#include <string>
#include <vector>

namespace ghecke {

/// A discrete series of the Levi algebra H_P, keyed by the sorted subset P of Pi.
struct CatalogEntry {
  std::vector<std::size_t> subset;
  FinModule delta;
  std::string note;
};

struct Irr0Entry {
  FinModule module;
  std::vector<std::size_t> subset;  // P of the inducing datum
  std::string delta_tag;
  Rational cc_norm;                 // |cc_P(delta)|^2
  CentralCharacter central;
  std::vector<GaussianRational> character;  // restriction to W', class order
  bool tempered = false;
};

struct Irr0Census {
  std::vector<Irr0Entry> entries;
  std::vector<CatalogEntry> association_classes;  // one representative (P, delta) per class
  std::vector<std::string> warnings;
};

/// One-dimensional discrete series of H_P for every P, plus the user entries, in the order
/// (|P|, P lex, automatic before user).  User entries must be discrete series with real weights.
std::vector<CatalogEntry> discrete_series_catalog(const AlgebraPtr& alg, const std::vector<CatalogEntry>& user,
                                                  std::vector<std::string>& warnings);

/// Irreducible tempered modules with real central character: the constituents of
/// pi'(P, delta, 0) over association classes of (P, delta), ordered by decreasing |cc_P(delta)|^2.
Irr0Census irr0_census(const AlgebraPtr& alg, const std::vector<CatalogEntry>& user);

struct BasisReport {
  Irr0Census census;
  std::size_t irr0_count = 0;
  std::size_t class_count = 0;
  std::size_t hp0 = 0;
  std::size_t hp1 = 0;
  CMatrix trace_matrix;  // rows: Irr0 entries; columns: classes
  std::size_t rank = 0;
  bool pass = false;
};

BasisReport verify_basis_theorem(const AlgebraPtr& alg, const std::vector<CatalogEntry>& user);

struct IntertwinerCheck {
  std::size_t end_dim = 0;          // dim End(pi'(xi))
  std::size_t multiplicity_sum = 0;  // sum of m_i^2 over the decomposition
  std::vector<std::size_t> stabilizer;  // W'_xi
  std::size_t transported_rank = 0;     // rank of the transported intertwiners inside End
  bool commutant_in_span = false;
  std::size_t algebra_dim = 0;          // image of H' in End(V)
  std::size_t bicommutant_dim = 0;
};

/// For xi = (P, delta, lambda): the intertwiners Hom(pi'(xi), pi'(w xi)) for w in W'_xi,
/// transported back to End(pi'(xi)) along the isomorphism w(delta) = delta.
IntertwinerCheck check_intertwiners(const AlgebraPtr& alg, const InductionDatum& xi);

}  // namespace ghecke
