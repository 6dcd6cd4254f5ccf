#pragma once

#include "ghecke/matrix.hpp"
#include "ghecke/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ghecke {

/// <x, lambda> for a covector x in a* and a vector lambda in a, both in ambient coordinates.
Rational pairing(const RVector& x, const RVector& lambda);

struct Root {
  RVector covector;      // element of a*
  RVector coroot;        // matching element of a
  RVector coefficients;  // expansion in the simple roots
  bool positive = false;
};

/// Expansion lambda = sum_i c_i alpha_i^vee + rest, with rest annihilated by every simple root.
struct CorootExpansion {
  RVector coefficients;
  RVector orthogonal_part;
};

/// A degenerate root datum (a*, R, a, R^vee, Pi) with exact rational coordinates.
///
/// Vectors of a and covectors in a* are both coordinate vectors of length ambient_dim();
/// the pairing is the plain dot product, i.e. covectors are written in the basis dual to
/// the chosen basis of a.  The Gram matrix is a W-invariant inner product on a.
class RootDatum {
 public:
  RootDatum() = default;

  /// Standard Cartan data: labels A<n>, B<n>, C<n>, D<n>, G2, F4, "empty", and products
  /// of those joined by 'x' (e.g. "A1xA1").  In the returned datum the first rank()
  /// ambient basis vectors are the simple coroots; any remaining coordinates span the
  /// orthogonal complement of the coroots.
  static RootDatum build(std::string_view label, std::size_t ambient_dim);

  /// Simple coroots are the first `rank` basis vectors of a; simple roots are determined by
  /// orthogonality of the reflections for `gram`.
  static RootDatum from_gram(std::string label, const RMatrix& gram, std::size_t rank);

  static RootDatum from_data(std::string label, RMatrix gram, std::vector<RVector> simple_roots,
                             std::vector<RVector> simple_coroots);

  const std::string& label() const { return label_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return simple_roots_.size(); }
  const RMatrix& gram() const { return gram_; }
  const std::vector<RVector>& simple_roots() const { return simple_roots_; }
  const std::vector<RVector>& simple_coroots() const { return simple_coroots_; }
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t positive_root_count() const { return roots_.size() / 2; }
  bool crystallographic() const { return crystallographic_; }
  /// True when Pi spans a*.
  bool spans() const { return rank() == ambient_dim_; }

  /// cartan()(i, j) = <alpha_i, alpha_j^vee>.
  const RMatrix& cartan() const { return cartan_; }

  /// Reflection s_i acting on a (column vectors).
  const RMatrix& reflection(std::size_t i) const { return reflections_.at(i); }
  /// Reflection s_i acting on coordinates of a*.
  const RMatrix& dual_reflection(std::size_t i) const { return dual_reflections_.at(i); }

  std::optional<std::size_t> root_index(const RVector& covector) const;
  std::optional<std::size_t> simple_index(const RVector& covector) const;

  CorootExpansion expand_in_coroots(const RVector& lambda) const;
  /// Same decomposition for covectors: x = sum_i c_i alpha_i + rest with <rest, alpha_j^vee> = 0.
  CorootExpansion expand_in_roots(const RVector& x) const;

  Rational inner(const RVector& a, const RVector& b) const;

  /// Order of s_i s_j.
  std::size_t coxeter_order(std::size_t i, std::size_t j) const;

  /// The datum R_P with ambient a_P spanned by the coroots of P (basis: those coroots, in
  /// the order of P) and its own dual coordinates.
  RootDatum levi(const std::vector<std::size_t>& subset) const;

  /// The datum R^P: same ambient space, simple roots restricted to P.
  RootDatum with_simple_subset(const std::vector<std::size_t>& subset) const;

  /// Text rendering used by the `datum` command.
  std::string describe() const;

 private:
  void finish();

  std::string label_;
  std::size_t ambient_dim_ = 0;
  RMatrix gram_;
  std::vector<RVector> simple_roots_;
  std::vector<RVector> simple_coroots_;
  std::vector<Root> roots_;
  RMatrix cartan_;
  RMatrix cartan_inverse_;
  std::vector<RMatrix> reflections_;
  std::vector<RMatrix> dual_reflections_;
  bool crystallographic_ = true;
};

/// Parameters k_alpha, one per simple root.
struct ParameterMap {
  std::vector<Rational> values;

  const Rational& operator[](std::size_t i) const { return values.at(i); }
  std::size_t size() const { return values.size(); }
  ParameterMap restricted(const std::vector<std::size_t>& subset) const;
  ParameterMap scaled(const Rational& z) const;
  static ParameterMap constant(std::size_t rank, const Rational& k);
  friend bool operator==(const ParameterMap&, const ParameterMap&) = default;
};

/// Subspace data attached to P subset of Pi.
struct ParabolicDatum {
  std::vector<std::size_t> subset;
  RMatrix t_levi;         // columns: basis of t_P (coroots of P)
  RMatrix t_upper;        // columns: basis of t^P = (t_P^*)^perp
  RMatrix tdual_levi;     // columns: basis of t_P^* (roots of P)
  RMatrix tdual_upper;    // columns: basis of t^{P*} = (t_P)^perp
  RMatrix cartan_levi;    // <alpha_a, alpha_b^vee> for alpha_a, alpha_b in P
  RootDatum levi;         // R_P
  RootDatum upper;        // R^P

  /// x = x_P + x^P with x_P in t_P^* and x^P in t^{P*}.
  std::pair<RVector, RVector> split_covector(const RVector& x) const;
  /// lambda = lambda_P + lambda^P with lambda_P in t_P and lambda^P in t^P.
  std::pair<RVector, RVector> split_vector(const RVector& lambda) const;
  /// Coordinates of x_P in the dual basis of the levi datum: <x, alpha_j^vee> for alpha_j in P.
  RVector levi_coordinates(const RVector& x) const;
  /// Embedding of a vector of a_P (levi coordinates) into a.
  RVector embed_levi_vector(const RVector& mu) const;
};

ParabolicDatum parabolic(const RootDatum& datum, std::vector<std::size_t> subset);

enum class ConeKind {
  DominantDual,      // a^{*+}, tested on a covector
  Antidual,          // a^-
  AntidualInterior,  // a^{--}
  LeviPositive,      // a_P^+
  UpperPositive,     // a^{P+}
  UpperStrict,       // a^{P++}
};

struct Cone {
  ConeKind kind = ConeKind::Antidual;
  std::vector<std::size_t> subset;  // P, for the parabolic cones
};

bool cone_contains(const RootDatum& datum, const Cone& cone, const RVector& v);

}  // namespace ghecke
