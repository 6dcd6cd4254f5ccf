#pragma once

#include "ghecke/poly.hpp"
#include "ghecke/rootdata.hpp"
#include "ghecke/weyl.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace ghecke {

class HeckeAlgebra;
using AlgebraPtr = std::shared_ptr<const HeckeAlgebra>;

/// Normal form sum_w w * p_w of an element of H', group elements on the left.
class HeckeElement {
 public:
  HeckeElement() = default;
  explicit HeckeElement(const HeckeAlgebra* parent) : parent_(parent) {}

  const HeckeAlgebra* parent() const { return parent_; }
  const std::map<std::size_t, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Filtration degree: the largest polynomial degree in the support, -1 for zero.
  long degree() const;
  Poly coefficient(std::size_t w) const;

  void add(std::size_t w, const Poly& p);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const Rational& s);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(HeckeElement a, const Rational& s) { return a *= s; }
  friend HeckeElement operator*(const Rational& s, HeckeElement a) { return a *= s; }
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

 private:
  void check_parent(const HeckeElement& o) const;
  const HeckeAlgebra* parent_ = nullptr;
  std::map<std::size_t, Poly> terms_;
};

/// The extended graded Hecke algebra Gamma x| H(R, k).
class HeckeAlgebra {
 public:
  /// Throws when k is not constant on W'-orbits of simple roots.
  static AlgebraPtr create(GroupPtr group, ParameterMap k);

  const RootDatum& datum() const { return group_->datum(); }
  const ExtendedWeylGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const ParameterMap& parameters() const { return k_; }
  std::size_t nvars() const { return datum().ambient_dim(); }

  /// Same group, other parameters.
  AlgebraPtr with_parameters(ParameterMap k) const;
  /// H(R, k) without diagram automorphisms; this algebra itself when Gamma is trivial.
  AlgebraPtr without_gamma() const;

  HeckeElement zero() const { return HeckeElement(this); }
  HeckeElement one() const;
  HeckeElement element(std::size_t w, const Poly& p) const;
  HeckeElement group_element(std::size_t w) const;
  HeckeElement reflection(std::size_t i) const;
  /// i-th configured generator of Gamma (0-based).
  HeckeElement gamma_generator(std::size_t i) const;
  HeckeElement coordinate(std::size_t i) const;
  HeckeElement polynomial(const Poly& p) const { return element(ExtendedWeylGroup::identity(), p); }
  /// Generating set: simple reflections, Gamma generators, coordinates.
  std::vector<HeckeElement> generators() const;

  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;
  /// p * w rewritten as sum_u u * q_u.
  std::vector<std::pair<std::size_t, Poly>> move_past(const Poly& p, std::size_t w) const;

  HeckeElement commutator(const HeckeElement& a, const HeckeElement& b) const;
  bool is_central(const HeckeElement& a) const;
  /// Basis of S(t*)^{W'} in degrees 0..d, as elements of the algebra.
  std::vector<HeckeElement> center_basis(unsigned d) const;

  /// Same element viewed in another algebra over the same group.
  HeckeElement rebase(const HeckeElement& a, const HeckeAlgebra& target) const;

  std::string to_string(const HeckeElement& a) const;
  HeckeElement parse(std::string_view text) const;

 private:
  HeckeAlgebra(GroupPtr group, ParameterMap k);
  std::vector<std::pair<std::size_t, Poly>> monomial_past(const Exponent& e, std::size_t w) const;

  GroupPtr group_;
  ParameterMap k_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<Exponent, std::size_t>, std::vector<std::pair<std::size_t, Poly>>> cache_;
  mutable std::once_flag plain_once_;
  mutable AlgebraPtr plain_;
  std::weak_ptr<const HeckeAlgebra> self_;
};

/// k-dependent part of a*b: the product at k minus the product at k = 0.
HeckeElement k_sensitive_part(const HeckeElement& a, const HeckeElement& b);

/// m_z: H(R, z k) -> H(R, k), p(x) -> p(z x) and the identity on C[W'].
HeckeElement scale_map(const Rational& z, const HeckeElement& a, const HeckeAlgebra& target);

}  // namespace ghecke
