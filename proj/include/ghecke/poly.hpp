#pragma once

#include "ghecke/matrix.hpp"
#include "ghecke/rational.hpp"
#include "ghecke/rootdata.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ghecke {

using Exponent = std::vector<unsigned>;

/// Sparse polynomial in the coordinates x_1..x_n of t* (dual to the ambient basis of a).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  /// The linear form sum_i x[i] x_i.
  static Poly linear(const RVector& x);
  static Poly monomial(const Exponent& e, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for zero.
  long degree() const;
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coeff(const Exponent& e) const;
  bool is_constant() const { return degree() <= 0; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Substitution x_j -> sum_k s(k, j) x_k, i.e. column j of s is the image of x_j.
  Poly substitute(const RMatrix& s) const;
  Poly homogeneous_part(unsigned d) const;
  /// p(z x).
  Poly scaled(const Rational& z) const;

  template <class T>
  T evaluate(const std::vector<T>& point) const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  std::size_t nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

/// Action of a group element given by its matrix on t* coordinates (the `dual` matrix).
inline Poly act(const RMatrix& dual, const Poly& p) { return p.substitute(dual); }

/// p / L for a nonzero linear form L dividing p; throws std::logic_error on a remainder.
Poly divide_by_linear(const Poly& p, const RVector& linear);

/// Delta_alpha(p) = (p - s_alpha p) / alpha for the simple root alpha_i.
Poly divided_difference(const RootDatum& datum, std::size_t i, const Poly& p);

/// |H|^{-1} sum_h h(p) for H given by its matrices on t* coordinates.
Poly reynolds(const Poly& p, const std::vector<RMatrix>& duals);

/// Exponents of all monomials of total degree d in n variables, graded-lex descending.
std::vector<Exponent> monomials(std::size_t nvars, unsigned d);

/// Basis of the H-invariant homogeneous polynomials of degree d, in reduced echelon form
/// with respect to the graded-lex descending monomial order.
std::vector<Poly> invariant_basis(const std::vector<RMatrix>& duals, std::size_t nvars, unsigned d);

/// Canonical text: terms in graded-lex descending order, e.g. "3/2*x1^2*x3 - x2"; zero is "0".
std::string to_string(const Poly& p);
Poly parse_poly(std::string_view text, std::size_t nvars);

template <class T>
T Poly::evaluate(const std::vector<T>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluate: dimension mismatch");
  T acc(0);
  for (const auto& [e, c] : terms_) {
    T m(c);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) m = m * point[i];
    acc = acc + m;
  }
  return acc;
}

/// p evaluated at pairwise commuting square matrices.
CMatrix evaluate_at_matrices(const Poly& p, const std::vector<CMatrix>& xs, std::size_t dim);

}  // namespace ghecke
