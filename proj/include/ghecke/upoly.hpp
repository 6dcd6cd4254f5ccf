#pragma once

#include "ghecke/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ghecke {

/// Dense univariate polynomial, coefficients stored low degree first, no trailing zeros.
template <class T>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(T c) { return UPoly(std::vector<T>{std::move(c)}); }
  /// The polynomial t.
  static UPoly variable() { return UPoly(std::vector<T>{T(0), T(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree, -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<long>(i)));
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    T inv = T(1) / leading();
    std::vector<T> d = c_;
    for (auto& x : d) x *= inv;
    return UPoly(std::move(d));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<T> d(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
    return UPoly(std::move(d));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<T> d(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] -= b.c_[i];
    return UPoly(std::move(d));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> d(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(d));
  }
  friend UPoly operator*(const T& s, const UPoly& a) {
    std::vector<T> d = a.c_;
    for (auto& x : d) x *= s;
    return UPoly(std::move(d));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder of Euclidean division.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<T> r = c_;
    if (degree() < d.degree()) return {UPoly(), *this};
    std::vector<T> q(c_.size() - d.c_.size() + 1, T(0));
    T inv = T(1) / d.leading();
    for (std::size_t k = q.size(); k-- > 0;) {
      T f = r[k + d.c_.size() - 1] * inv;
      q[k] = f;
      if (is_zero_coeff(f)) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] -= f * d.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  /// Truncated power series inverse modulo t^(n+1); requires a nonzero constant term.
  std::vector<T> series_inverse(std::size_t n) const {
    if (is_zero() || is_zero_coeff(c_[0])) throw std::domain_error("series inverse needs a unit constant term");
    std::vector<T> inv(n + 1, T(0));
    T c0inv = T(1) / c_[0];
    inv[0] = c0inv;
    for (std::size_t k = 1; k <= n; ++k) {
      T acc(0);
      for (std::size_t j = 1; j <= k && j < c_.size(); ++j) acc += c_[j] * inv[k - j];
      inv[k] = -acc * c0inv;
    }
    return inv;
  }

 private:
  static bool is_zero_coeff(const T& x) { return ghecke::is_zero(x); }
  void trim() {
    while (!c_.empty() && ghecke::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Product of the distinct monic irreducible factors (char 0).
template <class T>
UPoly<T> squarefree_part(const UPoly<T>& f) {
  if (f.degree() <= 0) return f.monic();
  UPoly<T> g = gcd(f, f.derivative());
  return f.divmod(g).first.monic();
}

using RPoly = UPoly<Rational>;
using CPoly = UPoly<GaussianRational>;

CPoly complexify(const RPoly& p);

/// Distinct roots of f lying in Q(i), in canonical order (by real part, then imaginary part).
/// Candidate roots are located numerically and each one is certified by exact evaluation;
/// roots outside Q(i) are simply absent from the result.
std::vector<GaussianRational> roots_in_gaussian_field(const CPoly& f);
std::vector<Rational> rational_roots(const RPoly& f);

std::string to_string(const RPoly& p, const std::string& var = "t");
std::string to_string(const CPoly& p, const std::string& var = "t");

}  // namespace ghecke
