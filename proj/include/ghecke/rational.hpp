#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ghecke {

using Integer = mpz_class;
using Rational = mpq_class;
using RVector = std::vector<Rational>;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// num/den in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Element a + b i of the Gaussian field Q(i). Points of the complexified
/// Cartan subalgebra are stored with one of these per coordinate.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
  /// Lexicographic on (re, im); only used for canonical ordering.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const GaussianRational& z) { return sgn(z.re()) == 0 && sgn(z.im()) == 0; }
std::string to_string(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

using CVector = std::vector<GaussianRational>;

CVector complexify(const RVector& v);
RVector real_part(const CVector& v);
RVector imag_part(const CVector& v);
CVector make_complex(const RVector& re, const RVector& im);

}  // namespace ghecke
