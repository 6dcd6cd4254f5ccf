#include "ghecke/rational.hpp"

#include <stdexcept>

namespace ghecke {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/' && !slash && i > start && i + 1 < s.size()) {
      slash = true;
      continue;
    }
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
  if (start == s.size()) throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (slash && q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re());
  std::string im;
  if (z.im() == 1) {
    im = "i";
  } else if (z.im() == -1) {
    im = "-i";
  } else {
    im = to_string(z.im()) + "*i";
  }
  if (sgn(z.re()) == 0) return im;
  if (im[0] == '-') return to_string(z.re()) + im;
  return to_string(z.re()) + "+" + im;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

CVector complexify(const RVector& v) {
  CVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

RVector real_part(const CVector& v) {
  RVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(z.re());
  return out;
}

RVector imag_part(const CVector& v) {
  RVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(z.im());
  return out;
}

CVector make_complex(const RVector& re, const RVector& im) {
  if (re.size() != im.size()) throw std::invalid_argument("real and imaginary parts differ in length");
  CVector out;
  out.reserve(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) out.emplace_back(re[i], im[i]);
  return out;
}

}  // namespace ghecke
