#include "ghecke/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <sstream>

namespace ghecke {

CPoly complexify(const RPoly& p) {
  std::vector<GaussianRational> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return CPoly(std::move(c));
}

namespace {

using Complex = std::complex<long double>;

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& n = q.get_num();
  const Integer& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z) {
  if (z.is_real()) {
    if (sgn(z.re()) >= 0) {
      if (auto r = rational_sqrt(z.re())) return GaussianRational(*r);
      return std::nullopt;
    }
    if (auto r = rational_sqrt(Rational(-z.re()))) return GaussianRational(Rational(0), *r);
    return std::nullopt;
  }
  auto modulus = rational_sqrt(z.norm());
  if (!modulus) return std::nullopt;
  auto x = rational_sqrt(Rational((z.re() + *modulus) / 2));
  if (!x || sgn(*x) == 0) return std::nullopt;
  Rational y = z.im() / (2 * *x);
  return GaussianRational(*x, y);
}

Complex to_complex(const GaussianRational& z) {
  return {static_cast<long double>(z.re().get_d()), static_cast<long double>(z.im().get_d())};
}

Complex eval(const std::vector<Complex>& c, Complex x) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Simultaneous Aberth-Ehrlich iteration on a squarefree polynomial.
std::vector<Complex> numeric_roots(const CPoly& f) {
  std::vector<Complex> c;
  for (const auto& x : f.coeffs()) c.push_back(to_complex(x));
  const std::size_t n = c.size() - 1;
  std::vector<Complex> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long double>(i));
  long double bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i] / c[n]));
  bound += 1;
  std::vector<Complex> z(n);
  const long double pi = 3.14159265358979323846L;
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(bound, 2 * pi * static_cast<long double>(k) / static_cast<long double>(n) + 0.4L);
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex ratio = eval(c, z[k]) / eval(d, z[k]);
      Complex sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      Complex step = ratio / (1.0L - ratio * sum);
      z[k] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-18L) break;
  }
  // Newton polish.
  for (auto& r : z)
    for (int i = 0; i < 5; ++i) {
      Complex dv = eval(d, r);
      if (std::abs(dv) == 0) break;
      r -= eval(c, r) / dv;
    }
  return z;
}

std::vector<Rational> convergents(long double x) {
  std::vector<Rational> out;
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  long double rem = x;
  for (int i = 0; i < 40; ++i) {
    long double a = std::floor(rem);
    if (std::fabs(a) > 1e15L) break;
    Integer ai(static_cast<double>(a));
    Integer h2 = ai * h1 + h0;
    Integer k2 = ai * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (k1 > Integer("1000000000000")) break;
    out.emplace_back(h1, k1);
    out.back().canonicalize();
    long double frac = rem - a;
    if (std::fabs(frac) < 1e-14L) break;
    rem = 1.0L / frac;
  }
  return out;
}

std::optional<GaussianRational> certify(const CPoly& f, Complex approx) {
  auto re = convergents(approx.real());
  std::vector<Rational> im;
  if (std::fabs(approx.imag()) < 1e-7L) im.emplace_back(0);
  for (auto& q : convergents(approx.imag())) im.push_back(q);
  for (const auto& a : re)
    for (const auto& b : im) {
      GaussianRational cand(a, b);
      if (is_zero(f(cand))) return cand;
    }
  return std::nullopt;
}

}  // namespace

std::vector<GaussianRational> roots_in_gaussian_field(const CPoly& f) {
  if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
  std::vector<GaussianRational> roots;
  CPoly work = squarefree_part(f);
  while (work.degree() >= 1) {
    if (work.degree() == 1) {
      roots.push_back(-work.coeff(0) / work.coeff(1));
      break;
    }
    if (work.degree() == 2) {
      CPoly m = work.monic();
      GaussianRational p = m.coeff(1), q = m.coeff(0);
      if (auto s = gaussian_sqrt(p * p - GaussianRational(4) * q)) {
        roots.push_back((-p + *s) / GaussianRational(2));
        roots.push_back((-p - *s) / GaussianRational(2));
      }
      break;
    }
    bool found = false;
    for (const auto& approx : numeric_roots(work)) {
      if (auto r = certify(work, approx)) {
        roots.push_back(*r);
        work = work.divmod(CPoly(std::vector<GaussianRational>{-*r, GaussianRational(1)})).first;
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<Rational> rational_roots(const RPoly& f) {
  std::vector<Rational> out;
  for (const auto& z : roots_in_gaussian_field(complexify(f)))
    if (z.is_real()) out.push_back(z.re());
  return out;
}

namespace {
template <class T>
std::string poly_text(const UPoly<T>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const T& c = p.coeffs()[i];
    if (is_zero(c)) continue;
    std::string cs = to_string(c);
    bool neg = cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    if (neg) cs = cs.substr(1);
    bool compound = cs.find_first_of("+-", 1) != std::string::npos || cs.find('i') != std::string::npos;
    if (compound && i > 0) cs = "(" + cs + ")";
    if (i == 0) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}
}  // namespace

std::string to_string(const RPoly& p, const std::string& var) { return poly_text(p, var); }
std::string to_string(const CPoly& p, const std::string& var) { return poly_text(p, var); }

}  // namespace ghecke
