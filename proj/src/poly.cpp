#include "ghecke/poly.hpp"

#include "ghecke/expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghecke {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::invalid_argument("variable index out of range");
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(e);
}

Poly Poly::linear(const RVector& x) {
  Poly p(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Exponent e(x.size(), 0);
    e[i] = 1;
    p.add_term(e, x[i]);
  }
  return p;
}

Poly Poly::monomial(const Exponent& e, const Rational& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

long Poly::degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

Rational Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  Poly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly Poly::substitute(const RMatrix& s) const {
  if (s.rows() != nvars_ || s.cols() != nvars_) throw std::invalid_argument("substitution matrix has wrong size");
  std::vector<std::vector<Poly>> powers(nvars_);
  for (std::size_t j = 0; j < nvars_; ++j) {
    powers[j].push_back(constant(nvars_, 1));
    powers[j].push_back(linear(s.col(j)));
  }
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Poly m = constant(nvars_, c);
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (e[j] == 0) continue;
      while (powers[j].size() <= e[j]) powers[j].push_back(powers[j].back() * powers[j][1]);
      m = m * powers[j][e[j]];
    }
    out += m;
  }
  return out;
}

Poly Poly::homogeneous_part(unsigned d) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto x : e) s += x;
    if (s == d) out.add_term(e, c);
  }
  return out;
}

Poly Poly::scaled(const Rational& z) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Rational f = c;
    for (auto x : e)
      for (unsigned k = 0; k < x; ++k) f *= z;
    out.add_term(e, f);
  }
  return out;
}

Poly divide_by_linear(const Poly& p, const RVector& linear) {
  const std::size_t n = p.nvars();
  if (linear.size() != n) throw std::invalid_argument("divide_by_linear: dimension mismatch");
  std::size_t j = n;
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(linear[i]) != 0) j = i;
  if (j == n) throw std::invalid_argument("division by the zero linear form");
  if (p.is_zero()) return p;
  // Coefficients of p as a polynomial in x_j.
  unsigned top = 0;
  for (const auto& [e, c] : p.terms()) top = std::max(top, e[j]);
  std::vector<Poly> coef(top + 1, Poly(n));
  for (const auto& [e, c] : p.terms()) {
    Exponent rest = e;
    rest[j] = 0;
    coef[e[j]] += Poly::monomial(rest, c);
  }
  // L = a (x_j - r).
  const Rational a = linear[j];
  RVector r_vec(n);
  for (std::size_t i = 0; i < n; ++i) r_vec[i] = i == j ? Rational(0) : Rational(-linear[i] / a);
  const Poly r = Poly::linear(r_vec);
  std::vector<Poly> q(top, Poly(n));
  if (top == 0) throw std::logic_error("polynomial is not divisible by the linear form");
  q[top - 1] = coef[top];
  for (unsigned e = top - 1; e >= 1; --e) q[e - 1] = coef[e] + r * q[e];
  Poly rem = coef[0] + r * q[0];
  if (!rem.is_zero()) throw std::logic_error("polynomial is not divisible by the linear form");
  Poly out(n);
  Exponent xj(n, 0);
  for (unsigned e = 0; e < top; ++e) {
    xj[j] = e;
    out += q[e] * Poly::monomial(xj);
  }
  return out * Rational(1 / a);
}

Poly divided_difference(const RootDatum& datum, std::size_t i, const Poly& p) {
  Poly diff = p - act(datum.dual_reflection(i), p);
  if (diff.is_zero()) return diff;
  return divide_by_linear(diff, datum.simple_roots().at(i));
}

Poly reynolds(const Poly& p, const std::vector<RMatrix>& duals) {
  if (duals.empty()) throw std::invalid_argument("reynolds: empty group");
  Poly out(p.nvars());
  for (const auto& d : duals) out += act(d, p);
  return out * Rational(1, static_cast<long>(duals.size()));
}

std::vector<Exponent> monomials(std::size_t nvars, unsigned d) {
  std::vector<Exponent> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

std::vector<Poly> invariant_basis(const std::vector<RMatrix>& duals, std::size_t nvars, unsigned d) {
  auto mons = monomials(nvars, d);
  RMatrix rows(mons.size(), mons.size());
  for (std::size_t a = 0; a < mons.size(); ++a) {
    Poly img = reynolds(Poly::monomial(mons[a]), duals);
    for (std::size_t b = 0; b < mons.size(); ++b) rows(a, b) = img.coeff(mons[b]);
  }
  auto pivots = rref(rows);
  std::vector<Poly> out;
  for (std::size_t a = 0; a < pivots.size(); ++a) {
    Poly p(nvars);
    for (std::size_t b = 0; b < mons.size(); ++b)
      if (sgn(rows(a, b)) != 0) p += Poly::monomial(mons[b], rows(a, b));
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

bool graded_lex_greater(const Exponent& a, const Exponent& b) {
  unsigned da = 0, db = 0;
  for (auto x : a) da += x;
  for (auto x : b) db += x;
  if (da != db) return da > db;
  return a > b;
}

std::string monomial_text(const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return graded_lex_greater(a.first, b.first); });
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational mag = abs(c);
    std::string mono = monomial_text(e);
    std::string body;
    if (mono.empty()) body = to_string(mag);
    else if (mag == 1) body = mono;
    else body = to_string(mag) + "*" + mono;
    if (first) s += (sgn(c) < 0 ? "-" : "") + body;
    else s += (sgn(c) < 0 ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

Poly parse_poly(std::string_view text, std::size_t nvars) {
  ExpressionParser<Poly> parser(
      [nvars](const std::string& name, std::size_t offset) {
        if (name.size() >= 2 && name[0] == 'x' &&
            std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
          std::size_t i = std::stoul(name.substr(1));
          if (i >= 1 && i <= nvars) return Poly::variable(nvars, i - 1);
        }
        throw ParseError("unknown variable '" + name + "'", offset);
      },
      [nvars](const Rational& q) { return Poly::constant(nvars, q); });
  return parser.parse(text);
}

CMatrix evaluate_at_matrices(const Poly& p, const std::vector<CMatrix>& xs, std::size_t dim) {
  if (xs.size() != p.nvars()) throw std::invalid_argument("evaluate_at_matrices: dimension mismatch");
  std::vector<std::vector<CMatrix>> powers(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    powers[j].push_back(CMatrix::identity(dim));
    powers[j].push_back(xs[j]);
  }
  CMatrix out(dim, dim);
  for (const auto& [e, c] : p.terms()) {
    CMatrix m = CMatrix::identity(dim) * GaussianRational(c);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (e[j] == 0) continue;
      while (powers[j].size() <= e[j]) powers[j].push_back(powers[j].back() * xs[j]);
      m = m * powers[j][e[j]];
    }
    out += m;
  }
  return out;
}

}  // namespace ghecke
