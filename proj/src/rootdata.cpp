#include "ghecke/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ghecke {

Rational pairing(const RVector& x, const RVector& lambda) {
  if (x.size() != lambda.size()) throw std::invalid_argument("pairing: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * lambda[i];
  return s;
}

namespace {

std::string vector_key(const RVector& v) {
  std::string s;
  for (const auto& x : v) {
    s += x.get_str();
    s += ',';
  }
  return s;
}

// Inner products (alpha_i, alpha_j) of the simple roots of one irreducible component,
// long roots of squared length 2.
RMatrix component_root_gram(char type, std::size_t n) {
  RMatrix g(n, n);
  auto chain = [&](std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
      g(i, i) = 2;
      if (i + 1 < len) g(i, i + 1) = g(i + 1, i) = -1;
    }
  };
  switch (type) {
    case 'A':
      if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
      chain(n);
      break;
    case 'B':
      if (n < 1) throw std::invalid_argument("B_n needs n >= 1");
      chain(n);
      g(n - 1, n - 1) = 1;
      break;
    case 'C':
      if (n < 1) throw std::invalid_argument("C_n needs n >= 1");
      chain(n);
      if (n == 1) break;
      g(n - 1, n - 1) = 4;
      g(n - 2, n - 1) = g(n - 1, n - 2) = -2;
      break;
    case 'D':
      if (n < 3) throw std::invalid_argument("D_n needs n >= 3");
      chain(n - 1);
      g(n - 1, n - 1) = 2;
      g(n - 3, n - 1) = g(n - 1, n - 3) = -1;
      break;
    case 'G':
      if (n != 2) throw std::invalid_argument("only G2 exists");
      g(0, 0) = 2;
      g(1, 1) = 6;
      g(0, 1) = g(1, 0) = -3;
      break;
    case 'F':
      if (n != 4) throw std::invalid_argument("only F4 exists");
      chain(4);
      g(2, 2) = g(3, 3) = 1;
      g(2, 3) = g(3, 2) = Rational(-1, 2);
      break;
    default:
      throw std::invalid_argument(std::string("unknown root system type '") + type + "'");
  }
  return g;
}

bool positive_definite(const RMatrix& g) {
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    RMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = g(i, j);
    if (sgn(determinant(minor)) <= 0) return false;
  }
  return true;
}

}  // namespace

RootDatum RootDatum::build(std::string_view label, std::size_t ambient_dim) {
  std::vector<RMatrix> blocks;
  std::string text(label);
  if (text != "empty" && !text.empty()) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find('x', pos);
      std::string part = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (part.size() < 2 || !std::isupper(static_cast<unsigned char>(part[0])))
        throw std::invalid_argument("unknown root datum label '" + text + "'");
      for (std::size_t i = 1; i < part.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(part[i])))
          throw std::invalid_argument("unknown root datum label '" + text + "'");
      blocks.push_back(component_root_gram(part[0], std::stoul(part.substr(1))));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  }
  std::size_t rank = 0;
  for (const auto& b : blocks) rank += b.rows();
  if (rank > ambient_dim)
    throw std::invalid_argument("root datum '" + text + "' has rank " + std::to_string(rank) +
                                " exceeding ambient dimension " + std::to_string(ambient_dim));
  RMatrix root_gram(rank, rank);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) root_gram(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  // Coroot alpha^vee = 2 alpha / (alpha, alpha), so (alpha_i^vee, alpha_j^vee) is:
  RMatrix gram = RMatrix::identity(ambient_dim);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      gram(i, j) = 4 * root_gram(i, j) / (root_gram(i, i) * root_gram(j, j));
  return from_gram(text.empty() ? "empty" : text, gram, rank);
}

RootDatum RootDatum::from_gram(std::string label, const RMatrix& gram, std::size_t rank) {
  const std::size_t n = gram.rows();
  if (!gram.square()) throw std::invalid_argument("Gram matrix must be square");
  if (rank > n) throw std::invalid_argument("rank exceeds ambient dimension");
  std::vector<RVector> roots, coroots;
  for (std::size_t i = 0; i < rank; ++i) {
    RVector coroot(n, Rational(0));
    coroot[i] = 1;
    RVector root(n);
    if (sgn(gram(i, i)) <= 0) throw std::invalid_argument("Gram matrix is not positive definite");
    for (std::size_t j = 0; j < n; ++j) root[j] = 2 * gram(i, j) / gram(i, i);
    roots.push_back(std::move(root));
    coroots.push_back(std::move(coroot));
  }
  return from_data(std::move(label), gram, std::move(roots), std::move(coroots));
}

RootDatum RootDatum::from_data(std::string label, RMatrix gram, std::vector<RVector> simple_roots,
                               std::vector<RVector> simple_coroots) {
  RootDatum d;
  d.label_ = std::move(label);
  d.ambient_dim_ = gram.rows();
  if (!gram.square()) throw std::invalid_argument("Gram matrix must be square");
  if (gram != gram.transpose()) throw std::invalid_argument("Gram matrix must be symmetric");
  if (!positive_definite(gram)) throw std::invalid_argument("Gram matrix is not positive definite");
  if (simple_roots.size() != simple_coroots.size())
    throw std::invalid_argument("simple roots and coroots differ in number");
  for (std::size_t i = 0; i < simple_roots.size(); ++i) {
    if (simple_roots[i].size() != d.ambient_dim_ || simple_coroots[i].size() != d.ambient_dim_)
      throw std::invalid_argument("simple root dimension mismatch");
    if (pairing(simple_roots[i], simple_coroots[i]) != 2)
      throw std::invalid_argument("<alpha, alpha^vee> != 2 for simple root " + std::to_string(i + 1));
  }
  if (!simple_roots.empty() &&
      ghecke::rank(RMatrix::from_rows(simple_roots)) != simple_roots.size())
    throw std::invalid_argument("simple roots are linearly dependent");
  d.gram_ = std::move(gram);
  d.simple_roots_ = std::move(simple_roots);
  d.simple_coroots_ = std::move(simple_coroots);
  d.finish();
  return d;
}

void RootDatum::finish() {
  const std::size_t n = ambient_dim_;
  const std::size_t r = rank();
  cartan_ = RMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) cartan_(i, j) = pairing(simple_roots_[i], simple_coroots_[j]);
  if (r > 0) {
    auto inv = inverse(cartan_);
    if (!inv) throw std::invalid_argument("Cartan matrix is singular");
    cartan_inverse_ = *inv;
  }
  reflections_.clear();
  dual_reflections_.clear();
  for (std::size_t i = 0; i < r; ++i) {
    RMatrix s = RMatrix::identity(n), sd = RMatrix::identity(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        s(a, b) -= simple_coroots_[i][a] * simple_roots_[i][b];
        sd(a, b) -= simple_roots_[i][a] * simple_coroots_[i][b];
      }
    if (s.transpose() * gram_ * s != gram_)
      throw std::invalid_argument("simple reflection " + std::to_string(i + 1) + " is not orthogonal for the Gram form");
    reflections_.push_back(std::move(s));
    dual_reflections_.push_back(std::move(sd));
  }

  // Reflection closure of the simple roots.
  constexpr std::size_t kRootBound = 20000;
  std::map<std::string, std::size_t> seen;
  std::vector<Root> found;
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < r; ++i) {
    Root root{simple_roots_[i], simple_coroots_[i], RVector(r, Rational(0)), true};
    root.coefficients[i] = 1;
    seen.emplace(vector_key(root.covector), found.size());
    queue.push_back(found.size());
    found.push_back(std::move(root));
  }
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < r; ++j) {
      const Root& b = found[idx];
      Rational c = pairing(b.covector, simple_coroots_[j]);
      Root img = b;
      if (sgn(c) != 0)
        for (std::size_t a = 0; a < n; ++a) img.covector[a] -= c * simple_roots_[j][a];
      Rational cv = pairing(simple_roots_[j], b.coroot);
      if (sgn(cv) != 0)
        for (std::size_t a = 0; a < n; ++a) img.coroot[a] -= cv * simple_coroots_[j][a];
      img.coefficients[j] -= c;
      auto key = vector_key(img.covector);
      if (seen.count(key)) continue;
      if (found.size() >= kRootBound) throw std::invalid_argument("root system is infinite or too large");
      seen.emplace(key, found.size());
      queue.push_back(found.size());
      found.push_back(std::move(img));
    }
  }
  for (auto& root : found) {
    bool nonneg = std::all_of(root.coefficients.begin(), root.coefficients.end(),
                              [](const Rational& q) { return sgn(q) >= 0; });
    bool nonpos = std::all_of(root.coefficients.begin(), root.coefficients.end(),
                              [](const Rational& q) { return sgn(q) <= 0; });
    if (!nonneg && !nonpos) throw std::invalid_argument("root with mixed-sign coefficients; Pi is not a base");
    root.positive = nonneg;
  }
  auto height = [](const Root& x) {
    Rational h = 0;
    for (const auto& c : x.coefficients) h += c;
    return h;
  };
  std::vector<Root> pos, neg;
  for (auto& root : found) (root.positive ? pos : neg).push_back(root);
  auto order = [&](const Root& a, const Root& b) {
    Rational ha = height(a), hb = height(b);
    if (ha != hb) return abs(ha) < abs(hb);
    return a.coefficients > b.coefficients;
  };
  std::sort(pos.begin(), pos.end(), order);
  std::sort(neg.begin(), neg.end(), order);
  roots_ = std::move(pos);
  roots_.insert(roots_.end(), neg.begin(), neg.end());

  crystallographic_ = true;
  for (const auto& a : roots_) {
    for (const auto& b : roots_) {
      Rational p = pairing(a.covector, b.coroot);
      if (p.get_den() != 1) {
        crystallographic_ = false;
        break;
      }
    }
    if (!crystallographic_) break;
  }
}

std::optional<std::size_t> RootDatum::root_index(const RVector& covector) const {
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i].covector == covector) return i;
  return std::nullopt;
}

std::optional<std::size_t> RootDatum::simple_index(const RVector& covector) const {
  for (std::size_t i = 0; i < simple_roots_.size(); ++i)
    if (simple_roots_[i] == covector) return i;
  return std::nullopt;
}

CorootExpansion RootDatum::expand_in_coroots(const RVector& lambda) const {
  if (lambda.size() != ambient_dim_) throw std::invalid_argument("expand_in_coroots: dimension mismatch");
  const std::size_t r = rank();
  RVector b(r);
  for (std::size_t j = 0; j < r; ++j) b[j] = pairing(simple_roots_[j], lambda);
  CorootExpansion e;
  e.coefficients = r ? cartan_inverse_ * b : RVector{};
  e.orthogonal_part = lambda;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t a = 0; a < ambient_dim_; ++a) e.orthogonal_part[a] -= e.coefficients[i] * simple_coroots_[i][a];
  return e;
}

CorootExpansion RootDatum::expand_in_roots(const RVector& x) const {
  if (x.size() != ambient_dim_) throw std::invalid_argument("expand_in_roots: dimension mismatch");
  const std::size_t r = rank();
  RVector b(r);
  for (std::size_t j = 0; j < r; ++j) b[j] = pairing(x, simple_coroots_[j]);
  CorootExpansion e;
  e.coefficients = r ? cartan_inverse_.transpose() * b : RVector{};
  e.orthogonal_part = x;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t a = 0; a < ambient_dim_; ++a) e.orthogonal_part[a] -= e.coefficients[i] * simple_roots_[i][a];
  return e;
}

Rational RootDatum::inner(const RVector& a, const RVector& b) const { return pairing(a, gram_ * b); }

std::size_t RootDatum::coxeter_order(std::size_t i, std::size_t j) const {
  RMatrix st = reflections_.at(i) * reflections_.at(j);
  RMatrix p = st;
  for (std::size_t m = 1; m <= 64; ++m) {
    if (p.is_identity()) return m;
    p = p * st;
  }
  throw std::logic_error("s_i s_j has infinite or very large order");
}

RootDatum RootDatum::levi(const std::vector<std::size_t>& subset) const {
  const std::size_t m = subset.size();
  RMatrix g(m, m);
  std::vector<RVector> roots, coroots;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) g(a, b) = inner(simple_coroots_.at(subset[a]), simple_coroots_.at(subset[b]));
    RVector root(m), coroot(m, Rational(0));
    for (std::size_t b = 0; b < m; ++b) root[b] = cartan_(subset[a], subset[b]);
    coroot[a] = 1;
    roots.push_back(std::move(root));
    coroots.push_back(std::move(coroot));
  }
  std::string tag = label_ + "_P{";
  for (std::size_t a = 0; a < m; ++a) tag += (a ? "," : "") + std::to_string(subset[a] + 1);
  tag += "}";
  return from_data(tag, g, std::move(roots), std::move(coroots));
}

RootDatum RootDatum::with_simple_subset(const std::vector<std::size_t>& subset) const {
  std::vector<RVector> roots, coroots;
  for (auto i : subset) {
    roots.push_back(simple_roots_.at(i));
    coroots.push_back(simple_coroots_.at(i));
  }
  std::string tag = label_ + "^P{";
  for (std::size_t a = 0; a < subset.size(); ++a) tag += (a ? "," : "") + std::to_string(subset[a] + 1);
  tag += "}";
  return from_data(tag, gram_, std::move(roots), std::move(coroots));
}

std::string RootDatum::describe() const {
  std::ostringstream os;
  os << "label " << label_ << "\nambient_dim " << ambient_dim_ << "\nrank " << rank()
     << "\nroots " << roots_.size() << "\ncrystallographic " << (crystallographic_ ? "yes" : "no")
     << "\ngram " << to_string(gram_) << "\ncartan " << to_string(cartan_) << "\n";
  return os.str();
}

ParameterMap ParameterMap::restricted(const std::vector<std::size_t>& subset) const {
  ParameterMap out;
  for (auto i : subset) out.values.push_back(values.at(i));
  return out;
}

ParameterMap ParameterMap::scaled(const Rational& z) const {
  ParameterMap out = *this;
  for (auto& v : out.values) v *= z;
  return out;
}

ParameterMap ParameterMap::constant(std::size_t rank, const Rational& k) {
  return ParameterMap{std::vector<Rational>(rank, k)};
}

ParabolicDatum parabolic(const RootDatum& datum, std::vector<std::size_t> subset) {
  std::sort(subset.begin(), subset.end());
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
    throw std::invalid_argument("parabolic subset has repeated simple roots");
  for (auto i : subset)
    if (i >= datum.rank()) throw std::invalid_argument("parabolic subset is not contained in Pi");
  const std::size_t n = datum.ambient_dim();
  const std::size_t m = subset.size();
  ParabolicDatum p;
  p.subset = subset;
  std::vector<RVector> coroots, roots;
  for (auto i : subset) {
    coroots.push_back(datum.simple_coroots()[i]);
    roots.push_back(datum.simple_roots()[i]);
  }
  p.t_levi = RMatrix::from_columns(coroots, n);
  p.tdual_levi = RMatrix::from_columns(roots, n);
  if (m == 0) {
    p.t_upper = RMatrix::identity(n);
    p.tdual_upper = RMatrix::identity(n);
  } else {
    p.t_upper = kernel_matrix(RMatrix::from_rows(roots));
    p.tdual_upper = kernel_matrix(RMatrix::from_rows(coroots));
  }
  p.cartan_levi = RMatrix(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) p.cartan_levi(a, b) = datum.cartan()(subset[a], subset[b]);
  p.levi = datum.levi(subset);
  p.upper = datum.with_simple_subset(subset);
  return p;
}

std::pair<RVector, RVector> ParabolicDatum::split_covector(const RVector& x) const {
  const std::size_t m = subset.size();
  RVector levi_part(x.size(), Rational(0));
  if (m > 0) {
    RVector b = levi_coordinates(x);
    auto c = solve(cartan_levi.transpose(), b);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t i = 0; i < x.size(); ++i) levi_part[i] += (*c)[a] * tdual_levi(i, a);
  }
  RVector upper_part = x;
  for (std::size_t i = 0; i < x.size(); ++i) upper_part[i] -= levi_part[i];
  return {levi_part, upper_part};
}

std::pair<RVector, RVector> ParabolicDatum::split_vector(const RVector& lambda) const {
  const std::size_t m = subset.size();
  RVector levi_part(lambda.size(), Rational(0));
  if (m > 0) {
    RVector b(m);
    for (std::size_t a = 0; a < m; ++a) b[a] = pairing(tdual_levi.col(a), lambda);
    auto c = solve(cartan_levi, b);
    levi_part = embed_levi_vector(*c);
  }
  RVector upper_part = lambda;
  for (std::size_t i = 0; i < lambda.size(); ++i) upper_part[i] -= levi_part[i];
  return {levi_part, upper_part};
}

RVector ParabolicDatum::levi_coordinates(const RVector& x) const {
  RVector out(subset.size());
  for (std::size_t a = 0; a < subset.size(); ++a) out[a] = pairing(x, t_levi.col(a));
  return out;
}

RVector ParabolicDatum::embed_levi_vector(const RVector& mu) const {
  if (mu.size() != subset.size()) throw std::invalid_argument("embed_levi_vector: dimension mismatch");
  RVector out(t_levi.rows(), Rational(0));
  for (std::size_t a = 0; a < mu.size(); ++a)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += mu[a] * t_levi(i, a);
  return out;
}

bool cone_contains(const RootDatum& datum, const Cone& cone, const RVector& v) {
  if (v.size() != datum.ambient_dim()) throw std::invalid_argument("cone_contains: dimension mismatch");
  auto in_subset = [&](std::size_t i) {
    return std::find(cone.subset.begin(), cone.subset.end(), i) != cone.subset.end();
  };
  auto all_zero = [](const RVector& w) {
    return std::all_of(w.begin(), w.end(), [](const Rational& q) { return sgn(q) == 0; });
  };
  switch (cone.kind) {
    case ConeKind::DominantDual:
      for (const auto& c : datum.simple_coroots())
        if (sgn(pairing(v, c)) < 0) return false;
      return true;
    case ConeKind::Antidual:
    case ConeKind::AntidualInterior: {
      if (cone.kind == ConeKind::AntidualInterior && !datum.spans()) return false;
      auto e = datum.expand_in_coroots(v);
      if (!all_zero(e.orthogonal_part)) return false;
      for (const auto& c : e.coefficients) {
        if (sgn(c) > 0) return false;
        if (cone.kind == ConeKind::AntidualInterior && sgn(c) == 0) return false;
      }
      return true;
    }
    case ConeKind::LeviPositive: {
      auto p = parabolic(datum, cone.subset);
      if (!all_zero(p.split_vector(v).second)) return false;
      for (auto i : p.subset)
        if (sgn(pairing(datum.simple_roots()[i], v)) < 0) return false;
      return true;
    }
    case ConeKind::UpperPositive:
    case ConeKind::UpperStrict:
      for (std::size_t i = 0; i < datum.rank(); ++i) {
        int s = sgn(pairing(datum.simple_roots()[i], v));
        if (in_subset(i)) {
          if (s != 0) return false;
        } else if (s < 0 || (cone.kind == ConeKind::UpperStrict && s == 0)) {
          return false;
        }
      }
      return true;
  }
  return false;
}

}  // namespace ghecke
