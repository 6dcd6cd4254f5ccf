#include "ghecke/rep.hpp"

#include <functional>

namespace ghecke {

FieldExtensionRequired::FieldExtensionRequired(CPoly minimal_polynomial)
    : std::runtime_error("splitting requires a field extension of Q(i) by a root of " +
                         to_string(minimal_polynomial, "t")),
      poly_(std::move(minimal_polynomial)) {}

namespace {

using LinearMap = std::function<CMatrix(const CMatrix&)>;

/// Elements of span(basis) killed by op.
std::vector<CMatrix> constrain(const std::vector<CMatrix>& basis, const LinearMap& op) {
  if (basis.empty()) return {};
  std::vector<CMatrix> images;
  images.reserve(basis.size());
  for (const auto& b : basis) images.push_back(op(b));
  const std::size_t len = images.front().rows() * images.front().cols();
  CMatrix system(len, basis.size());
  for (std::size_t l = 0; l < basis.size(); ++l)
    for (std::size_t i = 0; i < len; ++i) system(i, l) = images[l].data()[i];
  std::vector<CMatrix> out;
  for (const auto& c : nullspace(system)) {
    CMatrix x(basis.front().rows(), basis.front().cols());
    for (std::size_t l = 0; l < basis.size(); ++l)
      if (!is_zero(c[l])) x += basis[l] * c[l];
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<CMatrix> matrix_units(std::size_t rows, std::size_t cols) {
  std::vector<CMatrix> out;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      CMatrix e(rows, cols);
      e(i, j) = 1;
      out.push_back(std::move(e));
    }
  return out;
}

/// Incremental echelon basis of flattened matrices.
class SpanBuilder {
 public:
  bool add(const CMatrix& m) {
    std::vector<GaussianRational> v = m.data();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const GaussianRational f = v[pivots_[r]];
      if (is_zero(f)) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!is_zero(rows_[r][j])) v[j] -= f * rows_[r][j];
    }
    std::size_t p = 0;
    while (p < v.size() && is_zero(v[p])) ++p;
    if (p == v.size()) return false;
    GaussianRational inv = GaussianRational(1) / v[p];
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<std::vector<GaussianRational>> rows_;
  std::vector<std::size_t> pivots_;
};

CPoly char_poly(const CMatrix& a) { return CPoly(characteristic_polynomial(a)); }

struct FittingSplit {
  CMatrix kernel;
  CMatrix image;
};

std::optional<FittingSplit> fitting_split(const CMatrix& a) {
  const std::size_t m = a.rows();
  for (const auto& mu : roots_in_gaussian_field(char_poly(a))) {
    CMatrix shifted = a - CMatrix::identity(m) * mu;
    CMatrix nm = power(shifted, m);
    CMatrix k = kernel_matrix(nm);
    if (k.cols() > 0 && k.cols() < m) return FittingSplit{k, column_basis(nm)};
  }
  return std::nullopt;
}

}  // namespace

std::vector<CMatrix> hom_space(const MatrixRep& a, const MatrixRep& b) {
  if (a.generators.size() != b.generators.size()) throw std::invalid_argument("hom_space: generator count mismatch");
  std::vector<CMatrix> basis = matrix_units(b.dim, a.dim);
  for (std::size_t g = 0; g < a.generators.size() && !basis.empty(); ++g) {
    const CMatrix& ga = a.generators[g];
    const CMatrix& gb = b.generators[g];
    basis = constrain(basis, [&](const CMatrix& t) { return t * ga - gb * t; });
  }
  return basis;
}

std::vector<CMatrix> commutant(const MatrixRep& v) { return hom_space(v, v); }

std::vector<CMatrix> generated_algebra(const MatrixRep& v) {
  SpanBuilder span;
  std::vector<CMatrix> basis{CMatrix::identity(v.dim)};
  if (v.dim == 0) return {};
  span.add(basis[0]);
  for (std::size_t head = 0; head < basis.size(); ++head) {
    for (const auto& g : v.generators) {
      CMatrix next = g * basis[head];
      if (span.add(next)) basis.push_back(std::move(next));
    }
  }
  return basis;
}

std::size_t generated_algebra_dimension(const MatrixRep& v) { return generated_algebra(v).size(); }

bool is_absolutely_irreducible(const MatrixRep& v) {
  return v.dim > 0 && generated_algebra_dimension(v) == v.dim * v.dim;
}

std::vector<CMatrix> algebra_center(const std::vector<CMatrix>& basis) {
  std::vector<CMatrix> z = basis;
  for (const auto& b : basis) {
    if (z.empty()) break;
    z = constrain(z, [&](const CMatrix& x) { return x * b - b * x; });
  }
  return z;
}

std::vector<CMatrix> trace_radical(const std::vector<CMatrix>& basis) {
  const std::size_t s = basis.size();
  CMatrix form(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) form(i, j) = (basis[i] * basis[j]).trace();
  std::vector<CMatrix> out;
  for (const auto& c : nullspace(form)) {
    CMatrix x(basis.front().rows(), basis.front().cols());
    for (std::size_t l = 0; l < s; ++l)
      if (!is_zero(c[l])) x += basis[l] * c[l];
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t constituent_count(const MatrixRep& v) { return algebra_center(commutant(v)).size(); }

MatrixRep restrict_rep(const MatrixRep& v, const CMatrix& basis) {
  MatrixRep out;
  out.dim = basis.cols();
  for (const auto& g : v.generators) out.generators.push_back(restrict_operator(g, basis));
  return out;
}

std::vector<IsotypicPart> decompose(const MatrixRep& v) {
  std::vector<CMatrix> leaves;
  std::function<void(const CMatrix&)> rec = [&](const CMatrix& basis) {
    MatrixRep sub = restrict_rep(v, basis);
    std::vector<CMatrix> end = commutant(sub);
    if (end.size() == 1) {
      if (!is_absolutely_irreducible(sub))
        throw NotCompletelyReducible("module has a reducible summand with scalar endomorphisms");
      leaves.push_back(basis);
      return;
    }
    std::vector<CMatrix> candidates = algebra_center(end);
    candidates.insert(candidates.end(), end.begin(), end.end());
    constexpr std::size_t kPairLimit = 200;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < end.size() && pairs < kPairLimit; ++i)
      for (std::size_t j = i + 1; j < end.size() && pairs < kPairLimit; ++j, ++pairs) {
        candidates.push_back(end[i] + end[j]);
        candidates.push_back(end[i] * end[j]);
      }
    for (const auto& a : candidates) {
      if (a.is_scalar()) continue;
      if (auto split = fitting_split(a)) {
        rec(basis * split->kernel);
        rec(basis * split->image);
        return;
      }
    }
    if (!trace_radical(end).empty())
      throw NotCompletelyReducible("commutant has a nonzero radical; module is not completely reducible");
    for (const auto& a : candidates) {
      if (a.is_scalar()) continue;
      CPoly sq = squarefree_part(char_poly(a));
      if (roots_in_gaussian_field(sq).empty()) throw FieldExtensionRequired(sq);
    }
    for (const auto& a : candidates)
      if (!a.is_scalar()) throw FieldExtensionRequired(squarefree_part(char_poly(a)));
    throw std::logic_error("decompose: no splitting element found");
  };
  if (v.dim > 0) rec(CMatrix::identity(v.dim));

  std::vector<IsotypicPart> parts;
  std::vector<MatrixRep> reps;
  for (const auto& leaf : leaves) {
    MatrixRep r = restrict_rep(v, leaf);
    bool placed = false;
    for (std::size_t p = 0; p < parts.size() && !placed; ++p) {
      if (reps[p].dim != r.dim) continue;
      if (!hom_space(r, reps[p]).empty()) {
        parts[p].copies.push_back(leaf);
        placed = true;
      }
    }
    if (!placed) {
      parts.push_back(IsotypicPart{{leaf}});
      reps.push_back(std::move(r));
    }
  }
  return parts;
}

}  // namespace ghecke
