#include "ghecke/findim.hpp"

#include <gmpxx.h>

#include <functional>
#include <stdexcept>
#include <string>

namespace ghecke {

namespace {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (a == 0) return;
  for (const auto& [k, v] : x) {
    auto& slot = y[k];
    slot += a * v;
    if (slot == 0) y.erase(k);
  }
}

SparseVector multiply_vectors(const FinDimAlgebra& a, const SparseVector& u, const SparseVector& v) {
  SparseVector out;
  for (const auto& [i, ui] : u)
    for (const auto& [j, vj] : v) axpy(out, ui * vj, a.product(i, j));
  return out;
}

SparseVector basis_vector(std::size_t i) { return {{i, Rational(1)}}; }

// Chains of degree n are tuples (a_0, .., a_n) of basis indices, encoded in base dim with a_0 least significant.
class ChainSpace {
 public:
  ChainSpace(const FinDimAlgebra& a, std::size_t n_max, std::size_t bound) : alg_(a), d_(a.dim()) {
    std::size_t size = 1;
    for (std::size_t n = 0; n <= n_max; ++n) {
      if (d_ != 0 && size > bound / d_)
        throw std::invalid_argument("chain space size exceeds bound " + std::to_string(bound));
      size *= d_;
      sizes_.push_back(size);
    }
  }

  std::size_t size(std::size_t n) const { return sizes_.at(n); }

  std::vector<std::size_t> decode(std::size_t code, std::size_t n) const {
    std::vector<std::size_t> t(n + 1);
    for (auto& x : t) {
      x = code % d_;
      code /= d_;
    }
    return t;
  }

  std::size_t encode(const std::vector<std::size_t>& t) const {
    std::size_t code = 0;
    for (std::size_t i = t.size(); i-- > 0;) code = code * d_ + t[i];
    return code;
  }

  // Adds c * (v_0 (x) v_1 (x) ...) where each factor is a sparse vector.
  void add_tensor(SparseVector& out, const Rational& c, const std::vector<SparseVector>& factors) const {
    std::vector<std::size_t> idx(factors.size());
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t pos, Rational coef) {
      if (pos == factors.size()) {
        auto& slot = out[encode(idx)];
        slot += coef;
        if (slot == 0) out.erase(encode(idx));
        return;
      }
      for (const auto& [k, v] : factors[pos]) {
        idx[pos] = k;
        rec(pos + 1, coef * v);
      }
    };
    rec(0, c);
  }

  SparseVector boundary(std::size_t code, std::size_t n) const {
    SparseVector out;
    if (n == 0) return out;
    auto t = decode(code, n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<SparseVector> f;
      for (std::size_t j = 0; j < i; ++j) f.push_back(basis_vector(t[j]));
      f.push_back(alg_.product(t[i], t[i + 1]));
      for (std::size_t j = i + 2; j <= n; ++j) f.push_back(basis_vector(t[j]));
      add_tensor(out, Rational(i % 2 == 0 ? 1 : -1), f);
    }
    std::vector<SparseVector> f{alg_.product(t[n], t[0])};
    for (std::size_t j = 1; j < n; ++j) f.push_back(basis_vector(t[j]));
    add_tensor(out, Rational(n % 2 == 0 ? 1 : -1), f);
    return out;
  }

  // Signed cyclic operator (a_0, .., a_n) -> (-1)^n (a_n, a_0, .., a_{n-1}).
  SparseVector cyclic(const SparseVector& v, std::size_t n) const {
    SparseVector out;
    for (const auto& [code, c] : v) {
      auto t = decode(code, n);
      std::vector<std::size_t> r(n + 1);
      r[0] = t[n];
      for (std::size_t j = 1; j <= n; ++j) r[j] = t[j - 1];
      axpy(out, Rational(n % 2 == 0 ? 1 : -1), {{encode(r), c}});
    }
    return out;
  }

  // B = (1 - t) s N : C_n -> C_{n+1}, with s(x) = 1 (x) x.
  SparseVector connes(std::size_t code, std::size_t n) const {
    SparseVector norm = basis_vector(code), cur = norm;
    for (std::size_t j = 0; j < n; ++j) {
      cur = cyclic(cur, n);
      axpy(norm, Rational(1), cur);
    }
    SparseVector s;
    for (const auto& [c, v] : norm) {
      auto t = decode(c, n);
      std::vector<SparseVector> f{alg_.unit()};
      for (auto x : t) f.push_back(basis_vector(x));
      add_tensor(s, v, f);
    }
    SparseVector out = s;
    axpy(out, Rational(-1), cyclic(s, n + 1));
    return out;
  }

  SparseVector apply_boundary(const SparseVector& v, std::size_t n) const {
    SparseVector out;
    for (const auto& [c, x] : v) axpy(out, x, boundary(c, n));
    return out;
  }

  SparseVector apply_connes(const SparseVector& v, std::size_t n) const {
    SparseVector out;
    for (const auto& [c, x] : v) axpy(out, x, connes(c, n));
    return out;
  }

 private:
  const FinDimAlgebra& alg_;
  std::size_t d_;
  std::vector<std::size_t> sizes_;
};

using IntVector = std::map<std::size_t, mpz_class>;

IntVector to_integer(const SparseVector& v) {
  mpz_class l = 1;
  for (const auto& [k, x] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  for (const auto& [k, x] : v) out[k] = x.get_num() * (l / x.get_den());
  return out;
}

void remove_content(IntVector& v) {
  mpz_class g = 0;
  for (const auto& [k, x] : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& [k, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

FinDimAlgebra FinDimAlgebra::from_structure(std::vector<std::vector<SparseVector>> products, SparseVector unit) {
  const std::size_t d = products.size();
  for (const auto& row : products)
    if (row.size() != d) throw std::invalid_argument("structure constants are not square");
  for (const auto& [k, v] : unit)
    if (k >= d) throw std::invalid_argument("unit index out of range");
  FinDimAlgebra a;
  a.products_ = std::move(products);
  a.unit_ = std::move(unit);
  for (std::size_t i = 0; i < d; ++i) {
    if (multiply_vectors(a, a.unit_, basis_vector(i)) != basis_vector(i) ||
        multiply_vectors(a, basis_vector(i), a.unit_) != basis_vector(i))
      throw std::invalid_argument("unit law fails on basis element " + std::to_string(i));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (multiply_vectors(a, a.product(i, j), basis_vector(k)) !=
            multiply_vectors(a, basis_vector(i), a.product(j, k)))
          throw std::invalid_argument("associativity fails on (" + std::to_string(i) + "," + std::to_string(j) +
                                      "," + std::to_string(k) + ")");
  }
  return a;
}

FinDimAlgebra FinDimAlgebra::field() { return from_structure({{basis_vector(0)}}, basis_vector(0)); }

FinDimAlgebra FinDimAlgebra::matrix_algebra(std::size_t n) {
  // e_{ij} has index i*n + j; e_{ij} e_{kl} = [j == k] e_{il}.
  std::vector<std::vector<SparseVector>> p(n * n, std::vector<SparseVector>(n * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) p[i * n + j][j * n + l] = basis_vector(i * n + l);
  SparseVector unit;
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
  return from_structure(std::move(p), std::move(unit));
}

FinDimAlgebra FinDimAlgebra::group_algebra(const PermutationGroup& g) {
  std::vector<std::vector<SparseVector>> p(g.size(), std::vector<SparseVector>(g.size()));
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) p[a][b] = basis_vector(g.multiply(a, b));
  return from_structure(std::move(p), basis_vector(0));
}

std::size_t sparse_rank(const std::vector<SparseVector>& vectors) {
  std::map<std::size_t, IntVector> pivots;
  for (const auto& raw : vectors) {
    IntVector v = to_integer(raw);
    while (!v.empty()) {
      const auto lead = v.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        remove_content(v);
        pivots.emplace(lead, std::move(v));
        break;
      }
      const IntVector& p = it->second;
      const mpz_class a = p.begin()->second, b = v.begin()->second;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const mpz_class fa = a / g, fb = b / g;
      for (auto& [k, x] : v) x *= fa;
      for (const auto& [k, x] : p) {
        auto& slot = v[k];
        slot -= fb * x;
        if (slot == 0) v.erase(k);
      }
      remove_content(v);
    }
  }
  return pivots.size();
}

std::vector<std::size_t> hochschild_homology(const FinDimAlgebra& a, std::size_t n_max, std::size_t bound) {
  ChainSpace chains(a, n_max + 1, bound);
  std::vector<std::size_t> ranks(n_max + 2, 0);  // ranks[n] = rank of b : C_n -> C_{n-1}
  for (std::size_t n = 1; n <= n_max + 1; ++n) {
    std::vector<SparseVector> images;
    images.reserve(chains.size(n));
    for (std::size_t c = 0; c < chains.size(n); ++c) images.push_back(chains.boundary(c, n));
    ranks[n] = sparse_rank(images);
  }
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(chains.size(n) - ranks[n] - ranks[n + 1]);
  return out;
}

std::vector<std::size_t> cyclic_homology(const FinDimAlgebra& a, std::size_t n_max, std::size_t bound) {
  if (!verify_mixed_complex(a, std::min<std::size_t>(n_max, 2), bound).ok())
    throw std::logic_error("mixed complex identities fail");
  ChainSpace chains(a, n_max + 1, bound);
  auto tot_dim = [&](std::size_t n) {
    std::size_t s = 0;
    for (std::size_t m = n % 2; m <= n; m += 2) s += chains.size(m);
    return s;
  };
  // Tot_n = C_n + C_{n-2} + ...; the summand C_m sits at offset given by the larger summands before it.
  auto offset = [&](std::size_t n, std::size_t m) {
    std::size_t s = 0;
    for (std::size_t j = n; j > m; j -= 2) s += chains.size(j);
    return s;
  };
  std::vector<std::size_t> ranks(n_max + 2, 0);
  for (std::size_t n = 1; n <= n_max + 1; ++n) {
    std::vector<SparseVector> images;
    for (std::size_t m = n % 2; m <= n; m += 2) {
      for (std::size_t c = 0; c < chains.size(m); ++c) {
        SparseVector img;
        if (m >= 1)
          for (const auto& [k, v] : chains.boundary(c, m)) img[offset(n - 1, m - 1) + k] = v;
        if (m + 1 <= n - 1)
          for (const auto& [k, v] : chains.connes(c, m)) img[offset(n - 1, m + 1) + k] += v;
        images.push_back(std::move(img));
      }
    }
    ranks[n] = sparse_rank(images);
  }
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(tot_dim(n) - ranks[n] - ranks[n + 1]);
  return out;
}

MixedComplexCheck verify_mixed_complex(const FinDimAlgebra& a, std::size_t n_max, std::size_t bound) {
  ChainSpace chains(a, n_max + 2, bound);
  MixedComplexCheck check;
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::size_t c = 0; c < chains.size(n); ++c) {
      if (n >= 2 && !chains.apply_boundary(chains.boundary(c, n), n - 1).empty()) check.bb_zero = false;
      SparseVector bB = chains.apply_boundary(chains.connes(c, n), n + 1);
      if (n >= 1) axpy(bB, Rational(1), chains.apply_connes(chains.boundary(c, n), n - 1));
      if (!bB.empty()) check.anticommute = false;
      if (!chains.apply_connes(chains.connes(c, n), n + 1).empty()) check.BB_zero = false;
    }
  }
  return check;
}

}  // namespace ghecke
