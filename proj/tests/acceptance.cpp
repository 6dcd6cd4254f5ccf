// One PASS/FAIL line per acceptance criterion; exit status 1 when any fails.
#include "oracles.hpp"

#include "ghecke/census.hpp"
#include "ghecke/crossed.hpp"
#include "ghecke/findim.hpp"
#include "ghecke/module.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace ghecke;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

AlgebraPtr algebra(const std::string& label, const Rational& k, bool swap = false) {
  auto d = RootDatum::build(label, RootDatum::build(label, 8).rank());
  std::vector<DiagramAutomorphism> gamma;
  if (swap) gamma.push_back({{1, 0}, RMatrix::from_rows({{0, 1}, {1, 0}})});
  return HeckeAlgebra::create(ExtendedWeylGroup::enumerate(d, gamma), ParameterMap::constant(d.rank(), k));
}

HeckeElement random_element(const HeckeAlgebra& h, std::mt19937& rng, unsigned max_deg) {
  HeckeElement out = h.zero();
  const std::size_t n = h.nvars();
  for (int t = 0; t < 2; ++t) {
    Poly p(n);
    for (int m = 0; m < 2; ++m) {
      Exponent e(n, 0);
      const unsigned budget = rng() % (max_deg + 1);
      for (unsigned b = 0; b < budget; ++b) e[rng() % n] += 1;
      p += Poly::monomial(e, ratio(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 2 + 1)));
    }
    out += h.element(rng() % h.group().size(), p);
  }
  return out;
}

FinModule one_dim(const AlgebraPtr& alg, const std::vector<std::size_t>& P, const std::string& tag) {
  for (auto& m : one_dim_modules(levi_algebra(*alg, P)))
    if (m.tag == tag) return m;
  throw std::logic_error("no one-dimensional module " + tag);
}

Verdict algebra_soundness() {
  Verdict v;
  std::mt19937 rng(2024);
  const std::vector<std::pair<std::string, bool>> types = {{"A1", false}, {"A2", false}, {"B2", false}, {"A1xA1", true}};
  for (const auto& [label, swap] : types)
    for (const Rational& k : {Rational(0), Rational(1), Rational(3, 2)}) {
      auto h = algebra(label, k, swap);
      for (int t = 0; t < 200; ++t) {
        auto a = random_element(*h, rng, 3), b = random_element(*h, rng, 3), c = random_element(*h, rng, 3);
        v.require((a * b) * c == a * (b * c), "associativity fails for " + label + " k=" + to_string(k));
      }
    }
  return v;
}

// X_j S_i - S_i X(s_i x_j) = k_i <x_j, alpha_i^vee> I with the coroots as the first basis vectors.
void check_cross_relation(const FinModule& m, Verdict& v) {
  const auto& d = m.algebra->datum();
  const auto& k = m.algebra->parameters();
  const std::size_t n = d.ambient_dim();
  for (std::size_t i = 0; i < d.rank(); ++i) {
    const auto& alpha = d.simple_roots()[i];
    const CMatrix& S = m.reflections[i];
    v.require(S * S == CMatrix::identity(m.dim), "reflection does not square to 1 in " + m.tag);
    for (std::size_t j = 0; j < n; ++j) {
      const Rational pair = j == i ? Rational(1) : Rational(0);
      CMatrix sx = m.coordinates[j];
      for (std::size_t l = 0; l < n; ++l)
        if (pair != 0 && alpha[l] != 0) sx = sx - m.coordinates[l] * GaussianRational(pair * alpha[l]);
      CMatrix lhs = m.coordinates[j] * S - S * sx;
      v.require(lhs == CMatrix::identity(m.dim) * GaussianRational(k[i] * pair),
                "cross relation fails in " + m.tag + " (" + d.label() + ")");
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      v.require(m.coordinates[a] * m.coordinates[b] == m.coordinates[b] * m.coordinates[a],
                "coordinates do not commute in " + m.tag);
}

Verdict cross_relation_and_filtration() {
  Verdict v;
  std::mt19937 rng(77);
  for (const char* label : {"A1", "A2", "B2"})
    for (int k : {0, 1, 2}) {
      auto h = algebra(label, k);
      const std::size_t r = h->datum().rank();
      for (const auto& m : one_dim_modules(h)) check_cross_relation(m, v);
      std::vector<std::vector<std::size_t>> subsets = {{}};
      for (std::size_t i = 0; i < r; ++i) subsets.push_back({i});
      for (const auto& P : subsets) {
        auto pd = parabolic(h->datum(), P);
        for (const auto& delta : one_dim_modules(levi_algebra(*h, P))) {
          if (!is_discrete_series(delta)) continue;
          for (int t = 0; t < 3; ++t) {
            RVector lam(h->nvars(), Rational(0));
            for (std::size_t c = 0; c < pd.t_upper.cols(); ++c) {
              Rational q = ratio(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3 + 1));
              for (std::size_t i = 0; i < lam.size(); ++i) lam[i] += q * pd.t_upper(i, c);
            }
            check_cross_relation(induce(h, InductionDatum{P, delta, complexify(lam)}, true), v);
          }
          // At lambda = 0 the induced module is completely reducible; check its constituents too.
          auto ind = induce(h, InductionDatum{P, delta, CVector(h->nvars())}, true);
          for (const auto& part : decompose(ind)) check_cross_relation(part.module, v);
        }
      }
    }
  // Filtration on 100 random pairs.
  int pairs = 0;
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    auto h = algebra(label, Rational(3, 2));
    for (int t = 0; t < 25; ++t, ++pairs) {
      auto a = random_element(*h, rng, 3), b = random_element(*h, rng, 3);
      const long bound = a.degree() + b.degree();
      v.require((a * b).degree() <= bound, "filtration bound fails");
      auto ks = k_sensitive_part(a, b);
      v.require(ks.is_zero() || ks.degree() < bound, "k-sensitive part is not of lower degree");
    }
  }
  v.require(pairs == 100, "pair count");
  return v;
}

Verdict center() {
  Verdict v;
  for (const char* label : {"A1", "A2", "B2"}) {
    auto h = algebra(label, 1);
    std::vector<HeckeElement> gens;
    for (std::size_t i = 0; i < h->datum().rank(); ++i) gens.push_back(h->reflection(i));
    for (std::size_t j = 0; j < h->nvars(); ++j) gens.push_back(h->coordinate(j));
    auto basis = h->center_basis(4);
    v.require(!basis.empty(), "empty center basis");
    for (const auto& z : basis)
      for (const auto& g : gens) v.require(z * g == g * z, std::string("non-central element for ") + label);
  }
  return v;
}

oracle::Structure structure_of(const FinDimAlgebra& a) {
  const std::size_t d = a.dim();
  oracle::Structure st(d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, Rational(0))));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : a.product(i, j)) st[i][j][k] = c;
  return st;
}

Verdict homology_oracles() {
  Verdict v;
  using V = std::vector<std::size_t>;
  auto q = FinDimAlgebra::field();
  auto m2 = FinDimAlgebra::matrix_algebra(2);
  auto s3 = FinDimAlgebra::group_algebra(PermutationGroup::symmetric(3));
  v.require(hochschild_homology(q, 2) == V{1, 0, 0}, "HH(Q)");
  v.require(hochschild_homology(m2, 2) == V{1, 0, 0}, "HH(M2)");
  v.require(hochschild_homology(s3, 1) == V{3, 0}, "HH(Q[S3])");
  v.require(oracle::dense_hochschild(oracle::matrix_units(2), 2) == V{1, 0, 0}, "dense oracle HH(M2)");
  v.require(oracle::dense_hochschild(structure_of(s3), 1) == V{3, 0}, "dense oracle HH(Q[S3])");
  for (const auto& a : {q, m2, s3}) {
    auto c = verify_mixed_complex(a, 2);
    v.require(c.anticommute && c.bb_zero && c.BB_zero, "mixed complex identities");
  }
  v.require(cyclic_homology(q, 2) == V{1, 0, 1}, "HC(Q)");
  return v;
}

Verdict a1_census() {
  Verdict v;
  auto g = algebra("A1", 1)->group_ptr();
  auto c = crossed_product_census(*g, 3, 10);
  const std::vector<oracle::Mat> full = {{{Rational(1)}}, {{Rational(-1)}}};
  for (std::size_t n = 0; n <= 3; ++n)
    for (unsigned d = 0; d <= 10; ++d) {
      // Identity class: forms on t invariant under {1,-1}; class of s: fixed point contributes 1 in (0,0).
      Rational expected = oracle::invariant_forms(full, d, n) + (n == 0 && d == 0 ? 1 : 0);
      v.require(Rational(c.hh_totals[n][d]) == expected, "census coefficient differs from brute force");
      Rational pattern = n == 0 ? Rational(d == 0 ? 2 : (d % 2 == 0 ? 1 : 0)) : n == 1 ? Rational(d % 2) : Rational(0);
      v.require(Rational(c.hh_totals[n][d]) == pattern, "census series pattern");
    }
  v.require(c.hp0 == 2 && c.hp1 == 0, "HP(A1)");
  for (const auto& cl : c.classes) v.require(cl.euler_check, "Euler characteristic check");
  return v;
}

Verdict hp_across_parameters() {
  Verdict v;
  std::vector<oracle::Mat> swap_gen = {{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}};
  const std::vector<std::tuple<std::string, bool, std::size_t>> cases = {
      {"A1", false, oracle::weyl_class_count("A1")},
      {"A2", false, oracle::weyl_class_count("A2")},
      {"B2", false, oracle::weyl_class_count("B2")},
      {"G2", false, oracle::weyl_class_count("G2")},
      {"A1xA1", true, oracle::weyl_class_count("A1xA1", swap_gen)},
  };
  const std::vector<std::size_t> expected = {2, 3, 5, 6, 5};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& [label, swap, brute] = cases[i];
    v.require(brute == expected[i], "brute-force class count for " + label);
    for (int k : {0, 1, 2, 5}) {
      auto hp = hp_census_hecke(*algebra(label, k, swap));
      v.require(hp.hp0 == brute && hp.hp1 == 0, "HP for " + label + " at k=" + std::to_string(k));
    }
    auto hh = crossed_product_census(algebra(label, 0, swap)->group(), 2, 2);
    v.require(hh.hp0 == brute, "crossed census HP for " + label);
  }
  return v;
}

Verdict crossed_points() {
  Verdict v;
  std::mt19937 rng(11);
  int instances = 0;
  // Two fixed instances for S2 and S3, the rest random subgroups of S4 acting on 4 points.
  {
    auto a = FiniteAction::from_generators(PermutationGroup::symmetric(2), 3, {{1, 0, 2}});
    for (std::size_t x : {0u, 2u}) {
      auto r = analyse_crossed_point(a, x);
      v.require(r.constituents == (x == 2 ? 2u : 1u), "S2 instance");
      ++instances;
    }
  }
  while (instances < 10) {
    std::vector<oracle::Perm> gens;
    const std::size_t ngens = 1 + rng() % 2;
    for (std::size_t i = 0; i < ngens; ++i) gens.push_back(oracle::random_perm(4, rng));
    if (instances == 2) gens = {{1, 2, 0, 3}, {1, 0, 2, 3}};  // S3 fixing the last point
    auto g = PermutationGroup::generate(4, gens);
    auto a = FiniteAction::natural(g);
    const std::size_t x = rng() % 4;
    std::vector<oracle::Perm> stab;
    for (const auto& p : oracle::perm_closure(gens, 4))
      if (p[x] == x) stab.push_back(p);
    auto r = analyse_crossed_point(a, x);
    v.require(r.stabilizer_order == stab.size(), "stabilizer order");
    v.require(r.constituents == oracle::perm_class_count(stab), "constituents differ from #classes of the stabilizer");
    ++instances;
  }
  return v;
}

Verdict basis_theorem() {
  Verdict v;
  const std::vector<std::pair<std::string, int>> cases = {{"A1", 0}, {"A1", 1}, {"A1", 2}, {"A2", 0}, {"A2", 1}};
  for (const auto& [label, k] : cases) {
    auto r = verify_basis_theorem(algebra(label, k), {});
    const std::size_t classes = oracle::weyl_class_count(label);
    v.require(r.pass, "basis theorem for " + label + " k=" + std::to_string(k));
    v.require(r.irr0_count == classes && r.class_count == classes && r.hp0 == classes, "counts for " + label);
    v.require(r.rank == classes, "trace matrix rank for " + label);
  }
  // A1, k=1: rows (St, principal series at 0), class order (e, s), cross-checked with hand-built 2x2 and 1x1 modules.
  auto h = algebra("A1", 1);
  auto r = verify_basis_theorem(h, {});
  v.require(r.trace_matrix == CMatrix::from_rows({{1, -1}, {2, 0}}), "A1 trace matrix");
  CMatrix s(2, 2), x(2, 2);
  s(0, 1) = 1;
  s(1, 0) = 1;
  x(0, 1) = 1;
  FinModule ps = make_module(h, {s}, {}, {x}, "hand principal series");
  FinModule st = make_module(h, {CMatrix::identity(1) * GaussianRational(-1)}, {}, {CMatrix::identity(1) * GaussianRational(Rational(-1, 2))}, "hand St");
  v.require(is_irreducible(ps) && is_irreducible(st), "hand modules irreducible");
  v.require(!intertwiner_space(r.census.entries[0].module, st).empty(), "first row is St");
  v.require(!intertwiner_space(r.census.entries[1].module, ps).empty(), "second row is the principal series");
  v.require(s.trace() == r.trace_matrix(1, 1) && st.reflections[0].trace() == r.trace_matrix(0, 1), "hand traces");
  return v;
}

Verdict intertwiners() {
  Verdict v;
  for (const char* label : {"A1", "A2"})
    for (int k : {0, 1}) {
      auto h = algebra(label, k);
      std::vector<InductionDatum> data = {{{}, one_dim(h, {}, "triv"), CVector(h->nvars())}};
      // The Levi Steinberg module is a discrete series only for k > 0.
      if (k > 0) data.push_back({{0}, one_dim(h, {0}, "St"), CVector(h->nvars())});
      for (const auto& xi : data) {
        auto c = check_intertwiners(h, xi);
        const std::string what = std::string(label) + " k=" + std::to_string(k) + " |P|=" + std::to_string(xi.subset.size());
        v.require(c.end_dim == c.multiplicity_sum, "dim End != sum m^2 for " + what);
        v.require(c.commutant_in_span, "commutant outside transported span for " + what);
        v.require(c.end_dim <= c.stabilizer.size(), "dim End exceeds |W'_xi| for " + what);
        v.require(c.algebra_dim == c.bicommutant_dim, "generated algebra differs from bicommutant for " + what);
      }
    }
  return v;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict determinism() {
  Verdict v;
  fs::path base = fs::temp_directory_path() / "ghecke_acceptance_determinism";
  fs::remove_all(base);
  fs::create_directories(base);
  const fs::path cfg = base / "a2.cfg";
  std::ofstream(cfg) << "datum { type=\"A2\", k=1 }\nrun { command=\"verify-basis\" }\n";
  std::string reports[2];
  for (int i = 0; i < 2; ++i) {
    const fs::path out = base / ("run" + std::to_string(i));
    const std::string cmd = std::string("\"") + GHECKE_CLI_PATH + "\" verify-basis --config \"" + cfg.string() +
                            "\" --out \"" + out.string() + "\" --no-cache > \"" + (base / "log.txt").string() + "\" 2>&1";
    v.require(std::system(cmd.c_str()) == 0, "CLI run failed");
    reports[i] = slurp(out / "verify-basis.json") + slurp(out / "verify-basis.csv");
  }
  v.require(!reports[0].empty() && reports[0] == reports[1], "reports differ");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 algebra soundness", algebra_soundness},
      {"2 cross relation in modules and filtration", cross_relation_and_filtration},
      {"3 center basis is central", center},
      {"4 homological engine oracles", homology_oracles},
      {"5 A1 crossed product census", a1_census},
      {"6 periodic census across parameters", hp_across_parameters},
      {"7 crossed point constituents", crossed_points},
      {"8 basis theorem at desk scale", basis_theorem},
      {"9 intertwiners at unitary data", intertwiners},
      {"10 deterministic reports", determinism},
  };
  bool all = true;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& ex) {
      v.ok = false;
      v.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (v.ok ? "PASS" : "FAIL") << "  [" << name << "]";
    if (!v.ok) std::cout << "  " << v.detail;
    std::cout << "  (" << static_cast<int>(secs * 1000) << " ms)\n";
    all = all && v.ok;
  }
  return all ? 0 : 1;
}
