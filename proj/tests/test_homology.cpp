#include "oracles.hpp"

#include "ghecke/crossed.hpp"
#include "ghecke/findim.hpp"

#include <doctest.h>

#include <random>

using namespace ghecke;

namespace {

oracle::Structure structure_of(const FinDimAlgebra& a) {
  const std::size_t d = a.dim();
  oracle::Structure st(d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, Rational(0))));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : a.product(i, j)) st[i][j][k] = c;
  return st;
}

oracle::Structure group_structure(const std::vector<oracle::Perm>& group) {
  const std::size_t d = group.size();
  std::map<oracle::Perm, std::size_t> index;
  for (std::size_t i = 0; i < d; ++i) index[group[i]] = i;
  oracle::Structure st(d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, Rational(0))));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) st[i][j][index.at(oracle::compose(group[i], group[j]))] = 1;
  return st;
}

FinDimAlgebra from_oracle(const oracle::Structure& st, SparseVector unit) {
  std::vector<std::vector<SparseVector>> products(st.size(), std::vector<SparseVector>(st.size()));
  for (std::size_t i = 0; i < st.size(); ++i)
    for (std::size_t j = 0; j < st.size(); ++j)
      for (std::size_t k = 0; k < st.size(); ++k)
        if (st[i][j][k] != 0) products[i][j][k] = st[i][j][k];
  return FinDimAlgebra::from_structure(std::move(products), std::move(unit));
}

GroupPtr weyl(const std::string& label, bool swap = false) {
  std::vector<DiagramAutomorphism> gamma;
  if (swap) gamma.push_back({{1, 0}, RMatrix::from_rows({{0, 1}, {1, 0}})});
  return ExtendedWeylGroup::enumerate(RootDatum::build(label, RootDatum::build(label, 8).rank()), gamma);
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("Hochschild homology against dense boundary matrices") {
    auto s3 = oracle::perm_closure({{1, 0, 2}, {1, 2, 0}}, 3);
    const std::vector<std::pair<FinDimAlgebra, std::size_t>> cases = {
        {FinDimAlgebra::field(), 3},
        {FinDimAlgebra::matrix_algebra(2), 2},
        {FinDimAlgebra::group_algebra(PermutationGroup::symmetric(3)), 1},
    };
    for (const auto& [a, n] : cases) CHECK(hochschild_homology(a, n) == oracle::dense_hochschild(structure_of(a), n));
    // Independent structure constants for the same algebras.
    CHECK(hochschild_homology(from_oracle(oracle::matrix_units(2), {{0, 1}, {3, 1}}), 1) == std::vector<std::size_t>{1, 0});
    CHECK(oracle::dense_hochschild(oracle::matrix_units(2), 2) == std::vector<std::size_t>{1, 0, 0});
    CHECK(hochschild_homology(from_oracle(group_structure(s3), {{0, 1}}), 1) == std::vector<std::size_t>{3, 0});
    CHECK(hochschild_homology(FinDimAlgebra::field(), 2) == std::vector<std::size_t>{1, 0, 0});
  }

  TEST_CASE("HH_0 of group algebras counts conjugacy classes") {
    std::vector<std::pair<PermutationGroup, std::vector<oracle::Perm>>> groups = {
        {PermutationGroup::symmetric(2), oracle::perm_closure({{1, 0}}, 2)},
        {PermutationGroup::symmetric(3), oracle::perm_closure({{1, 0, 2}, {1, 2, 0}}, 3)},
        {PermutationGroup::cyclic(4), oracle::perm_closure({{1, 2, 3, 0}}, 4)},
    };
    for (const auto& [g, oracle_group] : groups) {
      auto hh = hochschild_homology(FinDimAlgebra::group_algebra(g), 1);
      CHECK(hh[0] == oracle::perm_class_count(oracle_group));
      CHECK(hh[0] == g.conjugacy_classes().size());
      CHECK(hh[1] == 0);
    }
  }

  TEST_CASE("cyclic homology and mixed complex") {
    CHECK(cyclic_homology(FinDimAlgebra::field(), 4) == std::vector<std::size_t>{1, 0, 1, 0, 1});
    auto m2 = FinDimAlgebra::matrix_algebra(2);
    CHECK(cyclic_homology(m2, 2) == std::vector<std::size_t>{1, 0, 1});
    for (const auto& a : {FinDimAlgebra::field(), m2, FinDimAlgebra::group_algebra(PermutationGroup::symmetric(3))}) {
      auto check = verify_mixed_complex(a, 2);
      CHECK(check.bb_zero);
      CHECK(check.anticommute);
      CHECK(check.BB_zero);
      CHECK(cyclic_homology(a, 0)[0] == hochschild_homology(a, 0)[0]);
    }
  }

  TEST_CASE("chain bound and structure validation") {
    auto g = FinDimAlgebra::group_algebra(PermutationGroup::symmetric(3));
    CHECK_THROWS_AS(hochschild_homology(g, 3, 100), std::invalid_argument);
    // Q[t]/(t^2 - t - 1) with unit e0; then a product that breaks the unit law.
    std::vector<std::vector<SparseVector>> p(2, std::vector<SparseVector>(2));
    p[0][0] = {{0, 1}};
    p[0][1] = {{1, 1}};
    p[1][0] = {{1, 1}};
    p[1][1] = {{0, 1}, {1, 1}};
    CHECK_NOTHROW(FinDimAlgebra::from_structure(p, {{0, 1}}));
    p[1][0] = {{1, 2}};
    CHECK_THROWS_AS(FinDimAlgebra::from_structure(p, {{0, 1}}), std::invalid_argument);
  }

  TEST_CASE("sparse rank") {
    std::vector<SparseVector> v = {{{0, 1}, {2, Rational(1, 2)}}, {{1, 3}}, {{0, 2}, {1, 3}, {2, 1}}};
    CHECK(sparse_rank(v) == 2);
    v.push_back({{2, 5}});
    CHECK(sparse_rank(v) == 3);
    CHECK(sparse_rank({}) == 0);
  }
}

TEST_SUITE("crossed") {
  TEST_CASE("A1 crossed product census against invariant form counts") {
    auto g = weyl("A1");
    auto c = crossed_product_census(*g, 3, 10);
    // Class e: fixed space t with the group {1, -1}; class s: fixed space {0}.
    std::vector<oracle::Mat> full = {{{Rational(1)}}, {{Rational(-1)}}};
    for (std::size_t n = 0; n <= 3; ++n)
      for (unsigned d = 0; d <= 10; ++d) {
        Rational expected = oracle::invariant_forms(full, d, n) + (n == 0 && d == 0 ? 1 : 0);
        CHECK(Rational(c.hh_totals[n][d]) == expected);
      }
    CHECK(c.hh_totals[0][0] == 2);
    CHECK(c.hh_totals[0][2] == 1);
    CHECK(c.hh_totals[1][1] == 1);
    CHECK(c.vanishing_above_rank);
    CHECK(c.hp0 == 2);
    CHECK(c.hp1 == 0);
    for (const auto& cl : c.classes) CHECK(cl.euler_check);
  }

  TEST_CASE("rank two censuses") {
    for (const char* label : {"A2", "B2", "G2"}) {
      auto g = weyl(label);
      auto c = crossed_product_census(*g, 3, 8);
      CHECK(c.hp0 == oracle::weyl_class_count(label));
      CHECK(c.vanishing_above_rank);
      for (const auto& cl : c.classes) CHECK(cl.euler_check);
      // The identity class contributes the full invariant forms of t.
      std::vector<oracle::Mat> all;
      for (const auto& e : g->elements()) all.push_back({e.matrix.row(0), e.matrix.row(1)});
      const auto& id = c.classes.front();
      REQUIRE(id.fixed_dim == 2);
      for (std::size_t n = 0; n <= 2; ++n)
        for (unsigned d = 0; d <= 8; ++d) CHECK(Rational(id.forms[n].coefficients[d]) == oracle::invariant_forms(all, d, n));
    }
    auto sw = crossed_product_census(*weyl("A1xA1", true), 2, 4);
    CHECK(sw.hp0 == 5);
  }

  TEST_CASE("periodic census does not depend on parameters") {
    for (const char* label : {"A1", "A2", "B2"}) {
      auto g = weyl(label);
      std::size_t first = 0;
      for (int k : {0, 1, 2, 5}) {
        auto hp = hp_census_hecke(*HeckeAlgebra::create(g, ParameterMap::constant(g->datum().rank(), k)));
        if (k == 0) first = hp.hp0;
        CHECK(hp.hp0 == first);
        CHECK(hp.hp1 == 0);
        CHECK(hp.parameters.values.front() == k);
      }
      CHECK(first == oracle::weyl_class_count(label));
    }
  }

  TEST_CASE("crossed point modules") {
    auto s2 = PermutationGroup::symmetric(2);
    // S2 acting on {+1, -1}: free orbit, trivial stabilizer.
    auto free_action = FiniteAction::natural(s2);
    auto r = analyse_crossed_point(free_action, 0);
    CHECK(r.constituents == 1);
    CHECK(r.stabilizer_order == 1);
    CHECK(r.orbit == std::vector<std::size_t>{0, 1});
    CHECK(isomorphic(crossed_point_module(free_action, 0), crossed_point_module(free_action, 1)));
    // S2 fixing a single point.
    auto fixed = FiniteAction::from_generators(s2, 1, {{0}});
    auto f = analyse_crossed_point(fixed, 0);
    CHECK(f.constituents == 2);
    CHECK(f.stabilizer_order == 2);
    // Different orbits give no intertwiners.
    auto s3 = PermutationGroup::generate(4, {{1, 0, 2, 3}, {1, 2, 0, 3}});
    auto a = FiniteAction::natural(s3);
    CHECK(hom_space(crossed_point_module(a, 0), crossed_point_module(a, 3)).empty());
    CHECK(analyse_crossed_point(a, 3).constituents == 3);
    CHECK(analyse_crossed_point(a, 0).constituents == 2);
    CHECK_THROWS_AS(FiniteAction::from_generators(s2, 2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(crossed_point_module(a, 9), std::invalid_argument);
  }

  TEST_CASE("crossed point modules for random subgroups of S4") {
    std::mt19937 rng(5);
    for (int t = 0; t < 6; ++t) {
      std::vector<oracle::Perm> gens = {oracle::random_perm(4, rng), oracle::random_perm(4, rng)};
      auto g = PermutationGroup::generate(4, gens);
      auto a = FiniteAction::natural(g);
      const std::size_t x = rng() % 4;
      std::vector<oracle::Perm> stab;
      for (const auto& p : oracle::perm_closure(gens, 4))
        if (p[x] == x) stab.push_back(p);
      auto r = analyse_crossed_point(a, x);
      CHECK(r.stabilizer_order == stab.size());
      CHECK(r.constituents == oracle::perm_class_count(stab));
    }
  }
}
