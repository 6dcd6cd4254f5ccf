#include "oracles.hpp"

#include "ghecke/findim.hpp"
#include "ghecke/poly.hpp"
#include "ghecke/rootdata.hpp"
#include "ghecke/upoly.hpp"
#include "ghecke/weyl.hpp"

#include <doctest.h>

#include <random>

using namespace ghecke;

namespace {

Rational random_rational(std::mt19937& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  return ratio(num(rng), den(rng));
}

RVector random_vector(std::mt19937& rng, std::size_t n) {
  RVector v(n);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

Poly random_poly(std::mt19937& rng, std::size_t n, unsigned max_deg, int terms) {
  Poly p(n);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  for (int t = 0; t < terms; ++t) {
    Exponent e(n, 0);
    unsigned budget = deg(rng);
    for (unsigned b = 0; b < budget; ++b) e[rng() % n] += 1;
    p += Poly::monomial(e, random_rational(rng));
  }
  return p;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("gaussian rationals form a field") {
    GaussianRational a(Rational(1, 2), Rational(3)), b(Rational(-2), Rational(1, 3));
    CHECK((a * b) / b == a);
    CHECK(a - a == GaussianRational(0));
    CHECK(to_string(GaussianRational(Rational(1), Rational(-1))) == "1-i");
  }

  TEST_CASE("rank, nullspace and inverse agree") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
      RMatrix m(4, 5);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 5; ++j) m(i, j) = (rng() % 3 == 0) ? Rational(0) : random_rational(rng);
      std::vector<std::vector<Rational>> rows;
      for (std::size_t i = 0; i < 4; ++i) rows.push_back(m.row(i));
      const std::size_t r = rank(m);
      CHECK(r == oracle::dense_rank(rows));
      CHECK(r == rank_fraction_free(m));
      auto ker = kernel_matrix(m);
      CHECK(ker.cols() == 5 - r);
      CHECK((m * ker).is_zero());
      std::vector<SparseVector> sparse;
      for (std::size_t i = 0; i < 4; ++i) {
        SparseVector v;
        for (std::size_t j = 0; j < 5; ++j)
          if (m(i, j) != 0) v[j] = m(i, j);
        sparse.push_back(v);
      }
      CHECK(sparse_rank(sparse) == r);
    }
    RMatrix a = RMatrix::from_rows({{2, 1}, {1, 1}});
    CHECK(*inverse(a) * a == RMatrix::identity(2));
    CHECK(determinant(a) == 1);
  }

  TEST_CASE("characteristic polynomial and gaussian roots") {
    CMatrix rot(2, 2);
    rot(0, 1) = -1;
    rot(1, 0) = 1;
    CPoly cp(characteristic_polynomial(rot));
    auto roots = roots_in_gaussian_field(cp);
    CHECK(roots.size() == 2);
  }
}

TEST_SUITE("rootdata") {
  TEST_CASE("standard data") {
    auto a1 = RootDatum::build("A1", 1);
    CHECK(a1.rank() == 1);
    CHECK(pairing(a1.simple_roots()[0], a1.simple_coroots()[0]) == 2);
    auto a2 = RootDatum::build("A2", 2);
    CHECK(pairing(a2.simple_roots()[0], a2.simple_coroots()[1]) == -1);
    CHECK(pairing(RVector(2, Rational(0)), a2.simple_coroots()[0]) == 0);
    CHECK(RootDatum::build("B2", 2).roots().size() == 8);
    CHECK(RootDatum::build("G2", 2).roots().size() == 12);
    CHECK(RootDatum::build("F4", 4).roots().size() == 48);
    CHECK(RootDatum::build("D4", 4).roots().size() == 24);
    CHECK(RootDatum::build("empty", 2).rank() == 0);
    CHECK_THROWS_AS(RootDatum::build("A3", 2), std::invalid_argument);
    CHECK_THROWS(RootDatum::build("Q7", 7));
  }

  TEST_CASE("cartan matrices match the oracle table") {
    for (const auto& [label, cartan] : oracle::cartan_table()) {
      auto d = RootDatum::build(label, cartan.size());
      for (std::size_t i = 0; i < cartan.size(); ++i)
        for (std::size_t j = 0; j < cartan.size(); ++j) CHECK(d.cartan()(i, j) == cartan[i][j]);
    }
  }

  TEST_CASE("roots are closed under reflections and pairings are W-invariant") {
    for (const char* label : {"A2", "B2", "G2", "C3"}) {
      auto d = RootDatum::build(label, RootDatum::build(label, 8).rank());
      std::set<RVector> roots;
      for (const auto& r : d.roots()) roots.insert(r.covector);
      for (std::size_t i = 0; i < d.rank(); ++i)
        for (const auto& r : d.roots()) CHECK(roots.count(d.dual_reflection(i) * r.covector) == 1);
      if (d.crystallographic())
        for (const auto& a : d.roots())
          for (const auto& b : d.roots()) CHECK(pairing(a.covector, b.coroot).get_den() == 1);
      std::mt19937 rng(3);
      for (int t = 0; t < 10; ++t) {
        RVector x = random_vector(rng, d.ambient_dim()), l = random_vector(rng, d.ambient_dim());
        for (std::size_t i = 0; i < d.rank(); ++i)
          CHECK(pairing(d.dual_reflection(i) * x, d.reflection(i) * l) == pairing(x, l));
      }
    }
  }

  TEST_CASE("cones") {
    auto d = RootDatum::build("A1", 1);
    const RVector a{Rational(1)}, ma{Rational(-1)}, z{Rational(0)};
    CHECK(cone_contains(d, Cone{ConeKind::Antidual, {}}, ma));
    CHECK_FALSE(cone_contains(d, Cone{ConeKind::Antidual, {}}, a));
    CHECK(cone_contains(d, Cone{ConeKind::Antidual, {}}, z));
    CHECK_FALSE(cone_contains(d, Cone{ConeKind::AntidualInterior, {}}, z));
  }

  TEST_CASE("antidual cone agrees with the dual inequalities on 200 random points") {
    std::mt19937 rng(11);
    for (auto [label, ambient] : {std::pair{"A2", 2u}, std::pair{"B2", 3u}, std::pair{"A1", 2u}}) {
      auto d = RootDatum::build(label, ambient);
      // Generators of the dominant cone: the dual basis covectors of the coroots, and both signs of
      // the covectors vanishing on the coroots.
      std::vector<RVector> gens;
      for (std::size_t i = 0; i < ambient; ++i) {
        RVector e(ambient, Rational(0));
        e[i] = 1;
        gens.push_back(e);
        if (i >= d.rank()) {
          e[i] = -1;
          gens.push_back(e);
        }
      }
      for (int t = 0; t < 200; ++t) {
        RVector l = random_vector(rng, ambient);
        if (t % 3 == 0)
          for (auto& c : l) c = -abs(c);
        if (t % 5 == 0)
          for (std::size_t i = d.rank(); i < ambient; ++i) l[i] = 0;
        bool direct = true;
        for (const auto& x : gens) direct = direct && sgn(pairing(x, l)) <= 0;
        CHECK(cone_contains(d, Cone{ConeKind::Antidual, {}}, l) == direct);
      }
    }
  }

  TEST_CASE("parabolic subspaces") {
    auto d = RootDatum::build("A2", 2);
    CHECK(parabolic(d, {}).t_levi.cols() == 0);
    CHECK(parabolic(d, {}).t_upper.cols() == 2);
    CHECK(parabolic(d, {0, 1}).t_upper.cols() == 0);
    auto p = parabolic(d, {0});
    CHECK(p.t_levi.cols() == 1);
    CHECK(p.t_upper.cols() == 1);
    CHECK(pairing(d.simple_roots()[0], p.t_upper.col(0)) == 0);
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
      RVector x = random_vector(rng, 2);
      auto [xl, xu] = p.split_covector(x);
      auto [xll, xlu] = p.split_covector(xl);
      CHECK(xll == xl);
      CHECK(std::all_of(xlu.begin(), xlu.end(), [](const Rational& q) { return q == 0; }));
      RVector sum(2);
      for (std::size_t i = 0; i < 2; ++i) sum[i] = xl[i] + xu[i];
      CHECK(sum == x);
      auto [sl, su] = p.split_covector(d.dual_reflection(0) * x);
      CHECK(sl == d.dual_reflection(0) * xl);
    }
  }
}

TEST_SUITE("weyl") {
  TEST_CASE("orders and classes match the brute-force oracle") {
    const std::map<std::string, std::pair<std::size_t, std::size_t>> expect = {
        {"A1", {2, 2}}, {"A2", {6, 3}}, {"B2", {8, 5}}, {"G2", {12, 6}}, {"A1xA1", {4, 4}}};
    for (const auto& [label, oc] : expect) {
      auto d = RootDatum::build(label, oracle::cartan_table().at(label).size());
      auto g = ExtendedWeylGroup::enumerate(d, {});
      CHECK(g->size() == oc.first);
      CHECK(g->classes().size() == oc.second);
      CHECK(g->classes().size() == oracle::weyl_class_count(label));
    }
  }

  TEST_CASE("extended group of A1xA1 with the swap") {
    auto d = RootDatum::build("A1xA1", 2);
    DiagramAutomorphism swap{{1, 0}, RMatrix::from_rows({{0, 1}, {1, 0}})};
    auto g = ExtendedWeylGroup::enumerate(d, {swap});
    CHECK(g->size() == 8);
    CHECK(g->classes().size() == 5);
    CHECK(oracle::weyl_class_count("A1xA1", {{{0, 1}, {1, 0}}}) == 5);
    DiagramAutomorphism bad{{1, 0}, RMatrix::from_rows({{0, 2}, {1, 0}})};
    CHECK_THROWS(ExtendedWeylGroup::enumerate(d, {bad}));
  }

  TEST_CASE("class census invariants") {
    for (const char* label : {"A2", "B2", "G2", "A3"}) {
      auto d = RootDatum::build(label, RootDatum::build(label, 8).rank());
      auto g = ExtendedWeylGroup::enumerate(d, {});
      std::size_t total = 0;
      for (const auto& c : g->classes()) {
        total += c.members.size();
        CHECK(c.members.size() * c.centralizer.size() == g->size());
        for (auto m : c.members) CHECK(kernel_matrix((*g)[m].matrix - RMatrix::identity(d.ambient_dim())).cols() == c.fixed_dim());
      }
      CHECK(total == g->size());
    }
    auto a1 = ExtendedWeylGroup::enumerate(RootDatum::build("A1", 1), {});
    CHECK(a1->classes()[0].fixed_dim() == 1);
    CHECK(a1->classes()[1].fixed_dim() == 0);
  }

  TEST_CASE("length counts positive roots made negative") {
    auto d = RootDatum::build("B2", 2);
    auto g = ExtendedWeylGroup::enumerate(d, {});
    for (std::size_t w = 0; w < g->size(); ++w) {
      std::size_t neg = 0;
      for (const auto& r : d.roots())
        if (r.positive) {
          RVector img = (*g)[w].matrix * r.coroot;
          auto e = d.expand_in_coroots(img);
          bool negative = std::any_of(e.coefficients.begin(), e.coefficients.end(), [](const Rational& q) { return q < 0; });
          neg += negative;
        }
      CHECK((*g)[w].length == neg);
      CHECK((*g)[w].word.size() == neg);
    }
  }

  TEST_CASE("cosets and transport") {
    auto a1 = ExtendedWeylGroup::enumerate(RootDatum::build("A1", 1), {});
    CHECK(a1->cosets({0}).reps == std::vector<std::size_t>{0});
    auto d = RootDatum::build("A2", 2);
    auto g = ExtendedWeylGroup::enumerate(d, {});
    CHECK(g->cosets({}).reps.size() == 6);
    auto cd = g->cosets({0});
    CHECK(cd.reps.size() == 3);
    for (auto u : cd.reps)
      for (auto v : cd.sub) CHECK((*g)[u].length <= (*g)[g->multiply(u, v)].length);
    // s_beta maps alpha to alpha + beta, which is not simple.
    CHECK_FALSE(g->transport(g->reflection(1), {0}).has_value());
    // w0 sends alpha to a negative root; s1 s2 sends alpha to beta.
    std::size_t w0 = 0;
    for (std::size_t w = 0; w < g->size(); ++w)
      if ((*g)[w].length == 3) w0 = w;
    CHECK_FALSE(g->transport(w0, {0}).has_value());
    auto t = g->transport(g->multiply(g->reflection(0), g->reflection(1)), {0});
    REQUIRE(t.has_value());
    CHECK(t->target == std::vector<std::size_t>{1});
    CHECK(g->transport(0, {0})->target == std::vector<std::size_t>{0});
  }
}

TEST_SUITE("poly") {
  TEST_CASE("actions and divided differences on examples") {
    auto d = RootDatum::build("A2", 2);
    auto g = ExtendedWeylGroup::enumerate(d, {});
    Poly alpha = Poly::linear(d.simple_roots()[0]), beta = Poly::linear(d.simple_roots()[1]);
    const RMatrix& s1 = (*g)[g->reflection(0)].dual;
    CHECK(act(s1, alpha) == -alpha);
    CHECK(act(s1, beta) == alpha + beta);
    CHECK(act(s1, Poly::constant(2, 1)) == Poly::constant(2, 1));
    CHECK(divided_difference(d, 0, alpha) == Poly::constant(2, 2));
    CHECK(divided_difference(d, 0, Poly::constant(2, 5)).is_zero());
    CHECK(divided_difference(d, 0, alpha * alpha).is_zero());
    CHECK(to_string(parse_poly("3/2*x1^2*x2 - x2 + x1^2*x2*0", 2)) == "3/2*x1^2*x2 - x2");
  }

  TEST_CASE("the action is a homomorphism and the twisted Leibniz rule holds") {
    std::mt19937 rng(17);
    for (const char* label : {"A2", "B2"}) {
      auto d = RootDatum::build(label, 2);
      auto g = ExtendedWeylGroup::enumerate(d, {});
      for (int t = 0; t < 100; ++t) {
        std::size_t a = rng() % g->size(), b = rng() % g->size();
        Poly p = random_poly(rng, 2, 3, 3);
        CHECK(act((*g)[g->multiply(a, b)].dual, p) == act((*g)[a].dual, act((*g)[b].dual, p)));
      }
      for (int t = 0; t < 30; ++t) {
        Poly p = random_poly(rng, 2, 3, 3), q = random_poly(rng, 2, 2, 3);
        for (std::size_t i = 0; i < 2; ++i) {
          const RMatrix& s = (*g)[g->reflection(i)].dual;
          CHECK(divided_difference(d, i, p * q) ==
                divided_difference(d, i, p) * q + act(s, p) * divided_difference(d, i, q));
        }
      }
    }
  }

  TEST_CASE("reynolds operator") {
    auto d = RootDatum::build("A1", 1);
    auto g = ExtendedWeylGroup::enumerate(d, {});
    std::vector<RMatrix> duals;
    for (const auto& e : g->elements()) duals.push_back(e.dual);
    Poly alpha = Poly::linear(d.simple_roots()[0]);
    CHECK(reynolds(alpha, duals).is_zero());
    CHECK(reynolds(alpha * alpha, duals) == alpha * alpha);
    auto b2 = ExtendedWeylGroup::enumerate(RootDatum::build("B2", 2), {});
    std::vector<RMatrix> dd;
    for (const auto& e : b2->elements()) dd.push_back(e.dual);
    std::mt19937 rng(2);
    for (int t = 0; t < 10; ++t) {
      Poly p = random_poly(rng, 2, 4, 4);
      Poly r = reynolds(p, dd);
      CHECK(reynolds(r, dd) == r);
      for (const auto& m : dd) CHECK(act(m, r) == r);
    }
  }

  TEST_CASE("invariant basis dimensions match the trace oracle") {
    for (const char* label : {"A1", "A2", "B2", "G2"}) {
      auto d = RootDatum::build(label, oracle::cartan_table().at(label).size());
      auto g = ExtendedWeylGroup::enumerate(d, {});
      std::vector<RMatrix> duals;
      std::vector<oracle::Mat> group;
      for (const auto& e : g->elements()) {
        duals.push_back(e.dual);
        oracle::Mat m(e.matrix.rows());
        for (std::size_t i = 0; i < e.matrix.rows(); ++i) m[i] = e.matrix.row(i);
        group.push_back(m);
      }
      for (unsigned deg = 0; deg <= 6; ++deg)
        CHECK(Rational(static_cast<long>(invariant_basis(duals, d.ambient_dim(), deg).size())) ==
              oracle::invariant_forms(group, deg, 0));
    }
  }
}
