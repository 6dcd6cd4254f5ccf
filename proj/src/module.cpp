#include "ghecke/module.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace ghecke {

UnsplitSpectrum::UnsplitSpectrum(const std::string& where, const CPoly& p)
    : std::runtime_error("unsplit spectrum: characteristic polynomial " + to_string(p, "t") + " of " + where +
                         " has roots outside Q(i)"),
      poly_(p) {}

CMatrix FinModule::group_matrix(std::size_t w) const {
  const GroupElement& e = algebra->group()[w];
  CMatrix m = gammas.at(e.gamma);
  for (auto l : e.word) m = m * reflections.at(l);
  return m;
}

CMatrix FinModule::act(const HeckeElement& h) const {
  CMatrix out(dim, dim);
  for (const auto& [w, p] : h.terms()) out += group_matrix(w) * evaluate_at_matrices(p, coordinates, dim);
  return out;
}

MatrixRep FinModule::as_rep() const {
  MatrixRep r;
  r.dim = dim;
  r.generators = reflections;
  const auto& gam = algebra->group().gamma_elements();
  for (std::size_t c = 1; c < gam.size(); ++c)
    if (gam[c].generator_word.size() == 1) r.generators.push_back(gammas[c]);
  r.generators.insert(r.generators.end(), coordinates.begin(), coordinates.end());
  return r;
}

namespace {

std::string relation_failure(const std::string& what) { return "module relation fails: " + what; }

CMatrix linear_combination(const std::vector<CMatrix>& xs, const std::vector<Rational>& c, std::size_t dim) {
  CMatrix out(dim, dim);
  for (std::size_t k = 0; k < xs.size(); ++k)
    if (sgn(c[k]) != 0) out += xs[k] * GaussianRational(c[k]);
  return out;
}

std::size_t gamma_product(const ExtendedWeylGroup& G, std::size_t a, std::size_t b) {
  return G[G.multiply(G.gamma_element(a), G.gamma_element(b))].gamma;
}

}  // namespace

void verify_module(const FinModule& m) {
  const HeckeAlgebra& alg = *m.algebra;
  const RootDatum& d = alg.datum();
  const ExtendedWeylGroup& G = alg.group();
  const std::size_t n = d.ambient_dim(), r = d.rank(), dim = m.dim;
  const CMatrix I = CMatrix::identity(dim);
  if (m.reflections.size() != r || m.coordinates.size() != n || m.gammas.size() != G.gamma_elements().size())
    throw ModuleRelationError(relation_failure("wrong number of generator matrices"));
  auto check_shape = [&](const CMatrix& a) {
    if (a.rows() != dim || a.cols() != dim) throw ModuleRelationError(relation_failure("matrix of wrong size"));
  };
  for (const auto& a : m.reflections) check_shape(a);
  for (const auto& a : m.coordinates) check_shape(a);
  for (const auto& a : m.gammas) check_shape(a);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!commutator(m.coordinates[i], m.coordinates[j]).is_zero())
        throw ModuleRelationError(relation_failure("x" + std::to_string(i + 1) + " and x" + std::to_string(j + 1) +
                                                   " do not commute"));
  for (std::size_t i = 0; i < r; ++i) {
    if (m.reflections[i] * m.reflections[i] != I)
      throw ModuleRelationError(relation_failure("s" + std::to_string(i + 1) + "^2 != 1"));
    for (std::size_t j = i + 1; j < r; ++j) {
      std::size_t mij = d.coxeter_order(i, j);
      if (!power(m.reflections[i] * m.reflections[j], mij).is_identity())
        throw ModuleRelationError(relation_failure("braid relation for s" + std::to_string(i + 1) + ", s" +
                                                   std::to_string(j + 1)));
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    const RMatrix& sd = d.dual_reflection(i);
    for (std::size_t j = 0; j < n; ++j) {
      CMatrix sx = linear_combination(m.coordinates, sd.col(j), dim);
      CMatrix lhs = m.coordinates[j] * m.reflections[i] - m.reflections[i] * sx;
      CMatrix rhs = I * GaussianRational(alg.parameters()[i] * d.simple_coroots()[i][j]);
      if (lhs != rhs)
        throw ModuleRelationError(relation_failure("cross relation for x" + std::to_string(j + 1) + " and s" +
                                                   std::to_string(i + 1)));
    }
  }
  const auto& gam = G.gamma_elements();
  if (!m.gammas[0].is_identity()) throw ModuleRelationError(relation_failure("identity of Gamma acts nontrivially"));
  for (std::size_t a = 0; a < gam.size(); ++a) {
    for (std::size_t b = 0; b < gam.size(); ++b)
      if (m.gammas[a] * m.gammas[b] != m.gammas[gamma_product(G, a, b)])
        throw ModuleRelationError(relation_failure("Gamma multiplication table"));
    const std::size_t ainv = G[G.inverse(G.gamma_element(a))].gamma;
    for (std::size_t i = 0; i < r; ++i)
      if (m.gammas[a] * m.reflections[i] * m.gammas[ainv] != m.reflections[gam[a].perm[i]])
        throw ModuleRelationError(relation_failure("gamma s gamma^-1 = s_{gamma alpha}"));
    const RMatrix& gd = G[G.gamma_element(a)].dual;
    for (std::size_t j = 0; j < n; ++j)
      if (m.gammas[a] * m.coordinates[j] * m.gammas[ainv] != linear_combination(m.coordinates, gd.col(j), dim))
        throw ModuleRelationError(relation_failure("gamma x gamma^-1 = gamma(x)"));
  }
}

FinModule submodule(const FinModule& m, const CMatrix& basis, std::string tag) {
  FinModule out;
  out.algebra = m.algebra;
  out.dim = basis.cols();
  for (std::size_t j = 0; j < out.dim; ++j) out.basis_labels.push_back("b" + std::to_string(j + 1));
  for (const auto& a : m.reflections) out.reflections.push_back(restrict_operator(a, basis));
  for (const auto& a : m.gammas) out.gammas.push_back(restrict_operator(a, basis));
  for (const auto& a : m.coordinates) out.coordinates.push_back(restrict_operator(a, basis));
  out.tag = tag.empty() ? m.tag : std::move(tag);
  return out;
}

FinModule make_module(AlgebraPtr algebra, std::vector<CMatrix> reflections, std::vector<CMatrix> gamma_generators,
                      std::vector<CMatrix> coordinates, std::string tag) {
  FinModule m;
  const ExtendedWeylGroup& G = algebra->group();
  if (gamma_generators.size() != G.gamma_generator_count())
    throw std::invalid_argument("expected " + std::to_string(G.gamma_generator_count()) +
                                " diagram automorphism matrices");
  std::size_t dim = 0;
  if (!reflections.empty()) dim = reflections.front().rows();
  else if (!coordinates.empty()) dim = coordinates.front().rows();
  else if (!gamma_generators.empty()) dim = gamma_generators.front().rows();
  else dim = 1;
  m.algebra = std::move(algebra);
  m.dim = dim;
  for (std::size_t j = 0; j < dim; ++j) m.basis_labels.push_back("b" + std::to_string(j + 1));
  m.reflections = std::move(reflections);
  m.coordinates = std::move(coordinates);
  for (const auto& g : G.gamma_elements()) {
    CMatrix acc = CMatrix::identity(dim);
    for (auto k : g.generator_word) acc = acc * gamma_generators.at(k);
    m.gammas.push_back(std::move(acc));
  }
  m.tag = std::move(tag);
  verify_module(m);
  return m;
}

AlgebraPtr levi_algebra(const HeckeAlgebra& alg, const std::vector<std::size_t>& subset) {
  ParabolicDatum pd = parabolic(alg.datum(), subset);
  return HeckeAlgebra::create(ExtendedWeylGroup::enumerate(pd.levi, {}), alg.parameters().restricted(pd.subset));
}

std::vector<FinModule> one_dim_modules(const AlgebraPtr& alg) {
  if (alg->group().has_gamma())
    throw std::invalid_argument("one-dimensional modules are enumerated for algebras without diagram automorphisms");
  const RootDatum& d = alg->datum();
  const std::size_t r = d.rank(), n = d.ambient_dim();
  std::vector<FinModule> out;
  for (unsigned long mask = 0; mask < (1UL << r); ++mask) {
    std::vector<int> eps(r);
    for (std::size_t i = 0; i < r; ++i) eps[i] = (mask >> i) & 1UL ? -1 : 1;
    bool consistent = true;
    for (std::size_t i = 0; i < r && consistent; ++i)
      for (std::size_t j = i + 1; j < r && consistent; ++j)
        if (d.coxeter_order(i, j) % 2 == 1 && eps[i] != eps[j]) consistent = false;
    if (!consistent) continue;
    // <alpha_i, lambda> = eps_i k_i with lambda = sum_j c_j alpha_j^vee.
    RVector b(r);
    for (std::size_t i = 0; i < r; ++i) b[i] = alg->parameters()[i] * eps[i];
    RVector lambda(n, Rational(0));
    if (r > 0) {
      auto c = solve(d.cartan(), b);
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t a = 0; a < n; ++a) lambda[a] += (*c)[j] * d.simple_coroots()[j][a];
    }
    std::vector<CMatrix> refl, coords;
    for (std::size_t i = 0; i < r; ++i) refl.push_back(CMatrix::identity(1) * GaussianRational(eps[i]));
    for (std::size_t a = 0; a < n; ++a) coords.push_back(CMatrix::identity(1) * GaussianRational(lambda[a]));
    std::string tag;
    if (mask == 0) tag = "triv";
    else if (mask + 1 == (1UL << r)) tag = "St";
    else {
      tag = "eps(";
      for (std::size_t i = 0; i < r; ++i) tag += (i ? "," : "") + std::string(eps[i] > 0 ? "+" : "-");
      tag += ")";
    }
    out.push_back(make_module(alg, std::move(refl), {}, std::move(coords), tag));
  }
  return out;
}

FinModule induce(const AlgebraPtr& alg, const InductionDatum& xi, bool extended) {
  AlgebraPtr target = extended ? alg : alg->without_gamma();
  const HeckeAlgebra& H = *target;
  const RootDatum& d = H.datum();
  const ExtendedWeylGroup& G = H.group();
  const std::size_t n = d.ambient_dim();
  ParabolicDatum pd = parabolic(d, xi.subset);
  const std::vector<std::size_t>& P = pd.subset;
  const FinModule& delta = xi.delta;
  if (delta.algebra->datum().rank() != P.size() || delta.algebra->datum().cartan() != pd.cartan_levi)
    throw std::invalid_argument("inducing module is not a module over the Levi algebra of P");
  if (delta.algebra->parameters() != H.parameters().restricted(P))
    throw std::invalid_argument("inducing module has parameters different from k restricted to P");
  if (xi.lambda.size() != n) throw std::invalid_argument("lambda has the wrong dimension");
  RVector re = real_part(xi.lambda), im = imag_part(xi.lambda);
  for (auto i : P)
    if (sgn(pairing(d.simple_roots()[i], re)) != 0 || sgn(pairing(d.simple_roots()[i], im)) != 0)
      throw std::invalid_argument("lambda does not lie in t^P");

  const std::size_t m = delta.dim;
  CosetDecomposition cd = G.cosets(P);
  const std::size_t nc = cd.reps.size();
  const std::size_t dim = nc * m;

  std::map<std::size_t, CMatrix> delta_of;
  for (auto v : cd.sub) {
    CMatrix acc = CMatrix::identity(m);
    for (auto l : G[v].word) {
      auto pos = std::lower_bound(P.begin(), P.end(), l) - P.begin();
      acc = acc * delta.reflections.at(static_cast<std::size_t>(pos));
    }
    delta_of.emplace(v, std::move(acc));
  }
  std::vector<CMatrix> delta_lambda;
  for (std::size_t i = 0; i < n; ++i) {
    CMatrix x = CMatrix::identity(m) * xi.lambda[i];
    for (std::size_t j = 0; j < P.size(); ++j) {
      const Rational& c = d.simple_coroots()[P[j]][i];
      if (sgn(c) != 0) x += delta.coordinates.at(j) * GaussianRational(c);
    }
    delta_lambda.push_back(std::move(x));
  }

  auto add_block = [&](CMatrix& big, std::size_t row, std::size_t col, const CMatrix& block) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (!is_zero(block(a, b))) big(row * m + a, col * m + b) += block(a, b);
  };
  auto group_action = [&](std::size_t h) {
    CMatrix big(dim, dim);
    for (std::size_t c = 0; c < nc; ++c) {
      std::size_t g = G.multiply(h, cd.reps[c]);
      add_block(big, cd.coset_of[g], c, delta_of.at(cd.levi_part[g]));
    }
    return big;
  };

  FinModule out;
  out.algebra = target;
  out.dim = dim;
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t j = 0; j < m; ++j)
      out.basis_labels.push_back(G.label(cd.reps[c]) + "(x)" +
                                 (j < delta.basis_labels.size() ? delta.basis_labels[j] : std::to_string(j + 1)));
  for (std::size_t i = 0; i < d.rank(); ++i) out.reflections.push_back(group_action(G.reflection(i)));
  for (std::size_t c = 0; c < G.gamma_elements().size(); ++c) out.gammas.push_back(group_action(G.gamma_element(c)));
  for (std::size_t i = 0; i < n; ++i) {
    CMatrix big(dim, dim);
    Poly xi_poly = Poly::variable(n, i);
    for (std::size_t c = 0; c < nc; ++c)
      for (const auto& [u, q] : H.move_past(xi_poly, cd.reps[c]))
        add_block(big, cd.coset_of[u], c, delta_of.at(cd.levi_part[u]) * evaluate_at_matrices(q, delta_lambda, m));
    out.coordinates.push_back(std::move(big));
  }
  std::string lam;
  for (std::size_t i = 0; i < n; ++i) lam += (i ? "," : "") + to_string(xi.lambda[i]);
  std::string ps;
  for (std::size_t j = 0; j < P.size(); ++j) ps += (j ? "," : "") + std::to_string(P[j] + 1);
  out.tag = std::string(extended ? "pi'" : "pi") + "({" + ps + "}," + delta.tag + ",(" + lam + "))";
  verify_module(out);
  return out;
}

std::vector<Weight> weights(const FinModule& m) {
  const std::size_t n = m.coordinates.size();
  std::vector<Weight> out;
  if (m.dim == 0) return out;
  std::function<void(const CMatrix&, std::size_t, CVector&)> rec = [&](const CMatrix& basis, std::size_t i,
                                                                      CVector& point) {
    if (i == n) {
      out.push_back(Weight{point, basis.cols()});
      return;
    }
    CMatrix a = restrict_operator(m.coordinates[i], basis);
    const std::size_t k = a.rows();
    CPoly cp(characteristic_polynomial(a));
    std::size_t found = 0;
    std::vector<std::pair<GaussianRational, CMatrix>> spaces;
    for (const auto& mu : roots_in_gaussian_field(cp)) {
      CMatrix ker = kernel_matrix(power(a - CMatrix::identity(k) * mu, k));
      found += ker.cols();
      spaces.emplace_back(mu, basis * ker);
    }
    if (found != k) throw UnsplitSpectrum("x" + std::to_string(i + 1), cp);
    for (const auto& [mu, sub] : spaces) {
      point.push_back(mu);
      rec(sub, i + 1, point);
      point.pop_back();
    }
  };
  CVector point;
  rec(CMatrix::identity(m.dim), 0, point);
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) { return a.point < b.point; });
  return out;
}

std::vector<CVector> orbit(const ExtendedWeylGroup& g, const CVector& point) {
  RVector re = real_part(point), im = imag_part(point);
  std::set<CVector> pts;
  for (const auto& e : g.elements()) pts.insert(make_complex(e.matrix * re, e.matrix * im));
  return {pts.begin(), pts.end()};
}

CentralCharacter central_character(const FinModule& m) {
  auto ws = weights(m);
  if (ws.empty()) throw std::invalid_argument("central character of the zero module");
  const ExtendedWeylGroup& G = m.algebra->group();
  CentralCharacter cc;
  cc.orbit = orbit(G, ws.front().point);
  std::vector<std::vector<CVector>> orbits{cc.orbit};
  for (const auto& w : ws) {
    bool known = false;
    for (const auto& o : orbits) known = known || std::binary_search(o.begin(), o.end(), w.point);
    if (!known) orbits.push_back(orbit(G, w.point));
  }
  if (orbits.size() > 1) {
    std::string msg = "module has " + std::to_string(orbits.size()) + " central characters:";
    for (const auto& o : orbits) {
      msg += " {";
      for (std::size_t i = 0; i < o.front().size(); ++i) msg += (i ? "," : "") + to_string(o.front()[i]);
      msg += "}";
    }
    throw std::runtime_error(msg);
  }
  for (const auto& p : cc.orbit)
    for (const auto& z : p) cc.real = cc.real && z.is_real();
  return cc;
}

bool is_tempered(const FinModule& m) {
  const RootDatum& d = m.algebra->datum();
  for (const auto& w : weights(m))
    if (!cone_contains(d, Cone{ConeKind::Antidual, {}}, real_part(w.point))) return false;
  return true;
}

bool is_irreducible(const FinModule& m) { return is_absolutely_irreducible(m.as_rep()); }

bool is_discrete_series(const FinModule& m) {
  const RootDatum& d = m.algebra->datum();
  for (const auto& w : weights(m))
    if (!cone_contains(d, Cone{ConeKind::AntidualInterior, {}}, real_part(w.point))) return false;
  return is_irreducible(m);
}

std::vector<CMatrix> commutant(const FinModule& m) { return ghecke::commutant(m.as_rep()); }

std::vector<CMatrix> intertwiner_space(const FinModule& a, const FinModule& b) {
  if (a.algebra->group_ptr() != b.algebra->group_ptr() && a.algebra->datum().cartan() != b.algebra->datum().cartan())
    throw std::invalid_argument("intertwiner_space: modules over different algebras");
  return hom_space(a.as_rep(), b.as_rep());
}

std::vector<ModuleConstituent> decompose(const FinModule& m) {
  std::vector<ModuleConstituent> out;
  std::size_t idx = 0;
  for (const auto& part : decompose(m.as_rep())) {
    ++idx;
    out.push_back(ModuleConstituent{submodule(m, part.copies.front(), m.tag + "[" + std::to_string(idx) + "]"),
                                    part.multiplicity()});
  }
  return out;
}

std::vector<GaussianRational> restriction_character(const FinModule& m) {
  std::vector<GaussianRational> out;
  for (const auto& cls : m.algebra->group().classes()) out.push_back(m.group_matrix(cls.representative).trace());
  return out;
}

InductionDatum transport(const HeckeAlgebra& alg, std::size_t w, const InductionDatum& xi) {
  const ExtendedWeylGroup& G = alg.group();
  auto t = G.transport(w, xi.subset);
  if (!t) throw std::invalid_argument("element " + G.label(w) + " does not map P into Pi");
  InductionDatum out;
  out.subset = t->target;
  const std::size_t k = xi.subset.size();
  std::vector<CMatrix> refl(k), coords(k);
  for (std::size_t a = 0; a < k; ++a) {
    std::size_t pos = static_cast<std::size_t>(
        std::lower_bound(out.subset.begin(), out.subset.end(), t->image[a]) - out.subset.begin());
    refl[pos] = xi.delta.reflections.at(a);
    coords[pos] = xi.delta.coordinates.at(a);
  }
  if (k == 0) coords.clear();
  out.delta = make_module(levi_algebra(alg, out.subset), std::move(refl), {}, std::move(coords), xi.delta.tag);
  out.delta.basis_labels = xi.delta.basis_labels;
  const RMatrix& mw = G[w].matrix;
  out.lambda = make_complex(mw * real_part(xi.lambda), mw * imag_part(xi.lambda));
  return out;
}

Rational squared_norm(const RootDatum& d, const CVector& point) {
  RVector re = real_part(point);
  return d.inner(re, re);
}

}  // namespace ghecke
