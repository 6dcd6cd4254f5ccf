#include "ghecke/census.hpp"

#include "ghecke/crossed.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghecke {

namespace {

std::vector<std::vector<std::size_t>> subsets_by_size(std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned long mask = 0; mask < (1UL << r); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < r; ++i)
      if ((mask >> i) & 1UL) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::string subset_text(const std::vector<std::size_t>& s) {
  std::string t = "{";
  for (std::size_t i = 0; i < s.size(); ++i) t += (i ? "," : "") + std::to_string(s[i] + 1);
  return t + "}";
}

Rational levi_norm(const HeckeAlgebra& alg, const CatalogEntry& e) {
  ParabolicDatum pd = parabolic(alg.datum(), e.subset);
  auto ws = weights(e.delta);
  RVector point = pd.embed_levi_vector(real_part(ws.front().point));
  return alg.datum().inner(point, point);
}

bool associated(const AlgebraPtr& alg, const CatalogEntry& a, const CatalogEntry& b) {
  if (a.subset.size() != b.subset.size() || a.delta.dim != b.delta.dim) return false;
  InductionDatum xi{a.subset, a.delta, CVector(alg->datum().ambient_dim())};
  for (auto w : alg->group().transporters(a.subset, b.subset)) {
    InductionDatum eta = transport(*alg, w, xi);
    if (!hom_space(eta.delta.as_rep(), b.delta.as_rep()).empty()) return true;
  }
  return false;
}

}  // namespace

std::vector<CatalogEntry> discrete_series_catalog(const AlgebraPtr& alg, const std::vector<CatalogEntry>& user,
                                                  std::vector<std::string>& warnings) {
  const RootDatum& d = alg->datum();
  for (const auto& e : user) {
    ParabolicDatum pd = parabolic(d, e.subset);
    if (e.subset != pd.subset) throw std::invalid_argument("catalog subset must be sorted and duplicate-free");
    if (e.delta.algebra->datum().cartan() != pd.cartan_levi ||
        e.delta.algebra->parameters() != alg->parameters().restricted(pd.subset))
      throw std::invalid_argument("catalog entry for " + subset_text(e.subset) + " is not over the Levi algebra");
    for (const auto& w : weights(e.delta))
      for (const auto& z : w.point)
        if (!z.is_real()) throw std::invalid_argument("catalog entry " + e.note + " has a non-real weight");
    if (!is_discrete_series(e.delta))
      throw std::invalid_argument("catalog entry " + e.note + " for " + subset_text(e.subset) +
                                  " is not a discrete series");
  }
  std::vector<CatalogEntry> out;
  for (const auto& P : subsets_by_size(d.rank())) {
    AlgebraPtr levi = levi_algebra(*alg, P);
    for (auto& m : one_dim_modules(levi))
      if (is_discrete_series(m)) out.push_back(CatalogEntry{P, std::move(m), "one-dimensional"});
    bool has_user = false;
    for (const auto& e : user)
      if (e.subset == P) {
        out.push_back(e);
        has_user = true;
      }
    if (P.size() >= 2 && !has_user)
      warnings.push_back("no catalog entries for " + subset_text(P) +
                         "; only one-dimensional discrete series are used there");
  }
  return out;
}

Irr0Census irr0_census(const AlgebraPtr& alg, const std::vector<CatalogEntry>& user) {
  if (!alg->datum().crystallographic())
    throw std::invalid_argument("the Irr0 census needs a crystallographic root datum");
  Irr0Census census;
  auto catalog = discrete_series_catalog(alg, user, census.warnings);
  for (const auto& e : catalog) {
    bool seen = false;
    for (const auto& r : census.association_classes) seen = seen || associated(alg, r, e);
    if (!seen) census.association_classes.push_back(e);
  }

  const std::size_t n = alg->datum().ambient_dim();
  for (const auto& rep : census.association_classes) {
    const Rational norm = levi_norm(*alg, rep);
    FinModule v = induce(alg, InductionDatum{rep.subset, rep.delta, CVector(n)}, true);
    for (auto& part : decompose(v)) {
      Irr0Entry entry;
      entry.central = central_character(part.module);
      entry.character = restriction_character(part.module);
      bool duplicate = false;
      for (const auto& old : census.entries)
        duplicate = duplicate || (old.central.orbit == entry.central.orbit && old.character == entry.character &&
                                  !intertwiner_space(old.module, part.module).empty());
      if (duplicate) continue;
      entry.subset = rep.subset;
      entry.delta_tag = rep.delta.tag;
      entry.cc_norm = norm;
      entry.tempered = is_tempered(part.module);
      entry.module = std::move(part.module);
      census.entries.push_back(std::move(entry));
    }
  }
  std::stable_sort(census.entries.begin(), census.entries.end(),
                   [](const Irr0Entry& a, const Irr0Entry& b) { return a.cc_norm > b.cc_norm; });
  return census;
}

BasisReport verify_basis_theorem(const AlgebraPtr& alg, const std::vector<CatalogEntry>& user) {
  BasisReport r;
  r.census = irr0_census(alg, user);
  r.irr0_count = r.census.entries.size();
  r.class_count = alg->group().classes().size();
  auto hp = hp_census_hecke(*alg);
  r.hp0 = hp.hp0;
  r.hp1 = hp.hp1;
  r.trace_matrix = CMatrix(r.irr0_count, r.class_count);
  for (std::size_t i = 0; i < r.irr0_count; ++i)
    for (std::size_t j = 0; j < r.class_count; ++j) r.trace_matrix(i, j) = r.census.entries[i].character[j];
  r.rank = rank(r.trace_matrix);
  r.pass = r.irr0_count == r.class_count && r.class_count == r.hp0 && r.rank == r.class_count;
  return r;
}

IntertwinerCheck check_intertwiners(const AlgebraPtr& alg, const InductionDatum& xi) {
  const ExtendedWeylGroup& G = alg->group();
  IntertwinerCheck c;
  FinModule v = induce(alg, xi, true);
  const MatrixRep vrep = v.as_rep();
  auto end = commutant(vrep);
  c.end_dim = end.size();
  for (const auto& part : decompose(v)) c.multiplicity_sum += part.multiplicity * part.multiplicity;

  std::vector<CMatrix> transported;
  for (auto w : G.transporters(xi.subset, xi.subset)) {
    InductionDatum eta = transport(*alg, w, xi);
    if (eta.lambda != xi.lambda) continue;
    auto phis = hom_space(xi.delta.as_rep(), eta.delta.as_rep());
    if (phis.empty()) continue;
    c.stabilizer.push_back(w);
    auto psi = inverse(phis.front());
    if (!psi) throw std::logic_error("intertwiner between irreducible Levi modules is not invertible");
    const std::size_t m = xi.delta.dim;
    CMatrix back(v.dim, v.dim);
    for (std::size_t b = 0; b < v.dim / m; ++b)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) back(b * m + i, b * m + j) = (*psi)(i, j);
    FinModule vw = induce(alg, eta, true);
    for (const auto& t : intertwiner_space(v, vw)) transported.push_back(back * t);
  }
  c.transported_rank = span_rank(transported);
  auto both = transported;
  both.insert(both.end(), end.begin(), end.end());
  c.commutant_in_span = span_rank(both) == c.transported_rank && c.transported_rank == c.end_dim;
  c.algebra_dim = generated_algebra_dimension(vrep);
  c.bicommutant_dim = commutant(MatrixRep{v.dim, end}).size();
  return c;
}

}  // namespace ghecke
