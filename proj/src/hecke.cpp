#include "ghecke/hecke.hpp"

#include "ghecke/expr.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ghecke {

long HeckeElement::degree() const {
  long d = -1;
  for (const auto& [w, p] : terms_) d = std::max(d, p.degree());
  return d;
}

Poly HeckeElement::coefficient(std::size_t w) const {
  auto it = terms_.find(w);
  if (it != terms_.end()) return it->second;
  return Poly(parent_ ? parent_->nvars() : 0);
}

void HeckeElement::add(std::size_t w, const Poly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, p);
  if (inserted) return;
  it->second += p;
  if (it->second.is_zero()) terms_.erase(it);
}

void HeckeElement::check_parent(const HeckeElement& o) const {
  if (parent_ != o.parent_) throw std::invalid_argument("elements belong to different algebras");
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  check_parent(o);
  for (const auto& [w, p] : o.terms_) add(w, p);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  check_parent(o);
  for (const auto& [w, p] : o.terms_) add(w, -p);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, p] : terms_) p *= s;
  return *this;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  a.check_parent(b);
  if (!a.parent_) throw std::invalid_argument("element without parent algebra");
  return a.parent_->multiply(a, b);
}

HeckeAlgebra::HeckeAlgebra(GroupPtr group, ParameterMap k) : group_(std::move(group)), k_(std::move(k)) {}

AlgebraPtr HeckeAlgebra::create(GroupPtr group, ParameterMap k) {
  const RootDatum& d = group->datum();
  const std::size_t r = d.rank();
  if (k.size() != r)
    throw std::invalid_argument("expected " + std::to_string(r) + " parameters, got " + std::to_string(k.size()));
  std::vector<std::size_t> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (d.coxeter_order(i, j) % 2 == 1) parent[find(i)] = find(j);
  for (const auto& g : group->gamma_elements())
    for (std::size_t i = 0; i < r; ++i) parent[find(i)] = find(g.perm[i]);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (find(i) == find(j) && k[i] != k[j])
        throw std::invalid_argument("parameters k_alpha" + std::to_string(i + 1) + " and k_alpha" +
                                    std::to_string(j + 1) + " differ on W'-conjugate roots");
  std::shared_ptr<HeckeAlgebra> alg(new HeckeAlgebra(std::move(group), std::move(k)));
  alg->self_ = alg;
  return alg;
}

AlgebraPtr HeckeAlgebra::with_parameters(ParameterMap k) const { return create(group_, std::move(k)); }

AlgebraPtr HeckeAlgebra::without_gamma() const {
  if (!group_->has_gamma()) return self_.lock();
  std::call_once(plain_once_, [this] {
    plain_ = create(ExtendedWeylGroup::enumerate(datum(), {}), k_);
  });
  return plain_;
}

HeckeElement HeckeAlgebra::element(std::size_t w, const Poly& p) const {
  if (w >= group_->size()) throw std::invalid_argument("group element index out of range");
  if (p.nvars() != nvars()) throw std::invalid_argument("polynomial has the wrong number of variables");
  HeckeElement out(this);
  out.add(w, p);
  return out;
}

HeckeElement HeckeAlgebra::one() const { return group_element(ExtendedWeylGroup::identity()); }

HeckeElement HeckeAlgebra::group_element(std::size_t w) const { return element(w, Poly::constant(nvars(), 1)); }

HeckeElement HeckeAlgebra::reflection(std::size_t i) const { return group_element(group_->reflection(i)); }

HeckeElement HeckeAlgebra::gamma_generator(std::size_t i) const {
  if (i >= group_->gamma_generator_count()) throw std::invalid_argument("no such diagram automorphism generator");
  return group_element(group_->gamma_element(i + 1));
}

HeckeElement HeckeAlgebra::coordinate(std::size_t i) const { return polynomial(Poly::variable(nvars(), i)); }

std::vector<HeckeElement> HeckeAlgebra::generators() const {
  std::vector<HeckeElement> out;
  for (std::size_t i = 0; i < datum().rank(); ++i) out.push_back(reflection(i));
  for (std::size_t i = 0; i < group_->gamma_generator_count(); ++i) out.push_back(gamma_generator(i));
  for (std::size_t i = 0; i < nvars(); ++i) out.push_back(coordinate(i));
  return out;
}

std::vector<std::pair<std::size_t, Poly>> HeckeAlgebra::monomial_past(const Exponent& e, std::size_t w) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find({e, w});
    if (it != cache_.end()) return it->second;
  }
  const ExtendedWeylGroup& G = *group_;
  const GroupElement& g = G[w];
  std::map<std::size_t, Poly> cur;
  Poly mono = Poly::monomial(e);
  if (g.gamma != 0) {
    // p gamma = gamma gamma^{-1}(p)
    std::size_t gi = G.inverse(G.gamma_element(g.gamma));
    cur.emplace(G.times_gamma(ExtendedWeylGroup::identity(), g.gamma), act(G[gi].dual, mono));
  } else {
    cur.emplace(ExtendedWeylGroup::identity(), mono);
  }
  for (auto i : g.word) {
    // r s_i = s_i s_i(r) + k_i Delta_i(r)
    std::map<std::size_t, Poly> next;
    auto put = [&](std::size_t u, Poly q) {
      if (q.is_zero()) return;
      auto [it, inserted] = next.emplace(u, q);
      if (inserted) return;
      it->second += q;
      if (it->second.is_zero()) next.erase(it);
    };
    for (const auto& [u, r] : cur) {
      put(G.times_reflection(u, i), act(datum().dual_reflection(i), r));
      if (sgn(k_[i]) != 0) put(u, divided_difference(datum(), i, r) * k_[i]);
    }
    cur = std::move(next);
  }
  std::vector<std::pair<std::size_t, Poly>> out(cur.begin(), cur.end());
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.emplace(std::make_pair(e, w), out);
  return out;
}

std::vector<std::pair<std::size_t, Poly>> HeckeAlgebra::move_past(const Poly& p, std::size_t w) const {
  std::map<std::size_t, Poly> acc;
  for (const auto& [e, c] : p.terms()) {
    for (const auto& [u, q] : monomial_past(e, w)) {
      Poly t = q * c;
      auto [it, inserted] = acc.emplace(u, t);
      if (!inserted) {
        it->second += t;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  return {acc.begin(), acc.end()};
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& a, const HeckeElement& b) const {
  if (a.parent() != this || b.parent() != this) throw std::invalid_argument("elements belong to a different algebra");
  HeckeElement out(this);
  for (const auto& [w, p] : a.terms())
    for (const auto& [v, q] : b.terms())
      for (const auto& [u, r] : move_past(p, v)) out.add(group_->multiply(w, u), r * q);
  return out;
}

HeckeElement HeckeAlgebra::commutator(const HeckeElement& a, const HeckeElement& b) const {
  return multiply(a, b) - multiply(b, a);
}

bool HeckeAlgebra::is_central(const HeckeElement& a) const {
  for (const auto& g : generators())
    if (!commutator(a, g).is_zero()) return false;
  return true;
}

std::vector<HeckeElement> HeckeAlgebra::center_basis(unsigned d) const {
  std::vector<RMatrix> duals;
  for (const auto& g : group_->elements()) duals.push_back(g.dual);
  std::vector<HeckeElement> out;
  for (unsigned deg = 0; deg <= d; ++deg)
    for (const auto& p : invariant_basis(duals, nvars(), deg)) out.push_back(polynomial(p));
  return out;
}

HeckeElement HeckeAlgebra::rebase(const HeckeElement& a, const HeckeAlgebra& target) const {
  if (target.group_ != group_) throw std::invalid_argument("rebase requires the same group");
  HeckeElement out(&target);
  for (const auto& [w, p] : a.terms()) out.add(w, p);
  return out;
}

std::string HeckeAlgebra::to_string(const HeckeElement& a) const {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [w, p] : a.terms()) {
    if (!s.empty()) s += " + ";
    s += group_->label(w) + "*(" + ghecke::to_string(p) + ")";
  }
  return s;
}

HeckeElement HeckeAlgebra::parse(std::string_view text) const {
  auto index = [](const std::string& name) -> std::optional<std::size_t> {
    if (name.size() < 2 ||
        !std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return std::nullopt;
    std::size_t i = std::stoul(name.substr(1));
    if (i == 0) return std::nullopt;
    return i - 1;
  };
  ExpressionParser<HeckeElement> parser(
      [&](const std::string& name, std::size_t offset) -> HeckeElement {
        if (name == "e") return one();
        auto i = index(name);
        if (i) {
          if (name[0] == 's' && *i < datum().rank()) return reflection(*i);
          if (name[0] == 'g' && *i < group_->gamma_generator_count()) return gamma_generator(*i);
          if (name[0] == 'x' && *i < nvars()) return coordinate(*i);
        }
        throw ParseError("unknown generator '" + name + "'", offset);
      },
      [&](const Rational& q) { return one() * q; });
  return parser.parse(text);
}

HeckeElement k_sensitive_part(const HeckeElement& a, const HeckeElement& b) {
  const HeckeAlgebra* alg = a.parent();
  if (!alg || alg != b.parent()) throw std::invalid_argument("k_sensitive_part: parent mismatch");
  auto flat = alg->with_parameters(ParameterMap::constant(alg->datum().rank(), 0));
  HeckeElement at_zero = flat->multiply(alg->rebase(a, *flat), alg->rebase(b, *flat));
  return alg->multiply(a, b) - flat->rebase(at_zero, *alg);
}

HeckeElement scale_map(const Rational& z, const HeckeElement& a, const HeckeAlgebra& target) {
  const HeckeAlgebra* src = a.parent();
  if (!src) throw std::invalid_argument("scale_map: element without parent");
  if (src->group_ptr() != target.group_ptr()) throw std::invalid_argument("scale_map: different groups");
  if (src->parameters() != target.parameters().scaled(z))
    throw std::invalid_argument("scale_map: source parameters must equal z times the target parameters");
  HeckeElement out(&target);
  for (const auto& [w, p] : a.terms()) out.add(w, p.scaled(z));
  return out;
}

}  // namespace ghecke
