#include "ghecke/weyl.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ghecke {

void validate_automorphism(const RootDatum& datum, const DiagramAutomorphism& g) {
  const std::size_t r = datum.rank(), n = datum.ambient_dim();
  if (g.perm.size() != r) throw std::invalid_argument("automorphism permutation has wrong length");
  std::vector<bool> hit(r, false);
  for (auto p : g.perm) {
    if (p >= r || hit[p]) throw std::invalid_argument("automorphism permutation is not a bijection of Pi");
    hit[p] = true;
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (datum.cartan()(g.perm[i], g.perm[j]) != datum.cartan()(i, j))
        throw std::invalid_argument("automorphism permutation does not preserve the Cartan matrix");
  if (g.matrix.rows() != n || g.matrix.cols() != n)
    throw std::invalid_argument("automorphism matrix has wrong size");
  if (g.matrix.transpose() * datum.gram() * g.matrix != datum.gram())
    throw std::invalid_argument("automorphism matrix is not orthogonal for the Gram form");
  for (std::size_t i = 0; i < r; ++i)
    if (g.matrix * datum.simple_coroots()[i] != datum.simple_coroots()[g.perm[i]])
      throw std::invalid_argument("automorphism matrix does not send alpha" + std::to_string(i + 1) +
                                  "^vee to alpha" + std::to_string(g.perm[i] + 1) + "^vee");
}

std::shared_ptr<const ExtendedWeylGroup> ExtendedWeylGroup::enumerate(const RootDatum& datum,
                                                                      const std::vector<DiagramAutomorphism>& gamma,
                                                                      std::size_t bound) {
  std::shared_ptr<ExtendedWeylGroup> grp(new ExtendedWeylGroup());
  ExtendedWeylGroup& G = *grp;
  G.datum_ = datum;
  const std::size_t n = datum.ambient_dim(), r = datum.rank();
  for (const auto& g : gamma) validate_automorphism(datum, g);
  G.gamma_generators_ = gamma.size();

  // Closure of Gamma.
  std::vector<std::size_t> id_perm(r);
  std::iota(id_perm.begin(), id_perm.end(), 0);
  G.gamma_.push_back(GammaElement{{}, id_perm, RMatrix::identity(n)});
  std::unordered_map<std::string, std::size_t> gamma_seen{{G.gamma_[0].matrix.key(), 0}};
  for (std::size_t head = 0; head < G.gamma_.size(); ++head) {
    for (std::size_t k = 0; k < gamma.size(); ++k) {
      const GammaElement cur = G.gamma_[head];
      GammaElement next;
      next.matrix = cur.matrix * gamma[k].matrix;
      next.perm.resize(r);
      for (std::size_t i = 0; i < r; ++i) next.perm[i] = cur.perm[gamma[k].perm[i]];
      next.generator_word = cur.generator_word;
      next.generator_word.push_back(k);
      auto key = next.matrix.key();
      if (gamma_seen.count(key)) continue;
      if (G.gamma_.size() >= bound) throw std::invalid_argument("group order exceeds bound " + std::to_string(bound));
      gamma_seen.emplace(key, G.gamma_.size());
      G.gamma_.push_back(std::move(next));
    }
  }

  // W by breadth-first closure.
  std::vector<RMatrix> weyl{RMatrix::identity(n)};
  std::unordered_map<std::string, std::size_t> weyl_seen{{weyl[0].key(), 0}};
  for (std::size_t head = 0; head < weyl.size(); ++head) {
    for (std::size_t i = 0; i < r; ++i) {
      RMatrix m = weyl[head] * datum.reflection(i);
      auto key = m.key();
      if (weyl_seen.count(key)) continue;
      if (weyl.size() * G.gamma_.size() >= bound)
        throw std::invalid_argument("group order exceeds bound " + std::to_string(bound));
      weyl_seen.emplace(key, weyl.size());
      weyl.push_back(std::move(m));
    }
  }

  // Lengths via positive coroots sent to negative coroots.
  std::unordered_map<std::string, bool> coroot_sign;
  for (const auto& root : datum.roots()) {
    std::string key;
    for (const auto& x : root.coroot) key += x.get_str() + ",";
    coroot_sign.emplace(std::move(key), root.positive);
  }
  std::vector<std::size_t> length(weyl.size(), 0);
  for (std::size_t w = 0; w < weyl.size(); ++w) {
    for (const auto& root : datum.roots()) {
      if (!root.positive) continue;
      RVector img = weyl[w] * root.coroot;
      std::string key;
      for (const auto& x : img) key += x.get_str() + ",";
      auto it = coroot_sign.find(key);
      if (it == coroot_sign.end()) throw std::logic_error("Weyl group does not permute the coroots");
      if (!it->second) ++length[w];
    }
  }

  // Lex-least reduced words by repeatedly stripping the smallest left descent.
  std::vector<std::size_t> by_length(weyl.size());
  std::iota(by_length.begin(), by_length.end(), 0);
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](std::size_t a, std::size_t b) { return length[a] < length[b]; });
  std::vector<std::vector<std::size_t>> words(weyl.size());
  for (auto w : by_length) {
    if (length[w] == 0) continue;
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t sw = weyl_seen.at((datum.reflection(i) * weyl[w]).key());
      if (length[sw] < length[w]) {
        words[w].push_back(i);
        words[w].insert(words[w].end(), words[sw].begin(), words[sw].end());
        break;
      }
    }
  }
  std::vector<std::size_t> order(weyl.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (length[a] != length[b]) return length[a] < length[b];
    return words[a] < words[b];
  });

  for (std::size_t c = 0; c < G.gamma_.size(); ++c) {
    for (auto w : order) {
      GroupElement e;
      e.gamma = c;
      e.word = words[w];
      e.length = length[w];
      e.matrix = G.gamma_[c].matrix * weyl[w];
      e.dual = ghecke::inverse(e.matrix)->transpose();
      auto key = e.matrix.key();
      if (G.by_key_.count(key)) throw std::logic_error("diagram automorphism coincides with a Weyl group element");
      G.by_key_.emplace(std::move(key), G.elements_.size());
      G.elements_.push_back(std::move(e));
    }
  }
  const std::size_t N = G.elements_.size();
  for (std::size_t i = 0; i < r; ++i) G.simple_.push_back(G.index_of(datum.reflection(i)));
  for (const auto& c : G.gamma_) G.gamma_index_.push_back(G.index_of(c.matrix));
  G.inverse_.resize(N);
  G.right_s_.assign(r, std::vector<std::size_t>(N));
  G.right_gamma_.assign(G.gamma_.size(), std::vector<std::size_t>(N));
  for (std::size_t a = 0; a < N; ++a) {
    const RMatrix& m = G.elements_[a].matrix;
    G.inverse_[a] = G.index_of(G.elements_[a].dual.transpose());
    for (std::size_t i = 0; i < r; ++i) G.right_s_[i][a] = G.index_of(m * datum.reflection(i));
    for (std::size_t c = 0; c < G.gamma_.size(); ++c) G.right_gamma_[c][a] = G.index_of(m * G.gamma_[c].matrix);
  }
  return grp;
}

std::optional<std::size_t> ExtendedWeylGroup::find(const RMatrix& m) const {
  auto it = by_key_.find(m.key());
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

std::size_t ExtendedWeylGroup::index_of(const RMatrix& m) const {
  auto i = find(m);
  if (!i) throw std::logic_error("matrix is not an element of the group");
  return *i;
}

std::size_t ExtendedWeylGroup::multiply(std::size_t a, std::size_t b) const {
  const GroupElement& e = elements_.at(b);
  std::size_t out = right_gamma_[e.gamma][a];
  for (auto i : e.word) out = right_s_[i][out];
  return out;
}

std::string ExtendedWeylGroup::label(std::size_t i) const {
  const GroupElement& e = elements_.at(i);
  std::string s;
  for (auto g : gamma_[e.gamma].generator_word) s += (s.empty() ? "g" : "*g") + std::to_string(g + 1);
  for (auto l : e.word) s += (s.empty() ? "s" : "*s") + std::to_string(l + 1);
  return s.empty() ? "e" : s;
}

void ExtendedWeylGroup::compute_classes() const {
  std::call_once(classes_once_, [this] {
    const std::size_t N = size();
    const std::size_t unset = N;
    class_of_.assign(N, unset);
    for (std::size_t g = 0; g < N; ++g) {
      if (class_of_[g] != unset) continue;
      ConjugacyClass cls;
      cls.representative = g;
      const std::size_t id = classes_.size();
      for (std::size_t h = 0; h < N; ++h) {
        std::size_t hg = multiply(h, g);
        std::size_t conj = multiply(hg, inverse_[h]);
        if (class_of_[conj] == unset) {
          class_of_[conj] = id;
          cls.members.push_back(conj);
        }
        if (conj == g) cls.centralizer.push_back(h);
      }
      std::sort(cls.members.begin(), cls.members.end());
      RMatrix d = elements_[g].matrix - RMatrix::identity(datum_.ambient_dim());
      cls.fixed_basis = kernel_matrix(d);
      classes_.push_back(std::move(cls));
    }
  });
}

const std::vector<ConjugacyClass>& ExtendedWeylGroup::classes() const {
  compute_classes();
  return classes_;
}

std::size_t ExtendedWeylGroup::class_of(std::size_t g) const {
  compute_classes();
  return class_of_.at(g);
}

CosetDecomposition ExtendedWeylGroup::cosets(std::vector<std::size_t> subset) const {
  std::sort(subset.begin(), subset.end());
  for (auto i : subset)
    if (i >= datum_.rank()) throw std::invalid_argument("parabolic subset is not contained in Pi");
  CosetDecomposition d;
  d.subset = subset;
  for (std::size_t g = 0; g < size(); ++g) {
    const auto& e = elements_[g];
    if (e.gamma != 0) continue;
    if (std::all_of(e.word.begin(), e.word.end(),
                    [&](std::size_t l) { return std::binary_search(subset.begin(), subset.end(), l); }))
      d.sub.push_back(g);
  }
  const std::size_t unset = size();
  d.coset_of.assign(size(), unset);
  d.levi_part.assign(size(), unset);
  for (std::size_t g = 0; g < size(); ++g) {
    if (d.coset_of[g] != unset) continue;
    const std::size_t c = d.reps.size();
    d.reps.push_back(g);
    for (auto v : d.sub) {
      std::size_t h = multiply(g, v);
      d.coset_of[h] = c;
      d.levi_part[h] = v;
    }
  }
  return d;
}

std::optional<ParabolicTransport> ExtendedWeylGroup::transport(std::size_t w,
                                                               const std::vector<std::size_t>& subset) const {
  ParabolicTransport t;
  const RMatrix& m = elements_.at(w).matrix;
  for (auto i : subset) {
    RVector img = m * datum_.simple_coroots().at(i);
    std::optional<std::size_t> j;
    for (std::size_t k = 0; k < datum_.rank(); ++k)
      if (datum_.simple_coroots()[k] == img) j = k;
    if (!j) return std::nullopt;
    t.image.push_back(*j);
  }
  t.target = t.image;
  std::sort(t.target.begin(), t.target.end());
  return t;
}

std::vector<std::size_t> ExtendedWeylGroup::transporters(const std::vector<std::size_t>& from,
                                                         const std::vector<std::size_t>& to) const {
  std::vector<std::size_t> sorted_to = to;
  std::sort(sorted_to.begin(), sorted_to.end());
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < size(); ++w) {
    auto t = transport(w, from);
    if (t && t->target == sorted_to) out.push_back(w);
  }
  return out;
}

}  // namespace ghecke
