#pragma once

#include "ghecke/matrix.hpp"
#include "ghecke/rootdata.hpp"

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ghecke {

/// Diagram automorphism: a permutation of Pi together with an orthogonal matrix on a.
struct DiagramAutomorphism {
  std::vector<std::size_t> perm;  // alpha_i -> alpha_{perm[i]}
  RMatrix matrix;
};

/// Element gamma * w of W' = Gamma x| W.
struct GroupElement {
  std::size_t gamma = 0;            // index into ExtendedWeylGroup::gamma_elements()
  std::vector<std::size_t> word;    // lex-least reduced word of w (0-based simple indices)
  RMatrix matrix;                   // action on a
  RMatrix dual;                     // action on coordinates of a*: inverse transpose of matrix
  std::size_t length = 0;           // length of w
};

struct GammaElement {
  std::vector<std::size_t> generator_word;  // word in the configured generators (0-based)
  std::vector<std::size_t> perm;
  RMatrix matrix;
};

struct ConjugacyClass {
  std::size_t representative = 0;       // smallest element index in the class
  std::vector<std::size_t> members;
  std::vector<std::size_t> centralizer;  // all elements commuting with the representative
  RMatrix fixed_basis;                   // columns: basis of ker(matrix - I) on a
  std::size_t fixed_dim() const { return fixed_basis.cols(); }
};

/// Minimal-length representatives of W'/W_P with the factorisation g = u v, v in W_P.
struct CosetDecomposition {
  std::vector<std::size_t> subset;
  std::vector<std::size_t> reps;    // element indices, ascending
  std::vector<std::size_t> sub;     // elements of W_P, ascending
  std::vector<std::size_t> coset_of;  // per element of W'
  std::vector<std::size_t> levi_part; // per element of W': the factor v
};

/// Image of a parabolic subset under w: w(P[a]) = alpha_{image[a]}.
struct ParabolicTransport {
  std::vector<std::size_t> image;   // same order as P
  std::vector<std::size_t> target;  // sorted image, the subset Q
};

class ExtendedWeylGroup {
 public:
  static constexpr std::size_t kDefaultBound = 100000;

  /// Enumerates W' for the datum and the generators of Gamma; Gamma is closed under
  /// composition internally.  Throws when the order exceeds `bound` or the generators
  /// fail to be diagram automorphisms.
  static std::shared_ptr<const ExtendedWeylGroup> enumerate(const RootDatum& datum,
                                                            const std::vector<DiagramAutomorphism>& gamma,
                                                            std::size_t bound = kDefaultBound);

  const RootDatum& datum() const { return datum_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t weyl_order() const { return elements_.size() / gamma_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& operator[](std::size_t i) const { return elements_.at(i); }
  const std::vector<GammaElement>& gamma_elements() const { return gamma_; }
  std::size_t gamma_generator_count() const { return gamma_generators_; }
  bool has_gamma() const { return gamma_.size() > 1; }

  static constexpr std::size_t identity() { return 0; }
  std::optional<std::size_t> find(const RMatrix& m) const;
  std::size_t index_of(const RMatrix& m) const;

  /// s_i as an element index.
  std::size_t reflection(std::size_t i) const { return simple_.at(i); }
  /// Gamma element c (index into gamma_elements) as an element index.
  std::size_t gamma_element(std::size_t c) const { return gamma_index_.at(c); }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_.at(a); }
  std::size_t times_reflection(std::size_t a, std::size_t i) const { return right_s_[i][a]; }
  std::size_t times_gamma(std::size_t a, std::size_t c) const { return right_gamma_[c][a]; }

  /// Text label: "e", "s1*s2", "g1*s2", ...
  std::string label(std::size_t i) const;

  /// Conjugacy classes ordered by representative index; the identity class comes first.
  const std::vector<ConjugacyClass>& classes() const;
  /// Class index of each element.
  std::size_t class_of(std::size_t g) const;

  CosetDecomposition cosets(std::vector<std::size_t> subset) const;

  /// Transport of P under w, or nullopt when w(P) is not contained in Pi.
  std::optional<ParabolicTransport> transport(std::size_t w, const std::vector<std::size_t>& subset) const;

  /// Elements w with w(P) = Q.
  std::vector<std::size_t> transporters(const std::vector<std::size_t>& from,
                                        const std::vector<std::size_t>& to) const;

 private:
  ExtendedWeylGroup() = default;
  void compute_classes() const;

  RootDatum datum_;
  std::vector<GammaElement> gamma_;
  std::size_t gamma_generators_ = 0;
  std::vector<GroupElement> elements_;
  std::unordered_map<std::string, std::size_t> by_key_;
  std::vector<std::size_t> simple_;
  std::vector<std::size_t> gamma_index_;
  std::vector<std::size_t> inverse_;
  std::vector<std::vector<std::size_t>> right_s_;
  std::vector<std::vector<std::size_t>> right_gamma_;
  mutable std::vector<ConjugacyClass> classes_;
  mutable std::vector<std::size_t> class_of_;
  mutable std::once_flag classes_once_;
};

using GroupPtr = std::shared_ptr<const ExtendedWeylGroup>;

/// Validates a diagram automorphism against the datum; throws with a reason on failure.
void validate_automorphism(const RootDatum& datum, const DiagramAutomorphism& g);

}  // namespace ghecke
