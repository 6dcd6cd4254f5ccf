#pragma once

#include <cstddef>
#include <map>
#include <vector>

namespace ghecke {

using Permutation = std::vector<std::size_t>;

/// Finite permutation group on {0, .., degree-1}; element 0 is the identity.
/// The product is composition: (a b)(x) = a(b(x)).
class PermutationGroup {
 public:
  static PermutationGroup generate(std::size_t degree, const std::vector<Permutation>& generators,
                                   std::size_t bound = 100000);
  static PermutationGroup symmetric(std::size_t n);
  static PermutationGroup cyclic(std::size_t n);

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& operator[](std::size_t i) const { return elements_.at(i); }
  const std::vector<Permutation>& generators() const { return generators_; }

  std::size_t index_of(const Permutation& p) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;

  std::vector<std::size_t> orbit(std::size_t x) const;
  PermutationGroup stabilizer(std::size_t x) const;
  /// Conjugacy classes as lists of element indices, ordered by smallest member.
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  std::map<Permutation, std::size_t> index_;
};

}  // namespace ghecke
