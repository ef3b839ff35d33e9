#ifndef SYMGEN_SUBSETS_HPP
#define SYMGEN_SUBSETS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "symgen/permutation.hpp"

namespace symgen {

// Strictly increasing 1-based point labels.
using KSubset = std::vector<Point>;

// Largest n handled anywhere (subset masks fit in 32 bits, orders in 64).
inline constexpr std::size_t kMaxDegree = 16;

// All k-subsets of {1..n} in lexicographic order of their sorted element
// lists; index 0 is {1..k}. Coset-table labels and generator order depend on
// this numbering, so it never changes.
class SubsetIndex {
 public:
  SubsetIndex(std::size_t n, std::size_t k);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return subsets_.size(); }
  KSubset const& at(std::size_t index) const { return subsets_.at(index); }
  std::vector<KSubset> const& all() const noexcept { return subsets_; }

  // Throws std::invalid_argument if s is not a valid k-subset.
  std::size_t index_of(KSubset const& s) const;
  std::uint32_t mask_of(std::size_t index) const { return masks_[index]; }
  std::size_t index_of_mask(std::uint32_t mask) const;

  // Image of subset `index` under p (a permutation of degree n).
  std::size_t image(std::size_t index, Permutation const& p) const;

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<KSubset> subsets_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::int32_t> rank_by_mask_;  // -1 where popcount != k
};

// "{1,2,3}"
std::string subset_to_string(KSubset const& s);

// Induced action of p on k-subsets, as a permutation of degree C(n,k) on the
// SubsetIndex numbering. Throws std::invalid_argument unless 1 <= k <= n.
Permutation subset_action(Permutation const& p, std::size_t k);

std::uint64_t binomial(std::size_t n, std::size_t k);
std::uint64_t factorial(std::size_t n);

}  // namespace symgen

#endif  // SYMGEN_SUBSETS_HPP
