#include "symgen/subsets.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace symgen {

SubsetIndex::SubsetIndex(std::size_t n, std::size_t k) : n_(n), k_(k) {
  if (n < 1 || n > kMaxDegree) throw std::invalid_argument("SubsetIndex: n out of range");
  if (k < 1 || k > n) throw std::invalid_argument("SubsetIndex: k out of range");
  // Lexicographic enumeration by odometer on the element list.
  KSubset s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = static_cast<Point>(i + 1);
  while (true) {
    subsets_.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  rank_by_mask_.assign(std::size_t{1} << n, -1);
  for (std::size_t i = 0; i < subsets_.size(); ++i) {
    std::uint32_t m = 0;
    for (Point p : subsets_[i]) m |= 1u << (p - 1);
    masks_.push_back(m);
    rank_by_mask_[m] = static_cast<std::int32_t>(i);
  }
}

std::size_t SubsetIndex::index_of(KSubset const& s) const {
  if (s.size() != k_) throw std::invalid_argument("subset has the wrong cardinality");
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n_ || (i > 0 && s[i] <= s[i - 1])) {
      throw std::invalid_argument("subset is not strictly increasing within 1..n");
    }
    m |= 1u << (s[i] - 1);
  }
  return index_of_mask(m);
}

std::size_t SubsetIndex::index_of_mask(std::uint32_t mask) const {
  if (mask >= rank_by_mask_.size() || rank_by_mask_[mask] < 0) {
    throw std::invalid_argument("mask is not a k-subset");
  }
  return static_cast<std::size_t>(rank_by_mask_[mask]);
}

std::size_t SubsetIndex::image(std::size_t index, Permutation const& p) const {
  std::uint32_t m = masks_[index];
  std::uint32_t out = 0;
  while (m) {
    unsigned bit = static_cast<unsigned>(std::countr_zero(m));
    m &= m - 1;
    out |= 1u << p(bit);
  }
  return static_cast<std::size_t>(rank_by_mask_[out]);
}

std::string subset_to_string(KSubset const& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

Permutation subset_action(Permutation const& p, std::size_t k) {
  if (k < 1 || k > p.degree()) throw std::invalid_argument("subset_action: k out of range");
  SubsetIndex idx(p.degree(), k);
  std::vector<Point> images(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) images[i] = static_cast<Point>(idx.image(i, p));
  return Permutation(std::move(images));
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace symgen
