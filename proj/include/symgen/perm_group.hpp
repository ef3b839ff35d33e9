#ifndef SYMGEN_PERM_GROUP_HPP
#define SYMGEN_PERM_GROUP_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "symgen/permutation.hpp"

namespace symgen {

// A permutation group of small degree, held as its full sorted element list.
// Every group in scope is a subgroup of S_n with n <= 8, so at most 40320
// elements; the element list doubles as the exact order oracle.
class PermGroup {
 public:
  // Closure of the generators. An empty generator list gives the trivial group.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup symmetric(std::size_t n);
  static PermGroup trivial(std::size_t n) { return PermGroup(n, {}); }
  // `elements` must already be closed under products; a small generating set
  // is extracted from it.
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::uint64_t order() const noexcept { return elements_.size(); }
  std::span<const Permutation> generators() const noexcept { return generators_; }
  std::span<const Permutation> elements() const noexcept { return elements_; }
  bool contains(Permutation const& p) const;
  bool is_subgroup_of(PermGroup const& other) const;

  // "<(1,2),(3,4)>" style, generators in cycle notation.
  std::string to_string() const;

  // Equal as sets of elements (generators may differ).
  friend bool operator==(PermGroup const& a, PermGroup const& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  PermGroup() = default;
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;  // sorted
};

std::uint64_t group_order(PermGroup const& g);

// Elements of g fixing every listed (1-based) point. Throws on points outside
// 1..degree.
PermGroup pointwise_stabilizer(PermGroup const& g, std::span<const Point> points);

// Elements of g mapping each listed (1-based) point set onto itself.
PermGroup setwise_stabilizer(PermGroup const& g,
                             std::span<const std::vector<Point>> sets);

// C_g(h): elements of g commuting with every generator of h. Throws
// std::invalid_argument unless h <= g.
PermGroup centralizer(PermGroup const& g, PermGroup const& h);

}  // namespace symgen

#endif  // SYMGEN_PERM_GROUP_HPP
