#ifndef SYMGEN_DIHEDRAL_HPP
#define SYMGEN_DIHEDRAL_HPP

#include <optional>
#include <vector>

#include "symgen/exact_matrix.hpp"
#include "symgen/perm_group.hpp"
#include "symgen/representation.hpp"

namespace symgen {

// Reads a permutation of degree n off a permutation matrix whose coordinates
// beyond n are fixed; nullopt for anything else.
std::optional<Permutation> as_control_element(ExactMatrix const& m, std::size_t n);

struct DihedralIntersection {
  std::size_t dihedral_order = 0;
  // <t_i, t_j> intersected with the control group, sorted.
  std::vector<Permutation> intersection;
  // Whether every element of the intersection lies in `bound`.
  bool contained = false;
};

// Enumerates the finite dihedral group <ti, tj> in the matrix image and
// intersects it with the permutation matrices of S_n. Throws
// std::invalid_argument if ti or tj is not an involution, or if the group
// exceeds `limit` elements.
DihedralIntersection dihedral_intersection_check(ExactMatrix const& ti, ExactMatrix const& tj,
                                                 std::size_t n, PermGroup const& bound,
                                                 std::size_t limit = 100000);

// The containment <t_a, t_b> ∩ N <= C_N(Stab_N(a, b)) for two symmetric
// generators of a representation, with N = S_n and Stab_N(a, b) the elements
// fixing both subsets.
DihedralIntersection dihedral_intersection_check(Representation const& rep, KSubset const& a,
                                                 KSubset const& b);

}  // namespace symgen

#endif  // SYMGEN_DIHEDRAL_HPP
