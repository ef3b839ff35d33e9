#ifndef SYMGEN_REPRESENTATION_HPP
#define SYMGEN_REPRESENTATION_HPP

#include <vector>

#include "symgen/exact_matrix.hpp"
#include "symgen/family.hpp"
#include "symgen/report.hpp"
#include "symgen/word.hpp"

namespace symgen {

// Row i has its 1 in column p(i); points beyond p's degree are fixed. With
// this layout perm_matrix(p) * perm_matrix(q) == perm_matrix(p * q).
// Throws std::invalid_argument if p's degree exceeds dim.
ExactMatrix perm_matrix(Permutation const& p, std::size_t dim);

// The E-family block matrix for t_{123}:
//   [ I_3 - (2/3)J_3   (1/3)J_{3x(n-3)} ]
//   [ 0                I_{n-3}          ]
ExactMatrix e_block_matrix(std::size_t n);

// P_sigma^-1 * t_{123} * P_sigma, the image of t_{{1,2,3}^sigma}.
ExactMatrix e_generator_via(Permutation const& sigma);

// Image of the symmetric generator t_S.
//   A: permutation matrix of (s, n+1), dimension n+1.
//   D: identity except [[0,-1],[-1,0]] on the coordinates of s.
//   E: e_block_matrix conjugated by any sigma carrying {1,2,3} to s.
// Throws std::invalid_argument on a subset of the wrong cardinality.
ExactMatrix sym_gen_matrix(FamilySpec const& spec, KSubset const& s);

// The faithful matrix image of the target group: control group as
// permutation matrices, symmetric generators as above. Immutable.
class Representation {
 public:
  explicit Representation(FamilySpec spec);

  FamilySpec const& spec() const noexcept { return spec_; }
  std::size_t dim() const noexcept { return spec_.dim(); }
  // Indexed by SubsetIndex position.
  ExactMatrix const& generator(std::size_t index) const { return gens_.at(index); }
  std::vector<ExactMatrix> const& generators() const noexcept { return gens_; }
  ExactMatrix control(Permutation const& p) const { return perm_matrix(p, dim()); }
  std::vector<ExactMatrix> control_generator_images() const;

 private:
  FamilySpec spec_;
  std::vector<ExactMatrix> gens_;
};

// P_control * t_{S1} * ... * t_{Sm}. Throws on degree mismatch.
ExactMatrix evaluate_word(Word const& w, Representation const& rep);

// Per generator: involution, determinant -1, covariance
// P_pi^-1 t_S P_pi == t_{S^pi} under the control generators; and the relator
// image equals the identity.
CheckReport verify_representation(FamilySpec const& spec);

// Substitutes a=1, b=-2/3, c=1/3, a'=1, b'=0, c'=0 into the conditions a
// block matrix [[aI+bJ, cJ], [c'J, a'I+b'J]] must meet to be an involution of
// determinant -1 commuting with the stabilizer of {1,2,3}.
CheckReport e_block_constants_check();

struct IrreducibilityWitness {
  // t_{123} * (1,...,1)^T.
  std::vector<Rational> image_of_all_ones;
  bool all_ones_fixed_up_to_scalar = false;
  // Whether the sum-zero hyperplane (1,...,1)^perp is carried into itself.
  bool perp_invariant = false;
  // True when neither piece of the permutation-module splitting survives.
  bool breaks_decomposition() const { return !all_ones_fixed_up_to_scalar && !perp_invariant; }
};

// The E-family argument that the permutation-module decomposition
// <1> + <1>^perp is not respected by t_{123}. Vectors are columns.
// Throws std::invalid_argument unless family E.
IrreducibilityWitness irreducibility_witness(FamilySpec const& spec);

// D_n: e_{ij} := P_{(ij)} t_{ij} calculus. Checks disjoint generators
// commute, t_{12} t_{13} == P_{(23)} t_{12}, t_{12}t_{34} and t_{13}t_{24} in
// one double coset (by conjugation with (2,3)), e_{ij} diagonal with -1 at
// i, j, all e_{ij} commute and square to I, e_{ij} e_{ik} == e_{jk}, and
// <e_{12},...,e_{1n}> has order 2^{n-1}. Throws unless family D with n <= 8.
CheckReport dn_structure_check(FamilySpec const& spec);

// e_{ij} as a matrix (1-based i != j).
ExactMatrix dn_e_matrix(FamilySpec const& spec, Point i, Point j);

}  // namespace symgen

#endif  // SYMGEN_REPRESENTATION_HPP
