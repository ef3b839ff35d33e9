#ifndef SYMGEN_ORACLES_HPP
#define SYMGEN_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symgen/exact_matrix.hpp"
#include "symgen/family.hpp"
#include "symgen/permutation.hpp"
#include "symgen/word.hpp"

namespace symgen {

// A permutation together with a sign per point. Acts like the matrix with
// entry signs[i] at (i, perm(i)); products follow matrix multiplication, so
// (p, s) * (q, r) = (p * q, i -> s[i] * r[p(i)]).
struct SignedPermutation {
  Permutation perm;
  std::vector<std::int8_t> signs;  // +1 / -1, 0-based

  static SignedPermutation identity(std::size_t n);
  std::size_t degree() const noexcept { return perm.degree(); }
  std::size_t negative_count() const;
  // "(1,2) [-,-,+,+]"
  std::string to_string() const;

  friend bool operator==(SignedPermutation const&, SignedPermutation const&) = default;
  friend auto operator<=>(SignedPermutation const&, SignedPermutation const&) = default;
};

SignedPermutation operator*(SignedPermutation const& a, SignedPermutation const& b);

// Reads a signed permutation matrix; nullopt for anything else.
std::optional<SignedPermutation> as_signed_permutation(ExactMatrix const& m);

// W(A_n) as S_{n+1}: control on {1..n}, t_i -> (i, n+1), word order.
// Throws std::invalid_argument unless family A.
Permutation a_oracle_map(Word const& w, FamilySpec const& spec);

// W(D_n) as even-signed permutations: t_{ij} -> swap i, j and negate both.
// Throws std::invalid_argument unless family D.
SignedPermutation d_oracle_map(Word const& w, FamilySpec const& spec);

// Known orders: A (n+1)!, D 2^{n-1} n!, E6/E7/E8 from the table.
// Throws std::invalid_argument for anything outside that list.
std::uint64_t order_table(Family family, std::size_t n);

struct OracleOrder {
  std::uint64_t order = 0;
  bool exhaustive = false;  // closure computed, not just looked up
  bool matches_table = false;
};

// Closure of the oracle generators for A (n <= 7) and D (n <= 6); the table
// value otherwise. Throws std::invalid_argument when out of scope.
OracleOrder oracle_group_order(Family family, std::size_t n);

// All elements of the D oracle group (closure; n <= 6).
std::vector<SignedPermutation> d_oracle_elements(std::size_t n);

}  // namespace symgen

#endif  // SYMGEN_ORACLES_HPP
