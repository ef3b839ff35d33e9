#ifndef SYMGEN_PROPERTIES_HPP
#define SYMGEN_PROPERTIES_HPP

#include <cstdint>
#include <random>
#include <string>

#include "symgen/family.hpp"
#include "symgen/permutation.hpp"
#include "symgen/word.hpp"

namespace symgen {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Seeded randomized checks. Every suite draws from its own mt19937_64 seeded
// with `seed`, so results depend only on (spec, trials, seed).
struct PropertyResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0 && trials > 0; }
  void fail(std::string what) {
    if (failures++ == 0) first_failure = std::move(what);
  }
};

Permutation random_permutation(std::size_t n, std::mt19937_64& rng);
// Uniform control element and 0..max_letters letters, freely reduced.
Word random_word(FamilySpec const& spec, std::mt19937_64& rng, std::size_t max_letters);

// evaluate(a * b) == evaluate(a) evaluate(b) and evaluate(a^-1) evaluate(a)
// == I; for A also evaluate(an_reduce(a)) == evaluate(a).
PropertyResult check_word_homomorphism(FamilySpec const& spec, std::size_t trials, std::uint64_t seed);

// D only: shorten_common_index keeps the double coset (and the element),
// leaves no shared points, strictly shortens words with a shared point, and
// dn_canonical lands in the same double coset.
PropertyResult check_shorten_invariance(FamilySpec const& spec, std::size_t trials, std::uint64_t seed);

// canonical_form(P_pi M) == canonical_form(M) for random words and pi.
PropertyResult check_canonical_invariance(FamilySpec const& spec, std::size_t trials, std::uint64_t seed);

// <t_a, t_b> ∩ N <= C_N(Stab_N(a, b)) for random pairs of generators, plus
// the pair ({1..k}, {1..k-1,k+1}) first.
PropertyResult check_dihedral_containment(FamilySpec const& spec, std::size_t trials, std::uint64_t seed);

// A and D only: matrix image agrees with the permutation or signed
// permutation oracle; D results always have an even number of sign flips.
PropertyResult check_oracle_agreement(FamilySpec const& spec, std::size_t trials, std::uint64_t seed);

// E only: reduce_mod2 commutes with products of random words.
PropertyResult check_mod2_homomorphism(FamilySpec const& spec, std::size_t trials, std::uint64_t seed);

}  // namespace symgen

#endif  // SYMGEN_PROPERTIES_HPP
