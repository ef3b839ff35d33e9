#ifndef SYMGEN_PROGENITOR_HPP
#define SYMGEN_PROGENITOR_HPP

#include "symgen/family.hpp"
#include "symgen/word.hpp"

namespace symgen {

// Product a*b in the progenitor. b's control element is pushed left through
// a's letters using pi^-1 t_S pi = t_{S^pi}:
//   (pa wa)(pb wb) = (pa pb) (wa^pb) wb
// followed by free reduction. Throws std::invalid_argument on degree mismatch.
Word multiply(Word const& a, Word const& b, FamilySpec const& spec);

// Inverse in the progenitor: (pi w)^-1 = pi^-1 (reverse(w))^(pi^-1).
Word inverse(Word const& w, FamilySpec const& spec);

// A_n: repeatedly rewrites t_i t_j = (i,j) t_i at the front of the word until
// at most one letter remains. The result is equal to w in W(A_n).
Word an_reduce(Word const& w, FamilySpec const& spec);

// D_n: removes every pair of letters sharing a point.
//
// Adjacent pair t_{ab} t_{ac}: replaced by (b,c) t_{ab}.
// Separated pair t_{ab} ... t_{cd} t_{ae} (closest such pair, so t_{cd} is
// disjoint from both): insert t_{ac}^2 to get
//   t_{cd} t_{ae} = (d,a)(c,e) t_{ed} t_{ac},
// which moves the shared point one letter closer once the control element is
// pushed to the front.
//
// Every move is an identity in the group, so the result equals w as an
// element; the guarantee callers rely on is the weaker one that the double
// coset [w] is unchanged. Throws std::invalid_argument unless family D.
Word shorten_common_index(Word const& w, FamilySpec const& spec);

// D_n: the double coset representative t_{12} t_{34} ... t_{2m-1,2m} of [w],
// with identity control.
Word dn_canonical(Word const& w, FamilySpec const& spec);

// The standard D_n representative with m disjoint letters.
Word dn_standard_word(std::size_t m, FamilySpec const& spec);

}  // namespace symgen

#endif  // SYMGEN_PROGENITOR_HPP
