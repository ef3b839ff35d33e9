#ifndef SYMGEN_FAMILY_HPP
#define SYMGEN_FAMILY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "symgen/subsets.hpp"
#include "symgen/word.hpp"

namespace symgen {

enum class Family { A, D, E };

char family_letter(Family f);
// Accepts "A", "D", "E" (case-insensitive). Throws std::invalid_argument.
Family parse_family(std::string const& s);

// The progenitor 2^{*C(n,k)} : S_n together with its single relator
// (t_{1..k} (k,k+1))^3.
//
// The relator is stored expanded as (k,k+1) * t_{1..k} t_{1..k-1,k+1} t_{1..k},
// a conjugate of the cube, so that applying it amounts to rewriting two
// adjacent letters that share k-1 points:
//   t_S t_{S'} = (x,y) t_S   where S = T+{x}, S' = T+{y}.
class FamilySpec {
 public:
  // Checks the ranges: A needs n >= 1, D needs n >= 4, E needs n in {6,7,8}.
  // With `experimental`, E accepts any n in 4..kMaxDegree (the caller must
  // then supply an enumeration cap). Throws std::invalid_argument.
  FamilySpec(Family family, std::size_t n, bool experimental = false);

  Family family() const noexcept { return family_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  bool experimental() const noexcept { return experimental_; }
  // True when (family, n) is one of the finite groups the library targets.
  bool in_scope() const noexcept;

  SubsetIndex const& subsets() const noexcept { return *subsets_; }
  std::size_t generator_count() const noexcept { return subsets_->size(); }
  // Representation dimension: n+1 for A, n otherwise.
  std::size_t dim() const noexcept { return family_ == Family::A ? n_ + 1 : n_; }
  std::uint64_t control_order() const noexcept { return factorial(n_); }

  // Absent only for A_1, where S_1 has no transposition (k,k+1) and the
  // progenitor 2 : S_1 is already W(A_1).
  std::optional<Word> const& relator() const noexcept { return relator_; }

  // Generators of S_n used throughout: (1,2) and (1,...,n).
  std::vector<Permutation> control_generators() const;
  // Adjacent transpositions (i,i+1), i = 1..n-1.
  std::vector<Permutation> adjacent_transpositions() const;

  // "E6", "D5", ...
  std::string name() const;

 private:
  Family family_;
  std::size_t n_;
  std::size_t k_;
  bool experimental_;
  std::shared_ptr<const SubsetIndex> subsets_;
  std::optional<Word> relator_;
};

}  // namespace symgen

#endif  // SYMGEN_FAMILY_HPP
