#ifndef SYMGEN_WORD_HPP
#define SYMGEN_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "symgen/permutation.hpp"

namespace symgen {

class SubsetIndex;

// An element of the progenitor in normal form pi * t_{S1} ... t_{Sm}: the
// control element on the left, then symmetric generators named by their
// SubsetIndex position. Adjacent equal letters never occur (t^2 = 1 is applied
// eagerly by every operation that builds a Word).
struct Word {
  Permutation control;
  std::vector<std::uint32_t> letters;

  static Word identity(std::size_t n) { return Word{Permutation(n), {}}; }

  std::size_t length() const noexcept { return letters.size(); }
  bool is_identity() const { return letters.empty() && control.is_identity(); }

  friend bool operator==(Word const&, Word const&) = default;
};

// Cancels adjacent equal letters until none remain.
void free_reduce(std::vector<std::uint32_t>& letters);

// Relabels every letter S to its image under p.
std::vector<std::uint32_t> relabel(std::vector<std::uint32_t> const& letters,
                                   Permutation const& p, SubsetIndex const& subsets);

// "(1,2)(3,4) * t{1,2} t{3,4}". The identity control is omitted; the trivial
// word prints as "()".
std::string format_word(Word const& w, SubsetIndex const& subsets);

// Inverse of format_word. Letters are t{...} tokens; the control part is
// optional.
Word parse_word(std::string const& text, SubsetIndex const& subsets);

}  // namespace symgen

#endif  // SYMGEN_WORD_HPP
