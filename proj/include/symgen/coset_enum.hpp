#ifndef SYMGEN_COSET_ENUM_HPP
#define SYMGEN_COSET_ENUM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "symgen/exact_matrix.hpp"
#include "symgen/family.hpp"
#include "symgen/representation.hpp"
#include "symgen/word.hpp"

namespace symgen {

// The first `permuted_rows` rows sorted descending (entrywise lexicographic,
// exact comparison), so every permutation matrix canonicalizes to I; later
// rows are left in place. 0 means all rows.
//
// The control group S_n acts by permutation matrices moving only the first n
// coordinates, and left multiplication by such a matrix only permutes the
// first n rows. So for g, h in the matrix image Ng == Nh exactly when
// canonical_form(g, n) == canonical_form(h, n). For A_n the last coordinate
// is fixed; for D and E, n is the full dimension.
ExactMatrix canonical_form(ExactMatrix const& m, std::size_t permuted_rows = 0);

struct CanonicalCoset {
  ExactMatrix canon;
  Word witness;
};

CanonicalCoset canonicalize(ExactMatrix const& m, FamilySpec const& spec, Word witness = {});

struct DoubleCosetRecord {
  Word rep_word;                 // shortest, then lexicographically least
  std::uint64_t size = 0;        // |N : N^(w)|, single cosets in NwN
  std::uint64_t stabilizer_order = 0;  // |N^(w)|
};

struct EnumerationReport {
  FamilySpec spec;
  std::uint64_t index = 0;  // |G : N|
  std::vector<DoubleCosetRecord> records;
  std::uint64_t group_order = 0;  // index * n!
  double seconds = 0;
  unsigned threads = 1;

  std::size_t rank() const noexcept { return records.size(); }
};

// Thrown when the breadth-first search discovers more cosets than allowed,
// usually a sign of an infinite image.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::uint64_t cap, std::uint64_t discovered);
  std::uint64_t cap() const noexcept { return cap_; }
  std::uint64_t discovered() const noexcept { return discovered_; }

 private:
  std::uint64_t cap_;
  std::uint64_t discovered_;
};

// Ten times the known index for in-scope families; 0 otherwise (the caller
// must choose).
std::uint64_t default_cap(FamilySpec const& spec);

// Worker count: SYMGEN_THREADS if set, else hardware concurrency.
unsigned default_threads();

struct EnumerateOptions {
  std::uint64_t cap = 0;  // 0 means default_cap(spec)
  unsigned threads = 0;   // 0 means default_threads()
};

// Breadth-first search over canonical cosets from N, expanding each coset by
// right multiplication with every symmetric generator in SubsetIndex order,
// FIFO. Single cosets are then grouped into N-orbits under right
// multiplication by the adjacent transpositions to give the double cosets.
//
// Workers only compute products; insertion happens in a fixed order, so the
// report (witnesses included) does not depend on the thread count.
EnumerationReport enumerate(FamilySpec const& spec, EnumerateOptions options = {});

// |N^(w)| = n! / |orbit of the coset under N|, by orbit closure.
std::uint64_t coset_stabilizer_order(CanonicalCoset const& c, FamilySpec const& spec);

// All canonical cosets in the N-orbit of c (the single cosets of NwN).
std::vector<ExactMatrix> double_coset_members(ExactMatrix const& canon, FamilySpec const& spec);

// [a] == [b]: the cosets of a and b lie in one N-orbit.
bool same_double_coset(Word const& a, Word const& b, Representation const& rep);

// Table with columns "Label [w]", coset stabilizing subgroup order and
// |N:N^(w)|, followed by the totals.
std::string format_report_text(EnumerationReport const& report);
// JSON with the same records plus totals and timing.
std::string format_report_json(EnumerationReport const& report);

}  // namespace symgen

#endif  // SYMGEN_COSET_ENUM_HPP
