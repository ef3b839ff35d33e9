#ifndef SYMGEN_EXPECTED_HPP
#define SYMGEN_EXPECTED_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symgen/coset_enum.hpp"
#include "symgen/family.hpp"
#include "symgen/report.hpp"

namespace symgen {

// Reference values compiled in from data/expected.json.
struct ExpectedCounts {
  std::uint64_t index = 0;
  std::uint64_t rank = 0;
  std::uint64_t group_order = 0;
  // Double coset sizes and stabilizer orders in enumeration order, if known.
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> stabilizers;
  std::optional<std::uint64_t> gf2_order;
  std::string gf2_note;
  std::string note;  // family-level provenance
};

// nullopt when the table has no entry (experimental families).
std::optional<ExpectedCounts> expected_counts(FamilySpec const& spec);

// Index, rank, group order and (when tabulated) the size and stabilizer
// sequences, plus the internal consistency of the records. For D, every
// representative must already be in dn_canonical form.
CheckReport check_enumeration(EnumerationReport const& report, ExpectedCounts const& expected);

}  // namespace symgen

#endif  // SYMGEN_EXPECTED_HPP
