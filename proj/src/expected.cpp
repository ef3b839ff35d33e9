#include "symgen/expected.hpp"

#include <string_view>

#include "json.hpp"
#include "symgen/progenitor.hpp"

namespace symgen {

namespace detail {
extern const std::string_view expected_json;
}

namespace {

nlohmann::json const& table() {
  static nlohmann::json const parsed = nlohmann::json::parse(detail::expected_json);
  return parsed;
}

}  // namespace

std::optional<ExpectedCounts> expected_counts(FamilySpec const& spec) {
  auto const& families = table().at("families");
  std::string const letter(1, family_letter(spec.family()));
  if (!families.contains(letter)) return std::nullopt;
  auto const& family = families.at(letter);
  auto const& entries = family.at("entries");
  std::string const key = std::to_string(spec.n());
  if (!entries.contains(key)) return std::nullopt;
  auto const& e = entries.at(key);

  ExpectedCounts out;
  out.index = e.at("index").get<std::uint64_t>();
  out.rank = e.at("rank").get<std::uint64_t>();
  out.group_order = e.at("group_order").get<std::uint64_t>();
  if (e.contains("sizes")) out.sizes = e.at("sizes").get<std::vector<std::uint64_t>>();
  if (e.contains("stabilizers")) out.stabilizers = e.at("stabilizers").get<std::vector<std::uint64_t>>();
  if (e.contains("gf2_order")) out.gf2_order = e.at("gf2_order").get<std::uint64_t>();
  out.gf2_note = e.value("gf2_note", "");
  out.note = family.value("note", "");
  return out;
}

namespace {

std::string join(std::vector<std::uint64_t> const& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

CheckReport check_enumeration(EnumerationReport const& report, ExpectedCounts const& expected) {
  CheckReport r;
  auto const& spec = report.spec;
  r.title = "enumeration " + spec.name();
  auto same = [&](char const* what, std::uint64_t got, std::uint64_t want) {
    r.add(std::string(what) + " = " + std::to_string(want), got == want, "measured " + std::to_string(got));
  };
  same("index", report.index, expected.index);
  same("rank", report.rank(), expected.rank);
  same("group order", report.group_order, expected.group_order);

  std::vector<std::uint64_t> sizes, stabilizers;
  std::uint64_t total = 0;
  bool products = true;
  for (auto const& rec : report.records) {
    sizes.push_back(rec.size);
    stabilizers.push_back(rec.stabilizer_order);
    total += rec.size;
    if (rec.size * rec.stabilizer_order != spec.control_order()) products = false;
  }
  r.add("double coset sizes sum to the index", total == report.index);
  r.add("size x stabilizer order = n! for every record", products);
  if (!expected.sizes.empty()) {
    r.add("double coset sizes " + join(expected.sizes), sizes == expected.sizes, join(sizes));
  }
  if (!expected.stabilizers.empty()) {
    r.add("stabilizer orders " + join(expected.stabilizers), stabilizers == expected.stabilizers,
          join(stabilizers));
  }
  if (spec.family() == Family::D) {
    bool canonical = true;
    for (auto const& rec : report.records) {
      if (!(dn_canonical(rec.rep_word, spec) == rec.rep_word)) canonical = false;
    }
    r.add("representatives are t12 t34 ... (dn_canonical)", canonical);
  }
  return r;
}

}  // namespace symgen
