#include <catch2/catch_amalgamated.hpp>

#include "symgen/expected.hpp"
#include "symgen/matrix_io.hpp"
#include "symgen/representation.hpp"

using namespace symgen;

TEST_CASE("matrix documents round trip", "[io]") {
  for (auto const& spec : {FamilySpec(Family::E, 6), FamilySpec(Family::D, 4), FamilySpec(Family::A, 3)}) {
    auto doc = build_matrix_document(spec, true);
    auto back = parse_matrix_document(matrix_document_json(doc));
    REQUIRE(back.generators.size() == doc.generators.size());
    for (std::size_t i = 0; i < doc.generators.size(); ++i) {
      CHECK(back.generators[i].label == doc.generators[i].label);
      CHECK(back.generators[i].matrix == doc.generators[i].matrix);
      CHECK(back.mod2_generators[i].second == doc.mod2_generators[i].second);
    }
    REQUIRE(back.control.size() == doc.control.size());
    for (std::size_t i = 0; i < doc.control.size(); ++i) CHECK(back.control[i].matrix == doc.control[i].matrix);
  }
  auto a3 = build_matrix_document(FamilySpec(Family::A, 3), false);
  CHECK(a3.generators.front().matrix.dim() == 4);
  CHECK(a3.generators.front().matrix.is_permutation_matrix());
  auto d4 = build_matrix_document(FamilySpec(Family::D, 4), true);
  for (auto const& [label, m] : d4.mod2_generators) CHECK(m.is_permutation_matrix());
  CHECK(matrix_to_json(sym_gen_matrix(FamilySpec(Family::E, 6), {1, 2, 3}))[0][0] == "1/3");
  CHECK_THROWS(matrix_from_json(nlohmann::json::parse(R"([["1","0"],["0"]])")));
}

TEST_CASE("expected tables", "[io]") {
  auto e6 = expected_counts(FamilySpec(Family::E, 6));
  REQUIRE(e6);
  CHECK(e6->index == 72);
  CHECK(e6->sizes == std::vector<std::uint64_t>{1, 20, 30, 20, 1});
  CHECK(e6->stabilizers == std::vector<std::uint64_t>{720, 36, 24, 36, 720});
  CHECK(expected_counts(FamilySpec(Family::E, 8))->rank == 35);
  CHECK(expected_counts(FamilySpec(Family::D, 7))->index == 64);
  CHECK_FALSE(expected_counts(FamilySpec(Family::E, 9, true)));
}
