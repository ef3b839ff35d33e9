#include <catch2/catch_amalgamated.hpp>

#include "symgen/perm_group.hpp"
#include "symgen/progenitor.hpp"
#include "symgen/properties.hpp"
#include "symgen/representation.hpp"

using namespace symgen;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

std::vector<FamilySpec> in_scope_families() {
  std::vector<FamilySpec> out;
  for (std::size_t n = 1; n <= 8; ++n) out.emplace_back(Family::A, n);
  for (std::size_t n = 4; n <= 8; ++n) out.emplace_back(Family::D, n);
  for (std::size_t n = 6; n <= 8; ++n) out.emplace_back(Family::E, n);
  return out;
}

}  // namespace

TEST_CASE("exact rationals", "[exact]") {
  CHECK(parse_rational("-2/3") == q(-2, 3));
  CHECK(parse_rational("4/6") == q(2, 3));
  CHECK(to_string(q(6, 3)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("permutation matrices", "[matrix]") {
  CHECK(perm_matrix(Permutation(4), 4) == ExactMatrix::identity(4));
  auto m = perm_matrix(Permutation::transposition(3, 1, 2), 3);
  CHECK(m(0, 1) == 1);
  CHECK(m(1, 0) == 1);
  CHECK(m(2, 2) == 1);
  CHECK(perm_matrix(Permutation::from_cycles(3, {{1, 2, 3}}), 3).determinant() == 1);
  std::mt19937_64 rng(kDefaultSeed);
  for (int i = 0; i < 100; ++i) {
    auto p = random_permutation(6, rng), r = random_permutation(6, rng);
    REQUIRE(perm_matrix(p, 6) * perm_matrix(r, 6) == perm_matrix(p * r, 6));
    REQUIRE(perm_matrix(p, 6).determinant() == p.sign());
  }
  CHECK_THROWS_AS(perm_matrix(Permutation(5), 4), std::invalid_argument);
}

TEST_CASE("symmetric generator matrices", "[matrix]") {
  FamilySpec e6(Family::E, 6);
  auto t = sym_gen_matrix(e6, {1, 2, 3});
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      Rational expect = 0;
      if (i < 3 && j < 3) expect = (i == j ? q(1) : q(0)) - q(2, 3);
      if (i < 3 && j >= 3) expect = q(1, 3);
      if (i >= 3) expect = i == j ? 1 : 0;
      CHECK(t(i, j) == expect);
    }
  }
  FamilySpec d4(Family::D, 4);
  auto d = sym_gen_matrix(d4, {1, 2});
  CHECK(d(0, 1) == -1);
  CHECK(d(1, 0) == -1);
  CHECK(d(0, 0) == 0);
  CHECK(d(2, 2) == 1);
  CHECK(d(3, 3) == 1);
  FamilySpec a3(Family::A, 3);
  CHECK(sym_gen_matrix(a3, {1}) == perm_matrix(Permutation::transposition(4, 1, 4), 4));
  CHECK_THROWS_AS(sym_gen_matrix(e6, {1, 2}), std::invalid_argument);

  for (auto const& spec : in_scope_families()) {
    Representation rep(spec);
    for (auto const& g : rep.generators()) {
      REQUIRE((g * g).is_identity());
      REQUIRE(g.determinant() == -1);
    }
  }
}

TEST_CASE("E generators do not depend on the conjugating permutation", "[matrix]") {
  FamilySpec e7(Family::E, 7);
  // Two different carriers of {1,2,3} onto {2,5,7}.
  auto a = e_generator_via(Permutation(std::vector<Point>{1, 4, 6, 0, 2, 3, 5}));
  auto b = e_generator_via(Permutation(std::vector<Point>{6, 1, 4, 5, 3, 0, 2}));
  CHECK(a == b);
  CHECK(a == sym_gen_matrix(e7, {2, 5, 7}));
  auto c = e_generator_via(Permutation(std::vector<Point>{2, 1, 0, 6, 5, 4, 3}));
  CHECK(c == sym_gen_matrix(e7, {1, 2, 3}));
}

TEST_CASE("representation verification passes everywhere in scope", "[matrix]") {
  for (auto const& spec : in_scope_families()) {
    auto r = verify_representation(spec);
    INFO(r.to_text());
    CHECK(r.passed());
  }
  CHECK(e_block_constants_check().passed());
}

TEST_CASE("word evaluation", "[matrix]") {
  FamilySpec d4(Family::D, 4);
  Representation rep(d4);
  CHECK(evaluate_word(Word::identity(4), rep).is_identity());
  CHECK(evaluate_word(parse_word("t{1,2} t{1,3} t{1,2}", d4.subsets()), rep) ==
        perm_matrix(Permutation::transposition(4, 2, 3), 4));

  FamilySpec d5(Family::D, 5);
  CHECK(dn_e_matrix(d5, 1, 2) * dn_e_matrix(d5, 1, 3) == dn_e_matrix(d5, 2, 3));
  CHECK(dn_structure_check(FamilySpec(Family::D, 4)).passed());
  CHECK(dn_structure_check(d5).passed());
  auto e12 = dn_e_matrix(d4, 1, 2);
  CHECK(e12(0, 0) == -1);
  CHECK(e12(1, 1) == -1);
  CHECK(e12(2, 2) == 1);
  CHECK(e12 * dn_e_matrix(d4, 3, 4) == dn_e_matrix(d4, 3, 4) * e12);
  CHECK_THROWS_AS(dn_structure_check(FamilySpec(Family::A, 4)), std::invalid_argument);
}

TEST_CASE("products keep exact denominators", "[matrix]") {
  FamilySpec e8(Family::E, 8);
  Representation rep(e8);
  std::mt19937_64 rng(kDefaultSeed + 3);
  ExactMatrix m = ExactMatrix::identity(8);
  for (int i = 0; i < 20; ++i) m = m * rep.generator(rng() % rep.generators().size());
  mpz_class three_20;
  mpz_ui_pow_ui(three_20.get_mpz_t(), 3, 20);
  for (auto const& x : m.entries()) {
    REQUIRE(mpz_divisible_p(three_20.get_mpz_t(), x.get_den_mpz_t()) != 0);
  }
  CHECK(m.determinant() == 1);
}

TEST_CASE("all-ones vector under t{1,2,3}", "[matrix]") {
  auto image = [](std::size_t n) {
    return irreducibility_witness(FamilySpec(Family::E, n)).image_of_all_ones;
  };
  CHECK(image(6) == std::vector<Rational>{0, 0, 0, 1, 1, 1});
  CHECK(image(7) == std::vector<Rational>{q(1, 3), q(1, 3), q(1, 3), 1, 1, 1, 1});
  CHECK(image(8) == std::vector<Rational>{q(2, 3), q(2, 3), q(2, 3), 1, 1, 1, 1, 1});
  for (std::size_t n = 6; n <= 8; ++n) {
    CHECK(irreducibility_witness(FamilySpec(Family::E, n)).breaks_decomposition());
  }
  CHECK_THROWS_AS(irreducibility_witness(FamilySpec(Family::D, 6)), std::invalid_argument);
}
