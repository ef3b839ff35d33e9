#include <catch2/catch_amalgamated.hpp>

#include "symgen/coset_enum.hpp"
#include "symgen/progenitor.hpp"
#include "symgen/properties.hpp"
#include "symgen/representation.hpp"

using namespace symgen;

namespace {

Word w(FamilySpec const& spec, std::string const& text) { return parse_word(text, spec.subsets()); }

}  // namespace

TEST_CASE("words print and parse", "[word]") {
  FamilySpec d5(Family::D, 5);
  auto x = w(d5, "(1,2)(3,4) * t{1,2} t{3,4}");
  CHECK(format_word(x, d5.subsets()) == "(1,2)(3,4) * t{1,2} t{3,4}");
  CHECK(format_word(Word::identity(5), d5.subsets()) == "()");
  CHECK(w(d5, "t{2,1}") == w(d5, "t{1,2}"));
  CHECK_THROWS(w(d5, "t{1,2,3}"));
  CHECK_THROWS(w(d5, "t{1,6}"));
}

TEST_CASE("multiply pushes the control element left", "[progenitor]") {
  FamilySpec a4(Family::A, 4);
  auto x = w(a4, "(1,2) * t{1}");
  CHECK(multiply(x, x, a4) == w(a4, "t{2} t{1}"));
  CHECK(multiply(x, Word::identity(4), a4) == x);
  FamilySpec d4(Family::D, 4);
  CHECK(multiply(w(d4, "t{1,2}"), w(d4, "t{1,2}"), d4).is_identity());
  CHECK_THROWS_AS(multiply(x, Word::identity(5), a4), std::invalid_argument);
}

TEST_CASE("A_n reduction", "[progenitor]") {
  FamilySpec a5(Family::A, 5);
  Representation rep(a5);
  CHECK(an_reduce(w(a5, "t{1} t{2}"), a5) == w(a5, "(1,2) * t{1}"));
  CHECK(an_reduce(Word{Permutation(5), {0, 0}}, a5).is_identity());
  auto x = w(a5, "t{1} t{2} t{3}");
  auto r = an_reduce(x, a5);
  CHECK(r.length() == 1);
  CHECK(evaluate_word(r, rep) == evaluate_word(x, rep));
  CHECK_THROWS_AS(an_reduce(x, FamilySpec(Family::D, 5)), std::invalid_argument);
}

TEST_CASE("D_n shortening and canonical representatives", "[progenitor]") {
  FamilySpec d5(Family::D, 5);
  Representation rep(d5);
  auto s = shorten_common_index(w(d5, "t{1,2} t{1,3}"), d5);
  CHECK(s.length() == 1);
  CHECK(same_double_coset(s, w(d5, "t{1,2}"), rep));
  CHECK(s == w(d5, "(2,3) * t{1,2}"));

  auto x = w(d5, "t{1,2} t{3,4} t{1,5}");
  auto y = shorten_common_index(x, d5);
  REQUIRE(y.length() == 2);
  auto const& sub = d5.subsets();
  CHECK((sub.mask_of(y.letters[0]) & sub.mask_of(y.letters[1])) == 0);
  CHECK(evaluate_word(y, rep) == evaluate_word(x, rep));
  CHECK(same_double_coset(x, y, rep));

  auto disjoint = w(d5, "t{1,2} t{3,4}");
  CHECK(shorten_common_index(disjoint, d5) == disjoint);
  CHECK(dn_canonical(w(d5, "t{1,3} t{2,4}"), d5) == disjoint);
  CHECK(dn_canonical(Word::identity(5), d5).is_identity());
  CHECK(dn_canonical(dn_canonical(x, d5), d5) == dn_canonical(x, d5));
  CHECK_THROWS_AS(shorten_common_index(x, FamilySpec(Family::A, 5)), std::invalid_argument);
}

TEST_CASE("dn_canonical is constant on double cosets", "[progenitor][property]") {
  FamilySpec d6(Family::D, 6);
  std::mt19937_64 rng(kDefaultSeed + 7);
  for (int trial = 0; trial < 500; ++trial) {
    Word x = random_word(d6, rng, 10);
    Word left{random_permutation(6, rng), {}}, right{random_permutation(6, rng), {}};
    Word y = multiply(multiply(left, x, d6), right, d6);
    REQUIRE(dn_canonical(x, d6) == dn_canonical(y, d6));
  }
}

TEST_CASE("relators hold in every representation", "[progenitor]") {
  for (std::size_t n = 2; n <= 9; ++n) {
    FamilySpec a(Family::A, n);
    CHECK(evaluate_word(*a.relator(), Representation(a)).is_identity());
  }
  for (std::size_t n = 4; n <= 9; ++n) {
    FamilySpec d(Family::D, n);
    CHECK(evaluate_word(*d.relator(), Representation(d)).is_identity());
  }
  for (std::size_t n = 6; n <= 8; ++n) {
    FamilySpec e(Family::E, n);
    CHECK(evaluate_word(*e.relator(), Representation(e)).is_identity());
  }
  CHECK_FALSE(FamilySpec(Family::A, 1).relator().has_value());
}

TEST_CASE("word normal form respects the group law", "[progenitor][property]") {
  for (auto const& spec : {FamilySpec(Family::A, 6), FamilySpec(Family::D, 6), FamilySpec(Family::E, 6)}) {
    auto r = check_word_homomorphism(spec, 500, kDefaultSeed);
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.passed());
  }
  auto s = check_shorten_invariance(FamilySpec(Family::D, 7), 500, kDefaultSeed);
  INFO(s.first_failure);
  CHECK(s.passed());
}

TEST_CASE("family ranges", "[family]") {
  CHECK_THROWS_AS(FamilySpec(Family::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec(Family::E, 9), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec(Family::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec(Family::A, 17), std::invalid_argument);
  CHECK_NOTHROW(FamilySpec(Family::E, 9, true));
  CHECK_FALSE(FamilySpec(Family::E, 9, true).in_scope());
  CHECK(parse_family("e") == Family::E);
  CHECK_THROWS_AS(parse_family("B"), std::invalid_argument);
}
