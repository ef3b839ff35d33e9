#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "symgen/coset_enum.hpp"
#include "symgen/oracles.hpp"
#include "symgen/properties.hpp"
#include "symgen/representation.hpp"

using namespace symgen;

namespace {

Word w(FamilySpec const& spec, std::string const& text) { return parse_word(text, spec.subsets()); }

}  // namespace

TEST_CASE("A oracle", "[oracle]") {
  FamilySpec a5(Family::A, 5);
  CHECK(a_oracle_map(w(a5, "t{1}"), a5) == Permutation::transposition(6, 1, 6));
  CHECK(a_oracle_map(*a5.relator(), a5).is_identity());
  CHECK(a_oracle_map(w(a5, "t{1} t{2}"), a5) == a_oracle_map(w(a5, "(1,2) * t{1}"), a5));
  CHECK_THROWS_AS(a_oracle_map(w(a5, "t{1}"), FamilySpec(Family::D, 5)), std::invalid_argument);
  for (std::size_t n = 2; n <= 7; ++n) {
    auto r = check_oracle_agreement(FamilySpec(Family::A, n), 500, kDefaultSeed + n);
    INFO(r.first_failure);
    CHECK(r.passed());
  }
}

TEST_CASE("D oracle", "[oracle]") {
  FamilySpec d4(Family::D, 4);
  auto t12 = d_oracle_map(w(d4, "t{1,2}"), d4);
  CHECK(t12.perm == Permutation::transposition(4, 1, 2));
  CHECK(t12.signs == std::vector<std::int8_t>{-1, -1, 1, 1});
  auto e12 = d_oracle_map(w(d4, "(1,2) * t{1,2}"), d4);
  CHECK(e12.perm.is_identity());
  CHECK(e12.signs == std::vector<std::int8_t>{-1, -1, 1, 1});
  CHECK(d_oracle_map(w(d4, "t{1,2} t{1,2}"), d4) == SignedPermutation::identity(4));
  for (std::size_t n = 4; n <= 8; ++n) {
    auto r = check_oracle_agreement(FamilySpec(Family::D, n), 500, kDefaultSeed + n);
    INFO(r.first_failure);
    CHECK(r.passed());
  }
  for (auto const& x : d_oracle_elements(5)) CHECK(x.negative_count() % 2 == 0);
}

TEST_CASE("D4 matrix group is the even-signed permutation group", "[oracle]") {
  FamilySpec d4(Family::D, 4);
  Representation rep(d4);
  std::vector<ExactMatrix> gens = rep.generators();
  for (auto const& p : rep.control_generator_images()) gens.push_back(p);
  std::set<SignedPermutation> group;
  std::vector<ExactMatrix> queue{ExactMatrix::identity(4)};
  group.insert(*as_signed_permutation(queue[0]));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto const& g : gens) {
      ExactMatrix x = queue[head] * g;
      auto s = as_signed_permutation(x);
      REQUIRE(s);
      if (group.insert(*s).second) queue.push_back(std::move(x));
    }
  }
  // Every permutation with every even sign pattern, built directly.
  std::set<SignedPermutation> even;
  std::vector<Point> img{0, 1, 2, 3};
  do {
    for (unsigned mask = 0; mask < 16; ++mask) {
      if (__builtin_popcount(mask) % 2) continue;
      std::vector<std::int8_t> signs(4);
      for (unsigned i = 0; i < 4; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
      even.insert({Permutation(img), signs});
    }
  } while (std::next_permutation(img.begin(), img.end()));
  CHECK(group.size() == 192);
  CHECK(group == even);
}

TEST_CASE("order table and oracle orders", "[oracle]") {
  CHECK(oracle_group_order(Family::A, 4).order == 120);
  CHECK(oracle_group_order(Family::A, 4).exhaustive);
  CHECK(oracle_group_order(Family::D, 4).order == 192);
  CHECK(oracle_group_order(Family::E, 7).order == 2903040);
  for (std::size_t n = 1; n <= 7; ++n) CHECK(oracle_group_order(Family::A, n).matches_table);
  for (std::size_t n = 4; n <= 8; ++n) CHECK(oracle_group_order(Family::D, n).matches_table);
  CHECK_THROWS_AS(order_table(Family::E, 9), std::invalid_argument);
  for (std::size_t n = 6; n <= 8; ++n) {
    CHECK(order_table(Family::E, n) == 696729600 / (n == 8 ? 1 : (n == 7 ? 240 : 13440)));
  }
}

TEST_CASE("signed permutation products follow matrix products", "[oracle]") {
  std::mt19937_64 rng(kDefaultSeed + 11);
  auto random_signed = [&](std::size_t n) {
    SignedPermutation s{random_permutation(n, rng), std::vector<std::int8_t>(n)};
    for (auto& x : s.signs) x = rng() % 2 ? 1 : -1;
    return s;
  };
  auto to_matrix = [](SignedPermutation const& s) {
    ExactMatrix m(s.degree());
    for (Point i = 0; i < s.degree(); ++i) m(i, s.perm(i)) = s.signs[i];
    return m;
  };
  for (int i = 0; i < 200; ++i) {
    auto a = random_signed(5), b = random_signed(5);
    REQUIRE(to_matrix(a * b) == to_matrix(a) * to_matrix(b));
    REQUIRE(*as_signed_permutation(to_matrix(a)) == a);
  }
}
