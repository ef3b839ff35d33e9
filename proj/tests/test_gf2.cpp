#include <catch2/catch_amalgamated.hpp>

#include "symgen/gf2.hpp"
#include "symgen/properties.hpp"
#include "symgen/representation.hpp"

using namespace symgen;

namespace {

Gf2Vector ones(std::size_t dim) { return static_cast<Gf2Vector>((1u << dim) - 1); }

// Orders of the finite matrix groups, brute force, for tiny cross-checks.
std::size_t closure_size(std::vector<Gf2Matrix> const& gens) {
  std::vector<Gf2Matrix> seen{Gf2Matrix::identity(gens[0].dim())};
  for (std::size_t head = 0; head < seen.size(); ++head) {
    for (auto const& g : gens) {
      Gf2Matrix x = seen[head] * g;
      if (std::find(seen.begin(), seen.end(), x) == seen.end()) seen.push_back(x);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("reduction mod 2", "[gf2]") {
  FamilySpec e6(Family::E, 6);
  auto t = reduce_mod2(sym_gen_matrix(e6, {1, 2, 3}));
  CHECK(t.to_rows() == std::vector<std::string>{"100111", "010111", "001111", "000100", "000010", "000001"});
  CHECK(reduce_mod2(ExactMatrix::identity(5)).is_identity());
  FamilySpec d5(Family::D, 5);
  CHECK(reduce_mod2(sym_gen_matrix(d5, {1, 2})) ==
        reduce_mod2(perm_matrix(Permutation::transposition(5, 1, 2), 5)));
  ExactMatrix half = ExactMatrix::identity(2);
  half(0, 1) = Rational(1, 2);
  CHECK_THROWS_AS(reduce_mod2(half), std::invalid_argument);
  CHECK_THROWS_AS(reduce_mod2(ExactMatrix::identity(9)), std::invalid_argument);

  auto r = check_mod2_homomorphism(FamilySpec(Family::E, 7), 500, kDefaultSeed);
  INFO(r.first_failure);
  CHECK(r.passed());
}

TEST_CASE("forms", "[gf2]") {
  auto q6 = Gf2Form::sum_of_distinct_products(6);
  CHECK(q6.quadratic(0b11) == 1);
  CHECK(q6.quadratic(0b111) == 1);
  CHECK(q6.quadratic(0b1111) == 0);
  // Polar form of sum_{i<j} x_i x_j is x (J - I) y^T.
  for (unsigned x = 0; x < 64; ++x) {
    for (unsigned y = 0; y < 64; ++y) {
      auto vx = static_cast<Gf2Vector>(x), vy = static_cast<Gf2Vector>(y);
      int expect = (parity(vx) & parity(vy)) ^ parity(static_cast<Gf2Vector>(vx & vy));
      REQUIRE(q6.bilinear(vx, vy) == expect);
    }
  }
  CHECK(preserves_form(Gf2Matrix::identity(6), q6));
  CHECK(preserves_form(Gf2Matrix::identity(7), Gf2Form::bilinear_j(7)));
  Gf2Matrix shear = Gf2Matrix::identity(6);
  shear.set(0, 1, true);
  CHECK_FALSE(preserves_form(shear, q6));
  CHECK_THROWS_AS(preserves_form(shear, Gf2Form::bilinear_j(7)), std::invalid_argument);
}

TEST_CASE("E6 mod 2", "[gf2]") {
  FamilySpec e6(Family::E, 6);
  auto gens = gf2_generators(e6);
  auto q = Gf2Form::sum_of_distinct_products(6);
  for (auto const& g : gens) CHECK(preserves_form(g, q));
  CHECK(fixed_vectors(gens).empty());
  CHECK(spin_irreducible(gens));
  CHECK(gf2_image_order(e6).order == 51840);
}

TEST_CASE("E7 mod 2", "[gf2]") {
  FamilySpec e7(Family::E, 7);
  auto gens = gf2_generators(e7);
  for (auto const& g : gens) CHECK(preserves_form(g, Gf2Form::bilinear_j(7)));
  CHECK(fixed_vectors(gens) == std::vector<Gf2Vector>{ones(7)});
  CHECK_FALSE(spin_irreducible(gens));
  CHECK(spin(ones(7), gens).size() == 1);

  auto res = restrict_to_perp(gens, ones(7), Gf2Form::bilinear_j(7), Gf2Form::sum_of_distinct_products(7));
  CHECK(res.basis.size() == 6);
  CHECK(res.symplectic());
  CHECK(res.form_invariant);
  CHECK(spin_irreducible(res.gens));
  CHECK(std::find(res.basis.begin(), res.basis.end(), Gf2Vector{0b1000001}) != res.basis.end());

  CHECK_THROWS_AS(restrict_to_perp(gens, 0b1, Gf2Form::bilinear_j(7), Gf2Form::sum_of_distinct_products(7)),
                  std::invalid_argument);
  CHECK(gf2_image_order(e7).order == 1451520);
}

TEST_CASE("E8 mod 2", "[gf2]") {
  FamilySpec e8(Family::E, 8);
  auto gens = gf2_generators(e8);
  for (auto const& g : gens) CHECK(preserves_form(g, Gf2Form::sum_of_distinct_products(8)));
  CHECK(vector_to_string(reduce_mod2(sym_gen_matrix(e8, {1, 2, 3})).apply(ones(8)), 8) == "00011111");
  CHECK(fixed_vectors(gens).empty());
  CHECK(spin_irreducible(gens));
  CHECK(gf2_image_order(e8).order == 348364800);
}

TEST_CASE("module helpers", "[gf2]") {
  std::vector<Gf2Matrix> id{Gf2Matrix::identity(4)};
  CHECK(fixed_vectors(id).size() == 4);
  CHECK_FALSE(spin_irreducible(id));
  CHECK(echelon_basis(std::vector<Gf2Vector>{0b11, 0b01, 0b10}).size() == 2);
  Gf2Matrix m = Gf2Matrix::parse(std::vector<std::string>{"011", "101", "110"});
  CHECK(m.transpose() == m);
  CHECK(m * Gf2Matrix::identity(3) == m);
  CHECK(m.apply(0b001) == 0b110);
  CHECK(m.apply_row(0b001) == 0b110);
  CHECK_THROWS(Gf2Matrix::parse(std::vector<std::string>{"01", "2"}));
}

TEST_CASE("D and A collapse to permutation matrices mod 2", "[gf2]") {
  for (std::size_t n = 4; n <= 8; ++n) {
    FamilySpec d(Family::D, n);
    CHECK(gf2_suite(d).passed());
  }
  auto d4 = gf2_generators(FamilySpec(Family::D, 4));
  CHECK(24 % closure_size(d4) == 0);
  CHECK(gf2_suite(FamilySpec(Family::A, 7)).passed());
  CHECK_THROWS_AS(gf2_image_order(FamilySpec(Family::D, 5)), std::invalid_argument);
}

TEST_CASE("mod 2 suites", "[gf2]") {
  for (std::size_t n = 6; n <= 8; ++n) {
    auto r = gf2_suite(FamilySpec(Family::E, n));
    INFO(r.to_text());
    CHECK(r.passed());
  }
}
