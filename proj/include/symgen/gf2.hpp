#ifndef SYMGEN_GF2_HPP
#define SYMGEN_GF2_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "symgen/exact_matrix.hpp"
#include "symgen/family.hpp"
#include "symgen/report.hpp"

namespace symgen {

// Vectors over GF(2) of length <= 8, bit j = coordinate j.
using Gf2Vector = std::uint8_t;

inline constexpr std::size_t kMaxGf2Dim = 8;

// Square matrix over GF(2), dim <= 8, one byte per row (bit j = column j).
//
// Module convention: matrices act on column vectors, x -> M x. This is the
// action in which the all-ones vector is fixed by the E7 generators and
// (1^8) is sent to (0^3,1^5) by t_{123} for E8.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  explicit Gf2Matrix(std::size_t dim);  // zero matrix
  Gf2Matrix(std::size_t dim, std::span<const Gf2Vector> rows);
  static Gf2Matrix identity(std::size_t dim);
  // Rows written as strings of '0'/'1'.
  static Gf2Matrix parse(std::span<const std::string> rows);

  std::size_t dim() const noexcept { return dim_; }
  bool operator()(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1u; }
  void set(std::size_t i, std::size_t j, bool v);
  Gf2Vector row(std::size_t i) const { return rows_[i]; }

  // M x (column action).
  Gf2Vector apply(Gf2Vector x) const;
  // x M (row action).
  Gf2Vector apply_row(Gf2Vector x) const;

  Gf2Matrix transpose() const;
  bool is_identity() const { return *this == identity(dim_); }
  bool is_permutation_matrix() const;

  // Rows sorted as bytes and packed little-endian; canonical for the coset
  // of the permutation-matrix subgroup.
  std::uint64_t canonical_key() const;

  // Rows of 0/1 characters, one per line.
  std::vector<std::string> to_rows() const;

  friend bool operator==(Gf2Matrix const& a, Gf2Matrix const& b) {
    return a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t dim_ = 0;
  std::array<Gf2Vector, kMaxGf2Dim> rows_{};
};

Gf2Matrix operator*(Gf2Matrix const& a, Gf2Matrix const& b);

int parity(Gf2Vector x);
std::string vector_to_string(Gf2Vector x, std::size_t dim);

// Entrywise p/q -> p * q^-1 mod 2. Throws std::invalid_argument on an even
// denominator or a dimension above 8.
Gf2Matrix reduce_mod2(ExactMatrix const& m);

enum class FormKind {
  SumOfDistinctProducts,  // Q(x) = sum_{i<j} x_i x_j
  BilinearJ,              // B(x, y) = x J y^T, J all ones, row vectors
  Gram,                   // B(x, y) = x^T G y for an explicit G
};

struct Gf2Form {
  FormKind kind = FormKind::SumOfDistinctProducts;
  std::size_t dim = 0;
  Gf2Matrix gram;  // Gram kind only

  static Gf2Form sum_of_distinct_products(std::size_t dim) { return {FormKind::SumOfDistinctProducts, dim, {}}; }
  static Gf2Form bilinear_j(std::size_t dim) { return {FormKind::BilinearJ, dim, {}}; }
  static Gf2Form from_gram(Gf2Matrix g) { return {FormKind::Gram, g.dim(), g}; }

  // Q(x); only meaningful for SumOfDistinctProducts.
  int quadratic(Gf2Vector x) const;
  // The bilinear form; for SumOfDistinctProducts the polar form
  // Q(x+y) + Q(x) + Q(y).
  int bilinear(Gf2Vector x, Gf2Vector y) const;
  std::string name() const;
};

// SumOfDistinctProducts: Q(m x) == Q(x) for every x.
// BilinearJ: B(x m, y m) == B(x, y) for every pair, with row vectors as in
// x J y^T; equivalently m fixes the all-ones column vector.
// Gram: B(m x, m y) == B(x, y) for every pair.
bool preserves_form(Gf2Matrix const& m, Gf2Form const& f);

// Echelon basis of {x : g x = x for all g}.
std::vector<Gf2Vector> fixed_vectors(std::span<const Gf2Matrix> gens);

// Reduced echelon basis of the span of `vectors`.
std::vector<Gf2Vector> echelon_basis(std::span<const Gf2Vector> vectors);

// Smallest invariant subspace containing `seed`, as an echelon basis.
std::vector<Gf2Vector> spin(Gf2Vector seed, std::span<const Gf2Matrix> gens);

// True iff every nonzero vector spins to the whole space, i.e. no proper
// nonzero invariant subspace exists.
bool spin_irreducible(std::span<const Gf2Matrix> gens);

struct RestrictedModule {
  std::vector<Gf2Vector> basis;   // echelon basis of v^perp
  std::vector<Gf2Matrix> gens;    // restricted generators (column convention)
  Gf2Form form;                   // Gram matrix of the carried form on v^perp
  bool alternating = false;       // B(x, x) = 0 for all x
  bool nondegenerate = false;     // Gram matrix invertible
  bool form_invariant = false;    // preserved by every restricted generator

  bool symplectic() const { return alternating && nondegenerate; }
  // Restriction of any matrix that fixes v (column) to this module.
  Gf2Matrix restrict(Gf2Matrix const& g) const;
};

// v^perp = {x : perp_form.bilinear(x, v) = 0}. Because every g fixes v
// (g v = v), v^perp is invariant under the transposed action x -> x g; the
// restricted generators are the matrices of that action on `basis`,
// transposed back to the column convention. `carried_form` is restricted to
// v^perp and checked for being symplectic.
//
// Throws std::invalid_argument if some generator does not fix v or v^perp is
// not invariant.
RestrictedModule restrict_to_perp(std::span<const Gf2Matrix> gens, Gf2Vector v,
                                  Gf2Form const& perp_form, Gf2Form const& carried_form);

struct Gf2ImageOrder {
  std::uint64_t cosets = 0;  // cosets of the permutation-matrix subgroup
  std::uint64_t order = 0;   // cosets * n!
};

// Order of the GF(2) group generated by the reduced symmetric generators and
// the permutation matrices, by canonical-coset BFS as in coset enumeration.
// Throws std::invalid_argument unless family E; CapExceeded past `cap`
// (0: ten times the rational index).
Gf2ImageOrder gf2_image_order(FamilySpec const& spec, std::uint64_t cap = 0);

// Reduced generator and control-generator images for a family.
std::vector<Gf2Matrix> gf2_generators(FamilySpec const& spec, bool with_control = true);

// The mod-2 checks for a family. E: reduction, form preservation (sum of
// distinct products for E6/E8, xJy^T for E7), fixed vectors, spinning, the
// E7 restriction to (1^7)^perp, the relator mod 2 and the image order. A
// measured E7/E8 order that differs from the predicted one is a warning.
// A and D: the reduced images are permutation matrices.
CheckReport gf2_suite(FamilySpec const& spec);

}  // namespace symgen

#endif  // SYMGEN_GF2_HPP
