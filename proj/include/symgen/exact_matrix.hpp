#ifndef SYMGEN_EXACT_MATRIX_HPP
#define SYMGEN_EXACT_MATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace symgen {

// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

// Parses "p/q" or "p". Throws std::invalid_argument.
Rational parse_rational(std::string const& s);
std::string to_string(Rational const& q);

// Square matrix of exact rationals, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t dim);  // zero matrix
  ExactMatrix(std::size_t dim, std::vector<Rational> entries);
  static ExactMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  Rational const& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  std::span<const Rational> row(std::size_t i) const {
    return {entries_.data() + i * dim_, dim_};
  }
  std::span<const Rational> entries() const noexcept { return entries_; }

  bool is_identity() const;
  // True when every entry is 0 or 1 with exactly one 1 per row and column.
  bool is_permutation_matrix() const;
  ExactMatrix transpose() const;
  Rational determinant() const;

  // Column-vector action M*v.
  std::vector<Rational> apply(std::span<const Rational> v) const;

  friend bool operator==(ExactMatrix const& a, ExactMatrix const& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

// Throws std::invalid_argument on dimension mismatch.
ExactMatrix operator*(ExactMatrix const& a, ExactMatrix const& b);

// Lexicographic comparison of two rows of equal length.
int compare_rows(std::span<const Rational> a, std::span<const Rational> b);

struct ExactMatrixHash {
  std::size_t operator()(ExactMatrix const& m) const noexcept;
};

// Aligned text grid for human inspection.
std::string to_grid(ExactMatrix const& m);

}  // namespace symgen

#endif  // SYMGEN_EXACT_MATRIX_HPP
