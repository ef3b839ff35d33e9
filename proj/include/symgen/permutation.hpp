#ifndef SYMGEN_PERMUTATION_HPP
#define SYMGEN_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symgen {

using Point = std::uint32_t;

// A bijection of {0..n-1}, stored 0-based. All text I/O is 1-based cycle
// notation, e.g. "(1,2)(3,4)"; the identity is "()".
//
// Products act left to right: (p * q)(i) = q(p(i)), i.e. "apply p, then q".
// Every module in this library states words and products in this convention.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  // Images of 0..n-1 (0-based). Throws std::invalid_argument unless bijective.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  // Cycles are 1-based point labels; degree must cover every point used.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation transposition(std::size_t degree, Point a, Point b);  // 1-based
  // Parses "(1,2)(3,4)" or "()" into a permutation of the given degree.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  // 0-based image of a 0-based point.
  Point operator()(Point i) const { return images_[i]; }
  Point operator[](Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  // +1 for even, -1 for odd.
  int sign() const;
  // Extends to a larger degree fixing the new points.
  Permutation extended(std::size_t degree) const;

  // Cycle notation, 1-based, fixed points omitted.
  std::string to_string() const;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

 private:
  std::vector<Point> images_;
};

// "Apply p, then q". Throws std::invalid_argument on degree mismatch.
Permutation compose(Permutation const& p, Permutation const& q);

inline Permutation operator*(Permutation const& p, Permutation const& q) {
  return compose(p, q);
}

struct PermutationHash {
  std::size_t operator()(Permutation const& p) const noexcept;
};

}  // namespace symgen

#endif  // SYMGEN_PERMUTATION_HPP
