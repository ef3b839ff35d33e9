#include "symgen/exact_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symgen {

Rational parse_rational(std::string const& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(Rational const& q) {
  Rational r = q;
  r.canonicalize();
  return r.get_str();
}

ExactMatrix::ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ExactMatrix::ExactMatrix(std::size_t dim, std::vector<Rational> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim * dim) throw std::invalid_argument("ExactMatrix: entry count is not dim^2");
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  ExactMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

bool ExactMatrix::is_identity() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool ExactMatrix::is_permutation_matrix() const {
  std::vector<int> col_count(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    int ones = 0;
    for (std::size_t j = 0; j < dim_; ++j) {
      auto const& x = (*this)(i, j);
      if (x == 1) {
        ++ones;
        ++col_count[j];
      } else if (x != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return std::all_of(col_count.begin(), col_count.end(), [](int c) { return c == 1; });
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Rational ExactMatrix::determinant() const {
  std::vector<Rational> a = entries_;
  Rational det = 1;
  std::size_t const n = dim_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot * n + c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[c * n + j]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r * n + c] == 0) continue;
      Rational f = a[r * n + c] / a[c * n + c];
      for (std::size_t j = c; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
    }
  }
  return det;
}

std::vector<Rational> ExactMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("ExactMatrix::apply: dimension mismatch");
  std::vector<Rational> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

ExactMatrix operator*(ExactMatrix const& a, ExactMatrix const& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("ExactMatrix product: dimension mismatch");
  std::size_t const n = a.dim();
  ExactMatrix c(n);
  Rational t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      auto const& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        auto const& y = b(k, j);
        if (sgn(y) == 0) continue;
        t = x * y;
        c(i, j) += t;
      }
    }
  }
  return c;
}

int compare_rows(std::span<const Rational> a, std::span<const Rational> b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    int c = cmp(a[j], b[j]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::size_t ExactMatrixHash::operator()(ExactMatrix const& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (auto const& q : m.entries()) {
    mix(static_cast<std::size_t>(mpz_get_ui(q.get_num_mpz_t())));
    mix(static_cast<std::size_t>(mpz_sgn(q.get_num_mpz_t()) + 1));
    mix(static_cast<std::size_t>(mpz_get_ui(q.get_den_mpz_t())));
  }
  return h;
}

std::string to_grid(ExactMatrix const& m) {
  std::size_t width = 1;
  for (auto const& q : m.entries()) width = std::max(width, to_string(q).size());
  std::ostringstream out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      std::string s = to_string(m(i, j));
      out << (j ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace symgen
