#include "symgen/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symgen {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw std::invalid_argument("Permutation: images do not form a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(
    std::size_t degree, std::initializer_list<std::initializer_list<Point>> cycles) {
  Permutation p(degree);
  for (auto const& cycle : cycles) {
    std::vector<Point> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i) {
      Point a = c[i];
      Point b = c[(i + 1) % c.size()];
      if (a < 1 || a > degree || b < 1 || b > degree) {
        throw std::invalid_argument("Permutation: cycle point out of range");
      }
      p.images_[a - 1] = b - 1;
    }
  }
  return Permutation(std::move(p.images_));
}

Permutation Permutation::transposition(std::size_t degree, Point a, Point b) {
  if (a < 1 || b < 1 || a > degree || b > degree || a == b) {
    throw std::invalid_argument("Permutation: bad transposition");
  }
  Permutation p(degree);
  p.images_[a - 1] = b - 1;
  p.images_[b - 1] = a - 1;
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> touched(degree, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("Permutation::parse: expected '('");
    ++pos;
    std::vector<Point> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw std::invalid_argument("Permutation::parse: expected a point");
      Point x = static_cast<Point>(std::stoul(std::string(text.substr(start, pos - start))));
      if (x < 1 || x > degree) throw std::invalid_argument("Permutation::parse: point out of range");
      cycle.push_back(x - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;
      skip_ws();
    }
    if (pos >= text.size()) throw std::invalid_argument("Permutation::parse: unterminated cycle");
    ++pos;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (touched[cycle[i]]) throw std::invalid_argument("Permutation::parse: cycles not disjoint");
      touched[cycle[i]] = true;
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    skip_ws();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation r;
  r.images_ = std::move(inv);
  return r;
}

int Permutation::sign() const {
  std::vector<bool> seen(images_.size(), false);
  int s = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size()) throw std::invalid_argument("Permutation::extended: degree shrinks");
  Permutation r(degree);
  std::copy(images_.begin(), images_.end(), r.images_.begin());
  return r;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << '(';
    Point j = static_cast<Point>(i);
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ',';
      out << j + 1;
      first = false;
      j = images_[j];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation compose(Permutation const& p, Permutation const& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  std::vector<Point> r(p.degree());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = q(p(static_cast<Point>(i)));
  return Permutation(std::move(r));
}

std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace symgen
