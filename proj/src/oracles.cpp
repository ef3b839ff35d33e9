#include "symgen/oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "symgen/perm_group.hpp"

namespace symgen {

SignedPermutation SignedPermutation::identity(std::size_t n) {
  return {Permutation(n), std::vector<std::int8_t>(n, 1)};
}

std::size_t SignedPermutation::negative_count() const {
  return static_cast<std::size_t>(std::count(signs.begin(), signs.end(), std::int8_t{-1}));
}

std::string SignedPermutation::to_string() const {
  std::string s = perm.to_string() + " [";
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i) s += ',';
    s += signs[i] < 0 ? '-' : '+';
  }
  return s + "]";
}

SignedPermutation operator*(SignedPermutation const& a, SignedPermutation const& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("SignedPermutation: degree mismatch");
  SignedPermutation r{a.perm * b.perm, std::vector<std::int8_t>(a.degree())};
  for (Point i = 0; i < a.degree(); ++i) {
    r.signs[i] = static_cast<std::int8_t>(a.signs[i] * b.signs[a.perm(i)]);
  }
  return r;
}

std::optional<SignedPermutation> as_signed_permutation(ExactMatrix const& m) {
  std::size_t const n = m.dim();
  std::vector<Point> images(n);
  std::vector<std::int8_t> signs(n);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    int found = 0;
    for (std::size_t j = 0; j < n; ++j) {
      auto const& x = m(i, j);
      if (x == 0) continue;
      if (x != 1 && x != -1) return std::nullopt;
      if (++found > 1 || used[j]) return std::nullopt;
      used[j] = true;
      images[i] = static_cast<Point>(j);
      signs[i] = x == 1 ? 1 : -1;
    }
    if (found != 1) return std::nullopt;
  }
  return SignedPermutation{Permutation(std::move(images)), std::move(signs)};
}

Permutation a_oracle_map(Word const& w, FamilySpec const& spec) {
  if (spec.family() != Family::A) throw std::invalid_argument("a_oracle_map: family must be A");
  std::size_t const n = spec.n();
  Permutation r = w.control.extended(n + 1);
  for (auto letter : w.letters) {
    Point i = spec.subsets().at(letter)[0];
    r = r * Permutation::transposition(n + 1, i, static_cast<Point>(n + 1));
  }
  return r;
}

namespace {

SignedPermutation d_letter(std::size_t n, Point i, Point j) {
  SignedPermutation t{Permutation::transposition(n, i, j), std::vector<std::int8_t>(n, 1)};
  t.signs[i - 1] = -1;
  t.signs[j - 1] = -1;
  return t;
}

}  // namespace

SignedPermutation d_oracle_map(Word const& w, FamilySpec const& spec) {
  if (spec.family() != Family::D) throw std::invalid_argument("d_oracle_map: family must be D");
  std::size_t const n = spec.n();
  SignedPermutation r{w.control, std::vector<std::int8_t>(n, 1)};
  for (auto letter : w.letters) {
    auto const& s = spec.subsets().at(letter);
    r = r * d_letter(n, s[0], s[1]);
  }
  return r;
}

std::uint64_t order_table(Family family, std::size_t n) {
  switch (family) {
    case Family::A:
      if (n >= 1 && n <= kMaxDegree) return factorial(n + 1);
      break;
    case Family::D:
      if (n >= 4 && n <= kMaxDegree) return (std::uint64_t{1} << (n - 1)) * factorial(n);
      break;
    case Family::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      if (n == 8) return 696729600;
      break;
  }
  throw std::invalid_argument("order_table: no entry for " + std::string(1, family_letter(family)) +
                              std::to_string(n));
}

std::vector<SignedPermutation> d_oracle_elements(std::size_t n) {
  if (n < 2 || n > 6) throw std::invalid_argument("d_oracle_elements: needs 2 <= n <= 6");
  std::vector<SignedPermutation> gens;
  for (Point j = 2; j <= n; ++j) gens.push_back(d_letter(n, 1, j));
  std::vector<Point> images(n);
  for (Point i = 0; i < n; ++i) images[i] = (i + 1) % static_cast<Point>(n);
  Permutation const cycle(std::move(images));
  gens.push_back({Permutation::transposition(n, 1, 2), std::vector<std::int8_t>(n, 1)});
  gens.push_back({cycle, std::vector<std::int8_t>(n, 1)});

  std::set<SignedPermutation> seen{SignedPermutation::identity(n)};
  std::vector<SignedPermutation> queue{SignedPermutation::identity(n)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto const& g : gens) {
      SignedPermutation x = queue[head] * g;
      if (seen.insert(x).second) queue.push_back(std::move(x));
    }
  }
  return {seen.begin(), seen.end()};
}

OracleOrder oracle_group_order(Family family, std::size_t n) {
  OracleOrder out;
  std::uint64_t const table = order_table(family, n);
  if (family == Family::A && n <= 7) {
    // S_{n+1} generated by the control generators and t_1 = (1, n+1).
    std::vector<Permutation> gens{Permutation::transposition(n + 1, 1, static_cast<Point>(n + 1))};
    if (n >= 2) {
      FamilySpec spec(Family::A, n);
      for (auto const& p : spec.control_generators()) gens.push_back(p.extended(n + 1));
    }
    out.order = PermGroup(n + 1, gens).order();
    out.exhaustive = true;
  } else if (family == Family::D && n <= 6) {
    out.order = d_oracle_elements(n).size();
    out.exhaustive = true;
  } else {
    out.order = table;
  }
  out.matches_table = out.order == table;
  return out;
}

}  // namespace symgen
