#include "symgen/progenitor.hpp"

#include <algorithm>
#include <stdexcept>

namespace symgen {

namespace {

void check_degree(Word const& w, FamilySpec const& spec) {
  if (w.control.degree() != spec.n()) throw std::invalid_argument("word degree does not match family");
  for (auto x : w.letters) {
    if (x >= spec.generator_count()) throw std::invalid_argument("letter out of range");
  }
}

void require(FamilySpec const& spec, Family f, char const* op) {
  if (spec.family() != f) {
    throw std::invalid_argument(std::string(op) + ": wrong family " + spec.name());
  }
}

// Pair letter as two 1-based points, smaller first.
std::pair<Point, Point> pair_of(FamilySpec const& spec, std::uint32_t letter) {
  auto const& s = spec.subsets().at(letter);
  return {s[0], s[1]};
}

std::uint32_t letter_of(FamilySpec const& spec, Point a, Point b) {
  KSubset s{std::min(a, b), std::max(a, b)};
  return static_cast<std::uint32_t>(spec.subsets().index_of(s));
}

Point shared_point(std::pair<Point, Point> x, std::pair<Point, Point> y) {
  if (x.first == y.first || x.first == y.second) return x.first;
  if (x.second == y.first || x.second == y.second) return x.second;
  return 0;
}

Point other(std::pair<Point, Point> x, Point a) { return x.first == a ? x.second : x.first; }

// Prefix letters [0, end) conjugated by pi, pi moved into the control.
void push_left(Word& w, std::size_t end, Permutation const& pi, FamilySpec const& spec) {
  w.control = w.control * pi;
  for (std::size_t i = 0; i < end; ++i) {
    w.letters[i] = static_cast<std::uint32_t>(spec.subsets().image(w.letters[i], pi));
  }
}

}  // namespace

Word multiply(Word const& a, Word const& b, FamilySpec const& spec) {
  check_degree(a, spec);
  check_degree(b, spec);
  Word r;
  r.control = a.control * b.control;
  r.letters = relabel(a.letters, b.control, spec.subsets());
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  free_reduce(r.letters);
  return r;
}

Word inverse(Word const& w, FamilySpec const& spec) {
  check_degree(w, spec);
  Permutation inv = w.control.inverse();
  std::vector<std::uint32_t> rev(w.letters.rbegin(), w.letters.rend());
  return Word{inv, relabel(rev, inv, spec.subsets())};
}

Word an_reduce(Word const& w, FamilySpec const& spec) {
  require(spec, Family::A, "an_reduce");
  check_degree(w, spec);
  Word r = w;
  free_reduce(r.letters);
  while (r.letters.size() >= 2) {
    Point i = spec.subsets().at(r.letters[0])[0];
    Point j = spec.subsets().at(r.letters[1])[0];
    // t_i t_j = (i,j) t_i; nothing sits to the left of the pair.
    r.control = r.control * Permutation::transposition(spec.n(), i, j);
    r.letters.erase(r.letters.begin() + 1);
    free_reduce(r.letters);
  }
  return r;
}

Word shorten_common_index(Word const& w, FamilySpec const& spec) {
  require(spec, Family::D, "shorten_common_index");
  check_degree(w, spec);
  Word r = w;
  free_reduce(r.letters);
  std::size_t const n = spec.n();

  while (true) {
    std::size_t p = 0, q = 0;
    bool found = false;
    for (std::size_t d = 1; d < r.letters.size() && !found; ++d) {
      for (std::size_t i = 0; i + d < r.letters.size(); ++i) {
        if (shared_point(pair_of(spec, r.letters[i]), pair_of(spec, r.letters[i + d]))) {
          p = i;
          q = i + d;
          found = true;
          break;
        }
      }
    }
    if (!found) return r;

    auto P = pair_of(spec, r.letters[p]);
    auto Y = pair_of(spec, r.letters[q]);
    Point a = shared_point(P, Y);

    if (q == p + 1) {
      // t_{ab} t_{ac} = (b,c) t_{ab}
      Point b = other(P, a);
      Point c = other(Y, a);
      r.letters.erase(r.letters.begin() + static_cast<std::ptrdiff_t>(q));
      push_left(r, p, Permutation::transposition(n, b, c), spec);
    } else {
      // t_{cd} t_{ae} = (d,a)(c,e) t_{ed} t_{ac}
      auto X = pair_of(spec, r.letters[q - 1]);
      Point c = X.first;
      Point d = X.second;
      Point e = other(Y, a);
      Permutation pi = Permutation::transposition(n, d, a) * Permutation::transposition(n, c, e);
      r.letters[q - 1] = letter_of(spec, e, d);
      r.letters[q] = letter_of(spec, a, c);
      push_left(r, q - 1, pi, spec);
    }
    free_reduce(r.letters);
  }
}

Word dn_standard_word(std::size_t m, FamilySpec const& spec) {
  require(spec, Family::D, "dn_standard_word");
  if (2 * m > spec.n()) throw std::invalid_argument("dn_standard_word: too many disjoint pairs");
  Word r = Word::identity(spec.n());
  for (std::size_t i = 0; i < m; ++i) {
    r.letters.push_back(letter_of(spec, static_cast<Point>(2 * i + 1), static_cast<Point>(2 * i + 2)));
  }
  return r;
}

Word dn_canonical(Word const& w, FamilySpec const& spec) {
  require(spec, Family::D, "dn_canonical");
  // Once no point repeats, a word of m disjoint letters is conjugate under
  // S_n to t_{12} t_{34} ... t_{2m-1,2m}, and conjugation stays inside NwN.
  Word s = shorten_common_index(w, spec);
  return dn_standard_word(s.letters.size(), spec);
}

}  // namespace symgen
