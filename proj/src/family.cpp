#include "symgen/family.hpp"

#include <cctype>
#include <stdexcept>

namespace symgen {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

Family parse_family(std::string const& s) {
  if (s.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
      case 'A': return Family::A;
      case 'D': return Family::D;
      case 'E': return Family::E;
    }
  }
  throw std::invalid_argument("unknown family '" + s + "' (expected A, D or E)");
}

FamilySpec::FamilySpec(Family family, std::size_t n, bool experimental)
    : family_(family), n_(n), experimental_(experimental) {
  switch (family) {
    case Family::A:
      k_ = 1;
      if (n < 1) throw std::invalid_argument("A_n requires n >= 1");
      break;
    case Family::D:
      k_ = 2;
      if (n < 4) throw std::invalid_argument("D_n requires n >= 4");
      break;
    case Family::E:
      k_ = 3;
      if (n < 6 || n > 8) {
        if (!experimental) throw std::invalid_argument("E_n requires n in {6,7,8}");
        if (n < 4) throw std::invalid_argument("E_n requires n >= 4 even when experimental");
      }
      break;
  }
  if (n > kMaxDegree) throw std::invalid_argument("n exceeds the supported maximum degree");
  subsets_ = std::make_shared<const SubsetIndex>(n, k_);

  if (n_ > k_) {
    Permutation swap = Permutation::transposition(n_, static_cast<Point>(k_),
                                                  static_cast<Point>(k_ + 1));
    auto first = static_cast<std::uint32_t>(0);  // {1..k}
    auto second = static_cast<std::uint32_t>(subsets_->image(0, swap));
    relator_ = Word{swap, {first, second, first}};
  }
}

bool FamilySpec::in_scope() const noexcept {
  switch (family_) {
    case Family::A: return n_ >= 1;
    case Family::D: return n_ >= 4;
    case Family::E: return n_ >= 6 && n_ <= 8;
  }
  return false;
}

std::vector<Permutation> FamilySpec::control_generators() const {
  std::vector<Permutation> gens;
  if (n_ < 2) return gens;
  gens.push_back(Permutation::transposition(n_, 1, 2));
  if (n_ > 2) {
    std::vector<Point> cycle(n_);
    for (std::size_t i = 0; i < n_; ++i) cycle[i] = static_cast<Point>((i + 1) % n_);
    gens.emplace_back(std::move(cycle));
  }
  return gens;
}

std::vector<Permutation> FamilySpec::adjacent_transpositions() const {
  std::vector<Permutation> gens;
  for (std::size_t i = 1; i < n_; ++i) {
    gens.push_back(Permutation::transposition(n_, static_cast<Point>(i), static_cast<Point>(i + 1)));
  }
  return gens;
}

std::string FamilySpec::name() const { return std::string(1, family_letter(family_)) + std::to_string(n_); }

}  // namespace symgen
