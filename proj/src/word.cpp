#include "symgen/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "symgen/subsets.hpp"

namespace symgen {

void free_reduce(std::vector<std::uint32_t>& letters) {
  std::vector<std::uint32_t> out;
  out.reserve(letters.size());
  for (auto x : letters) {
    if (!out.empty() && out.back() == x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  letters = std::move(out);
}

std::vector<std::uint32_t> relabel(std::vector<std::uint32_t> const& letters,
                                   Permutation const& p, SubsetIndex const& subsets) {
  std::vector<std::uint32_t> out(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(subsets.image(letters[i], p));
  }
  return out;
}

std::string format_word(Word const& w, SubsetIndex const& subsets) {
  std::string out;
  if (!w.control.is_identity()) {
    out = w.control.to_string();
    if (!w.letters.empty()) out += " * ";
  }
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += 't' + subset_to_string(subsets.at(w.letters[i]));
  }
  return out.empty() ? "()" : out;
}

Word parse_word(std::string const& text, SubsetIndex const& subsets) {
  Word w = Word::identity(subsets.n());
  std::string control_part;
  std::string letter_part = text;
  if (auto star = text.find('*'); star != std::string::npos) {
    control_part = text.substr(0, star);
    letter_part = text.substr(star + 1);
  } else if (text.find('t') == std::string::npos) {
    control_part = text;
    letter_part.clear();
  }
  if (!control_part.empty()) w.control = Permutation::parse(control_part, subsets.n());

  std::size_t pos = 0;
  while (pos < letter_part.size()) {
    char c = letter_part[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != 't' || pos + 1 >= letter_part.size() || letter_part[pos + 1] != '{') {
      throw std::invalid_argument("parse_word: expected t{...}");
    }
    auto close = letter_part.find('}', pos);
    if (close == std::string::npos) throw std::invalid_argument("parse_word: unterminated letter");
    std::string body = letter_part.substr(pos + 2, close - pos - 2);
    KSubset s;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) s.push_back(static_cast<Point>(std::stoul(item)));
    std::sort(s.begin(), s.end());
    w.letters.push_back(static_cast<std::uint32_t>(subsets.index_of(s)));
    pos = close + 1;
  }
  free_reduce(w.letters);
  return w;
}

}  // namespace symgen
