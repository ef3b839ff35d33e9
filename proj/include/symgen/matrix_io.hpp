#ifndef SYMGEN_MATRIX_IO_HPP
#define SYMGEN_MATRIX_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "symgen/exact_matrix.hpp"
#include "symgen/family.hpp"
#include "symgen/gf2.hpp"

namespace symgen {

// Rational matrices are arrays of rows, each entry a string "p/q" or "p".
// GF(2) matrices are arrays of "0101..." row strings.
nlohmann::json matrix_to_json(ExactMatrix const& m);
ExactMatrix matrix_from_json(nlohmann::json const& j);
nlohmann::json gf2_to_json(Gf2Matrix const& m);
Gf2Matrix gf2_from_json(nlohmann::json const& j);

struct NamedMatrix {
  std::string label;  // "t{1,2,3}" or a permutation in cycle notation
  ExactMatrix matrix;
};

struct MatrixDocument {
  std::string family;
  std::size_t n = 0;
  std::vector<NamedMatrix> generators;
  std::vector<NamedMatrix> control;
  std::vector<std::pair<std::string, Gf2Matrix>> mod2_generators;
  std::vector<std::pair<std::string, Gf2Matrix>> mod2_control;
};

// Symmetric generators in SubsetIndex order and the control generators
// (1,2), (1,...,n); mod-2 reductions when requested.
MatrixDocument build_matrix_document(FamilySpec const& spec, bool mod2);

std::string matrix_document_json(MatrixDocument const& doc);
std::string matrix_document_text(MatrixDocument const& doc);
// Inverse of matrix_document_json. Throws nlohmann::json::exception or
// std::invalid_argument on malformed input.
MatrixDocument parse_matrix_document(std::string const& text);

}  // namespace symgen

#endif  // SYMGEN_MATRIX_IO_HPP
