#include "symgen/matrix_io.hpp"

#include <sstream>
#include <stdexcept>

#include "symgen/representation.hpp"

namespace symgen {

nlohmann::json matrix_to_json(ExactMatrix const& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (auto const& x : m.row(i)) row.push_back(to_string(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix matrix_from_json(nlohmann::json const& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix_from_json: expected an array of rows");
  std::size_t const dim = j.size();
  std::vector<Rational> entries;
  entries.reserve(dim * dim);
  for (auto const& row : j) {
    if (!row.is_array() || row.size() != dim) throw std::invalid_argument("matrix_from_json: not square");
    for (auto const& x : row) entries.push_back(parse_rational(x.get<std::string>()));
  }
  return ExactMatrix(dim, std::move(entries));
}

nlohmann::json gf2_to_json(Gf2Matrix const& m) { return m.to_rows(); }

Gf2Matrix gf2_from_json(nlohmann::json const& j) {
  return Gf2Matrix::parse(j.get<std::vector<std::string>>());
}

MatrixDocument build_matrix_document(FamilySpec const& spec, bool mod2) {
  Representation rep(spec);
  MatrixDocument doc;
  doc.family = std::string(1, family_letter(spec.family()));
  doc.n = spec.n();
  auto const& subsets = spec.subsets();
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    doc.generators.push_back({"t" + subset_to_string(subsets.at(i)), rep.generator(i)});
  }
  for (auto const& p : spec.control_generators()) doc.control.push_back({p.to_string(), rep.control(p)});
  if (mod2) {
    for (auto const& g : doc.generators) doc.mod2_generators.emplace_back(g.label, reduce_mod2(g.matrix));
    for (auto const& c : doc.control) doc.mod2_control.emplace_back(c.label, reduce_mod2(c.matrix));
  }
  return doc;
}

std::string matrix_document_json(MatrixDocument const& doc) {
  nlohmann::ordered_json j;
  j["family"] = doc.family;
  j["n"] = doc.n;
  j["generators"] = nlohmann::ordered_json::array();
  for (auto const& g : doc.generators) {
    j["generators"].push_back({{"label", g.label}, {"matrix", matrix_to_json(g.matrix)}});
  }
  j["control"] = nlohmann::ordered_json::array();
  for (auto const& c : doc.control) {
    j["control"].push_back({{"label", c.label}, {"matrix", matrix_to_json(c.matrix)}});
  }
  if (!doc.mod2_generators.empty() || !doc.mod2_control.empty()) {
    auto& m = j["mod2"];
    m["generators"] = nlohmann::ordered_json::array();
    for (auto const& [label, g] : doc.mod2_generators) {
      m["generators"].push_back({{"label", label}, {"rows", gf2_to_json(g)}});
    }
    m["control"] = nlohmann::ordered_json::array();
    for (auto const& [label, g] : doc.mod2_control) {
      m["control"].push_back({{"label", label}, {"rows", gf2_to_json(g)}});
    }
  }
  return j.dump(2) + "\n";
}

std::string matrix_document_text(MatrixDocument const& doc) {
  std::ostringstream out;
  out << doc.family << doc.n << " matrices (row i of a permutation matrix has its 1 in column pi(i))\n";
  for (auto const& g : doc.generators) out << "\n" << g.label << ":\n" << to_grid(g.matrix);
  for (auto const& c : doc.control) out << "\n" << c.label << ":\n" << to_grid(c.matrix);
  auto section = [&](char const* title, auto const& list) {
    if (list.empty()) return;
    out << "\n" << title << "\n";
    for (auto const& [label, g] : list) {
      out << "\n" << label << " mod 2:\n";
      for (auto const& row : g.to_rows()) out << "  " << row << "\n";
    }
  };
  section("mod 2 generators", doc.mod2_generators);
  section("mod 2 control", doc.mod2_control);
  return out.str();
}

MatrixDocument parse_matrix_document(std::string const& text) {
  auto const j = nlohmann::json::parse(text);
  MatrixDocument doc;
  doc.family = j.at("family").get<std::string>();
  doc.n = j.at("n").get<std::size_t>();
  for (auto const& g : j.at("generators")) {
    doc.generators.push_back({g.at("label").get<std::string>(), matrix_from_json(g.at("matrix"))});
  }
  for (auto const& c : j.at("control")) {
    doc.control.push_back({c.at("label").get<std::string>(), matrix_from_json(c.at("matrix"))});
  }
  if (j.contains("mod2")) {
    for (auto const& g : j["mod2"].at("generators")) {
      doc.mod2_generators.emplace_back(g.at("label").get<std::string>(), gf2_from_json(g.at("rows")));
    }
    for (auto const& c : j["mod2"].at("control")) {
      doc.mod2_control.emplace_back(c.at("label").get<std::string>(), gf2_from_json(c.at("rows")));
    }
  }
  return doc;
}

}  // namespace symgen
