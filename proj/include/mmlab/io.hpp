#ifndef MMLAB_IO_HPP
#define MMLAB_IO_HPP

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mmlab/algebra.hpp"
#include "mmlab/carrier.hpp"
#include "mmlab/graph.hpp"
#include "mmlab/matroid.hpp"
#include "mmlab/multimatroid.hpp"
#include "mmlab/polynomial.hpp"

namespace mmlab {

using Json = nlohmann::json;

/// "3b" for class 2, slot 1: classes count from 1, slots are letters.
inline std::string element_name(ElementLabel l) {
  return std::to_string(l.cls + 1) + static_cast<char>('a' + l.slot);
}
inline std::string element_name(const Carrier& c, int e) { return element_name(c.label_of(e)); }

inline int parse_element_name(const Carrier& c, const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  require(i > 0 && i + 1 == s.size() && std::islower(static_cast<unsigned char>(s[i])), ErrorCode::ParseError,
          "element names look like '1a', got '" + s + "'");
  const int cls = std::stoi(s.substr(0, i)) - 1;
  const int slot = s[i] - 'a';
  require(cls >= 0 && cls < c.order() && slot < c.class_size(cls), ErrorCode::UnknownElement,
          "no element '" + s + "' in this carrier");
  return c.element(cls, slot);
}

inline Json set_json(const Carrier& c, ElementSet s) {
  Json out = Json::array();
  s.for_each([&](int e) { out.push_back(element_name(c, e)); });
  return out;
}

inline ElementSet parse_set_json(const Carrier& c, const Json& j) {
  require(j.is_array(), ErrorCode::ParseError, "element sets are JSON arrays of names");
  ElementSet s;
  for (const auto& x : j) {
    require(x.is_string(), ErrorCode::ParseError, "element names must be strings");
    s.insert(parse_element_name(c, x.get<std::string>()));
  }
  return s;
}

/// .mm.json: {"classes": [...], "circuits": [[...]]} or {"classes": [...], "field": "GF2"|"GF4",
/// "matrix": ["row", ...]} with matrix columns in element order.
inline Json multimatroid_json(const Multimatroid& z, const std::string& name = "") {
  Json j;
  j["classes"] = z.carrier().class_sizes();
  if (!name.empty()) j["name"] = name;
  if (z.is_sheltered()) {
    const FieldMatrix& m = z.matrix();
    j["field"] = m.field() == Field::GF2 ? "GF2" : "GF4";
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
      std::string row;
      for (int col = 0; col < m.cols(); ++col) {
        if (col) row += ' ';
        row += "01ab"[m.code(r, col)];
      }
      rows.push_back(row);
    }
    j["matrix"] = rows;
  } else {
    Json cs = Json::array();
    for (auto c : z.circuit_family()) cs.push_back(set_json(z.carrier(), c));
    j["circuits"] = cs;
  }
  return j;
}

inline Multimatroid parse_multimatroid_json(const Json& j) {
  require(j.is_object() && j.contains("classes") && j["classes"].is_array(), ErrorCode::ParseError,
          ".mm.json needs a 'classes' array");
  std::vector<int> sizes;
  for (const auto& s : j["classes"]) {
    require(s.is_number_integer(), ErrorCode::ParseError, "class sizes must be integers");
    sizes.push_back(s.get<int>());
  }
  const Carrier c(sizes);
  if (j.contains("matrix")) {
    require(j.contains("field") && j["field"].is_string(), ErrorCode::ParseError, "sheltered .mm.json needs 'field'");
    const std::string f = j["field"].get<std::string>();
    require(f == "GF2" || f == "GF4", ErrorCode::ParseError, "field must be GF2 or GF4");
    const Field field = f == "GF2" ? Field::GF2 : Field::GF4;
    require(j["matrix"].is_array(), ErrorCode::ParseError, "'matrix' must be an array of rows");
    const int rows = static_cast<int>(j["matrix"].size());
    FieldMatrix m(field, rows, c.size());
    for (int r = 0; r < rows; ++r) {
      const auto& row = j["matrix"][static_cast<std::size_t>(r)];
      require(row.is_string(), ErrorCode::ParseError, "matrix rows are strings");
      std::istringstream in(row.get<std::string>());
      std::string tok;
      int col = 0;
      while (in >> tok) {
        require(col < c.size(), ErrorCode::ParseError, "matrix row longer than the carrier");
        m.set_code(r, col++, FieldScalar::parse(field, tok).code());
      }
      require(col == c.size(), ErrorCode::ParseError, "matrix row shorter than the carrier");
    }
    return Multimatroid::sheltered(c, m);
  }
  require(j.contains("circuits") && j["circuits"].is_array(), ErrorCode::ParseError,
          ".mm.json needs 'circuits' or 'matrix'");
  std::vector<ElementSet> cs;
  for (const auto& x : j["circuits"]) cs.push_back(parse_set_json(c, x));
  return Multimatroid::from_circuits(c, std::move(cs));
}

/// Whole file, or standard input for "-".
inline std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::ParseError, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline Multimatroid load_multimatroid(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_input(path));
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return parse_multimatroid_json(j);
}
inline Graph load_graph(const std::string& path) { return Graph::parse(read_input(path)); }
inline Matroid load_matroid(const std::string& path) {
  return Matroid::represented(FieldMatrix::parse_gfmat(read_input(path)));
}

template <typename T>
Json polynomial_json(const Polynomial<T>& p) {
  return Json{{"var", "y"}, {"coeffs", p.coefficient_strings()}};
}

}  // namespace mmlab

#endif  // MMLAB_IO_HPP
