#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bicat/bibundle.hpp"
#include "bicat/bimodule.hpp"
#include "bicat/groupoid.hpp"
#include "bicat/multimatrix.hpp"

namespace bicat {

struct ParseError : Error {
  explicit ParseError(std::string w) : Error("ParseError", std::move(w)) {}
};

// One JSON document per instance: {"kind": ..., "name": ..., "payload": ...}.
// The payload schemas round-trip losslessly; all numbers are plain integers.
struct InstanceDocument {
  std::string kind;
  std::string name;
  nlohmann::ordered_json payload;
};

using json = nlohmann::ordered_json;

namespace json_detail {

inline std::vector<unsigned> unsigned_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<unsigned> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw ParseError(std::string(what) + " entries must be nonnegative integers");
    out.push_back(static_cast<unsigned>(v.get<long long>()));
  }
  return out;
}

inline std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + " entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace json_detail

// --- algebras and bimodules -------------------------------------------------

inline json algebra_to_json(const FiniteDimAlgebra& a) {
  json j;
  j["p"] = a.field().modulus();
  j["dim"] = a.dim();
  json structure = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json plane = json::array();
    for (std::size_t jj = 0; jj < a.dim(); ++jj) {
      json row = json::array();
      for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(a.structure(i, jj, k));
      plane.push_back(std::move(row));
    }
    structure.push_back(std::move(plane));
  }
  j["structure"] = std::move(structure);
  j["unit"] = a.unit();
  return j;
}

inline FiniteDimAlgebra algebra_from_json(const json& j) {
  if (!j.contains("p") || !j.contains("dim") || !j.contains("structure") || !j.contains("unit"))
    throw ParseError("algebra payload needs p, dim, structure, unit");
  unsigned p = j.at("p").get<unsigned>();
  std::size_t dim = j.at("dim").get<std::size_t>();
  const json& st = j.at("structure");
  if (!st.is_array() || st.size() != dim) throw ParseError("structure table has wrong shape");
  std::vector<unsigned> c(dim * dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!st[i].is_array() || st[i].size() != dim) throw ParseError("structure table has wrong shape");
    for (std::size_t jj = 0; jj < dim; ++jj) {
      auto row = json_detail::unsigned_list(st[i][jj], "structure row");
      if (row.size() != dim) throw ParseError("structure table has wrong shape");
      for (std::size_t k = 0; k < dim; ++k) c[(i * dim + jj) * dim + k] = row[k];
    }
  }
  return FiniteDimAlgebra::validated(PrimeField(p), dim, std::move(c),
                                     json_detail::unsigned_list(j.at("unit"), "unit"));
}

inline json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ExactMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols,
                                    PrimeField f) {
  if (!j.is_array() || j.size() != rows) throw ParseError("matrix has wrong row count");
  ExactMatrix m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r) {
    auto row = json_detail::unsigned_list(j[r], "matrix row");
    if (row.size() != cols) throw ParseError("matrix has wrong column count");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = row[c] % f.modulus();
  }
  return m;
}

inline json bimodule_to_json(const Bimodule& b) {
  json j;
  j["left"] = algebra_to_json(b.left_algebra());
  j["right"] = algebra_to_json(b.right_algebra());
  j["dim"] = b.dim();
  json la = json::array(), ra = json::array();
  for (std::size_t i = 0; i < b.left_algebra().dim(); ++i)
    la.push_back(matrix_to_json(b.left_action(i)));
  for (std::size_t i = 0; i < b.right_algebra().dim(); ++i)
    ra.push_back(matrix_to_json(b.right_action(i)));
  j["left_action"] = std::move(la);
  j["right_action"] = std::move(ra);
  return j;
}

inline Bimodule bimodule_from_json(const json& j) {
  if (!j.contains("left") || !j.contains("right") || !j.contains("dim") ||
      !j.contains("left_action") || !j.contains("right_action"))
    throw ParseError("bimodule payload needs left, right, dim, left_action, right_action");
  auto left = algebra_from_json(j.at("left"));
  auto right = algebra_from_json(j.at("right"));
  std::size_t dim = j.at("dim").get<std::size_t>();
  const json& la = j.at("left_action");
  const json& ra = j.at("right_action");
  if (!la.is_array() || la.size() != left.dim() || !ra.is_array() || ra.size() != right.dim())
    throw ParseError("action lists have wrong length");
  std::vector<ExactMatrix> lmat, rmat;
  for (std::size_t i = 0; i < left.dim(); ++i)
    lmat.push_back(matrix_from_json(la[i], dim, dim, left.field()));
  for (std::size_t i = 0; i < right.dim(); ++i)
    rmat.push_back(matrix_from_json(ra[i], dim, dim, right.field()));
  return Bimodule::validated(std::move(left), std::move(right), dim, std::move(lmat),
                             std::move(rmat));
}

// --- multimatrix calculus ---------------------------------------------------

inline json multimatrix_to_json(const MultimatrixAlgebra& a) {
  json j;
  j["blocks"] = a.blocks;
  return j;
}

inline MultimatrixAlgebra multimatrix_from_json(const json& j) {
  if (!j.contains("blocks")) throw ParseError("multimatrix payload needs blocks");
  std::vector<long long> blocks;
  for (const auto& v : j.at("blocks")) {
    if (!v.is_number_integer()) throw ParseError("blocks entries must be integers");
    blocks.push_back(v.get<long long>());
  }
  return MultimatrixAlgebra::validated(std::move(blocks));
}

inline json correspondence_to_json(const MultiplicityBimodule& e) {
  json j;
  j["left"] = multimatrix_to_json(e.left);
  j["right"] = multimatrix_to_json(e.right);
  json m = json::array();
  for (const auto& row : e.mult) m.push_back(row);
  j["mult"] = std::move(m);
  return j;
}

inline MultiplicityBimodule correspondence_from_json(const json& j) {
  if (!j.contains("left") || !j.contains("right") || !j.contains("mult"))
    throw ParseError("correspondence payload needs left, right, mult");
  auto left = multimatrix_from_json(j.at("left"));
  auto right = multimatrix_from_json(j.at("right"));
  IntMatrix mult;
  for (const auto& row : j.at("mult")) {
    std::vector<long long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("mult entries must be integers");
      r.push_back(v.get<long long>());
    }
    mult.push_back(std::move(r));
  }
  return MultiplicityBimodule::validated(std::move(left), std::move(right), std::move(mult));
}

// --- groupoid calculus ------------------------------------------------------

inline json groupoid_to_json(const FiniteGroupoid& g) {
  json j;
  j["objects"] = g.object_count();
  j["source"] = g.source_table();
  j["target"] = g.target_table();
  json comp = json::array();
  std::size_t n1 = g.arrow_count();
  for (std::size_t x = 0; x < n1; ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < n1; ++y) row.push_back(g.compose_table()[x * n1 + y]);
    comp.push_back(std::move(row));
  }
  j["compose"] = std::move(comp);
  j["inverse"] = g.inverse_table();
  j["units"] = g.unit_table();
  return j;
}

inline FiniteGroupoid groupoid_from_json(const json& j) {
  for (const char* key : {"objects", "source", "target", "compose", "inverse", "units"})
    if (!j.contains(key)) throw ParseError(std::string("groupoid payload needs ") + key);
  auto source = json_detail::int_list(j.at("source"), "source");
  std::size_t n1 = source.size();
  std::vector<int> compose(n1 * n1, -1);
  const json& comp = j.at("compose");
  if (!comp.is_array() || comp.size() != n1) throw ParseError("compose table has wrong shape");
  for (std::size_t x = 0; x < n1; ++x) {
    auto row = json_detail::int_list(comp[x], "compose row");
    if (row.size() != n1) throw ParseError("compose table has wrong shape");
    for (std::size_t y = 0; y < n1; ++y) compose[x * n1 + y] = row[y];
  }
  return FiniteGroupoid::validated(
      j.at("objects").get<std::size_t>(), std::move(source),
      json_detail::int_list(j.at("target"), "target"), std::move(compose),
      json_detail::int_list(j.at("inverse"), "inverse"),
      json_detail::int_list(j.at("units"), "units"));
}

inline json action_table_to_json(const std::vector<int>& act, std::size_t arrows,
                                 std::size_t carrier) {
  json rows = json::array();
  for (std::size_t x = 0; x < arrows; ++x) {
    json row = json::array();
    for (std::size_t m = 0; m < carrier; ++m) row.push_back(act[x * carrier + m]);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<int> action_table_from_json(const json& j, std::size_t arrows,
                                               std::size_t carrier) {
  if (!j.is_array() || j.size() != arrows) throw ParseError("action table has wrong arrow count");
  std::vector<int> act(arrows * carrier, -1);
  for (std::size_t x = 0; x < arrows; ++x) {
    auto row = json_detail::int_list(j[x], "action row");
    if (row.size() != carrier) throw ParseError("action table has wrong carrier count");
    for (std::size_t m = 0; m < carrier; ++m) act[x * carrier + m] = row[m];
  }
  return act;
}

inline json action_to_json(const GroupoidAction& a) {
  json j;
  j["groupoid"] = groupoid_to_json(a.groupoid());
  j["side"] = a.side() == ActionSide::left ? "left" : "right";
  j["carrier"] = a.carrier();
  j["base"] = a.base_table();
  j["act"] = action_table_to_json(a.action_table(), a.groupoid().arrow_count(), a.carrier());
  return j;
}

inline GroupoidAction action_from_json(const json& j) {
  for (const char* key : {"groupoid", "side", "carrier", "base", "act"})
    if (!j.contains(key)) throw ParseError(std::string("action payload needs ") + key);
  auto g = groupoid_from_json(j.at("groupoid"));
  std::string side = j.at("side").get<std::string>();
  if (side != "left" && side != "right") throw ParseError("side must be left or right");
  std::size_t carrier = j.at("carrier").get<std::size_t>();
  auto act = action_table_from_json(j.at("act"), g.arrow_count(), carrier);
  return GroupoidAction::validated(std::move(g),
                                   side == "left" ? ActionSide::left : ActionSide::right, carrier,
                                   json_detail::int_list(j.at("base"), "base"), std::move(act));
}

inline json bibundle_to_json(const Bibundle& b) {
  json j;
  j["left_groupoid"] = groupoid_to_json(b.left_groupoid());
  j["right_groupoid"] = groupoid_to_json(b.right_groupoid());
  j["carrier"] = b.carrier();
  j["tau"] = b.left_action().base_table();
  j["sigma"] = b.right_action().base_table();
  j["left_act"] =
      action_table_to_json(b.left_action().action_table(), b.left_groupoid().arrow_count(),
                           b.carrier());
  j["right_act"] =
      action_table_to_json(b.right_action().action_table(), b.right_groupoid().arrow_count(),
                           b.carrier());
  return j;
}

inline Bibundle bibundle_from_json(const json& j) {
  for (const char* key :
       {"left_groupoid", "right_groupoid", "carrier", "tau", "sigma", "left_act", "right_act"})
    if (!j.contains(key)) throw ParseError(std::string("bibundle payload needs ") + key);
  auto g = groupoid_from_json(j.at("left_groupoid"));
  auto h = groupoid_from_json(j.at("right_groupoid"));
  std::size_t carrier = j.at("carrier").get<std::size_t>();
  auto lact = action_table_from_json(j.at("left_act"), g.arrow_count(), carrier);
  auto ract = action_table_from_json(j.at("right_act"), h.arrow_count(), carrier);
  return Bibundle::validated(std::move(g), std::move(h), carrier,
                             json_detail::int_list(j.at("tau"), "tau"),
                             json_detail::int_list(j.at("sigma"), "sigma"), std::move(lact),
                             std::move(ract));
}

inline json functor_to_json(const GroupoidFunctor& f) {
  json j;
  j["source"] = groupoid_to_json(f.source);
  j["target"] = groupoid_to_json(f.target);
  j["psi0"] = f.psi0;
  j["psi1"] = f.psi1;
  return j;
}

inline GroupoidFunctor functor_from_json(const json& j) {
  for (const char* key : {"source", "target", "psi0", "psi1"})
    if (!j.contains(key)) throw ParseError(std::string("functor payload needs ") + key);
  return GroupoidFunctor::validated(groupoid_from_json(j.at("source")),
                                    groupoid_from_json(j.at("target")),
                                    json_detail::int_list(j.at("psi0"), "psi0"),
                                    json_detail::int_list(j.at("psi1"), "psi1"));
}

// --- documents --------------------------------------------------------------

inline const std::vector<std::string>& instance_kinds() {
  static const std::vector<std::string> kinds = {"algebra",  "bimodule", "multimatrix",
                                                 "correspondence", "groupoid", "action",
                                                 "bibundle", "functor"};
  return kinds;
}

inline json document_to_json(const InstanceDocument& doc) {
  json j;
  j["kind"] = doc.kind;
  j["name"] = doc.name;
  j["payload"] = doc.payload;
  return j;
}

inline InstanceDocument document_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("name") || !j.contains("payload"))
    throw ParseError("instance document needs kind, name, payload");
  InstanceDocument doc;
  doc.kind = j.at("kind").get<std::string>();
  doc.name = j.at("name").get<std::string>();
  doc.payload = j.at("payload");
  bool known = false;
  for (const auto& k : instance_kinds()) known |= (k == doc.kind);
  if (!known) throw ParseError("unknown instance kind '" + doc.kind + "'");
  return doc;
}

inline InstanceDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return document_from_json(j);
}

inline void save_document(const InstanceDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << document_to_json(doc).dump(2) << "\n";
}

// Runs the kind-appropriate validation; construction validates, so this only
// dispatches and surfaces witnesses.
inline void validate_payload(const InstanceDocument& doc) {
  if (doc.kind == "algebra") algebra_from_json(doc.payload);
  else if (doc.kind == "bimodule") bimodule_from_json(doc.payload);
  else if (doc.kind == "multimatrix") multimatrix_from_json(doc.payload);
  else if (doc.kind == "correspondence") correspondence_from_json(doc.payload);
  else if (doc.kind == "groupoid") groupoid_from_json(doc.payload);
  else if (doc.kind == "action") action_from_json(doc.payload);
  else if (doc.kind == "bibundle") bibundle_from_json(doc.payload);
  else if (doc.kind == "functor") functor_from_json(doc.payload);
}

}  // namespace bicat
