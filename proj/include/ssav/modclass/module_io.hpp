#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "ssav/modclass/decompose.hpp"
#include "ssav/modclass/module.hpp"

// Module documents: {"p": 11, "k": 6, "n": 2, "entries": [0, 60, 1, 62]}
// with row-major entries that may be signed; they are canonicalized mod 2^k.
namespace ssav::modclass {

inline TwoAdicModule module_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw std::invalid_argument("module document must be a JSON object");
    for (const char* key : {"p", "k", "n", "entries"})
      if (!doc.contains(key)) throw std::invalid_argument(std::string("module document is missing \"") + key + "\"");
    const auto p = doc.at("p").get<std::int64_t>();
    const auto k = doc.at("k").get<int>();
    const auto n = doc.at("n").get<std::int64_t>();
    if (p < 2) throw std::invalid_argument("module document: p must be >= 2");
    if (n < 1) throw std::invalid_argument("module document: n must be >= 1");
    const auto entries = doc.at("entries").get<std::vector<std::int64_t>>();
    return {static_cast<std::uint64_t>(p),
            ResidueMatrix::from_signed(static_cast<std::size_t>(n), k, entries)};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("module document: ") + e.what());
  }
}

inline TwoAdicModule module_from_string(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("module document is not valid JSON: ") + e.what());
  }
  return module_from_json(doc);
}

inline TwoAdicModule load_module(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open module file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return module_from_string(buf.str());
}

inline nlohmann::ordered_json matrix_to_json(const ResidueMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::ordered_json module_to_json(const TwoAdicModule& m) {
  nlohmann::ordered_json doc;
  doc["p"] = m.p;
  doc["k"] = m.precision();
  doc["n"] = m.rank();
  auto entries = nlohmann::ordered_json::array();
  for (const auto e : m.action.entries()) entries.push_back(e);
  doc["entries"] = std::move(entries);
  return doc;
}

inline nlohmann::ordered_json invariants_to_json(const DecompInvariants& inv) {
  nlohmann::ordered_json doc;
  doc["case"] = std::string(1, to_char(inv.kase));
  doc["r"] = inv.r;
  doc["s"] = inv.s;
  if (inv.kase == ModuleCase::b) doc["t"] = inv.t;
  doc["tate_like"] = is_tate_like(inv);
  return doc;
}

}  // namespace ssav::modclass
