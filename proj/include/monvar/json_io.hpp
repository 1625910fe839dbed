#ifndef MONVAR_JSON_IO_HPP_
#define MONVAR_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "monvar/blocks.hpp"
#include "monvar/derivation.hpp"
#include "monvar/finite_monoid.hpp"
#include "monvar/varieties.hpp"
#include "monvar/word.hpp"

namespace monvar {

using nlohmann::json;

inline void to_json(json& j, const Word& w) { j = format_word(w); }

inline void to_json(json& j, const Identity& id) {
  j = json{{"lhs", id.lhs}, {"rhs", id.rhs}};
  if (!id.name.empty()) j["name"] = id.name;
}

inline void to_json(json& j, const Subblock& s) {
  j = json{{"letters", s.letters}, {"target_block", s.target_block}};
}

inline void to_json(json& j, const FullDecomposition& fd) {
  j = json::object();
  j["pretty"] = format_full_decomposition(fd);
  j["dividers"] = json::array();
  for (const Word& d : fd.dec.dividers) j["dividers"].push_back(d);
  j["blocks"] = json::array();
  for (std::size_t i = 0; i < fd.dec.block_count(); ++i) {
    json b;
    b["content"] = fd.dec.blocks[i];
    b["class"] = to_string(fd.blocks[i].cls);
    b["subblocks"] = fd.blocks[i].subblocks;
    j["blocks"].push_back(std::move(b));
  }
}

inline json assignment_to_json(const FiniteMonoid& m, const Assignment& a) {
  json j = json::object();
  for (const auto& [l, e] : a) j[format_letter(l)] = m.names[e];
  return j;
}

inline json verdict_to_json(const Verdict& v) {
  json j;
  j["holds"] = v.holds;
  j["method"] = v.method == DecisionMethod::Criterion ? "criterion" : "finite-oracle";
  if (!v.oracle.empty()) j["oracle"] = v.oracle;
  return j;
}

inline void to_json(json& j, const FiniteMonoid& m) {
  j = json{{"elements", m.names}, {"identity", m.identity_index}};
  if (m.zero_index) j["zero"] = *m.zero_index;
  j["table"] = json::array();
  for (std::size_t a = 0; a < m.size(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < m.size(); ++b) row.push_back(m.mul(a, b));
    j["table"].push_back(std::move(row));
  }
}

inline void from_json(const json& j, FiniteMonoid& m) {
  m.names = j.at("elements").get<std::vector<std::string>>();
  m.identity_index = j.at("identity").get<std::size_t>();
  if (j.contains("zero")) m.zero_index = j.at("zero").get<std::size_t>();
  m.table.clear();
  for (const auto& row : j.at("table"))
    for (const auto& v : row) m.table.push_back(v.get<std::uint16_t>());
  m.check();
}

inline void to_json(json& j, const Match& m) {
  j = json::object();
  j["prefix"] = m.prefix;
  j["suffix"] = m.suffix;
  json sub = json::object();
  for (const auto& [l, img] : m.substitution.mapping) sub[format_letter(l)] = img;
  j["substitution"] = std::move(sub);
}

inline void to_json(json& j, const DerivationStep& s) {
  j = json{{"identity", s.identity_name},
           {"direction", to_string(s.direction)},
           {"match", s.match},
           {"result", s.result}};
}

inline void to_json(json& j, const DerivationTrace& t) {
  j = json{{"source", t.source}, {"steps", t.steps}};
}

}  // namespace monvar

#endif  // MONVAR_JSON_IO_HPP_
