#pragma once

#include <set>
#include <string>
#include <tuple>

#include "json.hpp"

#include "kron/orbit.hpp"
#include "kron/reading.hpp"

namespace kron {

inline nlohmann::json partition_json(const Partition& p) { return nlohmann::json(p.vec()); }

/// { "steps": ["r1", ...], "frames": [1, ...], "lattice": bool }
inline nlohmann::json reading_word_json(const ReadingWord& w) {
  nlohmann::json steps = nlohmann::json::array();
  for (const Step& st : w.steps()) steps.push_back(st.str());
  return {{"steps", steps}, {"frames", w.frames()}, {"lattice", is_lattice(w)}};
}

/// { "weight", "representative", "size", "semistandard", "classical"? }.
/// "classical" is present only when every step adds a box; inner cells
/// are 0.
inline nlohmann::json orbit_json(const WeightedOrbit& o) {
  nlohmann::json j = {{"weight", partition_json(o.weight())},
                      {"representative", o.representative().str()},
                      {"size", o.size()},
                      {"semistandard", is_semistandard(o)}};
  const auto steps = o.representative().steps();
  const bool all_adds =
      std::all_of(steps.begin(), steps.end(), [](const Step& s) { return s.remove_row == 0 && s.add_row > 0; });
  if (all_adds) j["classical"] = to_classical(o).rows;
  return j;
}

/// Graphviz dump of the swap graph inside an orbit; edges carry the swap
/// position and self-loops (equal adjacent steps) are omitted.
inline std::string orbit_dot(const WeightedOrbit& o, const std::string& name = "orbit") {
  std::string out = "graph " + name + " {\n";
  for (const auto& m : o.members()) out += "  \"" + m.str() + "\";\n";
  std::set<std::tuple<std::string, std::string, int>> edges;
  for (const auto& m : o.members()) {
    for (int k = 1; k < m.length(); ++k) {
      if (is_boundary(o.weight(), k)) continue;
      auto other = swap(m, k);
      if (!other || *other == m) continue;
      auto a = m.str();
      auto b = other->str();
      if (b < a) std::swap(a, b);
      edges.emplace(a, b, k);
    }
  }
  for (const auto& [a, b, k] : edges) out += "  \"" + a + "\" -- \"" + b + "\" [label=\"" + std::to_string(k) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace kron
