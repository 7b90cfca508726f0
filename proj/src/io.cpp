// SPDX-License-Identifier: Apache-2.0
#include "ractor/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace ractor {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

const json& field(const json& obj, const char* key, const char* what) {
  if (!obj.is_object()) throw InputError(std::string(what) + " JSON must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(std::string(what) + " JSON lacks \"" + key + "\"");
  return *it;
}

}  // namespace

Polytope polytope_from_json(const std::string& text) {
  const json doc = parse(text, "polytope");
  try {
    const std::string name = field(doc, "name", "polytope").get<std::string>();
    const long dimension = field(doc, "dimension", "polytope").get<long>();
    if (dimension < 1) throw InputError("polytope dimension must be positive");
    const auto facets = field(doc, "facets", "polytope").get<std::vector<std::string>>();

    std::map<std::string, FacetIndex> index;
    for (FacetIndex i = 0; i < facets.size(); ++i)
      if (!index.emplace(facets[i], i).second) throw InputError("duplicate facet '" + facets[i] + "'");
    auto lookup = [&](const std::string& f) {
      auto it = index.find(f);
      if (it == index.end()) throw InputError("unknown facet '" + f + "'");
      return it->second;
    };

    std::vector<std::pair<FacetIndex, FacetIndex>> pairs;
    for (const auto& pr : field(doc, "adjacency", "polytope")) {
      const auto names = pr.get<std::vector<std::string>>();
      if (names.size() != 2) throw InputError("adjacency entries must be pairs");
      pairs.emplace_back(lookup(names[0]), lookup(names[1]));
    }

    std::optional<std::vector<FacetSet>> vertices;
    if (doc.contains("vertices")) {
      vertices.emplace();
      for (const auto& v : doc.at("vertices")) {
        FacetSet s;
        for (const auto& f : v.get<std::vector<std::string>>()) s.push_back(lookup(f));
        vertices->push_back(std::move(s));
      }
    }
    return Polytope(name, static_cast<std::size_t>(dimension), facets, std::move(pairs), std::move(vertices));
  } catch (const json::exception& e) {
    throw InputError(std::string("polytope JSON has the wrong shape: ") + e.what());
  }
}

std::string polytope_to_json(const Polytope& p) {
  ordered_json doc;
  doc["name"] = p.name();
  doc["dimension"] = p.dimension();
  doc["facets"] = p.facet_names();
  ordered_json adj = ordered_json::array();
  for (auto [a, b] : p.edges()) adj.push_back({p.facet_name(a), p.facet_name(b)});
  doc["adjacency"] = adj;
  ordered_json verts = ordered_json::array();
  for (const auto& v : p.vertices()) {
    ordered_json names = ordered_json::array();
    for (FacetIndex f : v) names.push_back(p.facet_name(f));
    verts.push_back(names);
  }
  doc["vertices"] = verts;
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Polytope load_polytope(const std::string& source) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) return build_builtin(source.substr(prefix.size()));
  return polytope_from_json(read_file(source));
}

FacetColoring coloring_from_json(const Polytope& p, const std::string& text) {
  const json doc = parse(text, "colouring");
  try {
    const long bits = field(doc, "bits", "colouring").get<long>();
    if (bits < 1 || bits > 64) throw InputError("colouring bit width must be between 1 and 64");
    const json& colors = field(doc, "colors", "colouring");
    if (!colors.is_object()) throw InputError("\"colors\" must map facet names to bit strings");
    FacetColoring c{static_cast<unsigned>(bits), std::vector<F2Vec>(p.facet_count())};
    std::vector<bool> seen(p.facet_count(), false);
    for (const auto& [name, value] : colors.items()) {
      auto f = p.find_facet(name);
      if (!f) throw InputError("colouring names unknown facet '" + name + "'");
      const auto s = value.get<std::string>();
      if (s.size() != static_cast<std::size_t>(bits))
        throw InputError("colour of '" + name + "' does not have " + std::to_string(bits) + " bits");
      c.colors[*f] = F2Vec::parse(s);
      seen[*f] = true;
    }
    for (FacetIndex f = 0; f < p.facet_count(); ++f)
      if (!seen[f]) throw InputError("facet '" + p.facet_name(f) + "' has no colour");
    return c;
  } catch (const json::exception& e) {
    throw InputError(std::string("colouring JSON has the wrong shape: ") + e.what());
  }
}

std::string coloring_to_json(const Polytope& p, const FacetColoring& c) {
  ordered_json colors = ordered_json::object();
  for (FacetIndex f = 0; f < p.facet_count(); ++f) colors[p.facet_name(f)] = c.colors[f].to_string(c.bits);
  ordered_json doc;
  doc["bits"] = c.bits;
  doc["colors"] = colors;
  return doc.dump(2) + "\n";
}

}  // namespace ractor
