// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "ractor/coloring.hpp"
#include "ractor/polytope.hpp"

namespace ractor {

/// {"name", "dimension", "facets": [..], "adjacency": [[a, b], ..], "vertices": [[..], ..]?}
Polytope polytope_from_json(const std::string& text);
std::string polytope_to_json(const Polytope& p);

/// "builtin:<name>" or a path to a polytope JSON file.
Polytope load_polytope(const std::string& source);

/// {"bits": m, "colors": {facet: "0100100", ..}} with character i = coordinate i.
FacetColoring coloring_from_json(const Polytope& p, const std::string& text);
std::string coloring_to_json(const Polytope& p, const FacetColoring& c);

std::string read_file(const std::string& path);

}  // namespace ractor
