// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ractor/chambers.hpp"
#include "ractor/coloring.hpp"
#include "ractor/covers.hpp"
#include "ractor/polytope.hpp"
#include "ractor/surfaces.hpp"
#include "ractor/zsmith.hpp"

namespace ractor {

struct SurfaceSummary {
  std::size_t faces = 0, edges = 0, vertices = 0;
  long euler_characteristic = 0;
  bool orientable = false;
  bool two_sided = false;
  zsmith::TorsionProfile h1;
};

/// Everything verified about M_1 and its walls, plus what the covers need.
struct BaseCase {
  explicit BaseCase(Polytope p) : polytope(std::move(p)) {}

  Polytope polytope;
  FacetIndex base = 0;
  FacetIndex opposite = 0;
  FacetColoring coloring;
  std::vector<Check> checks;
  std::optional<ChamberComplex> complex;
  std::optional<CoorientedWall> wall;  // the co-oriented wall through the base facet
  std::optional<SurfaceSummary> surface, surface_opposite;
  Word nonorientable_witness;
  Word psi_witness;  // maps to 0 under the colouring, crosses the wall once
  long psi_witness_value = 0;
  std::size_t psi_nonzero = 0;
  std::size_t wall_count = 0;
  std::size_t elapsed_ms = 0;

  bool passed() const;
  const Check* find(const std::string& name) const;
  /// Certificate document; deterministic apart from "elapsed_ms".
  std::string certificate_json() const;
};

/// Facet coloured delta if exactly one is, else facet 0.
FacetIndex base_facet_of(const Polytope& p, const FacetColoring& c);

/// Admissible colouring for the base facet 0 and its opposite.
FacetColoring search_coloring(const Polytope& p);

/// Runs every base-case check. With no colouring, one is searched for.
BaseCase verify_base(const Polytope& p, const std::optional<FacetColoring>& coloring);

enum class Method { rs, cells, both };

struct CoverResult {
  std::size_t p = 0;
  std::size_t index = 0;
  bool involutions = false;
  std::optional<zsmith::TorsionProfile> rs;
  std::size_t rs_rows = 0, rs_cols = 0;
  std::optional<CellularHomology> cells;
  std::size_t elapsed_ms = 0;

  /// The Reidemeister-Schreier profile if computed, else the cellular one.
  const zsmith::TorsionProfile& profile() const;
  bool agree() const;
};

/// H_1 of the p-fold cyclic cover defined by the base wall. Requires a base
/// case with a co-oriented wall.
CoverResult cover_homology(const BaseCase& b, std::size_t p, Method method, unsigned threads = 1);

}  // namespace ractor
