// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "ractor/chambers.hpp"
#include "ractor/zsmith.hpp"

namespace ractor {

class SurfaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed 2-dimensional cell complex. Each face lists its boundary edges in
/// cyclic order with a sign (+1: traversed tail to head).
struct SurfaceComplex {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (tail, head)
  std::vector<std::vector<std::pair<std::size_t, int>>> faces;

  std::size_t vertices() const { return vertex_count; }
  std::size_t edge_count() const { return edges.size(); }
  std::size_t face_count() const { return faces.size(); }
  long euler_characteristic() const {
    return static_cast<long>(vertex_count) - static_cast<long>(edges.size()) + static_cast<long>(faces.size());
  }
};

/// Throws SurfaceError unless every face boundary is a closed path, every
/// edge has exactly two face-sides and every vertex link is one cycle.
void check_closed_surface(const SurfaceComplex& s);

/// Intrinsic complex of a wall of a 3-dimensional chamber complex: faces are
/// the polygons of the wall, edges and vertices their classes under
/// continuation across right-angled edges.
SurfaceComplex surface_complex(const ChamberComplex& cx, const Wall& w);

bool orientable(const SurfaceComplex& s);

zsmith::SparseIntMatrix boundary_edges(const SurfaceComplex& s);  // edges x vertices
zsmith::SparseIntMatrix boundary_faces(const SurfaceComplex& s);  // faces x edges

zsmith::TorsionProfile surface_h1(const SurfaceComplex& s);

}  // namespace ractor
