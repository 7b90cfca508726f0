// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ractor/coloring.hpp"
#include "ractor/polytope.hpp"
#include "ractor/racg.hpp"

namespace ractor {

/// Side of a facet-cell: the facet `facet` of chamber `chamber`. The cells
/// (q, f) and (q + colour(f), f) are the two sides of one codimension-1 cell.
struct WallCell {
  std::size_t chamber = 0;
  FacetIndex facet = 0;
  friend auto operator<=>(const WallCell&, const WallCell&) = default;
};

/// The quotient of hyperbolic space by the kernel of a colouring, as a complex
/// of chambers indexed by the image group Q (the span of the colours). Chamber
/// q is glued along facet f to chamber q + colour(f).
class ChamberComplex {
 public:
  ChamberComplex(Polytope polytope, FacetColoring coloring);

  const Polytope& polytope() const { return polytope_; }
  const FacetColoring& coloring() const { return coloring_; }
  std::size_t facet_count() const { return polytope_.facet_count(); }

  std::size_t chamber_count() const { return chambers_.size(); }
  /// Chambers are ordered by the integer value of their vector; chamber 0 is 0.
  F2Vec chamber_vector(std::size_t q) const { return chambers_.at(q); }
  std::size_t chamber_index(F2Vec v) const;
  std::size_t glue(std::size_t q, FacetIndex f) const { return glue_[q * facet_count() + f]; }
  /// Chamber reached from q by walking along the letters of w.
  std::size_t walk(std::size_t q, const Word& w) const;

  std::size_t cell_total() const { return chamber_count() * facet_count(); }
  std::size_t cell_id(WallCell c) const { return c.chamber * facet_count() + c.facet; }
  WallCell cell_at(std::size_t id) const { return {id / facet_count(), id % facet_count()}; }

  /// Number of cells by codimension: [0] chambers, ..., [n] vertex cells.
  const std::vector<std::size_t>& cell_counts() const { return cell_counts_; }
  long euler_characteristic() const;

 private:
  Polytope polytope_;
  FacetColoring coloring_;
  std::vector<F2Vec> chambers_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<std::size_t> glue_;
  std::vector<std::size_t> cell_counts_;
};

ChamberComplex build(const Polytope& p, const FacetColoring& c);

/// Faces of a polytope as facet sets, all subsets of vertex cliques
/// (including the empty set for the polytope itself), ordered by size then
/// lexicographically.
std::vector<FacetSet> polytope_faces(const Polytope& p);

/// Number of orbits of the chambers under the gluings by the facets of face.
std::size_t orbit_count(const ChamberComplex& cx, const FacetSet& face);

/// Immersed wall: a class of facet-cells closed under crossing the cell and
/// under continuation across a right-angled edge.
class Wall {
 public:
  Wall(const ChamberComplex& cx, std::vector<WallCell> cells);

  const std::vector<WallCell>& cells() const { return cells_; }
  bool contains(const ChamberComplex& cx, WallCell c) const { return member_[cx.cell_id(c)]; }
  /// Number of codimension-1 cells, each counted once for its two sides.
  std::size_t face_count() const { return face_count_; }
  WallCell seed() const { return cells_.front(); }

 private:
  std::vector<WallCell> cells_;
  std::vector<bool> member_;
  std::size_t face_count_ = 0;
};

Wall wall_of(const ChamberComplex& cx, std::size_t chamber, FacetIndex f);
/// All walls of the complex, ordered by their least cell.
std::vector<Wall> all_walls(const ChamberComplex& cx);

/// Wall with a transverse side chosen per cell: crossing flips the sign,
/// continuation keeps it. The least cell has sign +1.
class CoorientedWall {
 public:
  CoorientedWall(Wall wall, std::vector<std::int8_t> signs)
      : wall_(std::move(wall)), signs_(std::move(signs)) {}

  const Wall& wall() const { return wall_; }
  /// +1 or -1 on wall cells, 0 elsewhere.
  int sign(const ChamberComplex& cx, WallCell c) const { return signs_[cx.cell_id(c)]; }
  int sign_by_id(std::size_t id) const { return signs_[id]; }

 private:
  Wall wall_;
  std::vector<std::int8_t> signs_;
};

/// A closed chain of related wall cells along which the side flips an odd
/// number of times.
struct NonCoorientable {
  std::vector<WallCell> cycle;
  std::size_t flips = 0;
};

std::variant<CoorientedWall, NonCoorientable> coorient(const ChamberComplex& cx, const Wall& w);

/// Signed count of crossings of the wall along the walk of w from base.
long psi(const ChamberComplex& cx, const CoorientedWall& s, std::size_t base, const Word& w);

}  // namespace ractor
