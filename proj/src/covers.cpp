// SPDX-License-Identifier: Apache-2.0
#include "ractor/covers.hpp"

#include <algorithm>
#include <deque>

namespace ractor {

CoverAction::CoverAction(const ChamberComplex& cx, const CoorientedWall& wall, std::size_t sheets)
    : sheets_(sheets), point_count_(cx.chamber_count() * sheets) {
  if (sheets == 0) throw std::invalid_argument("cover needs at least one sheet");
  const long p = static_cast<long>(sheets);
  perms_.assign(cx.facet_count(), std::vector<std::uint32_t>(point_count_));
  for (std::size_t q = 0; q < cx.chamber_count(); ++q)
    for (Generator g = 0; g < cx.facet_count(); ++g) {
      const std::size_t target = cx.glue(q, g);
      const long shift = wall.sign_by_id(cx.cell_id({q, g}));
      for (std::size_t k = 0; k < sheets; ++k) {
        const long level = ((static_cast<long>(k) + shift) % p + p) % p;
        perms_[g][point(q, k)] = static_cast<std::uint32_t>(point(target, static_cast<std::size_t>(level)));
      }
    }
  if (orbit_size(basepoint()) != point_count_)
    throw DisconnectedCover("cover action on " + std::to_string(point_count_) +
                            " points is not transitive (crossing count mod " + std::to_string(sheets) +
                            " is not surjective)");
}

std::size_t CoverAction::act(std::size_t x, const Word& w) const {
  for (Generator g : w) x = perms_.at(g)[x];
  return x;
}

bool CoverAction::generators_are_involutions() const {
  for (const auto& perm : perms_)
    for (std::size_t x = 0; x < perm.size(); ++x)
      if (perm[perm[x]] != x) return false;
  return true;
}

std::size_t CoverAction::orbit_size(std::size_t x) const {
  std::vector<bool> seen(point_count_, false);
  std::vector<std::size_t> stack{x};
  seen[x] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t y = stack.back();
    stack.pop_back();
    for (const auto& perm : perms_)
      if (!seen[perm[y]]) {
        seen[perm[y]] = true;
        ++count;
        stack.push_back(perm[y]);
      }
  }
  return count;
}

CoverAction cover_action(const ChamberComplex& cx, const CoorientedWall& wall, std::size_t p) {
  return CoverAction(cx, wall, p);
}

// ---------------------------------------------------------------------------

SchreierData::SchreierData(const CoverAction& a)
    : generators_(a.generator_count()),
      parent_(a.point_count(), -1),
      parent_generator_(a.point_count(), 0),
      column_(a.point_count() * a.generator_count(), -1),
      image_(a.point_count() * a.generator_count()) {
  std::vector<bool> seen(a.point_count(), false);
  std::deque<std::size_t> todo{a.basepoint()};
  seen[a.basepoint()] = true;
  while (!todo.empty()) {
    std::size_t x = todo.front();
    todo.pop_front();
    for (Generator g = 0; g < generators_; ++g) {
      std::size_t y = a.act(x, g);
      if (!seen[y]) {
        seen[y] = true;
        parent_[y] = static_cast<std::int64_t>(x);
        parent_generator_[y] = g;
        todo.push_back(y);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw DisconnectedCover("Schreier transversal does not reach every point");

  for (std::size_t x = 0; x < a.point_count(); ++x)
    for (Generator g = 0; g < generators_; ++g) {
      const std::size_t y = a.act(x, g);
      image_[x * generators_ + g] = static_cast<std::uint32_t>(y);
      const bool tree_edge = parent_[y] == static_cast<std::int64_t>(x) && parent_generator_[y] == g;
      if (tree_edge) continue;
      column_[x * generators_ + g] = static_cast<std::int64_t>(columns_.size());
      columns_.emplace_back(x, g);
    }
}

Word SchreierData::transversal_word(std::size_t x) const {
  Word w;
  while (parent_.at(x) >= 0) {
    w.push_back(parent_generator_[x]);
    x = static_cast<std::size_t>(parent_[x]);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

SignedWord SchreierData::schreier_word(std::size_t x, Generator g) const {
  SignedWord w;
  for (Generator h : transversal_word(x)) w.push_back({h, 1});
  w.push_back({g, 1});
  const Word back = transversal_word(image_.at(x * generators_ + g));
  for (auto it = back.rbegin(); it != back.rend(); ++it) w.push_back({*it, -1});
  return w;
}

SchreierData schreier(const CoverAction& a) { return SchreierData(a); }

zsmith::SparseIntMatrix abelianized_relator_matrix(const CoverAction& a, const SchreierData& d,
                                                   const RacgPresentation& pres) {
  if (pres.generator_count != a.generator_count())
    throw std::invalid_argument("presentation and action have different generators");
  zsmith::SparseIntMatrix m(0, d.column_count());
  for (std::size_t x = 0; x < a.point_count(); ++x)
    for (const Word& relator : pres.relators) {
      zsmith::SparseIntMatrix::Row row;
      std::size_t y = x;
      for (Generator g : relator) {
        const std::int64_t col = d.column(y, g);
        if (col >= 0) row.emplace_back(static_cast<std::uint32_t>(col), 1);
        y = a.act(y, g);
      }
      if (y != x) throw std::logic_error("relator does not fix its starting point");
      m.append_row(std::move(row));
    }
  return m;
}

// ---------------------------------------------------------------------------

namespace {

// Orbit of x under the gluings of the facets in face; its least point is the
// canonical representative.
std::size_t representative(const CoverAction& a, std::size_t x, const FacetSet& face) {
  std::vector<std::size_t> orbit{x};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (FacetIndex f : face) {
      std::size_t y = a.act(orbit[i], f);
      if (std::find(orbit.begin(), orbit.end(), y) == orbit.end()) orbit.push_back(y);
    }
  if (orbit.size() != (std::size_t{1} << face.size()))
    throw std::logic_error("stabiliser does not act freely on cells");
  return *std::min_element(orbit.begin(), orbit.end());
}

// Cells of one type indexed by (representative point, type).
struct CellIndex {
  std::vector<std::int64_t> index;
  std::size_t types = 0;
  std::size_t count = 0;

  CellIndex(std::size_t points, std::size_t types_) : index(points * types_, -1), types(types_) {}
  void add(std::size_t rep, std::size_t type) { index[rep * types + type] = static_cast<std::int64_t>(count++); }
  std::size_t at(std::size_t rep, std::size_t type) const {
    const std::int64_t i = index[rep * types + type];
    if (i < 0) throw std::logic_error("cell representative without an index");
    return static_cast<std::size_t>(i);
  }
};

bool is_zero(const zsmith::SparseIntMatrix& m) { return m.nnz() == 0; }

}  // namespace

CellularHomology homology_via_cells(const CoverAction& a, const ChamberComplex& cx,
                                    const zsmith::SnfOptions& options) {
  const Polytope& p = cx.polytope();
  if (p.dimension() != 3) throw std::domain_error("cellular homology is implemented for 3-polytopes");
  const OrientedCells oc = oriented_cells(p);
  const std::size_t n = a.point_count();
  const std::size_t nf = p.facet_count();
  const std::size_t ne = oc.edges.size();
  const std::size_t nv = p.vertices().size();

  std::vector<FacetSet> edge_sets, vertex_sets = p.vertices();
  for (const auto& e : oc.edges) edge_sets.push_back({e.a, e.b});

  CellIndex faces(n, nf), edges(n, ne), vertices(n, nv);
  for (std::size_t x = 0; x < n; ++x) {
    for (FacetIndex f = 0; f < nf; ++f)
      if (representative(a, x, {f}) == x) faces.add(x, f);
    for (std::size_t e = 0; e < ne; ++e)
      if (representative(a, x, edge_sets[e]) == x) edges.add(x, e);
    for (std::size_t v = 0; v < nv; ++v)
      if (representative(a, x, vertex_sets[v]) == x) vertices.add(x, v);
  }

  zsmith::SparseIntMatrix d3(n, faces.count), d2(faces.count, edges.count), d1(edges.count, vertices.count);
  for (std::size_t x = 0; x < n; ++x)
    for (FacetIndex f = 0; f < nf; ++f) d3.add(x, faces.at(representative(a, x, {f}), f), 1);
  for (std::size_t x = 0; x < n; ++x)
    for (FacetIndex f = 0; f < nf; ++f) {
      if (faces.index[x * nf + f] < 0) continue;
      const std::size_t row = faces.at(x, f);
      for (auto [e, sign] : oc.facet_boundary[f])
        d2.add(row, edges.at(representative(a, x, edge_sets[e]), e), sign);
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t e = 0; e < ne; ++e) {
      if (edges.index[x * ne + e] < 0) continue;
      const std::size_t row = edges.at(x, e);
      const auto& edge = oc.edges[e];
      d1.add(row, vertices.at(representative(a, x, vertex_sets[edge.head]), edge.head), 1);
      d1.add(row, vertices.at(representative(a, x, vertex_sets[edge.tail]), edge.tail), -1);
    }

  if (!is_zero(d3 * d2) || !is_zero(d2 * d1))
    throw std::logic_error("orientation bookkeeping inconsistency: boundary of a boundary is not zero");

  CellularHomology out;
  out.cells = {vertices.count, edges.count, faces.count, n};
  out.euler_characteristic = static_cast<long>(vertices.count) - static_cast<long>(edges.count) +
                             static_cast<long>(faces.count) - static_cast<long>(n);
  const auto r1 = zsmith::snf(d1, options).diagonal.size();
  auto s2 = zsmith::snf(d2, options);
  out.h1.betti = edges.count - r1 - s2.diagonal.size();
  for (auto& d : s2.diagonal)
    if (d > 1) out.h1.invariant_factors.push_back(std::move(d));
  return out;
}

}  // namespace ractor
