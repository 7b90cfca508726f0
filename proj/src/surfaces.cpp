// SPDX-License-Identifier: Apache-2.0
#include "ractor/surfaces.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <optional>

namespace ractor {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Vertex at which the signed edge starts or ends.
std::size_t edge_start(const SurfaceComplex& s, std::pair<std::size_t, int> e) {
  return e.second > 0 ? s.edges[e.first].first : s.edges[e.first].second;
}
std::size_t edge_end(const SurfaceComplex& s, std::pair<std::size_t, int> e) {
  return e.second > 0 ? s.edges[e.first].second : s.edges[e.first].first;
}

}  // namespace

void check_closed_surface(const SurfaceComplex& s) {
  struct Side {
    std::size_t face, position;
    int sign;
  };
  std::vector<std::vector<Side>> sides(s.edges.size());
  std::vector<std::size_t> corner_offset(s.faces.size() + 1, 0);
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    const auto& boundary = s.faces[f];
    if (boundary.empty()) throw SurfaceError("face with empty boundary");
    for (std::size_t i = 0; i < boundary.size(); ++i) {
      const auto& e = boundary[i];
      if (e.first >= s.edges.size() || (e.second != 1 && e.second != -1))
        throw SurfaceError("malformed face boundary");
      const auto& next = boundary[(i + 1) % boundary.size()];
      if (edge_end(s, e) != edge_start(s, next)) throw SurfaceError("face boundary is not a closed path");
      sides[e.first].push_back({f, i, e.second});
    }
    corner_offset[f + 1] = corner_offset[f] + boundary.size();
  }
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    if (s.edges[e].first >= s.vertex_count || s.edges[e].second >= s.vertex_count)
      throw SurfaceError("edge endpoint out of range");
    if (sides[e].size() != 2)
      throw SurfaceError("edge " + std::to_string(e) + " has " + std::to_string(sides[e].size()) +
                         " face-sides instead of 2");
  }

  // Corner (f, i) sits at the end of boundary edge i; link edges join the
  // corners of the two sides of an edge at a common endpoint.
  UnionFind link(corner_offset.back());
  auto corner = [&](std::size_t f, std::size_t i) { return corner_offset[f] + i; };
  auto prev = [&](std::size_t f, std::size_t i) { return (i + s.faces[f].size() - 1) % s.faces[f].size(); };
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    const Side& a = sides[e][0];
    const Side& b = sides[e][1];
    auto at_head = [&](const Side& x) { return x.sign > 0 ? corner(x.face, x.position) : corner(x.face, prev(x.face, x.position)); };
    auto at_tail = [&](const Side& x) { return x.sign > 0 ? corner(x.face, prev(x.face, x.position)) : corner(x.face, x.position); };
    link.unite(at_head(a), at_head(b));
    link.unite(at_tail(a), at_tail(b));
  }
  std::vector<std::optional<std::size_t>> component(s.vertex_count);
  for (std::size_t f = 0; f < s.faces.size(); ++f)
    for (std::size_t i = 0; i < s.faces[f].size(); ++i) {
      const std::size_t v = edge_end(s, s.faces[f][i]);
      const std::size_t root = link.find(corner(f, i));
      if (!component[v])
        component[v] = root;
      else if (*component[v] != root)
        throw SurfaceError("link of vertex " + std::to_string(v) + " is not connected");
    }
  for (std::size_t v = 0; v < s.vertex_count; ++v)
    if (!component[v]) throw SurfaceError("vertex " + std::to_string(v) + " lies on no face");
}

SurfaceComplex surface_complex(const ChamberComplex& cx, const Wall& w) {
  const Polytope& p = cx.polytope();
  if (p.dimension() != 3) throw SurfaceError("wall surfaces are built for 3-dimensional polytopes only");

  auto face_key = [&](WallCell c) {
    return std::min(cx.cell_id(c), cx.cell_id({cx.glue(c.chamber, c.facet), c.facet}));
  };
  std::map<std::size_t, std::size_t> face_index;
  for (WallCell c : w.cells()) face_index.emplace(face_key(c), 0);
  std::vector<WallCell> face_rep;
  for (auto& [key, idx] : face_index) {
    idx = face_rep.size();
    face_rep.push_back(cx.cell_at(key));
  }
  auto face_of = [&](WallCell c) {
    if (!w.contains(cx, c)) throw SurfaceError("wall is not closed under continuation");
    return face_index.at(face_key(c));
  };

  std::vector<std::optional<FacetSet>> cycles(p.facet_count());
  auto cycle_of = [&](FacetIndex f) -> const FacetSet& {
    if (!cycles[f]) cycles[f] = neighbour_cycle(p, f);
    return *cycles[f];
  };

  const std::size_t faces = face_rep.size();
  std::vector<std::size_t> offset(faces + 1, 0);
  for (std::size_t F = 0; F < faces; ++F) offset[F + 1] = offset[F] + cycle_of(face_rep[F].facet).size();

  // Node (F, i): edge slot i of face F, or the corner between slots i and i+1.
  UnionFind edge_uf(offset.back()), vertex_uf(offset.back());
  for (std::size_t F = 0; F < faces; ++F) {
    const WallCell rep = face_rep[F];
    const FacetSet& cyc = cycle_of(rep.facet);
    const std::size_t k = cyc.size();
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t across = face_of({cx.glue(rep.chamber, cyc[i]), rep.facet});
      edge_uf.unite(offset[F] + i, offset[across] + i);
      vertex_uf.unite(offset[F] + i, offset[across] + i);
      const std::size_t across_next = face_of({cx.glue(rep.chamber, cyc[(i + 1) % k]), rep.facet});
      vertex_uf.unite(offset[F] + i, offset[across_next] + i);
    }
  }

  std::map<std::size_t, std::size_t> edge_ids, vertex_ids;
  auto edge_id = [&](std::size_t node) { return edge_ids.emplace(edge_uf.find(node), edge_ids.size()).first->second; };
  auto vertex_id = [&](std::size_t node) {
    return vertex_ids.emplace(vertex_uf.find(node), vertex_ids.size()).first->second;
  };

  SurfaceComplex s;
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> ends;
  for (std::size_t F = 0; F < faces; ++F) {
    const std::size_t k = offset[F + 1] - offset[F];
    std::vector<std::pair<std::size_t, int>> boundary;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t e = edge_id(offset[F] + i);
      const std::size_t tail = vertex_id(offset[F] + (i + k - 1) % k);
      const std::size_t head = vertex_id(offset[F] + i);
      if (e >= ends.size()) ends.resize(e + 1);
      if (!ends[e])
        ends[e] = std::make_pair(tail, head);
      else if (*ends[e] != std::make_pair(tail, head))
        throw SurfaceError("edge endpoints disagree between its two sides");
      boundary.emplace_back(e, 1);
    }
    s.faces.push_back(std::move(boundary));
  }
  for (const auto& e : ends) s.edges.push_back(*e);
  s.vertex_count = vertex_ids.size();
  check_closed_surface(s);
  return s;
}

bool orientable(const SurfaceComplex& s) {
  std::vector<std::vector<std::pair<std::size_t, int>>> sides(s.edges.size());
  for (std::size_t f = 0; f < s.faces.size(); ++f)
    for (const auto& [e, sign] : s.faces[f]) sides[e].emplace_back(f, sign);

  // Adjacent faces induce opposite directions on their common edge.
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(s.faces.size());
  for (const auto& sd : sides) {
    if (sd.size() != 2) throw SurfaceError("edge without exactly two face-sides");
    const int relative = -sd[0].second * sd[1].second;
    adj[sd[0].first].emplace_back(sd[1].first, relative);
    adj[sd[1].first].emplace_back(sd[0].first, relative);
  }
  std::vector<int> orient(s.faces.size(), 0);
  for (std::size_t start = 0; start < s.faces.size(); ++start) {
    if (orient[start]) continue;
    orient[start] = 1;
    std::deque<std::size_t> todo{start};
    while (!todo.empty()) {
      std::size_t f = todo.front();
      todo.pop_front();
      for (auto [g, rel] : adj[f]) {
        const int want = orient[f] * rel;
        if (!orient[g]) {
          orient[g] = want;
          todo.push_back(g);
        } else if (orient[g] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

zsmith::SparseIntMatrix boundary_edges(const SurfaceComplex& s) {
  zsmith::SparseIntMatrix d(s.edges.size(), s.vertex_count);
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    d.add(e, s.edges[e].second, 1);
    d.add(e, s.edges[e].first, -1);
  }
  return d;
}

zsmith::SparseIntMatrix boundary_faces(const SurfaceComplex& s) {
  zsmith::SparseIntMatrix d(s.faces.size(), s.edges.size());
  for (std::size_t f = 0; f < s.faces.size(); ++f)
    for (const auto& [e, sign] : s.faces[f]) d.add(f, e, sign);
  return d;
}

zsmith::TorsionProfile surface_h1(const SurfaceComplex& s) {
  const auto d1 = zsmith::snf(boundary_edges(s));
  auto d2 = zsmith::snf(boundary_faces(s));
  zsmith::TorsionProfile t;
  t.betti = s.edges.size() - d1.diagonal.size() - d2.diagonal.size();
  for (auto& d : d2.diagonal)
    if (d > 1) t.invariant_factors.push_back(std::move(d));
  return t;
}

}  // namespace ractor
