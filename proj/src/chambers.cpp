// SPDX-License-Identifier: Apache-2.0
#include "ractor/chambers.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace ractor {

ChamberComplex::ChamberComplex(Polytope polytope, FacetColoring coloring)
    : polytope_(std::move(polytope)), coloring_(std::move(coloring)) {
  const std::size_t n = polytope_.facet_count();
  if (coloring_.colors.size() != n)
    throw std::domain_error("colouring does not assign one colour per facet");
  for (FacetIndex f = 0; f < n; ++f)
    if (coloring_.colors[f].is_zero())
      throw std::domain_error("facet '" + polytope_.facet_name(f) + "' has the zero colour");

  std::set<std::uint64_t> span{0};
  std::deque<F2Vec> todo{F2Vec{}};
  while (!todo.empty()) {
    F2Vec v = todo.front();
    todo.pop_front();
    for (F2Vec c : coloring_.colors)
      if (span.insert((v + c).bits).second) todo.push_back(v + c);
  }
  for (std::uint64_t b : span) {
    index_.emplace(b, chambers_.size());
    chambers_.push_back(F2Vec(b));
  }

  glue_.resize(chambers_.size() * n);
  for (std::size_t q = 0; q < chambers_.size(); ++q)
    for (FacetIndex f = 0; f < n; ++f) glue_[q * n + f] = index_.at((chambers_[q] + coloring_.colors[f]).bits);

  const std::size_t dim = polytope_.dimension();
  cell_counts_.assign(dim + 1, 0);
  for (const auto& face : polytope_faces(polytope_))
    if (face.size() <= dim) cell_counts_[face.size()] += orbit_count(*this, face);
}

std::size_t ChamberComplex::chamber_index(F2Vec v) const {
  auto it = index_.find(v.bits);
  if (it == index_.end()) throw std::out_of_range("vector is not in the image group");
  return it->second;
}

std::size_t ChamberComplex::walk(std::size_t q, const Word& w) const {
  for (Generator g : w) q = glue(q, g);
  return q;
}

long ChamberComplex::euler_characteristic() const {
  const std::size_t dim = polytope_.dimension();
  long chi = 0;
  for (std::size_t codim = 0; codim <= dim; ++codim) {
    const long sign = ((dim - codim) % 2 == 0) ? 1 : -1;
    chi += sign * static_cast<long>(cell_counts_[codim]);
  }
  return chi;
}

ChamberComplex build(const Polytope& p, const FacetColoring& c) { return ChamberComplex(p, c); }

std::vector<FacetSet> polytope_faces(const Polytope& p) {
  std::set<FacetSet> faces;
  for (const auto& v : p.vertices()) {
    const std::size_t k = v.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      FacetSet s;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1u) s.push_back(v[i]);
      faces.insert(s);
    }
  }
  faces.insert(FacetSet{});
  std::vector<FacetSet> out(faces.begin(), faces.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const FacetSet& a, const FacetSet& b) { return a.size() < b.size(); });
  return out;
}

std::size_t orbit_count(const ChamberComplex& cx, const FacetSet& face) {
  std::vector<bool> seen(cx.chamber_count(), false);
  std::size_t orbits = 0;
  for (std::size_t q = 0; q < cx.chamber_count(); ++q) {
    if (seen[q]) continue;
    ++orbits;
    std::vector<std::size_t> stack{q};
    seen[q] = true;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (FacetIndex f : face) {
        std::size_t y = cx.glue(x, f);
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return orbits;
}

// ---------------------------------------------------------------------------

namespace {

struct Relation {
  WallCell to;
  bool flip;
};

std::vector<Relation> relations(const ChamberComplex& cx, WallCell c) {
  std::vector<Relation> out;
  out.push_back({{cx.glue(c.chamber, c.facet), c.facet}, true});
  for (FacetIndex g : cx.polytope().neighbours(c.facet)) out.push_back({{cx.glue(c.chamber, g), c.facet}, false});
  return out;
}

}  // namespace

Wall::Wall(const ChamberComplex& cx, std::vector<WallCell> cells)
    : cells_(std::move(cells)), member_(cx.cell_total(), false) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  if (cells_.empty()) throw std::invalid_argument("empty wall");
  for (WallCell c : cells_) member_[cx.cell_id(c)] = true;
  std::set<std::size_t> faces;
  for (WallCell c : cells_)
    faces.insert(std::min(cx.cell_id(c), cx.cell_id({cx.glue(c.chamber, c.facet), c.facet})));
  face_count_ = faces.size();
}

Wall wall_of(const ChamberComplex& cx, std::size_t chamber, FacetIndex f) {
  if (chamber >= cx.chamber_count() || f >= cx.facet_count()) throw std::out_of_range("no such cell");
  std::vector<bool> seen(cx.cell_total(), false);
  std::vector<WallCell> cells{{chamber, f}};
  seen[cx.cell_id(cells.front())] = true;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (const auto& rel : relations(cx, cells[i]))
      if (!seen[cx.cell_id(rel.to)]) {
        seen[cx.cell_id(rel.to)] = true;
        cells.push_back(rel.to);
      }
  return Wall(cx, std::move(cells));
}

std::vector<Wall> all_walls(const ChamberComplex& cx) {
  std::vector<Wall> out;
  std::vector<bool> covered(cx.cell_total(), false);
  for (std::size_t id = 0; id < cx.cell_total(); ++id) {
    if (covered[id]) continue;
    WallCell c = cx.cell_at(id);
    Wall w = wall_of(cx, c.chamber, c.facet);
    for (WallCell m : w.cells()) covered[cx.cell_id(m)] = true;
    out.push_back(std::move(w));
  }
  return out;
}

std::variant<CoorientedWall, NonCoorientable> coorient(const ChamberComplex& cx, const Wall& w) {
  const std::size_t total = cx.cell_total();
  std::vector<std::int8_t> sign(total, 0);
  std::vector<std::int64_t> parent(total, -1);
  std::vector<char> parent_flip(total, 0);
  std::vector<std::size_t> depth(total, 0);

  const WallCell seed = w.seed();
  sign[cx.cell_id(seed)] = 1;
  std::deque<WallCell> todo{seed};
  while (!todo.empty()) {
    WallCell c = todo.front();
    todo.pop_front();
    const std::size_t id = cx.cell_id(c);
    for (const auto& rel : relations(cx, c)) {
      const std::size_t to = cx.cell_id(rel.to);
      if (!w.contains(cx, rel.to)) throw std::logic_error("wall is not closed under its relations");
      const std::int8_t expected = rel.flip ? -sign[id] : sign[id];
      if (sign[to] == 0) {
        sign[to] = expected;
        parent[to] = static_cast<std::int64_t>(id);
        parent_flip[to] = rel.flip;
        depth[to] = depth[id] + 1;
        todo.push_back(rel.to);
      } else if (sign[to] != expected) {
        // Odd cycle: tree path from c up to the common ancestor, then down to rel.to.
        std::vector<std::size_t> up{id}, down{to};
        std::size_t flips = rel.flip ? 1 : 0;
        std::size_t a = id, b = to;
        while (a != b) {
          if (depth[a] >= depth[b]) {
            flips += parent_flip[a];
            a = static_cast<std::size_t>(parent[a]);
            up.push_back(a);
          } else {
            flips += parent_flip[b];
            b = static_cast<std::size_t>(parent[b]);
            down.push_back(b);
          }
        }
        NonCoorientable bad;
        bad.flips = flips;
        for (std::size_t x : up) bad.cycle.push_back(cx.cell_at(x));
        for (auto it = down.rbegin() + 1; it != down.rend(); ++it) bad.cycle.push_back(cx.cell_at(*it));
        return bad;
      }
    }
  }
  return CoorientedWall(w, std::move(sign));
}

long psi(const ChamberComplex& cx, const CoorientedWall& s, std::size_t base, const Word& w) {
  long total = 0;
  std::size_t q = base;
  for (Generator g : w) {
    total += s.sign_by_id(cx.cell_id({q, g}));
    q = cx.glue(q, g);
  }
  return total;
}

}  // namespace ractor
