// SPDX-License-Identifier: Apache-2.0
#include "ractor/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace ractor {

Polytope::Polytope(std::string name, std::size_t dimension,
                   std::vector<std::string> facet_names,
                   std::vector<std::pair<FacetIndex, FacetIndex>> adjacent_pairs,
                   std::optional<std::vector<FacetSet>> declared_vertices)
    : name_(std::move(name)),
      dimension_(dimension),
      facet_names_(std::move(facet_names)),
      pairs_(std::move(adjacent_pairs)) {
  const std::size_t n = facet_names_.size();
  adjacency_.assign(n, std::vector<bool>(n, false));
  neighbours_.assign(n, {});
  for (auto [a, b] : pairs_) {
    if (a >= n || b >= n) throw InputError("adjacency refers to a facet index out of range");
    adjacency_[a][b] = true;
    adjacency_[b][a] = true;
  }
  for (FacetIndex a = 0; a < n; ++a)
    for (FacetIndex b = 0; b < n; ++b)
      if (a != b && adjacency_[a][b]) neighbours_[a].push_back(b);

  if (declared_vertices) {
    declared_ = true;
    vertices_ = std::move(*declared_vertices);
    for (auto& v : vertices_) {
      for (FacetIndex f : v)
        if (f >= n) throw InputError("vertex refers to a facet index out of range");
      std::sort(v.begin(), v.end());
    }
  } else {
    vertices_ = enumerate_cliques(*this, dimension_);
  }
}

std::optional<FacetIndex> Polytope::find_facet(const std::string& name) const {
  auto it = std::find(facet_names_.begin(), facet_names_.end(), name);
  if (it == facet_names_.end()) return std::nullopt;
  return static_cast<FacetIndex>(it - facet_names_.begin());
}

std::vector<std::pair<FacetIndex, FacetIndex>> Polytope::edges() const {
  std::vector<std::pair<FacetIndex, FacetIndex>> out;
  for (FacetIndex a = 0; a < facet_count(); ++a)
    for (FacetIndex b = a + 1; b < facet_count(); ++b)
      if (adjacency_[a][b]) out.emplace_back(a, b);
  return out;
}

FacetSet Polytope::closed_star(FacetIndex f) const {
  FacetSet s = neighbours_.at(f);
  s.push_back(f);
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<FacetSet> enumerate_cliques(const Polytope& p, std::size_t k) {
  std::vector<FacetSet> out;
  if (k == 0) return out;
  FacetSet current;
  std::function<void(FacetIndex)> extend = [&](FacetIndex start) {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (FacetIndex f = start; f < p.facet_count(); ++f) {
      bool ok = true;
      for (FacetIndex g : current)
        if (!p.adjacent(f, g)) { ok = false; break; }
      if (!ok) continue;
      current.push_back(f);
      extend(f + 1);
      current.pop_back();
    }
  };
  extend(0);
  return out;
}

ValidationReport validate(const Polytope& p) {
  ValidationReport report;
  auto& out = report.violations;
  const std::size_t n = p.facet_count();

  if (p.dimension() == 0) out.push_back("dimension must be positive");
  if (n == 0) {
    out.push_back("polytope has no facets");
    return report;
  }

  std::set<std::string> names;
  for (const auto& name : p.facet_names())
    if (!names.insert(name).second) out.push_back("duplicate facet name '" + name + "'");

  std::set<std::pair<FacetIndex, FacetIndex>> seen;
  for (auto [a, b] : p.adjacent_pairs()) {
    if (a == b) {
      out.push_back("irreflexivity: facet '" + p.facet_name(a) + "' is adjacent to itself");
      continue;
    }
    auto key = std::minmax(a, b);
    if (!seen.insert({key.first, key.second}).second)
      out.push_back("duplicate adjacency pair ('" + p.facet_name(key.first) + "', '" +
                    p.facet_name(key.second) + "')");
  }
  for (FacetIndex a = 0; a < n; ++a)
    for (FacetIndex b = 0; b < n; ++b)
      if (p.adjacent(a, b) != p.adjacent(b, a))
        out.push_back("symmetry: adjacency of '" + p.facet_name(a) + "' and '" +
                      p.facet_name(b) + "' is one-sided");

  std::vector<bool> reached(n, false);
  std::queue<FacetIndex> todo;
  todo.push(0);
  reached[0] = true;
  while (!todo.empty()) {
    FacetIndex f = todo.front();
    todo.pop();
    for (FacetIndex g : p.neighbours(f))
      if (!reached[g]) {
        reached[g] = true;
        todo.push(g);
      }
  }
  if (std::count(reached.begin(), reached.end(), false) > 0)
    out.push_back("connectivity: adjacency graph is disconnected");

  auto describe = [&](const FacetSet& v) {
    std::ostringstream s;
    s << '{';
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << p.facet_name(v[i]);
    s << '}';
    return s.str();
  };

  for (const auto& v : p.vertices()) {
    std::set<FacetIndex> distinct(v.begin(), v.end());
    if (v.size() != p.dimension() || distinct.size() != v.size()) {
      out.push_back("vertex " + describe(v) + " does not consist of " +
                    std::to_string(p.dimension()) + " distinct facets");
      continue;
    }
    bool clique = true;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (!p.adjacent(v[i], v[j])) clique = false;
    if (!clique) out.push_back("clique: vertex " + describe(v) + " is not a clique");
  }

  if (p.has_declared_vertices() && p.dimension() > 0) {
    auto cliques = enumerate_cliques(p, p.dimension());
    std::set<FacetSet> declared(p.vertices().begin(), p.vertices().end());
    if (declared.size() != p.vertices().size()) out.push_back("duplicate vertex declared");
    for (const auto& c : cliques)
      if (!declared.count(c))
        out.push_back("clique: " + describe(c) + " is a clique but not a declared vertex");
  }
  return report;
}

namespace {

Polytope make_dodecahedron() {
  // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
  std::vector<std::string> names;
  for (int i = 0; i < 12; ++i) names.push_back("F" + std::to_string(i));
  std::vector<std::pair<FacetIndex, FacetIndex>> pairs;
  auto upper = [](int i) -> FacetIndex { return 1 + ((i % 5) + 5) % 5; };
  auto lower = [](int i) -> FacetIndex { return 6 + ((i % 5) + 5) % 5; };
  for (int i = 0; i < 5; ++i) {
    pairs.emplace_back(0, upper(i));
    pairs.emplace_back(upper(i), upper(i + 1));
    pairs.emplace_back(upper(i), lower(i));
    pairs.emplace_back(upper(i), lower(i + 1));
    pairs.emplace_back(lower(i), lower(i + 1));
    pairs.emplace_back(lower(i), 11);
  }
  return Polytope("dodecahedron", 3, std::move(names), std::move(pairs));
}

}  // namespace

Polytope build_builtin(const std::string& name) {
  if (name == "dodecahedron") return make_dodecahedron();
  throw InputError("unknown builtin polytope '" + name + "'");
}

FacetIndex opposite_facet(const Polytope& p, FacetIndex f) {
  if (f >= p.facet_count()) throw std::domain_error("facet index out of range");
  const FacetSet star = p.closed_star(f);
  std::vector<FacetIndex> candidates;
  for (FacetIndex g = 0; g < p.facet_count(); ++g) {
    const FacetSet other = p.closed_star(g);
    FacetSet common;
    std::set_intersection(star.begin(), star.end(), other.begin(), other.end(),
                          std::back_inserter(common));
    if (common.empty() && star.size() + other.size() == p.facet_count())
      candidates.push_back(g);
  }
  if (candidates.empty())
    throw std::domain_error("no facet opposite to '" + p.facet_name(f) + "'");
  if (candidates.size() > 1)
    throw std::domain_error("facet '" + p.facet_name(f) + "' has several opposite candidates");
  return candidates.front();
}

FacetSet neighbour_cycle(const Polytope& p, FacetIndex f) {
  const FacetSet& nb = p.neighbours(f);
  if (nb.size() < 3) throw std::domain_error("facet '" + p.facet_name(f) + "' has fewer than 3 neighbours");
  auto link_neighbours = [&](FacetIndex g) {
    FacetSet out;
    for (FacetIndex h : nb)
      if (h != g && p.adjacent(g, h)) out.push_back(h);
    return out;
  };
  for (FacetIndex g : nb)
    if (link_neighbours(g).size() != 2)
      throw std::domain_error("link of facet '" + p.facet_name(f) + "' is not a cycle");

  FacetSet cycle{nb.front()};
  FacetIndex prev = nb.front();
  FacetIndex cur = link_neighbours(nb.front()).front();
  while (cur != nb.front()) {
    cycle.push_back(cur);
    auto next = link_neighbours(cur);
    FacetIndex step = next[0] == prev ? next[1] : next[0];
    prev = cur;
    cur = step;
    if (cycle.size() > nb.size()) break;
  }
  if (cycle.size() != nb.size())
    throw std::domain_error("link of facet '" + p.facet_name(f) + "' is not a single cycle");
  return cycle;
}

OrientedCells oriented_cells(const Polytope& p) {
  if (p.dimension() != 3) throw std::domain_error("oriented cells are built for 3-polytopes only");
  std::map<FacetSet, std::size_t> vertex_index;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) vertex_index.emplace(p.vertices()[v], v);
  auto vertex_of = [&](FacetIndex a, FacetIndex b, FacetIndex c) {
    FacetSet key{a, b, c};
    std::sort(key.begin(), key.end());
    auto it = vertex_index.find(key);
    if (it == vertex_index.end()) throw std::domain_error("three pairwise adjacent facets without a vertex");
    return it->second;
  };

  OrientedCells cells;
  std::map<std::pair<FacetIndex, FacetIndex>, std::size_t> edge_index;
  for (auto [a, b] : p.edges()) {
    std::vector<std::size_t> ends;
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
      const auto& vs = p.vertices()[v];
      if (std::binary_search(vs.begin(), vs.end(), a) && std::binary_search(vs.begin(), vs.end(), b))
        ends.push_back(v);
    }
    if (ends.size() != 2)
      throw std::domain_error("edge (" + p.facet_name(a) + "," + p.facet_name(b) + ") does not have two vertices");
    edge_index.emplace(std::make_pair(a, b), cells.edges.size());
    cells.edges.push_back({a, b, ends[0], ends[1]});
  }
  auto edge_of = [&](FacetIndex a, FacetIndex b) { return edge_index.at(std::minmax(a, b)); };

  cells.facet_boundary.resize(p.facet_count());
  for (FacetIndex f = 0; f < p.facet_count(); ++f) {
    const FacetSet cyc = neighbour_cycle(p, f);
    const std::size_t k = cyc.size();
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t e = edge_of(f, cyc[i]);
      const std::size_t from = vertex_of(f, cyc[(i + k - 1) % k], cyc[i]);
      const std::size_t to = vertex_of(f, cyc[i], cyc[(i + 1) % k]);
      const auto& edge = cells.edges[e];
      int sign = 0;
      if (edge.tail == from && edge.head == to) sign = 1;
      if (edge.tail == to && edge.head == from) sign = -1;
      if (sign == 0) throw std::domain_error("facet boundary does not follow its edges");
      cells.facet_boundary[f].emplace_back(e, sign);
    }
  }

  // Flip facets so that each edge is traversed once in each direction.
  auto sign_in = [&](FacetIndex f, std::size_t e) {
    for (auto [edge, sign] : cells.facet_boundary[f])
      if (edge == e) return sign;
    return 0;
  };
  auto reverse = [&](FacetIndex f) {
    auto& b = cells.facet_boundary[f];
    std::reverse(b.begin(), b.end());
    for (auto& entry : b) entry.second = -entry.second;
  };
  std::vector<int> fixed(p.facet_count(), 0);
  std::queue<FacetIndex> todo;
  fixed[0] = 1;
  todo.push(0);
  while (!todo.empty()) {
    FacetIndex f = todo.front();
    todo.pop();
    for (FacetIndex g : p.neighbours(f)) {
      const std::size_t e = edge_of(f, g);
      if (!fixed[g]) {
        if (sign_in(g, e) == sign_in(f, e)) reverse(g);
        fixed[g] = 1;
        todo.push(g);
      } else if (sign_in(g, e) == sign_in(f, e)) {
        throw std::domain_error("facets cannot be oriented coherently");
      }
    }
  }
  return cells;
}

}  // namespace ractor
