// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ractor {

using FacetIndex = std::size_t;
using FacetSet = std::vector<FacetIndex>;

/// Raised for malformed polytope descriptions (unknown names, bad JSON shape).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Combinatorial right-angled polytope: facets, their adjacency graph and the
/// vertex cliques. Facets are dense indices in declaration order.
class Polytope {
 public:
  Polytope(std::string name, std::size_t dimension,
           std::vector<std::string> facet_names,
           std::vector<std::pair<FacetIndex, FacetIndex>> adjacent_pairs,
           std::optional<std::vector<FacetSet>> declared_vertices = std::nullopt);

  const std::string& name() const { return name_; }
  std::size_t dimension() const { return dimension_; }
  std::size_t facet_count() const { return facet_names_.size(); }
  const std::vector<std::string>& facet_names() const { return facet_names_; }
  const std::string& facet_name(FacetIndex f) const { return facet_names_.at(f); }
  std::optional<FacetIndex> find_facet(const std::string& name) const;

  bool adjacent(FacetIndex a, FacetIndex b) const { return adjacency_[a][b]; }
  /// Input pairs as given, including any malformed ones.
  const std::vector<std::pair<FacetIndex, FacetIndex>>& adjacent_pairs() const {
    return pairs_;
  }
  /// Distinct unordered pairs {a, b}, a < b, in lexicographic order.
  std::vector<std::pair<FacetIndex, FacetIndex>> edges() const;
  const FacetSet& neighbours(FacetIndex f) const { return neighbours_.at(f); }
  /// f together with its neighbours, sorted.
  FacetSet closed_star(FacetIndex f) const;

  /// Vertex cliques: the declared list if present, else the n-cliques.
  const std::vector<FacetSet>& vertices() const { return vertices_; }
  bool has_declared_vertices() const { return declared_; }

 private:
  std::string name_;
  std::size_t dimension_;
  std::vector<std::string> facet_names_;
  std::vector<std::pair<FacetIndex, FacetIndex>> pairs_;
  std::vector<std::vector<bool>> adjacency_;
  std::vector<FacetSet> neighbours_;
  std::vector<FacetSet> vertices_;
  bool declared_ = false;
};

/// All k-cliques of the adjacency graph, each sorted, in lexicographic order.
std::vector<FacetSet> enumerate_cliques(const Polytope& p, std::size_t k);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Polytope& p);

Polytope build_builtin(const std::string& name);

/// The unique facet whose closed star is disjoint from that of f with the two
/// stars covering every facet. Throws std::domain_error if there is no such
/// facet or more than one.
FacetIndex opposite_facet(const Polytope& p, FacetIndex f);

/// Cyclic order of the neighbours of f in a 3-polytope: consecutive entries
/// share a vertex with f. Starts at the smallest neighbour and proceeds
/// towards its smaller link-neighbour. Throws std::domain_error if the link of
/// f is not a single cycle.
FacetSet neighbour_cycle(const Polytope& p, FacetIndex f);

/// Oriented cellular structure of a 3-polytope. Edge e = {a, b} runs from its
/// lower-indexed vertex to the higher one. Facet boundaries are cyclic lists of
/// (edge, sign) oriented coherently, so the facets sum to the boundary of the
/// polytope.
struct OrientedCells {
  struct Edge {
    FacetIndex a, b;
    std::size_t tail, head;  // indices into Polytope::vertices()
  };
  std::vector<Edge> edges;  // in Polytope::edges() order
  std::vector<std::vector<std::pair<std::size_t, int>>> facet_boundary;
};

OrientedCells oriented_cells(const Polytope& p);

}  // namespace ractor
