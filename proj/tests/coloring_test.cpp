// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <map>

#include "ractor/coloring.hpp"
#include "test_support.hpp"

using namespace ractor;

namespace {

std::size_t rank_by_subsets(const std::vector<F2Vec>& vs) {
  // Size of the span, counted by enumerating all subset sums.
  std::vector<std::uint64_t> span{0};
  for (F2Vec v : vs) {
    const auto before = span;
    for (auto x : before)
      if (std::find(span.begin(), span.end(), x ^ v.bits) == span.end()) span.push_back(x ^ v.bits);
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < span.size()) ++r;
  return r;
}

}  // namespace

TEST_CASE("palette invariants") {
  for (F2Vec v : palette::all) CHECK(v.weight() % 2 == 1);
  const auto& all = palette::all;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      for (std::size_t k = j + 1; k < 8; ++k) {
        std::vector<F2Vec> three{all[i], all[j], all[k]};
        CHECK(f2_rank(three) == 3);
      }
}

TEST_CASE("admissible colouring of the dodecahedron") {
  const Polytope p = build_builtin("dodecahedron");
  const FacetColoring c = search_admissible(p, 0, 11);
  CHECK(c.bits == 7);
  CHECK(rank_by_subsets(c.colors) == 7);
  CHECK(c.image_rank() == 7);

  auto multiplicities = [&](FacetIndex f) {
    std::map<std::uint64_t, int> m;
    for (FacetIndex g : p.neighbours(f)) ++m[c.colors[g].bits];
    std::vector<int> counts;
    for (auto [_, k] : m) counts.push_back(k);
    std::sort(counts.begin(), counts.end());
    return counts;
  };
  CHECK(multiplicities(0) == std::vector<int>{1, 2, 2});
  CHECK(multiplicities(11) == std::vector<int>{1, 2, 2});
  for (FacetIndex g : p.neighbours(0))
    CHECK((c.colors[g] == palette::alpha || c.colors[g] == palette::beta || c.colors[g] == palette::gamma));

  const Certificate cert = certify(p, c, 0, 11);
  for (const auto& ch : cert.checks) {
    CAPTURE(ch.name);
    CHECK(ch.passed);
  }
  CHECK(cert.passed());
  for (const char* name : {"image_rank", "C1_adjacent_distinct", "C2_vertex_independence", "C3_block_structure",
                           "O_orientation_character", "retraction_compat_first", "retraction_compat_second",
                           "SO_wall_character", "SN_witness"})
    CHECK(cert.find(name) != nullptr);
  REQUIRE(cert.nonorientable_witness.size() == 4);
  CHECK(cert.nonorientable_witness[0] == 11);
  CHECK(c.hom().eval(cert.nonorientable_witness).is_zero());

  CHECK(search_admissible(p, 0, 11).colors == c.colors);
}

TEST_CASE("certify pinpoints broken colourings") {
  const Polytope p = build_builtin("dodecahedron");
  const FacetColoring good = search_admissible(p, 0, 11);

  FacetColoring alpha_base = good;
  alpha_base.colors[0] = palette::alpha;
  const Certificate a = certify(p, alpha_base, 0, 11);
  CHECK_FALSE(a.find("SO_wall_character")->passed);
  CHECK_FALSE(a.passed());

  FacetColoring clash = good;
  const FacetIndex g = p.neighbours(11)[0];
  clash.colors[g] = palette::delta_p;
  const Certificate b = certify(p, clash, 0, 11);
  CHECK_FALSE(b.find("C1_adjacent_distinct")->passed);
  CHECK(b.find("C1_adjacent_distinct")->detail.find(p.facet_name(g)) != std::string::npos);
  CHECK(proper_violations(p, clash).size() == 1);

  FacetColoring even = good;
  even.colors[5] = palette::alpha + palette::beta;
  CHECK_FALSE(certify(p, even, 0, 11).find("O_orientation_character")->passed);
}

TEST_CASE("search needs the two stars to partition the facets") {
  CHECK_THROWS_AS(search_admissible(testing_support::simplex_like(4, 3), 0, 1), ColoringError);
}

TEST_CASE("generic four-colouring") {
  const Polytope p = build_builtin("dodecahedron");
  const FacetColoring c = four_colour(p);
  CHECK(c.bits == 3);
  CHECK(proper_violations(p, c).empty());
  CHECK(independence_violations(p, c).empty());
  for (F2Vec v : c.colors)
    CHECK(std::find(std::begin(palette::generic::all), std::end(palette::generic::all), v) !=
          std::end(palette::generic::all));
}
