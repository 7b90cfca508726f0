// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <json.hpp>

#include "ractor/io.hpp"
#include "ractor/pipeline.hpp"

using namespace ractor;

TEST_CASE("polytope JSON round trip") {
  const Polytope p = build_builtin("dodecahedron");
  const Polytope q = polytope_from_json(polytope_to_json(p));
  CHECK(q.facet_names() == p.facet_names());
  CHECK(q.edges() == p.edges());
  CHECK(q.vertices() == p.vertices());
  CHECK(q.has_declared_vertices());
  CHECK(validate(q).ok());
  CHECK(load_polytope("builtin:dodecahedron").facet_count() == 12);
}

TEST_CASE("malformed polytope JSON") {
  CHECK_THROWS_AS(polytope_from_json("{"), InputError);
  CHECK_THROWS_AS(polytope_from_json(R"({"name":"x","dimension":3,"facets":["a"]})"), InputError);
  CHECK_THROWS_AS(polytope_from_json(R"({"name":"x","dimension":3,"facets":["a","b"],"adjacency":[["a","c"]]})"),
                  InputError);
  CHECK_THROWS_AS(polytope_from_json(R"({"name":"x","dimension":3,"facets":["a","a"],"adjacency":[]})"),
                  InputError);
  CHECK_THROWS_AS(polytope_from_json(R"({"name":"x","dimension":"3","facets":[],"adjacency":[]})"), InputError);
  CHECK_THROWS_AS(load_polytope("/nonexistent/polytope.json"), InputError);
}

TEST_CASE("colouring JSON") {
  const Polytope p = build_builtin("dodecahedron");
  const FacetColoring c = search_coloring(p);
  const std::string text = coloring_to_json(p, c);
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["bits"] == 7);
  CHECK(doc["colors"]["F0"] == "0001000");
  CHECK(doc["colors"]["F11"] == "0000111");
  CHECK(coloring_from_json(p, text).colors == c.colors);
  CHECK(coloring_to_json(p, coloring_from_json(p, text)) == text);

  CHECK_THROWS_AS(coloring_from_json(p, R"({"bits":7,"colors":{"F0":"0001000"}})"), InputError);
  CHECK_THROWS_AS(coloring_from_json(p, R"({"bits":7,"colors":{"Q":"0001000"}})"), InputError);
  CHECK_THROWS_AS(coloring_from_json(p, R"({"bits":7,"colors":{"F0":"00010"}})"), InputError);
}

TEST_CASE("base facet of a supplied colouring") {
  const Polytope p = build_builtin("dodecahedron");
  FacetColoring c = search_coloring(p);
  CHECK(base_facet_of(p, c) == 0);
  std::swap(c.colors[0], c.colors[11]);
  CHECK(base_facet_of(p, c) == 11);
  c.colors[5] = palette::delta;
  CHECK(base_facet_of(p, c) == 0);
}

TEST_CASE("base case verification") {
  const Polytope p = build_builtin("dodecahedron");
  const BaseCase b = verify_base(p, std::nullopt);
  for (const auto& c : b.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
  REQUIRE(b.passed());
  REQUIRE(b.surface);
  CHECK(b.surface->h1.betti == 4);
  CHECK(b.surface_opposite->h1.two_rank() == 1);
  CHECK(b.psi_nonzero == 0);
  CHECK(std::abs(b.psi_witness_value) == 1);

  const auto doc = nlohmann::json::parse(b.certificate_json());
  CHECK(doc["passed"] == true);
  CHECK(doc["image_rank"] == 7);
  CHECK(doc["surfaces"]["S"]["euler_characteristic"] == -2);
  CHECK(doc["surfaces"]["S_prime"]["h1"] == "Z^2 + Z/2");

  // Same result from the colouring it found.
  const BaseCase again = verify_base(p, b.coloring);
  CHECK(again.passed());
  auto strip = [](std::string s) {
    auto j = nlohmann::json::parse(s);
    j.erase("elapsed_ms");
    auto& checks = j["checks"];
    for (auto it = checks.begin(); it != checks.end();)
      it = (*it)["name"] == "coloring_search" ? checks.erase(it) : it + 1;
    return j.dump();
  };
  CHECK(strip(again.certificate_json()) == strip(b.certificate_json()));
}

TEST_CASE("base case failures are recorded, not thrown") {
  const Polytope p = build_builtin("dodecahedron");
  FacetColoring c = search_coloring(p);
  c.colors[p.neighbours(11)[0]] = palette::delta_p;
  const BaseCase b = verify_base(p, c);
  CHECK_FALSE(b.passed());
  CHECK_FALSE(b.find("C1_adjacent_distinct")->passed);

  FacetColoring zero = search_coloring(p);
  zero.colors[3] = F2Vec{};
  const BaseCase z = verify_base(p, zero);
  CHECK_FALSE(z.passed());
  CHECK_FALSE(z.find("chambers_built")->passed);
}

TEST_CASE("cover homology pipeline") {
  const BaseCase b = verify_base(build_builtin("dodecahedron"), std::nullopt);
  const CoverResult r = cover_homology(b, 1, Method::both, 2);
  CHECK(r.index == 128);
  CHECK(r.involutions);
  CHECK(r.agree());
  CHECK(r.rs_rows == 42 * 128);
  CHECK(r.rs_cols == 1409);
  CHECK(r.cells->euler_characteristic == 0);
  CHECK(r.profile().two_rank() >= 1);
  CHECK(cover_homology(b, 1, Method::rs, 1).profile() == r.profile());
}
