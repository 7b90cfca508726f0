// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "ractor/surfaces.hpp"

using namespace ractor;

namespace {

struct Fixture {
  Polytope p = build_builtin("dodecahedron");
  ChamberComplex cx{p, search_admissible(p, 0, 11)};
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

// Orbifold Euler characteristic of the reflection group of a right-angled
// k-gon is 1 - k/2 + k/4; a wall with F polygons covers it F times.
// Returned multiplied by 4 to stay integral.
long four_chi_from_orbifold(std::size_t faces, std::size_t k) {
  return static_cast<long>(faces) * (4 - 2 * static_cast<long>(k) + static_cast<long>(k));
}

SurfaceComplex sphere() {
  SurfaceComplex s;
  s.vertex_count = 2;
  s.edges = {{0, 1}, {1, 0}};
  s.faces = {{{0, 1}, {1, 1}}, {{1, -1}, {0, -1}}};
  return s;
}

SurfaceComplex projective_plane() {
  SurfaceComplex s;
  s.vertex_count = 1;
  s.edges = {{0, 0}};
  s.faces = {{{0, 1}, {0, 1}}};
  return s;
}

}  // namespace

TEST_CASE("surface S through the base facet") {
  const auto& cx = fixture().cx;
  const SurfaceComplex s = surface_complex(cx, wall_of(cx, 0, 0));
  CHECK(s.face_count() == 8);
  CHECK(s.edge_count() == 20);
  CHECK(s.vertices() == 10);
  CHECK(s.euler_characteristic() == -2);
  CHECK(4 * s.euler_characteristic() == four_chi_from_orbifold(8, 5));
  CHECK(orientable(s));
  const auto h1 = surface_h1(s);
  CHECK(h1.betti == 4);
  CHECK(h1.invariant_factors.empty());
}

TEST_CASE("surface S' through the opposite facet") {
  const auto& cx = fixture().cx;
  const SurfaceComplex s = surface_complex(cx, wall_of(cx, 0, 11));
  CHECK(s.face_count() == 4);
  CHECK(s.edge_count() == 10);
  CHECK(s.vertices() == 5);
  CHECK(s.euler_characteristic() == -1);
  CHECK(4 * s.euler_characteristic() == four_chi_from_orbifold(4, 5));
  CHECK_FALSE(orientable(s));
  const auto h1 = surface_h1(s);
  CHECK(h1.betti == 2);
  CHECK(h1.invariant_factors == std::vector<zsmith::Integer>{2});
}

TEST_CASE("every wall surface obeys the classification") {
  const auto& cx = fixture().cx;
  for (const Wall& w : all_walls(cx)) {
    const SurfaceComplex s = surface_complex(cx, w);
    CHECK(4 * s.euler_characteristic() == four_chi_from_orbifold(s.face_count(), 5));
    const bool o = orientable(s);
    const auto h1 = surface_h1(s);
    if (o) {
      CHECK(s.euler_characteristic() % 2 == 0);
      CHECK(h1.invariant_factors.empty());
      CHECK(static_cast<long>(h1.betti) == 2 - s.euler_characteristic());
    } else {
      CHECK(h1.invariant_factors == std::vector<zsmith::Integer>{2});
      CHECK(static_cast<long>(h1.betti) == 1 - s.euler_characteristic());
    }
    CHECK(o == std::holds_alternative<CoorientedWall>(coorient(cx, w)));
  }
}

TEST_CASE("sphere and projective plane") {
  const SurfaceComplex s = sphere();
  check_closed_surface(s);
  CHECK(s.euler_characteristic() == 2);
  CHECK(orientable(s));
  const auto h = surface_h1(s);
  CHECK(h.betti == 0);
  CHECK(h.invariant_factors.empty());

  const SurfaceComplex rp = projective_plane();
  check_closed_surface(rp);
  CHECK(rp.euler_characteristic() == 1);
  CHECK_FALSE(orientable(rp));
  CHECK(surface_h1(rp).invariant_factors == std::vector<zsmith::Integer>{2});
}

TEST_CASE("malformed complexes are rejected") {
  SurfaceComplex open = sphere();
  open.faces.pop_back();
  CHECK_THROWS_AS(check_closed_surface(open), SurfaceError);

  SurfaceComplex broken = sphere();
  broken.faces[0] = {{0, 1}, {1, -1}};
  CHECK_THROWS_AS(check_closed_surface(broken), SurfaceError);
}
