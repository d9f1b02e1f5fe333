#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grcohom/polyhedron.hpp"

using namespace grcohom;

namespace {

RationalPolyhedron unit_square() {
  RationalPolyhedron p;
  p.dim = 2;
  p.add_ge({1, 0}, 0);
  p.add_le({1, 0}, 1);
  p.add_ge({0, 1}, 0);
  p.add_le({0, 1}, 1);
  return p;
}

RationalPolyhedron point2(long long x, long long y) {
  RationalPolyhedron p;
  p.dim = 2;
  p.add_ge({1, 0}, x);
  p.add_le({1, 0}, x);
  p.add_ge({0, 1}, y);
  p.add_le({0, 1}, y);
  return p;
}

}  // namespace

TEST_CASE("emptiness") {
  RationalPolyhedron p;
  p.dim = 2;
  p.add_ge({1, 0}, 0);
  p.add_le({1, 0}, -1);
  CHECK(polyhedron_is_empty(p));
  CHECK(!polyhedron_is_empty(unit_square()));
}

TEST_CASE("intersect prunes and stays exact") {
  RationalPolyhedron a = unit_square();
  RationalPolyhedron b;
  b.dim = 2;
  b.add_ge({1, 1}, 1);
  RationalPolyhedron c = polyhedron_intersect(a, b);
  CHECK(!polyhedron_is_empty(c));
  CHECK(c.contains({1, 1}));
  CHECK(c.contains({0, 1}));
  CHECK(!c.contains({0, 0}));
}

TEST_CASE("extremum") {
  Extremes e = extremum(unit_square(), {1, 1});
  REQUIRE(e.min.has_value());
  REQUIRE(e.max.has_value());
  CHECK(*e.min == 0);
  CHECK(*e.max == 2);

  RationalPolyhedron half;
  half.dim = 2;
  half.add_ge({1, 0}, 0);
  Extremes u = extremum(half, {1, 0});
  CHECK(u.min.has_value());
  CHECK(!u.max.has_value());
}

TEST_CASE("lattice points of the unit square") {
  auto pts = lattice_points(unit_square(), RationalPolyhedron::whole_space(2));
  CHECK(pts == std::vector<DegreeVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("minkowski translate of the unit square") {
  RationalPolyhedron s = polyhedron_minkowski(point2(0, 1), unit_square());
  auto pts = lattice_points(s, RationalPolyhedron::whole_space(2));
  CHECK(pts == std::vector<DegreeVector>{{0, 1}, {0, 2}, {1, 1}, {1, 2}});
  VRep v = to_vrep(s);
  CHECK(v.vertices.size() == 4);
  CHECK(v.rays.empty());
}

TEST_CASE("unbounded lattice enumeration is rejected") {
  RationalPolyhedron half;
  half.dim = 2;
  half.add_ge({1, 0}, 0);
  CHECK_THROWS_AS(lattice_points(half, RationalPolyhedron::whole_space(2)), Error);
}

TEST_CASE("cone duality on the quadrant") {
  auto facets = cone_facets_from_rays({{1, 0}, {0, 1}});
  CHECK(facets == std::vector<DegreeVector>{{0, 1}, {1, 0}});
  auto rays = cone_rays_from_facets(facets);
  CHECK(rays == std::vector<DegreeVector>{{0, 1}, {1, 0}});
}

TEST_CASE("cone duality on a slanted cone") {
  // cone over (1,0),(1,1),(1,2): facets y >= 0 and 2x - y >= 0
  auto facets = cone_facets_from_rays({{1, 0}, {1, 1}, {1, 2}});
  CHECK(facets == std::vector<DegreeVector>{{0, 1}, {2, -1}});
}

TEST_CASE("vrep/hrep round-trip is involutive on canonical forms") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long long> coord(-4, 4);
  for (int iter = 0; iter < 25; ++iter) {
    // random bounded polytope: intersection of a box and two random halfplanes
    RationalPolyhedron p = unit_square();
    for (auto& c : p.constraints) c.bound *= 3;
    for (int k = 0; k < 2; ++k) {
      DegreeVector f{coord(rng), coord(rng)};
      if (f[0] == 0 && f[1] == 0) f[0] = 1;
      p.add_ge(f, coord(rng));
    }
    if (polyhedron_is_empty(p)) continue;
    VRep v1 = to_vrep(p);
    RationalPolyhedron p2 = from_vrep(v1);
    VRep v2 = to_vrep(p2);
    CHECK(v1.vertices == v2.vertices);
    CHECK(v1.rays == v2.rays);
    // and the lattice content agrees
    RationalPolyhedron big = unit_square();
    for (auto& c : big.constraints) c.bound *= 10;
    big.add_ge({1, 0}, -10);
    big.add_ge({0, 1}, -10);
    CHECK(lattice_points(p, big) == lattice_points(p2, big));
  }
}

TEST_CASE("minkowski sum with rays keeps recession") {
  RationalPolyhedron quad;
  quad.dim = 2;
  quad.add_ge({1, 0}, 0);
  quad.add_ge({0, 1}, 0);
  RationalPolyhedron s = polyhedron_minkowski(point2(1, 1), quad);
  CHECK(s.contains({5, 7}));
  CHECK(!s.contains({0, 1}));
  VRep v = to_vrep(s);
  CHECK(v.vertices.size() == 1);
  CHECK(v.rays.size() == 2);
}

TEST_CASE("zonotope polytope") {
  RationalPolyhedron z = zonotope_polytope({{1, 0}, {1, 2}});
  auto pts = lattice_points(z, RationalPolyhedron::whole_space(2));
  CHECK(pts == std::vector<DegreeVector>{{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 2}});
}
