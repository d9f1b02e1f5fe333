#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <vector>

#include "grcohom/intmat.hpp"
#include "grcohom/vec.hpp"

namespace grcohom {

// One closed half-space constraint functional . x  (>= | <=)  bound.
// Strict inequalities are never stored; callers normalize open half-spaces to
// closed ones at integer lattice distance 1.
struct Constraint {
  DegreeVector functional;  // integer row vector
  mpq_class bound;
  enum Sense { Ge, Le } sense = Ge;
};

// Intersection of closed rational half-spaces in R^dim.
struct RationalPolyhedron {
  long long dim = 0;
  std::vector<Constraint> constraints;

  static RationalPolyhedron whole_space(long long d) { return {d, {}}; }
  void add_ge(DegreeVector f, mpq_class b) { constraints.push_back({std::move(f), std::move(b), Constraint::Ge}); }
  void add_le(DegreeVector f, mpq_class b) { constraints.push_back({std::move(f), std::move(b), Constraint::Le}); }
  void add_ge(DegreeVector f, long long b) { add_ge(std::move(f), mpq_class(static_cast<long>(b))); }
  void add_le(DegreeVector f, long long b) { add_le(std::move(f), mpq_class(static_cast<long>(b))); }
  bool contains(const DegreeVector& p) const;
  bool contains_rational(const std::vector<mpq_class>& p) const;
};

// Generator form: conv(vertices) + cone(rays) + span(lines).
struct VRep {
  long long dim = 0;
  std::vector<std::vector<mpq_class>> vertices;
  std::vector<DegreeVector> rays;   // primitive integer
  std::vector<DegreeVector> lines;  // primitive integer, lineality basis
};

bool polyhedron_is_empty(const RationalPolyhedron& p);
RationalPolyhedron polyhedron_intersect(const RationalPolyhedron& a, const RationalPolyhedron& b);

// Exact min/max of an integer functional over the polyhedron.
// nullopt = unbounded in that direction; throws on empty input.
struct Extremes {
  std::optional<mpq_class> min, max;
};
Extremes extremum(const RationalPolyhedron& p, const DegreeVector& functional);

VRep to_vrep(const RationalPolyhedron& p);
RationalPolyhedron from_vrep(const VRep& v);

RationalPolyhedron polyhedron_minkowski(const RationalPolyhedron& a, const RationalPolyhedron& b);

// All integer points of p intersected with box, in lexicographic coordinate
// order; the caller may further filter through `keep` (e.g. a sublattice test).
// Throws Unbounded if the intersection is unbounded.
std::vector<DegreeVector> lattice_points(
    const RationalPolyhedron& p, const RationalPolyhedron& box,
    const std::function<bool(const DegreeVector&)>& keep = nullptr);

// --- exact cone duality -----------------------------------------------------
//
// Both directions of the double description of a pointed cone, done by
// (d-1)-subset enumeration with sign filtering. Suitable for desk-scale d.

// Facet functionals (primitive, inward) of cone(rays); requires the cone to be
// full-dimensional. The rays need not be extreme.
std::vector<DegreeVector> cone_facets_from_rays(const std::vector<DegreeVector>& rays);

// Extreme rays (primitive) of {x : f . x >= 0 for all f}; requires the cone to
// be pointed (the functionals span the dual space).
std::vector<DegreeVector> cone_rays_from_facets(const std::vector<DegreeVector>& facets);

// Minkowski sum of segments [0, g] over the given generators.
RationalPolyhedron zonotope_polytope(const std::vector<DegreeVector>& segments);

}  // namespace grcohom
