#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "grcohom/semigroup.hpp"

using namespace grcohom;

namespace {

SemigroupPtr nn2() { return AffineSemigroup::build({{1, 0}, {0, 1}}); }
SemigroupPtr slanted() { return AffineSemigroup::build({{1, 0}, {1, 1}, {1, 2}}); }
SemigroupPtr paper6() { return AffineSemigroup::build({{2, 0}, {1, 1}, {0, 2}}); }
SemigroupPtr numeric23() { return AffineSemigroup::build({{2}, {3}}); }

}  // namespace

TEST_CASE("build: coordinate cone") {
  auto q = nn2();
  CHECK(q->facet_functionals() == std::vector<DegreeVector>{{0, 1}, {1, 0}});
  CHECK(q->saturated());
  CHECK(q->faces().size() == 4);
  CHECK(q->group_index() == 1);
}

TEST_CASE("build: slanted saturated cone") {
  auto q = slanted();
  CHECK(q->facet_functionals() == std::vector<DegreeVector>{{0, 1}, {2, -1}});
  CHECK(q->saturated());
  CHECK(q->faces().size() == 4);
  CHECK(q->group_index() == 1);
}

TEST_CASE("build: index-2 sublattice is relatticed") {
  auto q = paper6();
  CHECK(q->group_index() == 2);
  CHECK(q->has_relattice());
  CHECK(q->num_facets() == 2);
  CHECK(q->saturated());  // saturated inside ZQ
  CHECK(q->in_group({1, 1}));
  CHECK(!q->in_group({1, 0}));
}

TEST_CASE("build failures") {
  CHECK_THROWS_AS(AffineSemigroup::build({{1, 0}, {-1, 0}, {0, 1}}), Error);  // NotSharp
  CHECK_THROWS_AS(AffineSemigroup::build({{0, 0}}), Error);                   // ZeroDimension
  CHECK_THROWS_AS(AffineSemigroup::build({{1, 0}}), Error);                   // RankDeficient
}

TEST_CASE("membership") {
  auto q = paper6();
  CHECK(!q->membership({-1, 1}));  // the paper's non-member
  CHECK(q->membership({1, 1}));
  CHECK(q->membership({3, 1}));
  CHECK(!q->membership({0, 1}));
  auto n = numeric23();
  CHECK(!n->membership({1}));
  CHECK(n->membership({5}));
  CHECK(!n->saturated());
}

TEST_CASE("prime generators") {
  auto q = nn2();
  const Face& fx = q->face_by_facet_set({0});  // x-axis: tau_1 = y vanishes
  CHECK(q->prime_generators(fx) == std::vector<DegreeVector>{{0, 1}});
  auto p = paper6();
  const Face& ray20 = p->face_by_facet_set({0});
  CHECK(ray20.generator_indices == std::vector<int>{0});
  CHECK(p->prime_generators(ray20) == std::vector<DegreeVector>{{0, 2}, {1, 1}});
  CHECK(q->prime_generators(q->full_face()).empty());
}

TEST_CASE("saturate") {
  auto [sat23, gens23] = numeric23()->saturate();
  CHECK(sat23->membership({1}));
  CHECK(gens23 == std::vector<DegreeVector>{{0}, {1}});
  auto [satn, gn] = nn2()->saturate();
  CHECK(gn == std::vector<DegreeVector>{{0, 0}});
  auto [sats, gs] = slanted()->saturate();
  CHECK(gs == std::vector<DegreeVector>{{0, 0}});
}

TEST_CASE("tau_of") {
  auto q = paper6();
  const Face& x_face = q->face_by_facet_set({0});  // tau_1 = (0,1) vanishes on it
  TauVector t = q->tau_of(x_face, {0, 1});
  CHECK(t[0] == ExtInt::finite(1));
  CHECK(t[1] == ExtInt::pos_inf());
  TauVector t0 = q->tau_of(q->zero_face(), {0, 0});
  CHECK(t0[0] == ExtInt::finite(0));
  CHECK(t0[1] == ExtInt::finite(0));
  auto n = nn2();
  TauVector tq = n->tau_of(n->full_face(), {5, -3});
  CHECK(tq[0] == ExtInt::pos_inf());
  CHECK(tq[1] == ExtInt::pos_inf());
}

TEST_CASE("zonotope") {
  auto z = nn2()->zonotope();
  CHECK(z.points == std::vector<DegreeVector>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  auto zp = paper6()->zonotope();
  std::set<DegreeVector> got(zp.points.begin(), zp.points.end());
  CHECK(got == std::set<DegreeVector>{{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}});
  auto zs = slanted()->zonotope();
  std::set<DegreeVector> gs(zs.points.begin(), zs.points.end());
  CHECK(gs == std::set<DegreeVector>{{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 2}});
}

TEST_CASE("strips of the paper example") {
  auto q = paper6();
  // tau-tilde rows with sentinels, as in the worked example
  std::vector<TauVector> taus = {
      {ExtInt::neg_inf(), ExtInt::finite(-1), ExtInt::finite(0), ExtInt::finite(1),
       ExtInt::pos_inf(), ExtInt::pos_inf(), ExtInt::pos_inf()},
      {ExtInt::neg_inf(), ExtInt::finite(-2), ExtInt::finite(0), ExtInt::finite(0),
       ExtInt::pos_inf(), ExtInt::pos_inf(), ExtInt::pos_inf()}};
  RationalPolyhedron d12 = q->strip(taus, {1, 1});  // Delta(-1,-2)
  CHECK(!polyhedron_is_empty(d12));
  auto pts = lattice_points(d12, RationalPolyhedron::whole_space(2),
                            [&](const DegreeVector& x) { return q->in_group(x); });
  CHECK(pts == std::vector<DegreeVector>{{0, 0}});

  RationalPolyhedron d02 = q->strip(taus, {2, 1});  // Delta(0,-2)
  CHECK(!polyhedron_is_empty(d02));
  auto pts2 = lattice_points(d02, RationalPolyhedron::whole_space(2),
                             [&](const DegreeVector& x) { return q->in_group(x); });
  CHECK(pts2 == std::vector<DegreeVector>{{-1, 1}});

  // a slot with both bounds infinite is empty
  RationalPolyhedron empty = q->strip(taus, {4, 1});
  CHECK(polyhedron_is_empty(empty));
  // duplicate tau values collapse to an empty strip
  RationalPolyhedron dup = q->strip(taus, {1, 2});
  CHECK(polyhedron_is_empty(dup));
  CHECK_THROWS_AS(q->strip(taus, {9, 0}), Error);
}

TEST_CASE("strips of a single socle summand cover the quadrants") {
  auto q = nn2();
  std::vector<TauVector> taus = {
      {ExtInt::neg_inf(), ExtInt::finite(0), ExtInt::pos_inf()},
      {ExtInt::neg_inf(), ExtInt::finite(0), ExtInt::pos_inf()}};
  int nonempty = 0;
  for (long long a = 0; a <= 1; ++a)
    for (long long b = 0; b <= 1; ++b)
      if (!polyhedron_is_empty(q->strip(taus, {a, b}))) ++nonempty;
  CHECK(nonempty == 4);
}

TEST_CASE("invariants: facets primitive and nonnegative") {
  for (auto q : {nn2(), slanted(), paper6()}) {
    for (const auto& t : q->facet_functionals()) {
      CHECK(vec_gcd(t) == 1);
      for (const auto& g : q->generators()) CHECK(dot(t, g) >= 0);
    }
  }
}

TEST_CASE("invariant: saturated membership equivalence on a box") {
  for (auto q : {nn2(), slanted(), paper6()}) {
    REQUIRE(q->saturated());
    DegreeBox box;
    box.range.assign(q->num_facets(), {-6, 6});
    for (const auto& a : q->degrees_in_box(box)) {
      bool member = q->membership(a);
      bool geom = q->in_group(a) && q->in_cone(a);
      CHECK(member == geom);
    }
  }
}

TEST_CASE("invariant: zonotope generation") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<long long> num(-8, 8);
  std::uniform_int_distribution<long long> den(1, 4);
  for (auto q : {nn2(), slanted()}) {
    auto z = q->zonotope();
    for (int iter = 0; iter < 100; ++iter) {
      std::vector<mpq_class> alpha(2);
      for (auto& c : alpha) c = mpq_class(static_cast<long>(num(rng)), static_cast<long>(den(rng)));
      // shifted cone alpha + R_+Q
      RationalPolyhedron shifted = q->cone_polyhedron();
      for (size_t i = 0; i < shifted.constraints.size(); ++i) {
        mpq_class b = 0;
        for (long long j = 0; j < 2; ++j)
          b += mpq_class(static_cast<long>(shifted.constraints[i].functional[j])) * alpha[j];
        shifted.constraints[i].bound = b;
      }
      RationalPolyhedron box;
      box.dim = 2;
      box.add_ge({1, 0}, -12);
      box.add_le({1, 0}, 12);
      box.add_ge({0, 1}, -12);
      box.add_le({0, 1}, 12);
      // zonotope generators: lattice points of alpha + G_Q inside the shifted cone
      std::vector<DegreeVector> gens;
      {
        RationalPolyhedron zshift = z.polyhedron;
        for (auto& c : zshift.constraints) {
          mpq_class b = c.bound;
          for (long long j = 0; j < 2; ++j)
            b += mpq_class(static_cast<long>(c.functional[j])) * alpha[j];
          c.bound = b;
        }
        gens = lattice_points(zshift, box);
      }
      for (const auto& beta : lattice_points(shifted, box)) {
        bool generated = false;
        for (const auto& g : gens)
          if (q->membership(beta - g)) {
            generated = true;
            break;
          }
        CHECK(generated);
      }
    }
  }
}

TEST_CASE("invariant: strip partition tiles the box") {
  auto q = slanted();
  std::mt19937 rng(42);
  std::uniform_int_distribution<long long> val(-4, 4);
  for (int iter = 0; iter < 20; ++iter) {
    // random sorted tau rows of length r = 3 with possible infinities
    long long r = 3;
    std::vector<TauVector> taus(q->num_facets());
    for (auto& row : taus) {
      std::vector<long long> vals;
      int n_inf = static_cast<int>(rng() % 2);
      for (int i = 0; i < 3 - n_inf; ++i) vals.push_back(val(rng));
      std::sort(vals.begin(), vals.end());
      row.push_back(ExtInt::neg_inf());
      for (long long v : vals) row.push_back(ExtInt::finite(v));
      for (int i = 0; i < n_inf; ++i) row.push_back(ExtInt::pos_inf());
      row.push_back(ExtInt::pos_inf());
    }
    DegreeBox box;
    box.range.assign(q->num_facets(), {-7, 7});
    auto degrees = q->degrees_in_box(box);
    std::map<DegreeVector, int> covered;
    std::vector<long long> ell(q->num_facets(), 0);
    std::function<void(size_t)> walk = [&](size_t i) {
      if (i == static_cast<size_t>(q->num_facets())) {
        RationalPolyhedron s = q->strip(taus, ell);
        if (polyhedron_is_empty(s)) return;
        for (const auto& a : degrees)
          if (s.contains(a)) covered[a]++;
        return;
      }
      for (long long l = 0; l <= r; ++l) {
        ell[i] = l;
        walk(i + 1);
      }
    };
    walk(0);
    for (const auto& a : degrees) CHECK(covered[a] == 1);
  }
}

TEST_CASE("canonical coset representatives") {
  auto q = nn2();
  const Face& fx = q->face_by_facet_set({0});  // x-axis
  CHECK(q->canonical_rep(fx, {3, 0}) == DegreeVector{0, 0});
  CHECK(q->canonical_rep(fx, {2, 1}) == DegreeVector{0, 1});
  CHECK(q->canonical_rep(q->zero_face(), {1, 2}) == DegreeVector{1, 2});
  CHECK(q->canonical_rep(q->full_face(), {4, 5}) == DegreeVector{0, 0});
}
