#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grcohom/module.hpp"

using namespace grcohom;

namespace {

Field QQ;  // rationals

SemigroupPtr nn2() { return AffineSemigroup::build({{1, 0}, {0, 1}}); }

ModulePtr ring(SemigroupPtr q) {
  return std::make_shared<GradedModule>(q, QQ, std::vector<DegreeVector>{DegreeVector(q->dim(), 0)},
                                        std::vector<TermRow>{});
}

// k[Q]/<monomials>
ModulePtr monomial_quotient(SemigroupPtr q, const std::vector<DegreeVector>& mons) {
  std::vector<TermRow> rels;
  for (const auto& m : mons) rels.push_back({Term{Scalar(1), 0, m}});
  return std::make_shared<GradedModule>(q, QQ, std::vector<DegreeVector>{DegreeVector(q->dim(), 0)},
                                        rels);
}

DegreeBox box(SemigroupPtr q, long long b) { return q->default_box(b); }

}  // namespace

TEST_CASE("degree components of k[x,y]/(x^2,xy)") {
  auto q = nn2();
  auto m = monomial_quotient(q, {{2, 0}, {1, 1}});
  CHECK(m->dim_at({0, 5}) == 1);
  CHECK(m->dim_at({2, 0}) == 0);
  CHECK(m->dim_at({1, 0}) == 1);
  CHECK(m->dim_at({1, 1}) == 0);
  CHECK(ring(q)->dim_at({0, 0}) == 1);
  CHECK(ring(q)->dim_at({-1, 0}) == 0);
}

TEST_CASE("kernel of (x,y) is the Koszul syzygy") {
  auto q = nn2();
  auto r = ring(q);
  // source: k[Q](-(1,0)) + k[Q](-(0,1)), map e1 -> x, e2 -> y
  auto src = std::make_shared<GradedModule>(q, QQ,
                                            std::vector<DegreeVector>{{1, 0}, {0, 1}},
                                            std::vector<TermRow>{});
  GradedMap f{src, r, {{Term{Scalar(1), 0, {1, 0}}}, {Term{Scalar(1), 0, {0, 1}}}}};
  Presentation ker = kernel_module(f, box(q, 8));
  REQUIRE(ker.module->gen_degrees().size() == 1);
  CHECK(ker.module->gen_degrees()[0] == DegreeVector{1, 1});
  // the syzygy vector is (y, -x) up to scale
  const auto& g = ker.generators[0];
  auto frep = src->from_coords(g.deg, g.coords);
  REQUIRE(frep.size() == 2);
  CHECK(frep[0] == -frep[1]);
  CHECK(!frep[0].is_zero());
}

TEST_CASE("kernel of the zero map is everything") {
  auto q = nn2();
  auto m = monomial_quotient(q, {{1, 1}});
  Presentation ker = kernel_module(zero_map(m, ring(q)), box(q, 6));
  for (const auto& a : q->degrees_in_box(box(q, 4)))
    CHECK(ker.module->dim_at(a) == m->dim_at(a));
}

TEST_CASE("cokernel of the hull of k[x,y]/(xy)") {
  auto q = nn2();
  auto m = monomial_quotient(q, {{1, 1}});
  // W = k{F_x - Q}_Q + k{F_y - Q}_Q = k[Q]/(y) + k[Q]/(x)
  auto w = std::make_shared<GradedModule>(
      q, QQ, std::vector<DegreeVector>{{0, 0}, {0, 0}},
      std::vector<TermRow>{{Term{Scalar(1), 0, {0, 1}}}, {Term{Scalar(1), 1, {1, 0}}}});
  GradedMap f{m, w, {{Term{Scalar(1), 0, {0, 0}}, Term{Scalar(1), 1, {0, 0}}}}};
  auto [img, coker] = image_cokernel(f, box(q, 8));
  REQUIRE(coker.module->gen_degrees().size() == 1);
  CHECK(coker.module->gen_degrees()[0] == DegreeVector{0, 0});
  CHECK(coker.module->dim_at({0, 0}) == 1);
  CHECK(coker.module->dim_at({2, 0}) == 0);
  CHECK(coker.module->dim_at({0, 3}) == 0);
  // injectivity of the embedding degreewise
  for (const auto& a : q->degrees_in_box(box(q, 5)))
    CHECK(img.module->dim_at(a) == m->dim_at(a));
}

TEST_CASE("colon submodules") {
  auto q = nn2();
  auto x2xy = monomial_quotient(q, {{2, 0}, {1, 1}});
  Presentation socle = colon_submodule(x2xy, q->zero_face(), box(q, 8));
  REQUIRE(socle.module->gen_degrees().size() == 1);
  CHECK(socle.module->gen_degrees()[0] == DegreeVector{1, 0});

  Presentation none = colon_submodule(ring(q), q->zero_face(), box(q, 6));
  CHECK(none.module->gen_degrees().empty());

  auto xy = monomial_quotient(q, {{1, 1}});
  const Face& fx = q->face_by_facet_set({0});  // x-axis face
  Presentation cx = colon_submodule(xy, fx, box(q, 8));
  REQUIRE(cx.module->gen_degrees().size() == 1);
  CHECK(cx.module->gen_degrees()[0] == DegreeVector{1, 0});
}

TEST_CASE("gamma submodules") {
  auto q = nn2();
  auto x2xy = monomial_quotient(q, {{2, 0}, {1, 1}});
  Presentation g = gamma_F(x2xy, q->zero_face(), box(q, 8));
  REQUIRE(g.module->gen_degrees().size() == 1);
  CHECK(g.module->gen_degrees()[0] == DegreeVector{1, 0});

  Presentation gr = gamma_F(ring(q), q->zero_face(), box(q, 6));
  CHECK(gr.module->gen_degrees().empty());

  auto xy = monomial_quotient(q, {{1, 1}});
  const Face& fy = q->face_by_facet_set({1});  // y-axis face; P_F = (x)
  Presentation gy = gamma_F(xy, fy, box(q, 8));
  REQUIRE(gy.module->gen_degrees().size() == 1);
  CHECK(gy.module->gen_degrees()[0] == DegreeVector{0, 1});
}

TEST_CASE("localization bases (Alg a:B)") {
  auto q = nn2();
  auto xy = monomial_quotient(q, {{1, 1}});
  const Face& fx = q->face_by_facet_set({0});
  auto b = localization_basis(xy, fx, box(q, 8));
  REQUIRE(b.size() == 1);
  CHECK(b[0].deg == DegreeVector{1, 0});

  // k + k in degree 0 over the zero face: both generators
  auto kk = std::make_shared<GradedModule>(
      q, QQ, std::vector<DegreeVector>{{0, 0}, {0, 0}},
      std::vector<TermRow>{{Term{Scalar(1), 0, {1, 0}}}, {Term{Scalar(1), 0, {0, 1}}},
                           {Term{Scalar(1), 1, {1, 0}}}, {Term{Scalar(1), 1, {0, 1}}}});
  auto b2 = localization_basis(kk, q->zero_face(), box(q, 6));
  CHECK(b2.size() == 2);

  // torsion-free rank 1 over the full face
  auto b3 = localization_basis(ring(q), q->full_face(), box(q, 6));
  REQUIRE(b3.size() == 1);
  CHECK(b3[0].deg == DegreeVector{0, 0});

  // over F_x, k[x,y]/(xy) has rank 1: x^2 must not enlarge the basis
  auto b4 = localization_basis(xy, q->full_face(), box(q, 6));
  CHECK(b4.empty());
}

TEST_CASE("coefficients on a basis (Alg a:B')") {
  auto q = nn2();
  auto xy = monomial_quotient(q, {{1, 1}});
  const Face& fx = q->face_by_facet_set({0});
  auto b = localization_basis(xy, fx, box(q, 8));
  REQUIRE(b.size() == 1);
  // z = x^3
  ModuleElement z{{3, 0}, {Scalar(1)}};
  auto c = coefficient_on_basis(xy, fx, z, b);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == Scalar(1));

  // z = g1 + 2 g2 in k^2
  auto kk = std::make_shared<GradedModule>(
      q, QQ, std::vector<DegreeVector>{{0, 0}, {0, 0}},
      std::vector<TermRow>{{Term{Scalar(1), 0, {1, 0}}}, {Term{Scalar(1), 0, {0, 1}}},
                           {Term{Scalar(1), 1, {1, 0}}}, {Term{Scalar(1), 1, {0, 1}}}});
  auto bk = localization_basis(kk, q->zero_face(), box(q, 6));
  REQUIRE(bk.size() == 2);
  ModuleElement z2{{0, 0}, {Scalar(1), Scalar(2)}};
  auto ck = coefficient_on_basis(kk, q->zero_face(), z2, bk);
  CHECK(ck == std::vector<Scalar>{Scalar(1), Scalar(2)});

  // z in a different coset: all-zero vector
  auto socle_mod = monomial_quotient(q, {{2, 0}, {1, 1}});
  auto bs = localization_basis(socle_mod, q->zero_face(), box(q, 8));
  REQUIRE(bs.size() == 1);
  // element y^2 is not in the colon: NotInColon
  ModuleElement bad{{0, 2}, {Scalar(1)}};
  CHECK_THROWS_AS(coefficient_on_basis(socle_mod, q->zero_face(), bad, bs), Error);
}

TEST_CASE("minimal generators") {
  auto q = nn2();
  // ideal (x^2, xy) as the kernel of k[Q] -> k[Q]/(x^2,xy)
  auto quot = monomial_quotient(q, {{2, 0}, {1, 1}});
  GradedMap proj{ring(q), quot, {{Term{Scalar(1), 0, {0, 0}}}}};
  Presentation ideal = kernel_module(proj, box(q, 8));
  std::vector<DegreeVector> degs;
  for (const auto& g : ideal.generators) degs.push_back(g.deg);
  CHECK(degs == std::vector<DegreeVector>{{2, 0}, {1, 1}});  // global order: tau-lex

  CHECK(minimal_generators(ring(q), box(q, 6)) == std::vector<DegreeVector>{{0, 0}});

  // the ideal of {b1 >= 2 or b2 >= 2}
  auto quot2 = monomial_quotient(q, {{2, 0}, {0, 2}});
  GradedMap proj2{ring(q), quot2, {{Term{Scalar(1), 0, {0, 0}}}}};
  Presentation ideal2 = kernel_module(proj2, box(q, 8));
  std::vector<DegreeVector> degs2;
  for (const auto& g : ideal2.generators) degs2.push_back(g.deg);
  CHECK(degs2 == std::vector<DegreeVector>{{2, 0}, {0, 2}});
}

TEST_CASE("invariant: rank-nullity per degree") {
  auto q = nn2();
  auto m = monomial_quotient(q, {{1, 1}});
  auto w = std::make_shared<GradedModule>(
      q, QQ, std::vector<DegreeVector>{{0, 0}, {0, 0}},
      std::vector<TermRow>{{Term{Scalar(1), 0, {0, 1}}}, {Term{Scalar(1), 1, {1, 0}}}});
  GradedMap f{m, w, {{Term{Scalar(1), 0, {0, 0}}, Term{Scalar(1), 1, {0, 0}}}}};
  for (const auto& a : q->degrees_in_box(box(q, 5))) {
    Matrix fa = f.at(a);
    CHECK(static_cast<long long>(kernel(fa).dim()) + static_cast<long long>(fa.rank()) ==
          m->dim_at(a));
  }
}

TEST_CASE("invariant: colon correctness") {
  auto q = nn2();
  auto m = monomial_quotient(q, {{2, 0}, {1, 1}});
  const Face& f0 = q->zero_face();
  auto prime = q->prime_generators(f0);
  for (const auto& a : q->degrees_in_box(box(q, 4))) {
    Subspace c = colon_subspace(*m, prime, a, 1);
    for (size_t i = 0; i < c.basis.rows(); ++i)
      for (const auto& p : prime) {
        auto img = m->mult_matrix(a, p).apply(c.basis.row(i));
        for (const auto& x : img) CHECK(x.is_zero());
      }
  }
}

TEST_CASE("invariant: localization basis spans degreewise along the face") {
  auto q = nn2();
  auto xy = monomial_quotient(q, {{1, 1}});
  const Face& fx = q->face_by_facet_set({0});
  auto b = localization_basis(xy, fx, box(q, 6));
  REQUIRE(b.size() == 1);
  auto prime = q->prime_generators(fx);
  // at every degree (k,0), k>=1, the colon is 1-dimensional and spanned by
  // x^{k-1} * basis element
  for (long long k = 1; k <= 6; ++k) {
    DegreeVector a{k, 0};
    Subspace c = colon_subspace(*xy, prime, a, 1);
    CHECK(c.dim() == 1);
    auto img = xy->mult_matrix(b[0].deg, a - b[0].deg).apply(b[0].coords);
    CHECK(contains(c, img));
  }
}

TEST_CASE("invariant: coefficient reconstruction") {
  auto q = nn2();
  auto xy = monomial_quotient(q, {{1, 1}});
  const Face& fx = q->face_by_facet_set({0});
  auto b = localization_basis(xy, fx, box(q, 6));
  ModuleElement z{{4, 0}, {Scalar(3)}};
  auto c = coefficient_on_basis(xy, fx, z, b);
  // reconstruct: sum c_y x^{deg z - deg y} y = z
  std::vector<Scalar> acc(xy->dim_at(z.deg), Scalar::zero(QQ));
  for (size_t i = 0; i < b.size(); ++i) {
    if (c[i].is_zero()) continue;
    auto img = xy->mult_matrix(b[i].deg, z.deg - b[i].deg).apply(b[i].coords);
    for (size_t t = 0; t < acc.size(); ++t) acc[t] += c[i] * img[t];
  }
  CHECK(acc == z.coords);
}

TEST_CASE("invariant: presentation round-trip") {
  auto q = nn2();
  auto m = monomial_quotient(q, {{2, 0}, {1, 1}});
  SubspaceFn full = [&](const DegreeVector& a) { return full_component(*m, a); };
  SubspaceFn zero = [&](const DegreeVector& a) {
    return zero_subspace(m->dim_at(a), m->field());
  };
  Presentation p = present_subquotient(m, box(q, 8), full, zero);
  for (const auto& a : q->degrees_in_box(box(q, 5)))
    CHECK(p.module->dim_at(a) == m->dim_at(a));
  CHECK(minimal_generators(p.module, box(q, 8)) == minimal_generators(m, box(q, 8)));
}

TEST_CASE("prime field mode") {
  auto q = nn2();
  Field f7{7};
  auto m = std::make_shared<GradedModule>(
      q, f7, std::vector<DegreeVector>{{0, 0}},
      std::vector<TermRow>{{Term{Scalar::mod_p(1, 7), 0, {2, 0}}},
                           {Term{Scalar::mod_p(1, 7), 0, {1, 1}}}});
  CHECK(m->dim_at({0, 3}) == 1);
  CHECK(m->dim_at({2, 0}) == 0);
  Presentation socle = colon_submodule(m, q->zero_face(), q->default_box(6));
  REQUIRE(socle.module->gen_degrees().size() == 1);
  CHECK(socle.module->gen_degrees()[0] == DegreeVector{1, 0});
}
