#include "grcohom/irreducible.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace grcohom {

namespace {

// deterministic (sigma, lex) order used for candidate processing
bool sigma_lex_less(const AffineSemigroup& q, const DegreeVector& a, const DegreeVector& b) {
  long long sa = q.sigma(a), sb = q.sigma(b);
  if (sa != sb) return sa < sb;
  return a < b;
}

std::vector<DegreeVector> minimalize_qset(const AffineSemigroup& q,
                                          std::vector<DegreeVector> pts) {
  std::sort(pts.begin(), pts.end(),
            [&](const DegreeVector& a, const DegreeVector& b) { return sigma_lex_less(q, a, b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<DegreeVector> kept;
  for (const auto& p : pts) {
    bool covered = false;
    for (const auto& k : kept)
      if (q.membership(p - k)) {
        covered = true;
        break;
      }
    if (!covered) kept.push_back(p);
  }
  std::sort(kept.begin(), kept.end(),
            [&](const DegreeVector& a, const DegreeVector& b) { return q.degree_less(a, b); });
  return kept;
}

DegreeBox ideal_scan_box(const AffineSemigroup& q, const std::vector<DegreeVector>& anchors) {
  long long m = q.margin();
  DegreeBox scan;
  scan.range.assign(q.num_facets(), {0, 3 * m});
  for (const auto& a : anchors) {
    DegreeVector t = q.tau(a);
    for (long long i = 0; i < q.num_facets(); ++i)
      scan.range[i].second = std::max(scan.range[i].second, t[i] + 3 * m);
  }
  return scan;
}

}  // namespace

std::vector<DegreeVector> minimal_qset_generators(
    const AffineSemigroup& q, const std::function<bool(const DegreeVector&)>& in_set,
    const DegreeBox& scan) {
  std::vector<DegreeVector> mins;
  for (const auto& p : q.degrees_in_box(scan)) {
    if (!in_set(p)) continue;
    bool minimal = true;
    for (const auto& g : q.generators()) {
      if (is_zero(g)) continue;
      if (in_set(p - g)) {
        minimal = false;
        break;
      }
    }
    if (minimal) mins.push_back(p);
  }
  return mins;
}

std::vector<DegreeVector> halfspace_ideal_generators(const SemigroupPtr& q, int facet_index,
                                                     const DegreeVector& a,
                                                     bool per_face_zonotope) {
  const AffineSemigroup& Q = *q;
  if (!Q.saturated()) fail(Errc::NotSaturated, "halfspace ideal generators need a saturated Q");
  if (facet_index < 0 || facet_index >= Q.num_facets())
    fail(Errc::IndexOutOfRange, "facet index");
  if (!Q.membership(a)) fail(Errc::Internal, "a must lie in Q");

  const Face& facet_face = Q.face_by_facet_set({facet_index});
  long long t = Q.tau_i(facet_index, a);
  auto in_target = [&](const DegreeVector& b) {
    return Q.tau_i(facet_index, b) >= t + 1 && Q.membership(b);
  };

  // Delta: faces meeting the facet face only at 0, restricted to maximal ones
  std::vector<const Face*> delta;
  for (const Face& d : Q.faces()) {
    std::vector<int> meet_facets;
    std::set_union(d.facet_indices.begin(), d.facet_indices.end(),
                   facet_face.facet_indices.begin(), facet_face.facet_indices.end(),
                   std::back_inserter(meet_facets));
    if (Q.face_by_facet_set(meet_facets).dim == 0) delta.push_back(&d);
  }
  std::vector<const Face*> maximal;
  for (const Face* d : delta) {
    bool dominated = false;
    for (const Face* e : delta) {
      if (e == d) continue;
      // d inside e iff facets(d) contains facets(e)
      if (std::includes(d->facet_indices.begin(), d->facet_indices.end(),
                        e->facet_indices.begin(), e->facet_indices.end()) &&
          d->facet_indices != e->facet_indices)
        dominated = true;
    }
    if (!dominated) maximal.push_back(d);
  }

  RationalPolyhedron zono_global = zonotope_polytope(Q.ray_primitives());

  std::vector<DegreeVector> raw;
  for (const Face* d : maximal) {
    // (a + RH) cap R_+D
    auto hrep = [&]() {
      RationalPolyhedron p;
      p.dim = Q.dim();
      std::vector<DegreeVector> gens = d->gens;
      // cone of the face via its generators
      if (gens.empty()) {
        for (long long j = 0; j < Q.dim(); ++j) {
          DegreeVector e(Q.dim(), 0);
          e[j] = 1;
          p.add_ge(e, 0);
          p.add_le(e, 0);
        }
        return p;
      }
      // use the global cone constraints plus vanishing on the facets cutting D
      for (const auto& tau : Q.facet_functionals()) p.add_ge(tau, 0);
      for (int i : d->facet_indices) {
        p.add_le(Q.facet_functionals()[i], 0);  // tau_i = 0 on the face cone
      }
      return p;
    }();
    RationalPolyhedron slab = hrep;
    slab.add_ge(Q.facet_functionals()[facet_index], mpq_class(static_cast<long>(t)));
    slab.add_le(Q.facet_functionals()[facet_index], mpq_class(static_cast<long>(t)));
    if (polyhedron_is_empty(slab)) continue;
    RationalPolyhedron zono = zono_global;
    if (per_face_zonotope) {
      // zonotope of the face D + F (generated by the gens of both faces)
      std::set<DegreeVector> dirs;
      for (const auto& g : d->gens)
        if (!is_zero(g)) dirs.insert(g);
      for (const auto& g : facet_face.gens)
        if (!is_zero(g)) dirs.insert(g);
      std::vector<DegreeVector> segs;
      for (const auto& v : dirs) {
        DegreeVector p = primitive(v);
        long long k = 1;
        while (!lattice_contains(Q.group_basis(), k * p)) ++k;
        segs.push_back(k * p);
      }
      if (!segs.empty()) zono = zonotope_polytope(segs);
    }
    RationalPolyhedron bd = polyhedron_minkowski(slab, zono);
    auto pts = lattice_points(bd, RationalPolyhedron::whole_space(Q.dim()),
                              [&](const DegreeVector& x) { return Q.in_group(x); });
    raw.insert(raw.end(), pts.begin(), pts.end());
  }

  // post-filter to the open half-space, push sub-threshold points into the
  // target, minimalize, and verify on a box
  std::vector<DegreeVector> anchors = raw;
  anchors.push_back(a);
  DegreeBox scan = ideal_scan_box(Q, anchors);
  std::vector<DegreeVector> candidates;
  for (const auto& b : raw) {
    if (!Q.membership(b)) continue;  // off-cone points cannot occur, but keep exact
    if (in_target(b)) {
      candidates.push_back(b);
      continue;
    }
    // minimal points of (b + Q) cap target within the scan box
    auto in_shifted = [&](const DegreeVector& p) { return in_target(p) && Q.membership(p - b); };
    for (const auto& p : minimal_qset_generators(Q, in_shifted, scan)) candidates.push_back(p);
  }
  std::vector<DegreeVector> gens = minimalize_qset(Q, std::move(candidates));

  for (const auto& p : Q.degrees_in_box(scan)) {
    if (!in_target(p)) continue;
    bool covered = false;
    for (const auto& b : gens)
      if (Q.membership(p - b)) {
        covered = true;
        break;
      }
    if (!covered)
      fail(Errc::VerificationFailed,
           "halfspace ideal generators do not cover the target at " + vec_str(p));
  }
  return gens;
}

std::vector<DegreeVector> irreducible_ideal_generators(const SemigroupPtr& q, const Face& f,
                                                       const DegreeVector& a,
                                                       bool per_face_zonotope) {
  const AffineSemigroup& Q = *q;
  if (!Q.saturated()) fail(Errc::NotSaturated, "irreducible ideal generators need a saturated Q");
  std::vector<DegreeVector> all;
  for (int h : f.facet_indices) {
    auto part = halfspace_ideal_generators(q, h, a, per_face_zonotope);
    all.insert(all.end(), part.begin(), part.end());
  }
  return minimalize_qset(Q, std::move(all));
}

std::vector<DegreeVector> irreducible_ideal_generators_unsat(const SemigroupPtr& q, const Face& f,
                                                             const DegreeVector& a,
                                                             const DegreeBox& box) {
  const AffineSemigroup& Q = *q;
  auto [qsat, qset_gens] = Q.saturate();
  if (qsat->facet_functionals() != Q.facet_functionals())
    fail(Errc::Internal, "saturation changed the facet description");
  const Face& fsat = qsat->face_by_facet_set(f.facet_indices);
  std::vector<DegreeVector> vgens = irreducible_ideal_generators(qsat, fsat, a);

  // W = V cap k[Q], as minimal Q-set generators
  std::vector<DegreeVector> anchors = vgens;
  anchors.push_back(a);
  for (const auto& h : qset_gens) anchors.push_back(h);
  DegreeBox scan = ideal_scan_box(Q, anchors);
  auto in_V = [&](const DegreeVector& p) {
    for (const auto& v : vgens)
      if (qsat->membership(p - v)) return true;
    return false;
  };
  auto in_W = [&](const DegreeVector& p) { return Q.membership(p) && in_V(p); };
  std::vector<DegreeVector> b = minimal_qset_generators(Q, in_W, scan);

  // I = intersection of P_D over the facets D of F
  std::vector<const Face*> f_facets;
  for (const Face& d : Q.faces()) {
    if (d.dim != f.dim - 1) continue;
    if (std::includes(d.facet_indices.begin(), d.facet_indices.end(), f.facet_indices.begin(),
                      f.facet_indices.end()))
      f_facets.push_back(&d);
  }
  auto in_I = [&](const DegreeVector& p) {
    if (!Q.membership(p)) return false;
    for (const Face* d : f_facets) {
      bool on = true;
      for (int i : d->facet_indices)
        if (Q.tau_i(i, p) != 0) on = false;
      if (on) return false;
    }
    return true;
  };
  std::vector<DegreeVector> i_gens = minimal_qset_generators(Q, in_I, scan);

  // W-bar := k[Q]/W, then kill off-coset colon generators and Gamma_I
  std::vector<TermRow> rels;
  for (const auto& w : b) rels.push_back({Term{Scalar::one(Field{}), 0, w}});
  auto wbar = std::make_shared<GradedModule>(q, Field{}, std::vector<DegreeVector>{DegreeVector(Q.dim(), 0)}, rels);
  ModulePtr cur = wbar;
  for (int iter = 0;; ++iter) {
    if (iter > 32) fail(Errc::BoxTooSmall, "a:unsat loop did not terminate on the box");
    Presentation colon = colon_submodule(cur, f, box);
    std::vector<ModuleElement> bad;
    for (size_t t = 0; t < colon.generators.size(); ++t) {
      if (!Q.in_face_lattice(f, colon.generators[t].deg - a)) bad.push_back(colon.generators[t]);
    }
    if (bad.empty()) break;
    for (const auto& e : bad) b.push_back(e.deg);
    cur = quotient_by_elements(cur, bad);
    Presentation gamma = gamma_submodule(cur, i_gens, box, nullptr);
    if (!gamma.generators.empty()) {
      for (const auto& e : gamma.generators) b.push_back(e.deg);
      cur = quotient_by_elements(cur, gamma.generators);
    }
  }
  return minimalize_qset(Q, std::move(b));
}

// --- Alg a:irred ---------------------------------------------------------------

EffectiveHull irreducible_hull(const ModulePtr& m, const DegreeBox& box, const HullOptions& opts) {
  const GradedModule& M = *m;
  const AffineSemigroup& Q = *M.semigroup();
  if (!M.is_q_graded()) fail(Errc::NotQGraded, "irreducible_hull needs a Q-graded module");
  Field fld = M.field();

  ModulePtr N = m;
  EffectiveHull hull;
  size_t ngens = M.gen_degrees().size();
  std::vector<std::vector<Scalar>> lambda(ngens);

  for (const Face& F : Q.faces()) {
    auto prime = Q.prime_generators(F);
    auto B = localization_basis(N, F, box);
    if (!B.empty()) {
      // canonical coset representatives and classes
      std::vector<DegreeVector> canon(B.size());
      for (size_t y = 0; y < B.size(); ++y) canon[y] = Q.canonical_rep(F, B[y].deg);
      std::map<DegreeVector, std::vector<size_t>> classes;
      for (size_t y = 0; y < B.size(); ++y) classes[canon[y]].push_back(y);

      std::vector<std::vector<Scalar>> face_lambda(ngens,
                                                   std::vector<Scalar>(B.size(), Scalar::zero(fld)));
      auto degrees = Q.degrees_in_box(box);
      for (size_t gi = 0; gi < ngens; ++gi) {
        const DegreeVector& dg = M.gen_degrees()[gi];
        // image of the generator in N
        const DegreeComponent& comp = N->component(dg);
        std::vector<Scalar> frep(comp.live.size(), Scalar::zero(fld));
        bool live = false;
        for (size_t k = 0; k < comp.live.size(); ++k)
          if (comp.live[k] == static_cast<int>(gi)) {
            frep[k] = Scalar::one(fld);
            live = true;
          }
        if (!live) fail(Errc::Internal, "generator not live at its own degree");
        std::vector<Scalar> gbar = N->to_coords(dg, frep);
        bool gzero = true;
        for (const auto& x : gbar)
          if (!x.is_zero()) gzero = false;
        if (gzero) continue;
        for (const auto& [rep, members] : classes) {
          for (const auto& aa : degrees) {
            if (!Q.in_face_lattice(F, aa - rep)) continue;
            if (!Q.membership(aa - dg)) continue;
            auto w = N->mult_matrix(dg, aa - dg).apply(gbar);
            bool wzero = true;
            for (const auto& x : w)
              if (!x.is_zero()) wzero = false;
            if (wzero) continue;
            bool killed = true;
            for (const auto& p : prime) {
              auto img = N->mult_matrix(aa, p).apply(w);
              for (const auto& x : img)
                if (!x.is_zero()) killed = false;
            }
            if (!killed) continue;
            auto coeffs = coefficient_on_basis(N, F, ModuleElement{aa, w}, B);
            for (size_t y : members) face_lambda[gi][y] = coeffs[y];
            break;
          }
        }
      }
      for (size_t y = 0; y < B.size(); ++y)
        hull.data.summands.push_back(EffectiveSummand{F.id, canon[y], B[y].deg});
      for (size_t gi = 0; gi < ngens; ++gi)
        lambda[gi].insert(lambda[gi].end(), face_lambda[gi].begin(), face_lambda[gi].end());
    }
    if (!opts.skip_quotients && F.id != Q.full_face().id) {
      Presentation gamma = gamma_F(N, F, box);
      if (!gamma.generators.empty()) N = quotient_by_elements(N, gamma.generators);
    }
  }

  for (size_t gi = 0; gi < ngens; ++gi)
    hull.vectors.push_back(EffectiveVector{M.gen_degrees()[gi], lambda[gi]});
  return hull;
}

HullEmbedding hull_embedding(const ModulePtr& m, const EffectiveHull& hull, const DegreeBox& box,
                             const HullOptions& opts) {
  const AffineSemigroup& Q = *m->semigroup();
  SemigroupPtr q = m->semigroup();
  Field fld = m->field();
  size_t r = hull.data.summands.size();
  std::vector<DegreeVector> wgens(r, DegreeVector(Q.dim(), 0));
  std::vector<TermRow> rels;
  for (size_t j = 0; j < r; ++j) {
    const auto& s = hull.data.summands[j];
    std::vector<DegreeVector> ideal =
        Q.saturated()
            ? irreducible_ideal_generators(q, Q.face(s.face_id), s.degree, opts.per_face_zonotope)
            : irreducible_ideal_generators_unsat(q, Q.face(s.face_id), s.degree, box);
    for (const auto& bdeg : ideal)
      rels.push_back({Term{Scalar::one(fld), static_cast<int>(j), bdeg}});
  }
  HullEmbedding out;
  out.wbar = std::make_shared<GradedModule>(q, fld, wgens, rels);
  out.embed.source = m;
  out.embed.target = out.wbar;
  for (size_t gi = 0; gi < m->gen_degrees().size(); ++gi) {
    TermRow row;
    const auto& v = hull.vectors[gi];
    for (size_t j = 0; j < r; ++j)
      if (!v.entries[j].is_zero())
        row.push_back(Term{v.entries[j], static_cast<int>(j), v.degree});
    out.embed.rows.push_back(row);
  }
  return out;
}

HullCokernel hull_cokernel(const ModulePtr& m, const EffectiveHull& hull, const DegreeBox& box,
                           const HullOptions& opts) {
  HullCokernel out;
  out.emb = hull_embedding(m, hull, box, opts);
  ModulePtr wbar = out.emb.wbar;
  const GradedMap& f = out.emb.embed;
  SubspaceFn img = [&f](const DegreeVector& a) { return column_space(f.at(a)); };
  SubspaceFn full = [wbar](const DegreeVector& a) { return full_component(*wbar, a); };
  out.coker = present_subquotient(wbar, box, full, img);
  return out;
}

std::vector<InjLabel> stage_labels(const EffectiveData& data) {
  std::vector<InjLabel> out;
  for (const auto& s : data.summands) out.push_back(InjLabel{s.face_id, s.degree});
  return out;
}

IrreducibleResolution irreducible_resolution(const ModulePtr& m, long long n, const DegreeBox& box,
                                             const HullOptions& opts) {
  const AffineSemigroup& Q = *m->semigroup();
  Field fld = m->field();
  IrreducibleResolution res;
  ModulePtr cur = m;
  std::vector<ModuleElement> cur_gens_in_prev;  // generators of cur inside the previous wbar
  ModulePtr prev_wbar;
  EffectiveHull prev_hull;
  GradedMap prev_embed;

  for (long long stage = 0; stage <= n; ++stage) {
    if (cur->gen_degrees().empty()) break;
    EffectiveHull hull = irreducible_hull(cur, box, opts);
    HullCokernel hc = hull_cokernel(cur, hull, box, opts);
    if (stage > 0) {
      // map prev_wbar -> wbar: express each e_p at degree 0 in the cokernel
      // generators (modulo the image of the previous embedding), then push
      // through the effective vectors of the current hull
      size_t rprev = prev_hull.data.summands.size();
      size_t rcur = hull.data.summands.size();
      MonomialMatrix mm =
          zero_monomial_matrix(stage_labels(prev_hull.data), stage_labels(hull.data), fld);
      std::vector<size_t> t0;
      for (size_t t = 0; t < cur_gens_in_prev.size(); ++t)
        if (is_zero(cur->gen_degrees()[t])) t0.push_back(t);
      DegreeVector zero(Q.dim(), 0);
      long long wdim = prev_wbar->dim_at(zero);
      Matrix rows(0, wdim, fld);
      for (size_t t : t0) rows.append_row(cur_gens_in_prev[t].coords);
      Subspace img0 = column_space(prev_embed.at(zero));
      for (size_t i = 0; i < img0.basis.rows(); ++i) rows.append_row(img0.basis.row(i));
      for (size_t p = 0; p < rprev; ++p) {
        const DegreeComponent& comp = prev_wbar->component(zero);
        std::vector<Scalar> frep(comp.live.size(), Scalar::zero(fld));
        for (size_t k = 0; k < comp.live.size(); ++k)
          if (comp.live[k] == static_cast<int>(p)) frep[k] = Scalar::one(fld);
        std::vector<Scalar> ep = prev_wbar->to_coords(zero, frep);
        auto sol = express_in_rows(rows, ep);
        if (!sol) fail(Errc::Internal, "resolution map: e_p not expressible");
        for (size_t j = 0; j < rcur; ++j) {
          Scalar acc = Scalar::zero(fld);
          for (size_t k = 0; k < t0.size(); ++k)
            acc += (*sol)[k] * hull.vectors[t0[k]].entries[j];
          mm.entries.at(p, j) = acc;
        }
      }
      check_support_condition(Q, mm);
      res.maps.push_back(std::move(mm));
    }
    res.stages.push_back(hull.data);
    prev_hull = hull;
    prev_wbar = hc.emb.wbar;
    prev_embed = hc.emb.embed;
    cur_gens_in_prev = hc.coker.generators;
    cur = hc.coker.module;
  }
  return res;
}

}  // namespace grcohom
