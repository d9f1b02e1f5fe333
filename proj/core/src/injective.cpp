#include "grcohom/injective.hpp"

#include <algorithm>

namespace grcohom {

FreeResolution free_resolution_of_k(const SemigroupPtr& q, Field f, long long jmax,
                                    const DegreeBox& box) {
  FreeResolution fr;
  const AffineSemigroup& Q = *q;
  DegreeVector zero(Q.dim(), 0);
  fr.degs.push_back({zero});
  fr.d.push_back({});

  auto free_module = [&](const std::vector<DegreeVector>& degs) {
    return std::make_shared<GradedModule>(q, f, degs, std::vector<TermRow>{});
  };

  // k = k[Q]/m
  std::vector<TermRow> krels;
  for (const auto& g : Q.generators())
    if (!is_zero(g)) krels.push_back({Term{Scalar::one(f), 0, g}});
  auto kmod = std::make_shared<GradedModule>(q, f, std::vector<DegreeVector>{zero}, krels);

  ModulePtr fj = free_module(fr.degs[0]);
  GradedMap cur{fj, kmod, {{Term{Scalar::one(f), 0, zero}}}};
  for (long long j = 1; j <= jmax; ++j) {
    Presentation ker = kernel_module(cur, box);
    std::vector<DegreeVector> degs;
    std::vector<TermRow> rows;
    for (const auto& g : ker.generators) {
      degs.push_back(g.deg);
      rows.push_back(element_to_terms(*cur.source, g));
    }
    fr.degs.push_back(degs);
    fr.d.push_back(rows);
    if (degs.empty()) break;  // resolution terminated
    ModulePtr fnext = free_module(degs);
    cur = GradedMap{fnext, cur.source, rows};
  }
  return fr;
}

namespace {

// Hom(F_j, M)_alpha -> Hom(F_{j+1}, M)_alpha as a matrix on stacked components
Matrix hom_differential(const GradedModule& m, const FreeResolution& fr, size_t j,
                        const DegreeVector& alpha) {
  Field f = m.field();
  const auto& src_degs = fr.degs[j];
  const auto& dst_degs = fr.degs[j + 1];
  std::vector<long long> src_off(src_degs.size() + 1, 0), dst_off(dst_degs.size() + 1, 0);
  for (size_t t = 0; t < src_degs.size(); ++t)
    src_off[t + 1] = src_off[t] + m.dim_at(alpha + src_degs[t]);
  for (size_t s = 0; s < dst_degs.size(); ++s)
    dst_off[s + 1] = dst_off[s] + m.dim_at(alpha + dst_degs[s]);
  Matrix out(dst_off.back(), src_off.back(), f);
  const auto& rows = fr.d[j + 1];  // rows[s]: image of e^{j+1}_s in F_j
  for (size_t s = 0; s < dst_degs.size(); ++s) {
    for (const auto& term : rows[s]) {
      const Matrix& mult = m.mult_matrix(alpha + src_degs[term.gen], term.mon);
      for (size_t rr = 0; rr < mult.rows(); ++rr)
        for (size_t cc = 0; cc < mult.cols(); ++cc)
          out.at(dst_off[s] + rr, src_off[term.gen] + cc) += term.c * mult.at(rr, cc);
    }
  }
  return out;
}

}  // namespace

BassTable bass_numbers(const ModulePtr& m, long long jmax, const DegreeBox& box) {
  const AffineSemigroup& Q = *m->semigroup();
  FreeResolution fr = free_resolution_of_k(m->semigroup(), m->field(), jmax + 1, box);
  BassTable out;
  for (const auto& alpha : Q.degrees_in_box(box)) {
    auto hom_dim = [&](long long j) {
      if (j >= static_cast<long long>(fr.degs.size())) return 0LL;
      long long dd = 0;
      for (const auto& b : fr.degs[j]) dd += m->dim_at(alpha + b);
      return dd;
    };
    std::vector<Matrix> delta;  // delta[j]: Hom(F_j) -> Hom(F_{j+1})
    for (long long j = 0; j <= jmax; ++j) {
      if (j + 1 < static_cast<long long>(fr.degs.size()))
        delta.push_back(hom_differential(*m, fr, j, alpha));
      else
        delta.push_back(Matrix(0, hom_dim(j), m->field()));
    }
    for (long long j = 0; j <= jmax; ++j) {
      long long kdim = static_cast<long long>(kernel(delta[j]).dim());
      long long rprev = j == 0 ? 0 : static_cast<long long>(delta[j - 1].rank());
      long long mu = kdim - rprev;
      if (mu != 0) out.mu[{j, alpha}] = mu;
    }
  }
  return out;
}

long long module_dimension(const ModulePtr& m, const DegreeBox& box) {
  const AffineSemigroup& Q = *m->semigroup();
  long long dim = -1;
  for (const Face& f : Q.faces()) {
    if (f.dim <= dim) continue;
    if (!localization_basis(m, f, box).empty()) dim = f.dim;
  }
  return dim;
}

DegreeVector choose_shift(const ModulePtr& m, long long i, const DegreeBox& box) {
  const AffineSemigroup& Q = *m->semigroup();
  DegreeVector zero(Q.dim(), 0);
  long long dim = module_dimension(m, box);
  if (dim < 0) return zero;
  long long jmax = i + 1 + dim;
  if (jmax < 0) jmax = 0;
  // pad the box downward: Bass degrees live below supp(M) by at most the
  // free-resolution generator degrees
  FreeResolution fr = free_resolution_of_k(m->semigroup(), m->field(), jmax + 1, box);
  long long pad = 0;
  for (const auto& stage : fr.degs)
    for (const auto& b : stage)
      for (long long ii = 0; ii < Q.num_facets(); ++ii)
        pad = std::max(pad, Q.tau_i(ii, b));
  DegreeBox bass_box = box;
  for (auto& r : bass_box.range) r.first -= pad;
  BassTable bass = bass_numbers(m, jmax, bass_box);
  std::vector<DegreeVector> bad;
  for (const auto& [key, mult] : bass.mu) {
    if (mult == 0) continue;
    if (!Q.in_group(key.second))
      fail(Errc::NotQGraded, "Bass degree off the group lattice; no shift lands it in Q");
    bad.push_back(key.second);
  }
  if (bad.empty()) return zero;
  DegreeVector s(Q.dim(), 0);
  for (const auto& g : Q.generators()) s = s + g;
  long long k = 0;
  auto all_in = [&](const DegreeVector& a) {
    for (const auto& alpha : bad)
      if (!Q.membership(alpha + a)) return false;
    return true;
  };
  while (!all_in(static_cast<long long>(k) * s)) {
    ++k;
    if (k > 512) fail(Errc::Internal, "shift search did not terminate");
  }
  // minimal a in the global degree order among Q-elements with sigma <= sigma(k s)
  long long sigma_bound = Q.sigma(k * s);
  RationalPolyhedron region = Q.cone_polyhedron();
  DegreeVector sig(Q.dim(), 0);
  for (const auto& t : Q.facet_functionals())
    for (long long j = 0; j < Q.dim(); ++j) sig[j] += t[j];
  region.add_le(sig, sigma_bound);
  auto pts = lattice_points(region, RationalPolyhedron::whole_space(Q.dim()),
                            [&](const DegreeVector& x) { return Q.membership(x); });
  std::sort(pts.begin(), pts.end(),
            [&](const DegreeVector& a, const DegreeVector& b) { return Q.degree_less(a, b); });
  for (const auto& a : pts)
    if (all_in(a)) return a;
  return k * s;
}

InjectiveResolution injective_resolution(const ModulePtr& m, long long n, const DegreeBox& box,
                                         const HullOptions& opts) {
  InjectiveResolution out;
  out.shift = choose_shift(m, n - 1, box);
  ModulePtr ms = shifted(m, out.shift);
  DegreeBox rbox = box;
  {
    const AffineSemigroup& Q = *m->semigroup();
    for (const auto& d : ms->gen_degrees()) {
      DegreeVector t = Q.tau(d);
      for (size_t i = 0; i < rbox.range.size(); ++i) {
        rbox.range[i].first = std::min(rbox.range[i].first, t[i] - 2 * Q.margin());
        rbox.range[i].second = std::max(rbox.range[i].second, t[i] + 2 * Q.margin());
      }
    }
  }
  out.res = irreducible_resolution(ms, n, rbox, opts);
  return out;
}

std::vector<InjLabel> resolution_stage_labels(const InjectiveResolution& r, size_t stage) {
  if (stage >= r.res.stages.size()) return {};
  return stage_labels(r.res.stages[stage]);
}

}  // namespace grcohom
