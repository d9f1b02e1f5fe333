#include "grcohom/sectors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace grcohom {

TauTable tau_table(const AffineSemigroup& q, const std::vector<InjLabel>& labels) {
  TauTable t;
  for (const auto& l : labels) t.tau_j.push_back(q.tau_of(q.face(l.face_id), l.degree));
  long long n = q.num_facets();
  t.tau_tilde.assign(n, {});
  for (long long i = 0; i < n; ++i) {
    std::vector<ExtInt> vals;
    for (const auto& tj : t.tau_j) vals.push_back(tj[i]);
    std::sort(vals.begin(), vals.end());
    t.tau_tilde[i].push_back(ExtInt::neg_inf());
    for (const auto& v : vals) t.tau_tilde[i].push_back(v);
    t.tau_tilde[i].push_back(ExtInt::pos_inf());
  }
  return t;
}

int SectorPartition::sector_of(const DegreeVector& alpha) const {
  for (size_t s = 0; s < sectors.size(); ++s)
    for (const auto& r : sectors[s].regions)
      if (r.contains(alpha)) return static_cast<int>(s);
  return -1;
}

SectorPartition sector_set(const SemigroupPtr& q, const std::vector<InjLabel>& labels) {
  const AffineSemigroup& Q = *q;
  if (!Q.saturated())
    fail(Errc::NotSaturated, "sector machinery requires a saturated semigroup");
  SectorPartition sp;
  sp.q = q;
  sp.labels = labels;
  sp.table = tau_table(Q, labels);
  long long r = static_cast<long long>(labels.size());
  long long n = Q.num_facets();

  std::map<std::vector<int>, size_t> by_index;
  std::vector<long long> ell(n, 0);
  std::function<void(long long)> walk = [&](long long i) {
    if (i == n) {
      RationalPolyhedron strip = Q.strip(sp.table.tau_tilde, ell);
      if (polyhedron_is_empty(strip)) return;
      std::vector<int> a;
      for (long long j = 0; j < r; ++j) {
        bool alive = true;
        for (long long f = 0; f < n; ++f) {
          // max of tau_f over the strip must stay at or below tau^j_f
          if (!(sp.table.tau_tilde[f][ell[f] + 1] <= sp.table.tau_j[j][f])) alive = false;
        }
        if (alive) a.push_back(static_cast<int>(j));
      }
      auto it = by_index.find(a);
      if (it == by_index.end()) {
        Sector s;
        s.index = a;
        s.ells.push_back(ell);
        s.regions.push_back(strip);
        by_index[a] = sp.sectors.size();
        sp.sectors.push_back(std::move(s));
      } else {
        sp.sectors[it->second].ells.push_back(ell);
        sp.sectors[it->second].regions.push_back(strip);
      }
      return;
    }
    for (long long l = 0; l <= r; ++l) {
      ell[i] = l;
      walk(i + 1);
    }
  };
  walk(0);
  std::sort(sp.sectors.begin(), sp.sectors.end(), [](const Sector& a, const Sector& b) {
    if (a.index.size() != b.index.size()) return a.index.size() > b.index.size();
    return a.index < b.index;
  });
  return sp;
}

namespace {

long long witness_window(const SectorPartition& sp) {
  long long w = 1;
  for (const auto& row : sp.table.tau_tilde)
    for (const auto& e : row)
      if (e.is_finite()) w = std::max(w, std::llabs(e.v));
  const AffineSemigroup& q = *sp.q;
  long long zono = 0;
  for (const auto& rho : q.ray_primitives())
    for (long long i = 0; i < q.num_facets(); ++i) zono += std::max(0LL, q.tau_i(i, rho));
  return w + zono + 1;
}

RationalPolyhedron clip_to_window(const AffineSemigroup& q, RationalPolyhedron p, long long w) {
  for (long long i = 0; i < q.num_facets(); ++i) {
    p.add_ge(q.facet_functionals()[i], -w);
    p.add_le(q.facet_functionals()[i], w);
  }
  return p;
}

RationalPolyhedron negated(const RationalPolyhedron& p) {
  RationalPolyhedron out;
  out.dim = p.dim;
  for (const auto& c : p.constraints) {
    Constraint n = c;
    n.functional = -c.functional;
    out.constraints.push_back(std::move(n));
  }
  return out;
}

}  // namespace

bool sector_comparable(const SectorPartition& sp, size_t ia, size_t ib) {
  const AffineSemigroup& q = *sp.q;
  const Sector& sa = sp.sectors[ia];
  const Sector& sb = sp.sectors[ib];
  // Lemma l:poset necessary condition: A must contain B
  if (!std::includes(sa.index.begin(), sa.index.end(), sb.index.begin(), sb.index.end()))
    return false;
  long long w = witness_window(sp);
  for (size_t xa = 0; xa < sa.ells.size(); ++xa) {
    for (size_t xb = 0; xb < sb.ells.size(); ++xb) {
      bool ell_le = true;
      for (size_t i = 0; i < sa.ells[xa].size(); ++i)
        if (sa.ells[xa][i] > sb.ells[xb][i]) ell_le = false;
      if (!ell_le) continue;
      // rational feasibility pre-check on (Delta_B - Delta_A) cap cone
      RationalPolyhedron diff = polyhedron_minkowski(sb.regions[xb], negated(sa.regions[xa]));
      if (polyhedron_is_empty(polyhedron_intersect(diff, q.cone_polyhedron()))) continue;
      // bounded lattice witness search over ZQ
      auto pa = lattice_points(clip_to_window(q, sa.regions[xa], w),
                               RationalPolyhedron::whole_space(q.dim()),
                               [&](const DegreeVector& x) { return q.in_group(x); });
      auto pb = lattice_points(clip_to_window(q, sb.regions[xb], w),
                               RationalPolyhedron::whole_space(q.dim()),
                               [&](const DegreeVector& x) { return q.in_group(x); });
      for (const auto& alpha : pa)
        for (const auto& beta : pb)
          if (q.membership(beta - alpha)) return true;
    }
  }
  return false;
}

SectorPartition sector_partition_injective(const SemigroupPtr& q,
                                           const std::vector<InjLabel>& labels) {
  SectorPartition sp = sector_set(q, labels);
  Field f;  // transitions are 0/1 matrices over the rationals
  for (auto& s : sp.sectors) {
    s.space_dim = static_cast<long long>(s.index.size());
    Matrix basis(s.index.size(), labels.size(), f);
    for (size_t k = 0; k < s.index.size(); ++k) basis.at(k, s.index[k]) = Scalar(1);
    s.basis = std::move(basis);
  }
  for (size_t a = 0; a < sp.sectors.size(); ++a)
    for (size_t b = 0; b < sp.sectors.size(); ++b) {
      if (!sector_comparable(sp, a, b)) continue;
      const Sector& sa = sp.sectors[a];
      const Sector& sb = sp.sectors[b];
      Matrix t(sb.index.size(), sa.index.size(), f);
      for (size_t col = 0; col < sa.index.size(); ++col) {
        auto it = std::find(sb.index.begin(), sb.index.end(), sa.index[col]);
        if (it != sb.index.end()) t.at(it - sb.index.begin(), col) = Scalar(1);
      }
      sp.transitions[{static_cast<int>(a), static_cast<int>(b)}] = std::move(t);
    }
  return sp;
}

SectorPartition sector_partition_cohomology(const SemigroupPtr& q, const MonomialMatrix& phi,
                                            const MonomialMatrix& psi) {
  const AffineSemigroup& Q = *q;
  Field f = phi.entries.field();
  // complex check
  {
    MonomialMatrix comp = compose(Q, phi, psi);
    if (!is_zero_matrix(comp)) fail(Errc::NotComplex, "psi o phi != 0");
  }
  std::vector<InjLabel> joint = phi.rows;
  joint.insert(joint.end(), phi.cols.begin(), phi.cols.end());
  joint.insert(joint.end(), psi.cols.begin(), psi.cols.end());
  long long rp = static_cast<long long>(phi.rows.size());
  long long rm = static_cast<long long>(phi.cols.size());
  SectorPartition sp = sector_set(q, joint);
  sp.block_prime = rp;
  sp.block_mid = rm;
  sp.block_second = static_cast<long long>(psi.cols.size());

  for (auto& s : sp.sectors) {
    for (int i : s.index) {
      if (i < rp)
        s.a_prime.push_back(i);
      else if (i < rp + rm)
        s.a_mid.push_back(i - static_cast<int>(rp));
      else
        s.a_second.push_back(i - static_cast<int>(rp + rm));
    }
    // maps on the sector: Phi^A_{A'}: k^{A'} -> k^{A}, Psi^{A''}_A: k^{A} -> k^{A''}
    Matrix m1(s.a_mid.size(), s.a_prime.size(), f);
    for (size_t r = 0; r < s.a_mid.size(); ++r)
      for (size_t c = 0; c < s.a_prime.size(); ++c)
        m1.at(r, c) = phi.entries.at(s.a_prime[c], s.a_mid[r]);
    Matrix m2(s.a_second.size(), s.a_mid.size(), f);
    for (size_t r = 0; r < s.a_second.size(); ++r)
      for (size_t c = 0; c < s.a_mid.size(); ++c)
        m2.at(r, c) = psi.entries.at(s.a_mid[c], s.a_second[r]);
    Subspace ker = kernel(m2);
    Subspace im = column_space(m1);
    s.basis = quotient_representatives(ker, im);
    s.space_dim = static_cast<long long>(s.basis.rows());
  }

  // transitions on homology for comparable pairs
  for (size_t a = 0; a < sp.sectors.size(); ++a)
    for (size_t b = 0; b < sp.sectors.size(); ++b) {
      if (!sector_comparable(sp, a, b)) continue;
      const Sector& sa = sp.sectors[a];
      const Sector& sb = sp.sectors[b];
      // project a mid-coordinate vector from A to B
      Matrix t(sb.space_dim, sa.space_dim, f);
      // rows to solve against: H_T basis then im_T
      Matrix m1b(sb.a_mid.size(), sb.a_prime.size(), f);
      for (size_t r = 0; r < sb.a_mid.size(); ++r)
        for (size_t c = 0; c < sb.a_prime.size(); ++c)
          m1b.at(r, c) = phi.entries.at(sb.a_prime[c], sb.a_mid[r]);
      Subspace im_b = column_space(m1b);
      Matrix rows(0, sb.a_mid.size(), f);
      for (size_t i = 0; i < sb.basis.rows(); ++i) rows.append_row(sb.basis.row(i));
      for (size_t i = 0; i < im_b.basis.rows(); ++i) rows.append_row(im_b.basis.row(i));
      for (size_t col = 0; col < static_cast<size_t>(sa.space_dim); ++col) {
        std::vector<Scalar> proj(sb.a_mid.size(), Scalar::zero(f));
        for (size_t k = 0; k < sb.a_mid.size(); ++k) {
          auto it = std::find(sa.a_mid.begin(), sa.a_mid.end(), sb.a_mid[k]);
          if (it != sa.a_mid.end()) proj[k] = sa.basis.at(col, it - sa.a_mid.begin());
        }
        auto sol = express_in_rows(rows, proj);
        if (!sol) fail(Errc::Internal, "sector transition not well-defined");
        for (long long rr = 0; rr < sb.space_dim; ++rr) t.at(rr, col) = (*sol)[rr];
      }
      sp.transitions[{static_cast<int>(a), static_cast<int>(b)}] = std::move(t);
    }
  return sp;
}

InjectiveResolution gamma_I(const SemigroupPtr& q, const InjectiveResolution& res,
                            const std::vector<DegreeVector>& ideal_gens) {
  const AffineSemigroup& Q = *q;
  if (ideal_gens.empty()) fail(Errc::SchemaError, "gamma_I needs a nonzero monomial ideal");
  for (const auto& b : ideal_gens)
    if (!Q.membership(b)) fail(Errc::SchemaError, "ideal generator outside Q");
  auto keep_summand = [&](const EffectiveSummand& s) {
    // P_F contains I iff every generator monomial of I lies off the face
    const Face& f = Q.face(s.face_id);
    for (const auto& b : ideal_gens) {
      bool on_face = true;
      for (int i : f.facet_indices)
        if (Q.tau_i(i, b) != 0) on_face = false;
      if (on_face) return false;
    }
    return true;
  };
  InjectiveResolution out;
  out.shift = res.shift;
  std::vector<std::vector<size_t>> kept;
  for (const auto& stage : res.res.stages) {
    EffectiveData data;
    std::vector<size_t> idx;
    for (size_t j = 0; j < stage.summands.size(); ++j)
      if (keep_summand(stage.summands[j])) {
        idx.push_back(j);
        data.summands.push_back(stage.summands[j]);
      }
    kept.push_back(idx);
    out.res.stages.push_back(std::move(data));
  }
  for (size_t i = 0; i + 1 < res.res.stages.size(); ++i)
    out.res.maps.push_back(submatrix(res.res.maps[i], kept[i], kept[i + 1]));
  return out;
}

SectorPartition local_cohomology(const ModulePtr& m, const std::vector<DegreeVector>& ideal_gens,
                                 long long i, const DegreeBox& box, const HullOptions& opts) {
  const AffineSemigroup& Q = *m->semigroup();
  SemigroupPtr q = m->semigroup();
  if (!Q.saturated()) fail(Errc::NotSaturated, "local cohomology needs a saturated semigroup");
  if (i < 0 || i > Q.dim() + 1) fail(Errc::IndexOutOfRange, "cohomological index out of range");
  Field f = m->field();
  InjectiveResolution inj = injective_resolution(m, i + 1, box, opts);
  InjectiveResolution g = gamma_I(q, inj, ideal_gens);

  auto labels_at = [&](long long stage) -> std::vector<InjLabel> {
    if (stage < 0 || stage >= static_cast<long long>(g.res.stages.size())) return {};
    return stage_labels(g.res.stages[stage]);
  };
  auto map_at = [&](long long stage) -> MonomialMatrix {
    // map from stage to stage+1
    if (stage < 0 || stage + 1 > static_cast<long long>(g.res.stages.size()))
      return zero_monomial_matrix({}, labels_at(stage + 1), f);
    if (stage + 1 == static_cast<long long>(g.res.stages.size()) ||
        stage >= static_cast<long long>(g.res.maps.size()))
      return zero_monomial_matrix(labels_at(stage), labels_at(stage + 1), f);
    return g.res.maps[stage];
  };
  MonomialMatrix phi = map_at(i - 1);
  MonomialMatrix psi = map_at(i);
  SectorPartition sp = sector_partition_cohomology(q, phi, psi);
  return translate_partition(std::move(sp), -inj.shift);
}

std::vector<HilbertRow> hilbert_table(const SectorPartition& sp) {
  std::vector<HilbertRow> out;
  for (const auto& s : sp.sectors) out.push_back(HilbertRow{s.index, s.regions, s.space_dim});
  return out;
}

SectorPartition translate_partition(SectorPartition sp, const DegreeVector& shift) {
  for (auto& s : sp.sectors)
    for (auto& r : s.regions)
      for (auto& c : r.constraints) {
        mpq_class delta = 0;
        for (size_t j = 0; j < c.functional.size(); ++j)
          delta += mpq_class(static_cast<long>(c.functional[j])) *
                   mpq_class(static_cast<long>(shift[j]));
        c.bound += delta;
      }
  for (auto& l : sp.labels) l.degree = l.degree + shift;
  return sp;
}

}  // namespace grcohom
