#include "grcohom/semigroup.hpp"

#include <algorithm>
#include <set>

namespace grcohom {

namespace {

bool lex_less(const DegreeVector& a, const DegreeVector& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

std::shared_ptr<const AffineSemigroup> AffineSemigroup::build(std::vector<DegreeVector> generators) {
  if (generators.empty()) fail(Errc::ZeroDimension, "no generators");
  size_t d = generators[0].size();
  for (const auto& g : generators)
    if (g.size() != d) fail(Errc::DimensionMismatch, "generators of mixed dimension");
  std::vector<DegreeVector> nz;
  for (const auto& g : generators)
    if (!is_zero(g)) nz.push_back(g);
  if (nz.empty()) fail(Errc::ZeroDimension, "all generators are zero");

  // sharpness: no nontrivial nonnegative combination of generators is zero
  {
    RationalPolyhedron lp;
    lp.dim = static_cast<long long>(nz.size());
    for (size_t i = 0; i < nz.size(); ++i) {
      DegreeVector e(nz.size(), 0);
      e[i] = 1;
      lp.add_ge(e, mpq_class(0));
    }
    for (size_t j = 0; j < d; ++j) {
      DegreeVector row(nz.size());
      for (size_t i = 0; i < nz.size(); ++i) row[i] = nz[i][j];
      lp.add_ge(row, mpq_class(0));
      lp.add_le(row, mpq_class(0));
    }
    DegreeVector ones(nz.size(), 1);
    lp.add_ge(ones, mpq_class(1));
    if (!polyhedron_is_empty(lp)) fail(Errc::NotSharp, "the cone of the generators contains a line");
  }

  IntMat gen_cols = IntMat::from_columns(nz);
  if (gen_cols.rank() != static_cast<long long>(d))
    fail(Errc::RankDeficient, "generators span a proper sublattice of rank < d");

  auto q = std::shared_ptr<AffineSemigroup>(new AffineSemigroup());
  q->d_ = static_cast<long long>(d);
  q->gens_ = generators;

  // group lattice ZQ
  IntMat h = gen_cols.column_hermite();
  std::vector<DegreeVector> basis_cols;
  for (size_t j = 0; j < h.cols(); ++j) {
    DegreeVector c = h.column(j);
    if (!is_zero(c)) basis_cols.push_back(c);
  }
  q->group_basis_ = IntMat::from_columns(basis_cols);
  {
    auto diag = q->group_basis_.smith_diagonal();
    mpz_class idx = 1;
    for (auto& e : diag) idx *= e;
    if (!idx.fits_slong_p()) fail(Errc::Internal, "group index overflow");
    q->group_index_ = idx.get_si();
  }

  // facets by exact dual description
  q->tau_ = cone_facets_from_rays(nz);
  std::sort(q->tau_.begin(), q->tau_.end());
  for (const auto& t : q->tau_)
    for (const auto& g : generators)
      if (dot(t, g) < 0) fail(Errc::Internal, "facet functional negative on a generator");

  // face lattice: subsets of facets, canonicalized by their vanishing set
  size_t n = q->tau_.size();
  std::map<std::vector<int>, Face> by_key;
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::vector<int> sel;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) sel.push_back(static_cast<int>(i));
    std::vector<int> gen_idx;
    for (size_t j = 0; j < generators.size(); ++j) {
      bool on = true;
      for (int i : sel)
        if (dot(q->tau_[i], generators[j]) != 0) on = false;
      if (on) gen_idx.push_back(static_cast<int>(j));
    }
    std::vector<int> canon;
    for (size_t i = 0; i < n; ++i) {
      bool vanishes = true;
      for (int j : gen_idx)
        if (dot(q->tau_[i], generators[j]) != 0) vanishes = false;
      if (vanishes) canon.push_back(static_cast<int>(i));
    }
    if (by_key.count(canon)) continue;
    Face f;
    f.facet_indices = canon;
    f.generator_indices = gen_idx;
    for (int j : gen_idx) f.gens.push_back(generators[j]);
    std::vector<DegreeVector> nz_face;
    for (const auto& g : f.gens)
      if (!is_zero(g)) nz_face.push_back(g);
    if (nz_face.empty()) {
      f.dim = 0;
      f.lattice_basis = IntMat(d, 0);
      f.interior = DegreeVector(d, 0);
    } else {
      IntMat cols = IntMat::from_columns(nz_face);
      IntMat hh = cols.column_hermite();
      std::vector<DegreeVector> fb;
      for (size_t j = 0; j < hh.cols(); ++j) {
        DegreeVector c = hh.column(j);
        if (!is_zero(c)) fb.push_back(c);
      }
      f.dim = static_cast<long long>(fb.size());
      f.lattice_basis = IntMat::from_columns(fb);
      DegreeVector s(d, 0);
      for (const auto& g : nz_face) s = s + g;
      f.interior = s;
    }
    by_key[canon] = std::move(f);
  }
  for (auto& [key, f] : by_key) q->faces_.push_back(f);
  std::sort(q->faces_.begin(), q->faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.facet_indices < b.facet_indices;
  });
  for (size_t i = 0; i < q->faces_.size(); ++i) q->faces_[i].id = static_cast<int>(i);

  // primitive ray generators (w.r.t. ZQ)
  {
    auto rays = cone_rays_from_facets(q->tau_);
    std::vector<DegreeVector> prims;
    for (const auto& r : rays) {
      DegreeVector p = primitive(r);
      long long k = 1;
      while (!lattice_contains(q->group_basis_, k * p)) {
        ++k;
        if (k > q->group_index_ + 1) fail(Errc::Internal, "ray primitive search failed");
      }
      prims.push_back(k * p);
    }
    std::sort(prims.begin(), prims.end());
    q->ray_prims_ = prims;
  }

  // saturation, decided on a verification box
  {
    long long bound = 2 * q->margin() + 4;
    DegreeBox box;
    box.range.assign(n, {0, bound});
    bool sat = true;
    for (const auto& a : q->degrees_in_box(box)) {
      if (!q->in_group(a)) continue;
      if (!q->in_cone(a)) continue;
      if (!q->membership(a)) {
        sat = false;
        break;
      }
    }
    q->saturated_ = sat;
  }
  return q;
}

const Face& AffineSemigroup::face_by_facet_set(std::vector<int> facet_idx) const {
  std::sort(facet_idx.begin(), facet_idx.end());
  // canonicalize: the face cut out by these facets
  std::vector<int> gen_idx;
  for (size_t j = 0; j < gens_.size(); ++j) {
    bool on = true;
    for (int i : facet_idx)
      if (dot(tau_[i], gens_[j]) != 0) on = false;
    if (on) gen_idx.push_back(static_cast<int>(j));
  }
  std::vector<int> canon;
  for (size_t i = 0; i < tau_.size(); ++i) {
    bool vanishes = true;
    for (int j : gen_idx)
      if (dot(tau_[i], gens_[j]) != 0) vanishes = false;
    if (vanishes) canon.push_back(static_cast<int>(i));
  }
  for (const auto& f : faces_)
    if (f.facet_indices == canon) return f;
  fail(Errc::Internal, "face lookup failed");
}

DegreeVector AffineSemigroup::tau(const DegreeVector& a) const {
  DegreeVector t(tau_.size());
  for (size_t i = 0; i < tau_.size(); ++i) t[i] = dot(tau_[i], a);
  return t;
}

long long AffineSemigroup::sigma(const DegreeVector& a) const {
  long long s = 0;
  for (const auto& t : tau_) s += dot(t, a);
  return s;
}

bool AffineSemigroup::in_cone(const DegreeVector& a) const {
  for (const auto& t : tau_)
    if (dot(t, a) < 0) return false;
  return true;
}

bool AffineSemigroup::in_group(const DegreeVector& a) const {
  return lattice_contains(group_basis_, a);
}

bool AffineSemigroup::membership(const DegreeVector& a) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = member_cache_.find(a);
    if (it != member_cache_.end()) return it->second;
  }
  bool r = membership_impl(a);
  std::lock_guard<std::mutex> lk(mu_);
  member_cache_[a] = r;
  return r;
}

bool AffineSemigroup::membership_impl(const DegreeVector& a) const {
  if (is_zero(a)) return true;
  if (!in_cone(a)) return false;
  if (!in_group(a)) return false;
  for (const auto& g : gens_) {
    if (is_zero(g)) continue;
    DegreeVector b = a - g;
    if (!in_cone(b)) continue;
    if (membership(b)) return true;
  }
  return false;
}

std::vector<DegreeVector> AffineSemigroup::prime_generators(const Face& f) const {
  std::set<DegreeVector> out;
  std::set<int> on(f.generator_indices.begin(), f.generator_indices.end());
  for (size_t j = 0; j < gens_.size(); ++j)
    if (!on.count(static_cast<int>(j))) out.insert(gens_[j]);
  return {out.begin(), out.end()};
}

TauVector AffineSemigroup::tau_of(const Face& f, const DegreeVector& a) const {
  TauVector t(tau_.size(), ExtInt::pos_inf());
  for (int i : f.facet_indices) t[i] = ExtInt::finite(dot(tau_[i], a));
  return t;
}

bool AffineSemigroup::face_membership(const Face& f, const DegreeVector& a) const {
  if (is_zero(a)) return true;
  if (f.gens.empty()) return false;
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = face_member_cache_.find({f.id, a});
    if (it != face_member_cache_.end()) return it->second;
  }
  bool r = false;
  if (in_cone(a) && sigma(a) >= 0) {
    for (const auto& g : f.gens) {
      if (is_zero(g)) continue;
      DegreeVector b = a - g;
      if (!in_cone(b)) continue;
      if (face_membership(f, b)) {
        r = true;
        break;
      }
    }
  }
  std::lock_guard<std::mutex> lk(mu_);
  face_member_cache_[{f.id, a}] = r;
  return r;
}

bool AffineSemigroup::in_face_lattice(const Face& f, const DegreeVector& a) const {
  return lattice_contains(f.lattice_basis, a);
}

bool AffineSemigroup::in_Q_plus_ZF(const Face& f, const DegreeVector& delta) const {
  if (in_face_lattice(f, delta)) return true;
  // tau_i >= 0 on Q + ZF for facets containing the face
  for (int i : f.facet_indices)
    if (dot(tau_[i], delta) < 0) return false;
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = qzf_cache_.find({f.id, delta});
    if (it != qzf_cache_.end()) return it->second;
  }
  bool r = false;
  std::set<int> face_gens(f.generator_indices.begin(), f.generator_indices.end());
  for (size_t j = 0; j < gens_.size(); ++j) {
    if (face_gens.count(static_cast<int>(j))) continue;  // zero in the quotient
    if (is_zero(gens_[j])) continue;
    if (in_Q_plus_ZF(f, delta - gens_[j])) {
      r = true;
      break;
    }
  }
  std::lock_guard<std::mutex> lk(mu_);
  qzf_cache_[{f.id, delta}] = r;
  return r;
}

bool AffineSemigroup::in_shifted_support(const DegreeVector& alpha, const Face& f,
                                         const DegreeVector& beta) const {
  if (saturated_ && group_index_ == 1) {
    for (int i : f.facet_indices)
      if (dot(tau_[i], beta) > dot(tau_[i], alpha)) return false;
    return true;
  }
  if (saturated_) {
    if (!in_group(beta - alpha)) return false;
    for (int i : f.facet_indices)
      if (dot(tau_[i], beta) > dot(tau_[i], alpha)) return false;
    return true;
  }
  // beta in alpha + ZF - Q  <=>  alpha - beta in Q + ZF
  return in_Q_plus_ZF(f, alpha - beta);
}

DegreeVector AffineSemigroup::canonical_rep(const Face& f, const DegreeVector& beta0) const {
  long long smax = sigma(beta0);
  for (long long s = 0; s <= smax; ++s) {
    RationalPolyhedron slice = cone_polyhedron();
    DegreeVector sig(d_, 0);
    for (const auto& t : tau_)
      for (long long j = 0; j < d_; ++j) sig[j] += t[j];
    slice.add_ge(sig, mpq_class(static_cast<long>(s)));
    slice.add_le(sig, mpq_class(static_cast<long>(s)));
    std::vector<DegreeVector> pts = lattice_points(
        slice, RationalPolyhedron::whole_space(d_), [&](const DegreeVector& x) {
          return in_face_lattice(f, x - beta0) && membership(x);
        });
    if (pts.empty()) continue;
    const DegreeVector* best = nullptr;
    for (const auto& x : pts) {
      if (!best || degree_less(x, *best)) best = &x;
    }
    return *best;
  }
  return beta0;
}

bool AffineSemigroup::degree_less(const DegreeVector& a, const DegreeVector& b) const {
  DegreeVector ta = tau(a), tb = tau(b);
  if (ta != tb) return lex_less(ta, tb);
  return lex_less(a, b);
}

std::pair<std::shared_ptr<const AffineSemigroup>, std::vector<DegreeVector>>
AffineSemigroup::saturate() const {
  // Hilbert basis candidates: ZQ lattice points of the primitive-ray zonotope
  RationalPolyhedron zono = zonotope_polytope(ray_prims_);
  auto candidates = lattice_points(zono, RationalPolyhedron::whole_space(d_),
                                   [&](const DegreeVector& x) {
                                     return !is_zero(x) && in_group(x) && in_cone(x);
                                   });
  for (const auto& r : ray_prims_) candidates.push_back(r);
  std::sort(candidates.begin(), candidates.end(), [&](const auto& a, const auto& b) {
    long long sa = sigma(a), sb = sigma(b);
    if (sa != sb) return sa < sb;
    return lex_less(a, b);
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<DegreeVector> hilbert;
  for (const auto& c : candidates) {
    if (!combo_membership(*this, hilbert, c)) hilbert.push_back(c);
  }
  auto qsat = AffineSemigroup::build(hilbert);

  // Q-set generators of Q^sat over Q, from the zonotope of on-ray Q-generators
  std::vector<DegreeVector> onray;
  for (const auto& r : ray_prims_) {
    const DegreeVector* best = nullptr;
    for (const auto& g : gens_) {
      if (is_zero(g)) continue;
      // g on the ray of r?
      DegreeVector p = primitive(g);
      if (p == primitive(r)) {
        if (!best || sigma(g) < sigma(*best)) best = &g;
      }
    }
    if (!best) fail(Errc::Internal, "extreme ray carries no generator");
    onray.push_back(*best);
  }
  RationalPolyhedron zq = zonotope_polytope(onray);
  auto sat_pts = lattice_points(zq, RationalPolyhedron::whole_space(d_),
                                [&](const DegreeVector& x) {
                                  return in_group(x) && in_cone(x) && qsat->membership(x);
                                });
  std::sort(sat_pts.begin(), sat_pts.end(), [&](const auto& a, const auto& b) {
    long long sa = sigma(a), sb = sigma(b);
    if (sa != sb) return sa < sb;
    return lex_less(a, b);
  });
  std::vector<DegreeVector> qset_gens;
  for (const auto& c : sat_pts) {
    bool covered = false;
    for (const auto& h : qset_gens)
      if (membership(c - h)) {
        covered = true;
        break;
      }
    if (!covered) qset_gens.push_back(c);
  }
  return {qsat, qset_gens};
}

ZonotopeLattice AffineSemigroup::zonotope() const {
  ZonotopeLattice z;
  z.polyhedron = zonotope_polytope(ray_prims_);
  z.points = lattice_points(z.polyhedron, RationalPolyhedron::whole_space(d_),
                            [&](const DegreeVector& x) { return in_group(x); });
  std::sort(z.points.begin(), z.points.end(),
            [&](const auto& a, const auto& b) { return degree_less(a, b); });
  return z;
}

RationalPolyhedron AffineSemigroup::cone_polyhedron() const {
  RationalPolyhedron p;
  p.dim = d_;
  for (const auto& t : tau_) p.add_ge(t, mpq_class(0));
  return p;
}

RationalPolyhedron AffineSemigroup::tau_box_polyhedron(const DegreeBox& box) const {
  RationalPolyhedron p;
  p.dim = d_;
  for (size_t i = 0; i < tau_.size(); ++i) {
    p.add_ge(tau_[i], mpq_class(static_cast<long>(box.range[i].first)));
    p.add_le(tau_[i], mpq_class(static_cast<long>(box.range[i].second)));
  }
  return p;
}

DegreeBox AffineSemigroup::default_box(long long B) const {
  DegreeBox b;
  b.range.assign(tau_.size(), {-B, B});
  return b;
}

DegreeBox AffineSemigroup::box_containing(const std::vector<DegreeVector>& degrees,
                                          long long B) const {
  DegreeBox b = default_box(B);
  for (const auto& d : degrees) {
    DegreeVector t = tau(d);
    for (size_t i = 0; i < tau_.size(); ++i) {
      b.range[i].first = std::min(b.range[i].first, t[i] - B);
      b.range[i].second = std::max(b.range[i].second, t[i] + B);
    }
  }
  return b;
}

long long AffineSemigroup::margin() const {
  long long m = 1;
  for (const auto& t : tau_)
    for (const auto& g : gens_) m = std::max(m, dot(t, g));
  return m;
}

std::vector<DegreeVector> AffineSemigroup::degrees_in_box(const DegreeBox& box) const {
  auto pts = lattice_points(tau_box_polyhedron(box), RationalPolyhedron::whole_space(d_));
  std::sort(pts.begin(), pts.end(),
            [&](const auto& a, const auto& b) { return degree_less(a, b); });
  return pts;
}

RationalPolyhedron AffineSemigroup::strip(const std::vector<TauVector>& sorted_taus,
                                          const std::vector<long long>& ell) const {
  RationalPolyhedron p;
  p.dim = d_;
  for (size_t i = 0; i < tau_.size(); ++i) {
    const TauVector& row = sorted_taus[i];
    long long li = ell[i];
    if (li < 0 || li + 1 >= static_cast<long long>(row.size()))
      fail(Errc::IndexOutOfRange, "strip index out of range");
    ExtInt lo = row[li], hi = row[li + 1];
    if (lo.kind == ExtInt::PosInf) {
      // interpreted as empty
      p.add_ge(DegreeVector(d_, 0), mpq_class(1));
      return p;
    }
    if (lo.is_finite()) p.add_ge(tau_[i], mpq_class(static_cast<long>(lo.v + 1)));
    if (hi.is_finite()) p.add_le(tau_[i], mpq_class(static_cast<long>(hi.v)));
    if (hi.kind == ExtInt::NegInf) {
      p.add_ge(DegreeVector(d_, 0), mpq_class(1));
      return p;
    }
  }
  return p;
}

bool combo_membership(const AffineSemigroup& q, const std::vector<DegreeVector>& gens,
                      const DegreeVector& target) {
  if (is_zero(target)) return true;
  if (!q.in_cone(target)) return false;
  std::map<DegreeVector, bool> memo;
  std::function<bool(const DegreeVector&)> rec = [&](const DegreeVector& a) -> bool {
    if (is_zero(a)) return true;
    if (!q.in_cone(a)) return false;
    auto it = memo.find(a);
    if (it != memo.end()) return it->second;
    memo[a] = false;  // guard
    bool r = false;
    for (const auto& g : gens) {
      if (is_zero(g)) continue;
      if (rec(a - g)) {
        r = true;
        break;
      }
    }
    memo[a] = r;
    return r;
  };
  return rec(target);
}

}  // namespace grcohom
