#include "grcohom/module.hpp"

#include <algorithm>
#include <set>

namespace grcohom {

GradedModule::GradedModule(SemigroupPtr q, Field f, std::vector<DegreeVector> gen_degrees,
                           std::vector<TermRow> relations)
    : q_(std::move(q)), f_(f), gen_degrees_(std::move(gen_degrees)), relations_(std::move(relations)) {
  for (const auto& row : relations_) {
    if (row.empty()) fail(Errc::Internal, "empty relation row");
    DegreeVector deg;
    for (const auto& t : row) {
      if (t.gen < 0 || t.gen >= static_cast<int>(gen_degrees_.size()))
        fail(Errc::Internal, "relation references unknown generator");
      if (!q_->membership(t.mon)) fail(Errc::Internal, "relation monomial outside Q");
      DegreeVector d = gen_degrees_[t.gen] + t.mon;
      if (deg.empty())
        deg = d;
      else if (deg != d)
        fail(Errc::Internal, "inhomogeneous relation row");
    }
    relation_degrees_.push_back(deg);
  }
}

bool GradedModule::is_q_graded() const {
  for (const auto& d : gen_degrees_)
    if (!q_->membership(d)) return false;
  return true;
}

DegreeVector GradedModule::relation_degree(const TermRow& row) const {
  return gen_degrees_[row[0].gen] + row[0].mon;
}

const DegreeComponent& GradedModule::component(const DegreeVector& a) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
  }
  DegreeComponent c;
  for (size_t j = 0; j < gen_degrees_.size(); ++j)
    if (q_->membership(a - gen_degrees_[j])) c.live.push_back(static_cast<int>(j));
  std::map<int, size_t> pos;
  for (size_t k = 0; k < c.live.size(); ++k) pos[c.live[k]] = k;
  Matrix rel(0, c.live.size(), f_);
  for (size_t r = 0; r < relations_.size(); ++r) {
    if (!q_->membership(a - relation_degrees_[r])) continue;
    std::vector<Scalar> row(c.live.size(), Scalar::zero(f_));
    for (const auto& t : relations_[r]) {
      auto it = pos.find(t.gen);
      if (it == pos.end()) fail(Errc::Internal, "relation term on dead generator");
      row[it->second] += t.c;
    }
    rel.append_row(std::move(row));
  }
  c.relspace = make_subspace(std::move(rel));
  std::set<size_t> piv(c.relspace.pivots.begin(), c.relspace.pivots.end());
  for (size_t k = 0; k < c.live.size(); ++k)
    if (!piv.count(k)) c.free_cols.push_back(static_cast<int>(k));
  std::lock_guard<std::mutex> lk(mu_);
  auto [it, inserted] = cache_.emplace(a, std::move(c));
  return it->second;
}

std::vector<Scalar> GradedModule::to_coords(const DegreeVector& a,
                                            const std::vector<Scalar>& frep) const {
  const DegreeComponent& c = component(a);
  std::vector<Scalar> red = reduce_mod(c.relspace, frep);
  std::vector<Scalar> out(c.free_cols.size(), Scalar::zero(f_));
  for (size_t k = 0; k < c.free_cols.size(); ++k) out[k] = red[c.free_cols[k]];
  return out;
}

std::vector<Scalar> GradedModule::from_coords(const DegreeVector& a,
                                              const std::vector<Scalar>& coords) const {
  const DegreeComponent& c = component(a);
  std::vector<Scalar> frep(c.live.size(), Scalar::zero(f_));
  for (size_t k = 0; k < c.free_cols.size(); ++k) frep[c.free_cols[k]] = coords[k];
  return frep;
}

const Matrix& GradedModule::mult_matrix(const DegreeVector& a, const DegreeVector& m) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = mult_cache_.find({a, m});
    if (it != mult_cache_.end()) return it->second;
  }
  const DegreeComponent& src = component(a);
  DegreeVector b = a + m;
  const DegreeComponent& dst = component(b);
  std::map<int, size_t> dst_pos;
  for (size_t k = 0; k < dst.live.size(); ++k) dst_pos[dst.live[k]] = k;
  Matrix mm(dst.dim(), src.dim(), f_);
  for (size_t col = 0; col < src.free_cols.size(); ++col) {
    std::vector<Scalar> frep(dst.live.size(), Scalar::zero(f_));
    int gen = src.live[src.free_cols[col]];
    auto it = dst_pos.find(gen);
    if (it == dst_pos.end()) fail(Errc::Internal, "multiplication drops a live generator");
    frep[it->second] = Scalar::one(f_);
    std::vector<Scalar> coords = to_coords(b, frep);
    for (size_t row = 0; row < coords.size(); ++row) mm.at(row, col) = coords[row];
  }
  std::lock_guard<std::mutex> lk(mu_);
  auto [it, inserted] = mult_cache_.emplace(std::make_pair(a, m), std::move(mm));
  return it->second;
}

TermRow element_to_terms(const GradedModule& m, const ModuleElement& e) {
  const DegreeComponent& c = m.component(e.deg);
  std::vector<Scalar> frep = m.from_coords(e.deg, e.coords);
  TermRow row;
  for (size_t k = 0; k < c.live.size(); ++k) {
    if (frep[k].is_zero()) continue;
    int gen = c.live[k];
    row.push_back(Term{frep[k], gen, e.deg - m.gen_degrees()[gen]});
  }
  return row;
}

Matrix GradedMap::at(const DegreeVector& a) const {
  const DegreeComponent& sc = source->component(a);
  const DegreeComponent& tc = target->component(a);
  Field f = source->field();
  std::map<int, size_t> tpos;
  for (size_t k = 0; k < tc.live.size(); ++k) tpos[tc.live[k]] = k;
  Matrix out(tc.dim(), sc.dim(), f);
  for (size_t col = 0; col < sc.free_cols.size(); ++col) {
    int sgen = sc.live[sc.free_cols[col]];
    DegreeVector shift = a - source->gen_degrees()[sgen];
    std::vector<Scalar> frep(tc.live.size(), Scalar::zero(f));
    for (const auto& t : rows[sgen]) {
      auto it = tpos.find(t.gen);
      if (it == tpos.end()) fail(Errc::Internal, "map image on dead generator");
      frep[it->second] += t.c;
      // the shifted monomial is t.mon + shift; position depends only on t.gen
    }
    std::vector<Scalar> coords = target->to_coords(a, frep);
    for (size_t row = 0; row < coords.size(); ++row) out.at(row, col) = coords[row];
  }
  return out;
}

GradedMap zero_map(ModulePtr source, ModulePtr target) {
  GradedMap f;
  f.source = std::move(source);
  f.target = std::move(target);
  f.rows.assign(f.source->gen_degrees().size(), TermRow{});
  return f;
}

Subspace full_component(const GradedModule& m, const DegreeVector& a) {
  return make_subspace(Matrix::identity(m.dim_at(a), m.field()));
}

namespace {

// generated-so-far DP over the sorted degree list
struct GeneratedTracker {
  const GradedModule& m;
  const std::vector<DegreeVector>& degrees;  // ascending global order
  const SubspaceFn* seed;                    // optional W
  std::map<DegreeVector, Subspace> t;
  std::map<DegreeVector, std::vector<std::vector<Scalar>>> chosen;  // per-degree generator coords

  GeneratedTracker(const GradedModule& mm, const std::vector<DegreeVector>& degs,
                   const SubspaceFn* w)
      : m(mm), degrees(degs), seed(w) {}

  void add_generator(const DegreeVector& a, const std::vector<Scalar>& coords) {
    chosen[a].push_back(coords);
  }

  void recompute() {
    t.clear();
    std::set<DegreeVector> gen_set;
    for (const auto& g : m.semigroup()->generators())
      if (!is_zero(g)) gen_set.insert(g);
    for (const auto& a : degrees) {
      Matrix rows(0, m.dim_at(a), m.field());
      if (seed) {
        const Subspace w = (*seed)(a);
        for (size_t i = 0; i < w.basis.rows(); ++i) rows.append_row(w.basis.row(i));
      }
      for (const auto& g : gen_set) {
        DegreeVector b = a - g;
        auto it = t.find(b);
        if (it == t.end()) continue;
        if (it->second.dim() == 0) continue;
        const Matrix& mult = m.mult_matrix(b, g);
        for (size_t i = 0; i < it->second.basis.rows(); ++i)
          rows.append_row(mult.apply(it->second.basis.row(i)));
      }
      auto ch = chosen.find(a);
      if (ch != chosen.end())
        for (const auto& v : ch->second) rows.append_row(v);
      t[a] = make_subspace(std::move(rows));
    }
  }

  const Subspace& at(const DegreeVector& a) const { return t.at(a); }
};

void margin_violation_check(const AffineSemigroup& q, const DegreeBox& box,
                            const std::vector<DegreeVector>& found_degrees, const char* what) {
  long long m = q.margin();
  for (const auto& d : found_degrees) {
    DegreeVector t = q.tau(d);
    for (size_t i = 0; i < box.range.size(); ++i) {
      if (t[i] > box.range[i].second - m)
        fail(Errc::BoxTooSmall, std::string(what) + " found in the margin band at tau " +
                                    vec_str(t) + "; enlarge the box");
    }
  }
}

}  // namespace

Presentation present_subquotient(const ModulePtr& ambient, const DegreeBox& box,
                                 const SubspaceFn& U, const SubspaceFn& W,
                                 bool margin_check) {
  const GradedModule& M = *ambient;
  const AffineSemigroup& Q = *M.semigroup();
  Field f = M.field();
  std::vector<DegreeVector> degrees = Q.degrees_in_box(box);

  // pass 1: minimal generators
  GeneratedTracker tracker(M, degrees, &W);
  std::vector<ModuleElement> gens;
  std::set<DegreeVector> gen_set;
  for (const auto& g : Q.generators())
    if (!is_zero(g)) gen_set.insert(g);
  // incremental DP: degrees ascending, so T at lower degrees is final
  for (const auto& a : degrees) {
    Matrix rows(0, M.dim_at(a), f);
    {
      Subspace w = W(a);
      for (size_t i = 0; i < w.basis.rows(); ++i) rows.append_row(w.basis.row(i));
    }
    for (const auto& g : gen_set) {
      DegreeVector b = a - g;
      auto it = tracker.t.find(b);
      if (it == tracker.t.end() || it->second.dim() == 0) continue;
      const Matrix& mult = M.mult_matrix(b, g);
      for (size_t i = 0; i < it->second.basis.rows(); ++i)
        rows.append_row(mult.apply(it->second.basis.row(i)));
    }
    Subspace t = make_subspace(std::move(rows));
    Subspace u = U(a);
    for (size_t i = 0; i < u.basis.rows(); ++i) {
      std::vector<Scalar> v = reduce_mod(t, u.basis.row(i));
      bool nz = false;
      for (auto& x : v)
        if (!x.is_zero()) nz = true;
      if (!nz) continue;
      gens.push_back(ModuleElement{a, v});
      Matrix ext = t.basis;
      ext.append_row(v);
      t = make_subspace(std::move(ext));
    }
    tracker.t[a] = std::move(t);
  }
  if (margin_check) {
    std::vector<DegreeVector> degs;
    for (const auto& g : gens) degs.push_back(g.deg);
    margin_violation_check(Q, box, degs, "minimal generator");
  }

  // pass 2: minimal relations among the chosen generators
  // kernel functor K(a) subset of k^{live'} with live'(a) = {t : a - deg_t in Q}
  size_t s = gens.size();
  auto live_new = [&](const DegreeVector& a) {
    std::vector<int> live;
    for (size_t t = 0; t < s; ++t)
      if (Q.membership(a - gens[t].deg)) live.push_back(static_cast<int>(t));
    return live;
  };
  auto kernel_at = [&](const DegreeVector& a, const std::vector<int>& live) {
    // columns: image of x^{a - deg_t} gen_t in (U/W)(a) = M(a) coords mod W
    Subspace w = W(a);
    Matrix cols(M.dim_at(a), live.size(), f);
    for (size_t k = 0; k < live.size(); ++k) {
      const ModuleElement& ge = gens[live[k]];
      const Matrix& mult = M.mult_matrix(ge.deg, a - ge.deg);
      std::vector<Scalar> img = reduce_mod(w, mult.apply(ge.coords));
      for (size_t r = 0; r < img.size(); ++r) cols.at(r, k) = img[r];
    }
    return kernel(cols);  // subspace of k^{live}
  };

  // DP for minimal generators of the relation (syzygy) submodule
  std::map<DegreeVector, Subspace> tprime;
  std::vector<TermRow> relations;
  std::vector<DegreeVector> relation_degs;
  for (const auto& a : degrees) {
    std::vector<int> live = live_new(a);
    std::map<int, size_t> pos;
    for (size_t k = 0; k < live.size(); ++k) pos[live[k]] = k;
    Matrix rows(0, live.size(), f);
    for (const auto& g : gen_set) {
      DegreeVector b = a - g;
      auto it = tprime.find(b);
      if (it == tprime.end() || it->second.dim() == 0) continue;
      std::vector<int> live_b = live_new(b);
      for (size_t i = 0; i < it->second.basis.rows(); ++i) {
        std::vector<Scalar> v(live.size(), Scalar::zero(f));
        for (size_t k = 0; k < live_b.size(); ++k) {
          auto p = pos.find(live_b[k]);
          if (p == pos.end()) fail(Errc::Internal, "syzygy inclusion failure");
          v[p->second] = it->second.basis.at(i, k);
        }
        rows.append_row(std::move(v));
      }
    }
    Subspace t = make_subspace(std::move(rows));
    Subspace k_a = kernel_at(a, live);
    for (size_t i = 0; i < k_a.basis.rows(); ++i) {
      std::vector<Scalar> v = reduce_mod(t, k_a.basis.row(i));
      bool nz = false;
      for (auto& x : v)
        if (!x.is_zero()) nz = true;
      if (!nz) continue;
      TermRow row;
      for (size_t k = 0; k < live.size(); ++k) {
        if (v[k].is_zero()) continue;
        row.push_back(Term{v[k], live[k], a - gens[live[k]].deg});
      }
      relations.push_back(row);
      relation_degs.push_back(a);
      Matrix ext = t.basis;
      ext.append_row(v);
      t = make_subspace(std::move(ext));
    }
    tprime[a] = std::move(t);
  }
  if (margin_check) margin_violation_check(Q, box, relation_degs, "minimal relation");

  Presentation out;
  std::vector<DegreeVector> gd;
  for (const auto& g : gens) gd.push_back(g.deg);
  out.module = std::make_shared<GradedModule>(M.semigroup(), f, gd, relations);
  out.generators = gens;

  // consistency: dims must match on the shrunken box
  long long m = Q.margin();
  DegreeBox core = box;
  bool core_ok = true;
  for (auto& r : core.range) {
    r.second -= m;
    if (r.second < r.first) core_ok = false;
  }
  if (core_ok && margin_check) {
    for (const auto& a : Q.degrees_in_box(core)) {
      long long expect = static_cast<long long>(U(a).dim()) - static_cast<long long>(W(a).dim());
      if (out.module->dim_at(a) != expect)
        fail(Errc::BoxTooSmall, "presented module dimension mismatch at " + vec_str(a));
    }
  }
  return out;
}

Presentation kernel_module(const GradedMap& f, const DegreeBox& box) {
  ModulePtr src = f.source;
  SubspaceFn U = [&f](const DegreeVector& a) { return kernel(f.at(a)); };
  SubspaceFn W = [src](const DegreeVector& a) {
    return zero_subspace(src->dim_at(a), src->field());
  };
  return present_subquotient(src, box, U, W);
}

std::pair<Presentation, Presentation> image_cokernel(const GradedMap& f, const DegreeBox& box) {
  ModulePtr tgt = f.target;
  SubspaceFn img = [&f](const DegreeVector& a) { return column_space(f.at(a)); };
  SubspaceFn zero = [tgt](const DegreeVector& a) {
    return zero_subspace(tgt->dim_at(a), tgt->field());
  };
  SubspaceFn full = [tgt](const DegreeVector& a) { return full_component(*tgt, a); };
  Presentation image = present_subquotient(tgt, box, img, zero);
  Presentation coker = present_subquotient(tgt, box, full, img);
  return {image, coker};
}

std::vector<DegreeVector> minimal_generators(const ModulePtr& m, const DegreeBox& box) {
  SubspaceFn full = [m](const DegreeVector& a) { return full_component(*m, a); };
  SubspaceFn zero = [m](const DegreeVector& a) {
    return zero_subspace(m->dim_at(a), m->field());
  };
  Presentation p = present_subquotient(m, box, full, zero);
  std::vector<DegreeVector> out;
  for (const auto& g : p.generators) out.push_back(g.deg);
  return out;
}

Subspace colon_subspace(const GradedModule& m, const std::vector<DegreeVector>& ideal_gens,
                        const DegreeVector& a, long long power) {
  Field f = m.field();
  long long n = m.dim_at(a);
  if (ideal_gens.empty() || n == 0) return make_subspace(Matrix::identity(n, f));
  // products of `power` ideal generators (with repetition), deduped
  std::set<DegreeVector> prods;
  std::vector<DegreeVector> cur = {DegreeVector(a.size(), 0)};
  for (long long k = 0; k < power; ++k) {
    std::set<DegreeVector> next;
    for (const auto& c : cur)
      for (const auto& g : ideal_gens) next.insert(c + g);
    cur.assign(next.begin(), next.end());
  }
  for (const auto& p : cur) prods.insert(p);
  Subspace result = make_subspace(Matrix::identity(n, f));
  for (const auto& p : prods) {
    const Matrix& mult = m.mult_matrix(a, p);
    // intersect result with ker(mult): kernel of mult restricted to result's span
    Matrix restricted(mult.rows(), result.dim(), f);
    for (size_t c = 0; c < result.dim(); ++c) {
      auto img = mult.apply(result.basis.row(c));
      for (size_t r = 0; r < img.size(); ++r) restricted.at(r, c) = img[r];
    }
    Subspace coeff_ker = kernel(restricted);
    Matrix rows(0, n, f);
    for (size_t i = 0; i < coeff_ker.basis.rows(); ++i) {
      std::vector<Scalar> v(n, Scalar::zero(f));
      for (size_t c = 0; c < result.dim(); ++c) {
        if (coeff_ker.basis.at(i, c).is_zero()) continue;
        for (size_t j = 0; j < n; ++j)
          v[j] += coeff_ker.basis.at(i, c) * result.basis.at(c, j);
      }
      rows.append_row(std::move(v));
    }
    result = make_subspace(std::move(rows));
  }
  return result;
}

Presentation colon_submodule(const ModulePtr& m, const Face& f, const DegreeBox& box) {
  auto gens = m->semigroup()->prime_generators(f);
  SubspaceFn U = [m, gens](const DegreeVector& a) { return colon_subspace(*m, gens, a, 1); };
  SubspaceFn W = [m](const DegreeVector& a) {
    return zero_subspace(m->dim_at(a), m->field());
  };
  return present_subquotient(m, box, U, W);
}

Presentation gamma_submodule(const ModulePtr& m, const std::vector<DegreeVector>& ideal_gens,
                             const DegreeBox& box, long long* out_power) {
  const AffineSemigroup& Q = *m->semigroup();
  std::vector<DegreeVector> degrees = Q.degrees_in_box(box);
  long long power = 1;
  for (;; ++power) {
    bool stable = true;
    for (const auto& a : degrees) {
      if (colon_subspace(*m, ideal_gens, a, power).dim() !=
          colon_subspace(*m, ideal_gens, a, power + 1).dim()) {
        stable = false;
        break;
      }
    }
    if (stable) break;
    if (power > 64) fail(Errc::BoxTooSmall, "gamma chain did not stabilize");
  }
  if (out_power) *out_power = power;
  long long p = power;
  SubspaceFn U = [m, ideal_gens, p](const DegreeVector& a) {
    return colon_subspace(*m, ideal_gens, a, p);
  };
  SubspaceFn W = [m](const DegreeVector& a) {
    return zero_subspace(m->dim_at(a), m->field());
  };
  return present_subquotient(m, box, U, W);
}

Presentation gamma_F(const ModulePtr& m, const Face& f, const DegreeBox& box) {
  return gamma_submodule(m, m->semigroup()->prime_generators(f), box, nullptr);
}

std::shared_ptr<GradedModule> quotient_by_elements(const ModulePtr& m,
                                                   const std::vector<ModuleElement>& elements) {
  std::vector<TermRow> rels = m->relations();
  for (const auto& e : elements) {
    TermRow row = element_to_terms(*m, e);
    if (!row.empty()) rels.push_back(row);
  }
  return std::make_shared<GradedModule>(m->semigroup(), m->field(), m->gen_degrees(), rels);
}

std::shared_ptr<GradedModule> shifted(const ModulePtr& m, const DegreeVector& a) {
  std::vector<DegreeVector> gd;
  for (const auto& d : m->gen_degrees()) gd.push_back(d + a);
  return std::make_shared<GradedModule>(m->semigroup(), m->field(), gd, m->relations());
}

// --- localization bases -------------------------------------------------------

namespace {

// is the class of v (at degree a) killed by some monomial of k[F], modulo the
// generated subspace tracked by `tracker`? Stabilized multiplication by the
// face interior up to the box horizon.
bool face_torsion(const GradedModule& m, const Face& f, const DegreeBox& box,
                  const std::map<DegreeVector, Subspace>& generated, const DegreeVector& a,
                  const std::vector<Scalar>& v) {
  if (f.dim == 0) return false;  // k[F] = k
  const AffineSemigroup& Q = *m.semigroup();
  DegreeVector cur = a;
  std::vector<Scalar> w = v;
  for (;;) {
    DegreeVector next = cur + f.interior;
    if (!box.contains_tau(Q.tau(next))) return false;  // survived to the horizon
    w = m.mult_matrix(cur, f.interior).apply(w);
    cur = next;
    auto it = generated.find(cur);
    std::vector<Scalar> red = w;
    if (it != generated.end()) red = reduce_mod(it->second, w);
    bool nz = false;
    for (auto& x : red)
      if (!x.is_zero()) nz = true;
    if (!nz) return true;
  }
}

}  // namespace

std::vector<ModuleElement> localization_basis(const ModulePtr& m, const Face& f,
                                              const DegreeBox& box) {
  const GradedModule& M = *m;
  const AffineSemigroup& Q = *M.semigroup();
  auto prime = Q.prime_generators(f);
  std::vector<DegreeVector> degrees = Q.degrees_in_box(box);
  std::vector<ModuleElement> basis;

  // candidates are scanned only where the torsion test keeps a real horizon
  // before the multiplication trail leaves the box
  DegreeBox core = box;
  for (auto& r : core.range) {
    long long reserve = std::max(Q.margin(), (r.second - r.first) / 4);
    r.second -= reserve;
  }

  GeneratedTracker tracker(M, degrees, nullptr);
  tracker.recompute();
  for (const auto& a : degrees) {
    if (!core.contains_tau(Q.tau(a))) continue;
    bool redo = true;
    while (redo) {
      redo = false;
      Subspace colon = colon_subspace(M, prime, a, 1);
      const Subspace& t = tracker.at(a);
      for (size_t i = 0; i < colon.basis.rows(); ++i) {
        std::vector<Scalar> v = reduce_mod(t, colon.basis.row(i));
        bool nz = false;
        for (auto& x : v)
          if (!x.is_zero()) nz = true;
        if (!nz) continue;
        if (face_torsion(M, f, box, tracker.t, a, v)) continue;
        basis.push_back(ModuleElement{a, v});
        tracker.add_generator(a, v);
        tracker.recompute();
        redo = true;
        break;
      }
    }
  }
  return basis;
}

std::vector<Scalar> coefficient_on_basis(const ModulePtr& m, const Face& f,
                                         const ModuleElement& z,
                                         const std::vector<ModuleElement>& basis) {
  const GradedModule& M = *m;
  const AffineSemigroup& Q = *M.semigroup();
  Field fld = M.field();
  for (const auto& p : Q.prime_generators(f)) {
    auto img = M.mult_matrix(z.deg, p).apply(z.coords);
    for (auto& x : img)
      if (!x.is_zero()) fail(Errc::NotInColon, "element not annihilated by P_F");
  }
  std::vector<Scalar> out(basis.size(), Scalar::zero(fld));
  std::vector<size_t> bz;  // B(z)
  for (size_t i = 0; i < basis.size(); ++i)
    if (Q.in_face_lattice(f, z.deg - basis[i].deg)) bz.push_back(i);
  if (bz.empty()) return out;
  // find a = k * interior with a + deg z - deg y in the face semigroup for all y
  DegreeVector a(z.deg.size(), 0);
  for (long long k = 0;; ++k) {
    bool ok = true;
    for (size_t i : bz)
      if (!Q.face_membership(f, a + z.deg - basis[i].deg)) ok = false;
    if (ok) break;
    if (k > 512) fail(Errc::Internal, "face shift search did not terminate");
    a = a + f.interior;
  }
  DegreeVector top = a + z.deg;
  auto xz = M.mult_matrix(z.deg, a).apply(z.coords);
  Matrix rows(0, M.dim_at(top), fld);
  for (size_t i : bz) {
    DegreeVector ay = top - basis[i].deg;
    rows.append_row(M.mult_matrix(basis[i].deg, ay).apply(basis[i].coords));
  }
  auto sol = express_in_rows(rows, xz);
  if (!sol) fail(Errc::Internal, "basis expression failed (a:B' syzygy)");
  for (size_t k = 0; k < bz.size(); ++k) out[bz[k]] = (*sol)[k];
  return out;
}

}  // namespace grcohom
