#include "grcohom/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace grcohom {

namespace {

// internal >= rows over rational coefficients
struct Row {
  std::vector<mpq_class> f;
  mpq_class b;
};

std::vector<Row> to_rows(const RationalPolyhedron& p) {
  std::vector<Row> rows;
  rows.reserve(p.constraints.size());
  for (const auto& c : p.constraints) {
    Row r;
    r.f.resize(p.dim);
    for (long long j = 0; j < p.dim; ++j) {
      mpq_class v(static_cast<long>(c.functional[j]));
      r.f[j] = c.sense == Constraint::Ge ? v : -v;
    }
    r.b = c.sense == Constraint::Ge ? c.bound : -c.bound;
    rows.push_back(std::move(r));
  }
  return rows;
}

void normalize_row(Row& r) {
  mpz_class g = 0;
  mpz_class lcm_den = 1;
  for (auto& q : r.f) lcm_den = lcm(lcm_den, q.get_den());
  lcm_den = lcm(lcm_den, r.b.get_den());
  std::vector<mpz_class> ints;
  for (auto& q : r.f) ints.push_back(q.get_num() * (lcm_den / q.get_den()));
  mpz_class bi = r.b.get_num() * (lcm_den / r.b.get_den());
  for (auto& z : ints) g = gcd(g, z);
  if (g == 0) g = 1;
  for (size_t j = 0; j < r.f.size(); ++j) r.f[j] = mpq_class(ints[j] / g);
  r.b = mpq_class(bi) / mpq_class(g);
}

bool row_trivially_true(const Row& r) {
  for (auto& q : r.f)
    if (q != 0) return false;
  return r.b <= 0;
}

bool row_trivially_false(const Row& r) {
  for (auto& q : r.f)
    if (q != 0) return false;
  return r.b > 0;
}

std::string row_key(const Row& r) {
  std::string k;
  for (auto& q : r.f) k += q.get_str() + ";";
  k += "|" + r.b.get_str();
  return k;
}

void dedupe(std::vector<Row>& rows) {
  std::set<std::string> seen;
  std::vector<Row> out;
  for (auto& r : rows) {
    if (row_trivially_true(r)) continue;
    auto k = row_key(r);
    if (seen.insert(k).second) out.push_back(std::move(r));
  }
  rows = std::move(out);
}

// Eliminate variable j by Fourier-Motzkin; rows keep full width with f[j]=0.
bool eliminate(std::vector<Row>& rows, size_t j) {
  std::vector<Row> pos, neg, zero;
  for (auto& r : rows) {
    if (r.f[j] > 0)
      pos.push_back(std::move(r));
    else if (r.f[j] < 0)
      neg.push_back(std::move(r));
    else
      zero.push_back(std::move(r));
  }
  for (const auto& p : pos)
    for (const auto& n : neg) {
      Row r;
      r.f.resize(p.f.size());
      // p.f[j] * n + (-n.f[j]) * p has zero j-entry; both multipliers positive
      mpq_class cp = -n.f[j];
      mpq_class cn = p.f[j];
      for (size_t t = 0; t < p.f.size(); ++t) r.f[t] = cp * p.f[t] + cn * n.f[t];
      r.b = cp * p.b + cn * n.b;
      normalize_row(r);
      if (row_trivially_false(r)) return false;
      if (!row_trivially_true(r)) zero.push_back(std::move(r));
    }
  dedupe(zero);
  rows = std::move(zero);
  return true;
}

bool feasible_rows(std::vector<Row> rows, size_t dim) {
  for (auto& r : rows) {
    normalize_row(r);
    if (row_trivially_false(r)) return false;
  }
  dedupe(rows);
  for (size_t j = 0; j < dim; ++j) {
    if (!eliminate(rows, j)) return false;
    for (auto& r : rows)
      if (row_trivially_false(r)) return false;
  }
  for (auto& r : rows)
    if (row_trivially_false(r)) return false;
  return true;
}

}  // namespace

bool RationalPolyhedron::contains(const DegreeVector& p) const {
  std::vector<mpq_class> q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[i] = mpq_class(static_cast<long>(p[i]));
  return contains_rational(q);
}

bool RationalPolyhedron::contains_rational(const std::vector<mpq_class>& p) const {
  for (const auto& c : constraints) {
    mpq_class s = 0;
    for (long long j = 0; j < dim; ++j) s += mpq_class(static_cast<long>(c.functional[j])) * p[j];
    if (c.sense == Constraint::Ge ? s < c.bound : s > c.bound) return false;
  }
  return true;
}

bool polyhedron_is_empty(const RationalPolyhedron& p) {
  return !feasible_rows(to_rows(p), p.dim);
}

RationalPolyhedron polyhedron_intersect(const RationalPolyhedron& a, const RationalPolyhedron& b) {
  if (a.dim != b.dim) fail(Errc::DimensionMismatch, "intersect dims differ");
  RationalPolyhedron r;
  r.dim = a.dim;
  r.constraints = a.constraints;
  r.constraints.insert(r.constraints.end(), b.constraints.begin(), b.constraints.end());
  // prune duplicates (cheap, exact); keep redundancy pruning light
  std::set<std::string> seen;
  std::vector<Constraint> kept;
  for (auto& c : r.constraints) {
    Row row;
    row.f.resize(r.dim);
    for (long long j = 0; j < r.dim; ++j)
      row.f[j] = mpq_class(static_cast<long>(c.functional[j])) * (c.sense == Constraint::Ge ? 1 : -1);
    row.b = c.sense == Constraint::Ge ? c.bound : -c.bound;
    normalize_row(row);
    if (row_trivially_true(row)) continue;
    if (seen.insert(row_key(row)).second) kept.push_back(c);
  }
  // drop constraints implied by the others
  if (!polyhedron_is_empty(r)) {
    std::vector<Constraint> minimal;
    for (size_t i = 0; i < kept.size(); ++i) {
      RationalPolyhedron rest;
      rest.dim = r.dim;
      for (size_t j = 0; j < kept.size(); ++j)
        if (j != i) rest.constraints.push_back(kept[j]);
      for (const auto& c : minimal) rest.constraints.push_back(c);
      Extremes e = extremum(rest, kept[i].functional);
      bool implied;
      if (kept[i].sense == Constraint::Ge)
        implied = e.min.has_value() && *e.min >= kept[i].bound;
      else
        implied = e.max.has_value() && *e.max <= kept[i].bound;
      if (!implied) minimal.push_back(kept[i]);
      else kept.erase(kept.begin() + i--), (void)0;
    }
    kept = std::move(minimal);
  }
  r.constraints = std::move(kept);
  return r;
}

Extremes extremum(const RationalPolyhedron& p, const DegreeVector& functional) {
  // add t with t = f.x, eliminate x, read bounds on t
  auto rows = to_rows(p);
  size_t d = p.dim;
  for (auto& r : rows) r.f.resize(d + 1, mpq_class(0));
  Row eq1, eq2;
  eq1.f.resize(d + 1);
  for (size_t j = 0; j < d; ++j) eq1.f[j] = mpq_class(static_cast<long>(-functional[j]));
  eq1.f[d] = 1;
  eq1.b = 0;  // t - f.x >= 0
  eq2.f.resize(d + 1);
  for (size_t j = 0; j < d; ++j) eq2.f[j] = mpq_class(static_cast<long>(functional[j]));
  eq2.f[d] = -1;
  eq2.b = 0;  // f.x - t >= 0
  rows.push_back(eq1);
  rows.push_back(eq2);
  for (size_t j = 0; j < d; ++j) {
    if (!eliminate(rows, j)) fail(Errc::Internal, "extremum of empty polyhedron");
  }
  Extremes e;
  for (auto& r : rows) {
    if (r.f[d] == 0) {
      if (row_trivially_false(r)) fail(Errc::Internal, "extremum of empty polyhedron");
      continue;
    }
    mpq_class bound = r.b / r.f[d];
    if (r.f[d] > 0) {
      if (!e.min || bound > *e.min) e.min = bound;  // t >= bound
    } else {
      if (!e.max || bound < *e.max) e.max = bound;  // t <= bound
    }
  }
  return e;
}

// --- cone duality ------------------------------------------------------------

namespace {

// all subsets of size k of {0..n-1}
void for_subsets(size_t n, size_t k, const std::function<void(const std::vector<size_t>&)>& fn) {
  std::vector<size_t> idx(k);
  std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
    if (depth == k) {
      fn(idx);
      return;
    }
    for (size_t i = start; i + (k - depth) <= n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  if (k == 0)
    fn({});
  else
    rec(0, 0);
}

// candidate hyperplane normals spanned by (rank dim-1) subsets of vecs,
// sign-filtered against all vecs
std::vector<DegreeVector> supporting_normals(const std::vector<DegreeVector>& vecs, size_t dim) {
  std::set<DegreeVector> out;
  size_t k = dim == 0 ? 0 : dim - 1;
  for_subsets(vecs.size(), std::min(k, vecs.size()), [&](const std::vector<size_t>& idx) {
    std::vector<DegreeVector> sub;
    for (size_t i : idx) sub.push_back(vecs[i]);
    IntMat m(sub.size(), dim);
    for (size_t i = 0; i < sub.size(); ++i)
      for (size_t j = 0; j < dim; ++j) m.at(i, j) = static_cast<long>(sub[i][j]);
    auto null_basis = m.nullspace_basis();
    if (null_basis.size() != 1) return;
    DegreeVector n = primitive(null_basis[0]);
    bool all_ge = true, all_le = true;
    for (const auto& v : vecs) {
      long long s = dot(n, v);
      if (s < 0) all_ge = false;
      if (s > 0) all_le = false;
    }
    if (all_ge)
      out.insert(n);
    else if (all_le)
      out.insert(primitive(-n));
  });
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<DegreeVector> cone_facets_from_rays(const std::vector<DegreeVector>& rays) {
  if (rays.empty()) return {};
  size_t dim = rays[0].size();
  IntMat m = IntMat::from_columns(rays);
  if (m.rank() != static_cast<long long>(dim))
    fail(Errc::Internal, "cone_facets_from_rays needs a full-dimensional cone");
  return supporting_normals(rays, dim);
}

std::vector<DegreeVector> cone_rays_from_facets(const std::vector<DegreeVector>& facets) {
  if (facets.empty()) return {};
  size_t dim = facets[0].size();
  std::set<DegreeVector> out;
  for_subsets(facets.size(), dim >= 1 ? dim - 1 : 0, [&](const std::vector<size_t>& idx) {
    IntMat m(idx.size(), dim);
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < dim; ++j) m.at(i, j) = static_cast<long>(facets[idx[i]][j]);
    auto null_basis = m.nullspace_basis();
    if (null_basis.size() != 1) return;
    DegreeVector v = primitive(null_basis[0]);
    bool ok_pos = true, ok_neg = true;
    for (const auto& f : facets) {
      long long s = dot(f, v);
      if (s < 0) ok_pos = false;
      if (s > 0) ok_neg = false;
    }
    if (ok_pos)
      out.insert(v);
    else if (ok_neg)
      out.insert(primitive(-v));
  });
  return {out.begin(), out.end()};
}

// --- V-representation --------------------------------------------------------

namespace {

// H-rep of cone(gens) in R^dim: inward facet normals plus equality normals.
struct ConeHRep {
  std::vector<DegreeVector> inequalities;
  std::vector<DegreeVector> equalities;
};

ConeHRep cone_hrep_from_generators(std::vector<DegreeVector> gens, size_t dim) {
  ConeHRep out;
  if (gens.empty()) {
    // cone {0}: x = 0
    for (size_t j = 0; j < dim; ++j) {
      DegreeVector e(dim, 0);
      e[j] = 1;
      out.equalities.push_back(e);
    }
    return out;
  }
  // equalities: functionals vanishing on all generators
  {
    IntMat m(gens.size(), dim);
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = 0; j < dim; ++j) m.at(i, j) = static_cast<long>(gens[i][j]);
    out.equalities = m.nullspace_basis();
  }
  // span basis
  IntMat cols = IntMat::from_columns(gens);
  IntMat h = cols.column_hermite();
  std::vector<DegreeVector> span_basis;
  for (size_t j = 0; j < h.cols(); ++j) {
    DegreeVector c = h.column(j);
    if (!is_zero(c)) span_basis.push_back(c);
  }
  size_t s = span_basis.size();
  if (s == 0) return out;  // all generators zero
  IntMat B = IntMat::from_columns(span_basis);
  // generators in span coordinates (exact rational, scaled primitive)
  std::vector<DegreeVector> gens_s;
  for (const auto& g : gens) {
    auto coords = lattice_coordinates(B, g);
    mpz_class den = 1;
    for (auto& q : coords) den = lcm(den, q.get_den());
    DegreeVector v(s);
    for (size_t j = 0; j < s; ++j) {
      mpz_class z = coords[j].get_num() * (den / coords[j].get_den());
      if (!z.fits_slong_p()) fail(Errc::Internal, "span coordinate overflow");
      v[j] = z.get_si();
    }
    v = primitive(v);
    if (!is_zero(v)) gens_s.push_back(v);
  }
  auto facets_s = supporting_normals(gens_s, s);
  // pull back: f_dim = phi . P with P B = I_s; P = (B^T B)^{-1} B^T
  // solve (B^T B) y = phi for each facet, then f = y^T B^T
  IntMat btb(s, s);
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j) {
      mpz_class acc = 0;
      for (size_t t = 0; t < dim; ++t) acc += B.at(t, i) * B.at(t, j);
      btb.at(i, j) = acc;
    }
  for (const auto& phi : facets_s) {
    std::vector<mpq_class> rhs(s);
    for (size_t i = 0; i < s; ++i) rhs[i] = mpq_class(static_cast<long>(phi[i]));
    std::vector<mpq_class> y;
    if (!btb.solve_rational(rhs, y)) fail(Errc::Internal, "span gram solve failed");
    std::vector<mpq_class> f(dim, mpq_class(0));
    for (size_t t = 0; t < dim; ++t)
      for (size_t i = 0; i < s; ++i) f[t] += y[i] * mpq_class(B.at(t, i));
    mpz_class den = 1;
    for (auto& q : f) den = lcm(den, q.get_den());
    DegreeVector fi(dim);
    for (size_t t = 0; t < dim; ++t) {
      mpz_class z = f[t].get_num() * (den / f[t].get_den());
      if (!z.fits_slong_p()) fail(Errc::Internal, "facet pullback overflow");
      fi[t] = z.get_si();
    }
    out.inequalities.push_back(primitive(fi));
  }
  return out;
}

}  // namespace

VRep to_vrep(const RationalPolyhedron& p) {
  VRep v;
  v.dim = p.dim;
  if (polyhedron_is_empty(p)) return v;  // no vertices: empty

  // split off the lineality space first: P = L + (P cap W) for a complement W
  {
    IntMat funcs(p.constraints.size(), p.dim);
    for (size_t i = 0; i < p.constraints.size(); ++i)
      for (long long j = 0; j < p.dim; ++j)
        funcs.at(i, j) = static_cast<long>(p.constraints[i].functional[j]);
    std::vector<DegreeVector> lines =
        p.constraints.empty() ? std::vector<DegreeVector>() : funcs.nullspace_basis();
    if (p.constraints.empty()) {
      // whole space
      for (long long j = 0; j < p.dim; ++j) {
        DegreeVector e(p.dim, 0);
        e[j] = 1;
        lines.push_back(e);
      }
      v.vertices.push_back(std::vector<mpq_class>(p.dim, mpq_class(0)));
      v.lines = lines;
      return v;
    }
    if (!lines.empty()) {
      // greedy integer complement basis from coordinate vectors
      std::vector<DegreeVector> span = lines;
      std::vector<DegreeVector> comp;
      for (long long j = 0; j < p.dim; ++j) {
        DegreeVector e(p.dim, 0);
        e[j] = 1;
        std::vector<DegreeVector> trial = span;
        trial.push_back(e);
        if (IntMat::from_columns(trial).rank() > IntMat::from_columns(span).rank()) {
          span.push_back(e);
          comp.push_back(e);
        }
      }
      size_t c = comp.size();
      RationalPolyhedron reduced;
      reduced.dim = static_cast<long long>(c);
      for (const auto& con : p.constraints) {
        DegreeVector f(c);
        for (size_t k = 0; k < c; ++k) f[k] = dot(con.functional, comp[k]);
        reduced.constraints.push_back({f, con.bound, con.sense});
      }
      VRep rv = to_vrep(reduced);
      for (const auto& w : rv.vertices) {
        std::vector<mpq_class> x(p.dim, mpq_class(0));
        for (size_t k = 0; k < c; ++k)
          for (long long j = 0; j < p.dim; ++j) x[j] += w[k] * mpq_class(static_cast<long>(comp[k][j]));
        v.vertices.push_back(std::move(x));
      }
      for (const auto& r : rv.rays) {
        DegreeVector x(p.dim, 0);
        for (size_t k = 0; k < c; ++k)
          for (long long j = 0; j < p.dim; ++j) x[j] += r[k] * comp[k][j];
        v.rays.push_back(primitive(x));
      }
      v.lines = lines;
      std::sort(v.rays.begin(), v.rays.end());
      return v;
    }
  }

  size_t D = p.dim + 1;
  // homogenized constraint functionals on (x0, x): x0 >= 0 and f.x - b.x0 >= 0
  std::vector<DegreeVector> facets;
  {
    DegreeVector x0(D, 0);
    x0[0] = 1;
    facets.push_back(x0);
  }
  for (const auto& c : p.constraints) {
    // scale bound to integer
    mpz_class den = c.bound.get_den();
    DegreeVector f(D, 0);
    mpz_class b_num = c.bound.get_num();
    long long sgn = c.sense == Constraint::Ge ? 1 : -1;
    mpz_class f0 = mpz_class(static_cast<long>(-sgn)) * b_num;
    if (!f0.fits_slong_p()) fail(Errc::Internal, "bound overflow");
    f[0] = f0.get_si();
    for (long long j = 0; j < p.dim; ++j) {
      mpz_class e = mpz_class(static_cast<long>(sgn * c.functional[j])) * den;
      if (!e.fits_slong_p()) fail(Errc::Internal, "functional overflow");
      f[j + 1] = e.get_si();
    }
    facets.push_back(primitive(f));
  }
  auto rays = cone_rays_from_facets(facets);
  for (const auto& r : rays) {
    if (r[0] > 0) {
      std::vector<mpq_class> vert(p.dim);
      for (long long j = 0; j < p.dim; ++j)
        vert[j] = mpq_class(static_cast<long>(r[j + 1]), static_cast<long>(r[0]));
      for (auto& q : vert) q.canonicalize();
      v.vertices.push_back(std::move(vert));
    } else {
      DegreeVector dir(p.dim);
      for (long long j = 0; j < p.dim; ++j) dir[j] = r[j + 1];
      v.rays.push_back(primitive(dir));
    }
  }
  std::sort(v.rays.begin(), v.rays.end());
  std::sort(v.vertices.begin(), v.vertices.end(),
            [](const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
              for (size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return a[i] < b[i];
              }
              return false;
            });
  return v;
}

RationalPolyhedron from_vrep(const VRep& v) {
  RationalPolyhedron p;
  p.dim = v.dim;
  if (v.vertices.empty()) {
    p.add_ge(DegreeVector(v.dim, 0), mpq_class(1));  // infeasible
    return p;
  }
  size_t D = v.dim + 1;
  std::vector<DegreeVector> gens;
  for (const auto& vert : v.vertices) {
    mpz_class den = 1;
    for (const auto& q : vert) den = lcm(den, q.get_den());
    DegreeVector g(D);
    if (!den.fits_slong_p()) fail(Errc::Internal, "vertex denominator overflow");
    g[0] = den.get_si();
    for (long long j = 0; j < v.dim; ++j) {
      mpz_class z = vert[j].get_num() * (den / vert[j].get_den());
      if (!z.fits_slong_p()) fail(Errc::Internal, "vertex numerator overflow");
      g[j + 1] = z.get_si();
    }
    gens.push_back(primitive(g));
  }
  for (const auto& r : v.rays) {
    DegreeVector g(D, 0);
    for (long long j = 0; j < v.dim; ++j) g[j + 1] = r[j];
    gens.push_back(g);
  }
  for (const auto& l : v.lines) {
    DegreeVector g(D, 0);
    for (long long j = 0; j < v.dim; ++j) g[j + 1] = l[j];
    gens.push_back(g);
    gens.push_back(-g);
  }
  auto hrep = cone_hrep_from_generators(gens, D);
  auto add = [&](const DegreeVector& f, bool both) {
    // f0*x0 + f'.x >= 0  ->  f'.x >= -f0 at x0 = 1
    DegreeVector fx(v.dim);
    bool zero = true;
    for (long long j = 0; j < v.dim; ++j) {
      fx[j] = f[j + 1];
      if (fx[j] != 0) zero = false;
    }
    if (zero) return;  // constraint purely on x0
    p.add_ge(fx, mpq_class(static_cast<long>(-f[0])));
    if (both) p.add_le(fx, mpq_class(static_cast<long>(-f[0])));
  };
  for (const auto& f : hrep.inequalities) add(f, false);
  for (const auto& f : hrep.equalities) add(f, true);
  return p;
}

RationalPolyhedron polyhedron_minkowski(const RationalPolyhedron& a, const RationalPolyhedron& b) {
  if (a.dim != b.dim) fail(Errc::DimensionMismatch, "minkowski dims differ");
  VRep va = to_vrep(a), vb = to_vrep(b);
  VRep sum;
  sum.dim = a.dim;
  if (va.vertices.empty() || vb.vertices.empty()) return from_vrep(sum);  // empty
  for (const auto& x : va.vertices)
    for (const auto& y : vb.vertices) {
      std::vector<mpq_class> s(a.dim);
      for (long long j = 0; j < a.dim; ++j) s[j] = x[j] + y[j];
      sum.vertices.push_back(std::move(s));
    }
  sum.rays = va.rays;
  sum.rays.insert(sum.rays.end(), vb.rays.begin(), vb.rays.end());
  sum.lines = va.lines;
  sum.lines.insert(sum.lines.end(), vb.lines.begin(), vb.lines.end());
  return from_vrep(sum);
}

std::vector<DegreeVector> lattice_points(const RationalPolyhedron& p,
                                         const RationalPolyhedron& box,
                                         const std::function<bool(const DegreeVector&)>& keep) {
  RationalPolyhedron inter = polyhedron_intersect(p, box);
  std::vector<DegreeVector> out;
  if (polyhedron_is_empty(inter)) return out;
  long long d = inter.dim;
  std::vector<long long> lo(d), hi(d);
  for (long long j = 0; j < d; ++j) {
    DegreeVector ej(d, 0);
    ej[j] = 1;
    Extremes e = extremum(inter, ej);
    if (!e.min || !e.max) fail(Errc::Unbounded, "lattice_points: unbounded region");
    mpz_class lo_z, hi_z;
    mpz_cdiv_q(lo_z.get_mpz_t(), e.min->get_num().get_mpz_t(), e.min->get_den().get_mpz_t());
    mpz_fdiv_q(hi_z.get_mpz_t(), e.max->get_num().get_mpz_t(), e.max->get_den().get_mpz_t());
    if (!lo_z.fits_slong_p() || !hi_z.fits_slong_p()) fail(Errc::Internal, "bound overflow");
    lo[j] = lo_z.get_si();
    hi[j] = hi_z.get_si();
  }
  DegreeVector pt(d);
  std::function<void(long long)> scan = [&](long long j) {
    if (j == d) {
      if (inter.contains(pt) && (!keep || keep(pt))) out.push_back(pt);
      return;
    }
    for (long long v = lo[j]; v <= hi[j]; ++v) {
      pt[j] = v;
      scan(j + 1);
    }
  };
  scan(0);
  return out;
}

RationalPolyhedron zonotope_polytope(const std::vector<DegreeVector>& segments) {
  if (segments.empty()) fail(Errc::Internal, "zonotope needs at least one segment");
  size_t d = segments[0].size();
  std::set<DegreeVector> sums;
  size_t n = segments.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    DegreeVector s(d, 0);
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) s = s + segments[i];
    sums.insert(s);
  }
  VRep v;
  v.dim = static_cast<long long>(d);
  for (const auto& s : sums) {
    std::vector<mpq_class> vert(d);
    for (size_t j = 0; j < d; ++j) vert[j] = mpq_class(static_cast<long>(s[j]));
    v.vertices.push_back(std::move(vert));
  }
  return from_vrep(v);
}

}  // namespace grcohom
