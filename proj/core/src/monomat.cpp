#include "grcohom/monomat.hpp"

#include <algorithm>

namespace grcohom {

MonomialMatrix zero_monomial_matrix(std::vector<InjLabel> rows, std::vector<InjLabel> cols,
                                    Field f) {
  MonomialMatrix mm;
  mm.entries = Matrix(rows.size(), cols.size(), f);
  mm.rows = std::move(rows);
  mm.cols = std::move(cols);
  return mm;
}

bool label_supports(const AffineSemigroup& q, const InjLabel& label, const DegreeVector& alpha) {
  return q.in_shifted_support(label.degree, q.face(label.face_id), alpha);
}

std::vector<size_t> surviving_labels(const AffineSemigroup& q, const std::vector<InjLabel>& labels,
                                     const DegreeVector& alpha) {
  std::vector<size_t> out;
  for (size_t i = 0; i < labels.size(); ++i)
    if (label_supports(q, labels[i], alpha)) out.push_back(i);
  return out;
}

Matrix evaluate_matrix_at_degree(const AffineSemigroup& q, const MonomialMatrix& mm,
                                 const DegreeVector& alpha) {
  auto r = surviving_labels(q, mm.rows, alpha);
  auto c = surviving_labels(q, mm.cols, alpha);
  Matrix out(r.size(), c.size(), mm.entries.field());
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < c.size(); ++j) out.at(i, j) = mm.entries.at(r[i], c[j]);
  return out;
}

Matrix degree_map(const AffineSemigroup& q, const MonomialMatrix& mm, const DegreeVector& alpha) {
  Matrix e = evaluate_matrix_at_degree(q, mm, alpha);
  Matrix t(e.cols(), e.rows(), e.field());
  for (size_t i = 0; i < e.rows(); ++i)
    for (size_t j = 0; j < e.cols(); ++j) t.at(j, i) = e.at(i, j);
  return t;
}

namespace {

bool labels_match(const AffineSemigroup& q, const InjLabel& a, const InjLabel& b) {
  if (a.face_id != b.face_id) return false;
  return q.in_face_lattice(q.face(a.face_id), a.degree - b.degree);
}

}  // namespace

bool matrix_equal(const AffineSemigroup& q, const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.rows.size() != b.rows.size() || a.cols.size() != b.cols.size())
    fail(Errc::ShapeMismatch, "monomial matrices of different shape");
  for (size_t i = 0; i < a.rows.size(); ++i)
    if (!labels_match(q, a.rows[i], b.rows[i])) return false;
  for (size_t j = 0; j < a.cols.size(); ++j)
    if (!labels_match(q, a.cols[j], b.cols[j])) return false;
  for (size_t i = 0; i < a.rows.size(); ++i)
    for (size_t j = 0; j < a.cols.size(); ++j)
      if (a.entries.at(i, j) != b.entries.at(i, j)) return false;
  return true;
}

MonomialMatrix compose(const AffineSemigroup& q, const MonomialMatrix& first,
                       const MonomialMatrix& second) {
  if (first.cols.size() != second.rows.size())
    fail(Errc::ShapeMismatch, "composition shape mismatch");
  for (size_t i = 0; i < first.cols.size(); ++i)
    if (!labels_match(q, first.cols[i], second.rows[i]))
      fail(Errc::ShapeMismatch, "composition middle labels differ");
  MonomialMatrix out;
  out.rows = first.rows;
  out.cols = second.cols;
  out.entries = first.entries.times(second.entries);
  return out;
}

MonomialMatrix submatrix(const MonomialMatrix& mm, const std::vector<size_t>& row_idx,
                         const std::vector<size_t>& col_idx) {
  MonomialMatrix out;
  for (size_t i : row_idx) out.rows.push_back(mm.rows[i]);
  for (size_t j : col_idx) out.cols.push_back(mm.cols[j]);
  out.entries = Matrix(row_idx.size(), col_idx.size(), mm.entries.field());
  for (size_t i = 0; i < row_idx.size(); ++i)
    for (size_t j = 0; j < col_idx.size(); ++j)
      out.entries.at(i, j) = mm.entries.at(row_idx[i], col_idx[j]);
  return out;
}

bool is_zero_matrix(const MonomialMatrix& mm) {
  for (size_t i = 0; i < mm.entries.rows(); ++i)
    for (size_t j = 0; j < mm.entries.cols(); ++j)
      if (!mm.entries.at(i, j).is_zero()) return false;
  return true;
}

void check_support_condition(const AffineSemigroup& q, const MonomialMatrix& mm) {
  for (size_t i = 0; i < mm.rows.size(); ++i)
    for (size_t j = 0; j < mm.cols.size(); ++j) {
      if (mm.entries.at(i, j).is_zero()) continue;
      const Face& fq = q.face(mm.rows[i].face_id);
      const Face& fp = q.face(mm.cols[j].face_id);
      // F_p subset of F_q: the canonical facet set of F_p contains that of F_q
      bool face_ok = std::includes(fp.facet_indices.begin(), fp.facet_indices.end(),
                                   fq.facet_indices.begin(), fq.facet_indices.end());
      if (!face_ok) fail(Errc::Internal, "monomial matrix support violated (faces)");
      if (!q.in_shifted_support(mm.rows[i].degree, fq, mm.cols[j].degree))
        fail(Errc::Internal, "monomial matrix support violated (degrees)");
    }
}

}  // namespace grcohom
