#include "grcohom/matrix.hpp"

#include <algorithm>

namespace grcohom {

Matrix Matrix::identity(size_t n, Field f) {
  Matrix m(n, n, f);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(std::vector<std::vector<Scalar>> rows, size_t cols, Field f) {
  Matrix m;
  m.f_ = f;
  m.cols_ = cols;
  for (auto& r : rows) {
    if (r.size() != cols) fail(Errc::Internal, "row width mismatch");
  }
  m.rows_ = std::move(rows);
  return m;
}

void Matrix::append_row(std::vector<Scalar> r) {
  if (r.size() != cols_) fail(Errc::Internal, "row width mismatch");
  rows_.push_back(std::move(r));
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_) fail(Errc::Internal, "apply size mismatch");
  std::vector<Scalar> y(rows(), Scalar::zero(f_));
  for (size_t i = 0; i < rows(); ++i) {
    Scalar acc = Scalar::zero(f_);
    for (size_t j = 0; j < cols_; ++j) {
      if (!rows_[i][j].is_zero() && !x[j].is_zero()) acc += rows_[i][j] * x[j];
    }
    y[i] = acc;
  }
  return y;
}

Matrix Matrix::times(const Matrix& o) const {
  if (cols_ != o.rows()) fail(Errc::Internal, "matrix product shape mismatch");
  Matrix r(rows(), o.cols(), f_);
  for (size_t i = 0; i < rows(); ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (rows_[i][k].is_zero()) continue;
      for (size_t j = 0; j < o.cols(); ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += rows_[i][k] * o.at(k, j);
      }
    }
  return r;
}

std::vector<size_t> Matrix::rref() {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_.size(); ++col) {
    size_t p = row;
    while (p < rows_.size() && rows_[p][col].is_zero()) ++p;
    if (p == rows_.size()) continue;
    std::swap(rows_[p], rows_[row]);
    Scalar inv = rows_[row][col].inverse();
    for (size_t j = col; j < cols_; ++j) rows_[row][j] *= inv;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (i == row || rows_[i][col].is_zero()) continue;
      Scalar f = rows_[i][col];
      for (size_t j = col; j < cols_; ++j) rows_[i][j] -= f * rows_[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  rows_.resize(row, std::vector<Scalar>());
  return pivots;
}

size_t Matrix::rank() const {
  Matrix m = *this;
  return m.rref().size();
}

Subspace make_subspace(Matrix m) {
  Subspace s;
  auto piv = m.rref();
  s.basis = std::move(m);
  s.pivots = std::move(piv);
  return s;
}

Subspace zero_subspace(size_t n, Field f) {
  Subspace s;
  s.basis = Matrix(0, n, f);
  return s;
}

std::vector<Scalar> reduce_mod(const Subspace& s, std::vector<Scalar> v) {
  for (size_t i = 0; i < s.basis.rows(); ++i) {
    size_t pc = s.pivots[i];
    if (v[pc].is_zero()) continue;
    Scalar f = v[pc];
    for (size_t j = pc; j < v.size(); ++j) v[j] -= f * s.basis.at(i, j);
  }
  return v;
}

bool contains(const Subspace& s, const std::vector<Scalar>& v) {
  auto r = reduce_mod(s, v);
  for (auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return false;
  for (size_t i = 0; i < a.basis.rows(); ++i)
    if (!contains(b, a.basis.row(i))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  Matrix m = a.basis;
  for (size_t i = 0; i < b.basis.rows(); ++i) m.append_row(b.basis.row(i));
  return make_subspace(std::move(m));
}

std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b) {
  Field f = a.field();
  size_t R = a.rows(), C = a.cols();
  Matrix aug(R, C + 1, f);
  for (size_t i = 0; i < R; ++i) {
    for (size_t j = 0; j < C; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, C) = b[i];
  }
  // plain elimination keeping track of pivot columns
  std::vector<long long> pivot_of_row;
  size_t row = 0;
  for (size_t col = 0; col < C && row < R; ++col) {
    size_t p = row;
    while (p < R && aug.at(p, col).is_zero()) ++p;
    if (p == R) continue;
    for (size_t j = 0; j <= C; ++j) std::swap(aug.at(p, j), aug.at(row, j));
    Scalar inv = aug.at(row, col).inverse();
    for (size_t j = col; j <= C; ++j) aug.at(row, j) *= inv;
    for (size_t i = 0; i < R; ++i) {
      if (i == row || aug.at(i, col).is_zero()) continue;
      Scalar fac = aug.at(i, col);
      for (size_t j = col; j <= C; ++j) aug.at(i, j) -= fac * aug.at(row, j);
    }
    pivot_of_row.push_back(static_cast<long long>(col));
    ++row;
  }
  for (size_t i = row; i < R; ++i)
    if (!aug.at(i, C).is_zero()) return std::nullopt;
  std::vector<Scalar> x(C, Scalar::zero(f));
  for (size_t i = 0; i < row; ++i) x[pivot_of_row[i]] = aug.at(i, C);
  return x;
}

Subspace kernel(const Matrix& a) {
  Field f = a.field();
  Matrix m = a;
  auto piv = m.rref();
  std::vector<long long> pivot_row_of_col(a.cols(), -1);
  for (size_t i = 0; i < piv.size(); ++i) pivot_row_of_col[piv[i]] = static_cast<long long>(i);
  Matrix basis(0, a.cols(), f);
  for (size_t fc = 0; fc < a.cols(); ++fc) {
    if (pivot_row_of_col[fc] >= 0) continue;
    std::vector<Scalar> v(a.cols(), Scalar::zero(f));
    v[fc] = Scalar::one(f);
    for (size_t col = 0; col < a.cols(); ++col) {
      long long pr = pivot_row_of_col[col];
      if (pr >= 0) v[col] = -m.at(pr, fc);
    }
    basis.append_row(std::move(v));
  }
  return make_subspace(std::move(basis));
}

Subspace column_space(const Matrix& a) {
  Matrix t(a.cols(), a.rows(), a.field());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return make_subspace(std::move(t));
}

std::optional<std::vector<Scalar>> express_in_rows(const Matrix& rows_mat,
                                                   const std::vector<Scalar>& v) {
  // Solve rows^T c = v.
  Matrix t(rows_mat.cols(), rows_mat.rows(), rows_mat.field());
  for (size_t i = 0; i < rows_mat.rows(); ++i)
    for (size_t j = 0; j < rows_mat.cols(); ++j) t.at(j, i) = rows_mat.at(i, j);
  return solve(t, v);
}

Matrix quotient_representatives(const Subspace& ker_s, const Subspace& im_s) {
  Matrix reduced(0, ker_s.ambient(), ker_s.field());
  for (size_t i = 0; i < ker_s.basis.rows(); ++i)
    reduced.append_row(reduce_mod(im_s, ker_s.basis.row(i)));
  Subspace q = make_subspace(std::move(reduced));
  return q.basis;
}

}  // namespace grcohom
