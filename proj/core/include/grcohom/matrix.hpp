#pragma once

#include <optional>
#include <vector>

#include "grcohom/scalar.hpp"

namespace grcohom {

// Dense exact matrix over a fixed field. Row-major; subspaces of k^n are
// represented as row spans in reduced echelon form.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, Field f)
      : f_(f), cols_(cols), rows_(rows, std::vector<Scalar>(cols, Scalar::zero(f))) {}
  static Matrix identity(size_t n, Field f);
  static Matrix from_rows(std::vector<std::vector<Scalar>> rows, size_t cols, Field f);

  Field field() const { return f_; }
  size_t rows() const { return rows_.size(); }
  size_t cols() const { return cols_; }
  std::vector<Scalar>& row(size_t i) { return rows_[i]; }
  const std::vector<Scalar>& row(size_t i) const { return rows_[i]; }
  Scalar& at(size_t i, size_t j) { return rows_[i][j]; }
  const Scalar& at(size_t i, size_t j) const { return rows_[i][j]; }
  void append_row(std::vector<Scalar> r);

  // y = A x (x has cols() entries).
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
  Matrix times(const Matrix& o) const;  // this * o

  // Reduced row echelon form in place; returns pivot column per surviving row.
  // Zero rows are dropped. Pivoting is on the first nonzero column, so output
  // is deterministic.
  std::vector<size_t> rref();

  size_t rank() const;

 private:
  Field f_;
  size_t cols_ = 0;
  std::vector<std::vector<Scalar>> rows_;
};

// Echelonized row span with pivot bookkeeping.
struct Subspace {
  Matrix basis;                 // rref rows
  std::vector<size_t> pivots;   // pivot column of each row
  Field field() const { return basis.field(); }
  size_t dim() const { return basis.rows(); }
  size_t ambient() const { return basis.cols(); }
};

Subspace make_subspace(Matrix m);
Subspace zero_subspace(size_t n, Field f);

// Reduce v against the subspace; the result is the canonical coset
// representative (entries at pivot columns are zero).
std::vector<Scalar> reduce_mod(const Subspace& s, std::vector<Scalar> v);
bool contains(const Subspace& s, const std::vector<Scalar>& v);
bool subspace_equal(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// Solution x of A x = b, if any.
std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b);

// Basis of {x : A x = 0} as rows (echelonized, deterministic).
Subspace kernel(const Matrix& a);

// Row span of A' = image of the map x -> A x, i.e. column span, as a subspace.
Subspace column_space(const Matrix& a);

// Coefficients expressing v as a combination of the given (not necessarily
// independent) spanning rows, if possible.
std::optional<std::vector<Scalar>> express_in_rows(const Matrix& rows_mat,
                                                   const std::vector<Scalar>& v);

// Representatives of ker/im: echelon basis of ker reduced modulo im.
// im must be contained in ker for the quotient to be meaningful; the function
// does not check that.
Matrix quotient_representatives(const Subspace& ker_s, const Subspace& im_s);

}  // namespace grcohom
