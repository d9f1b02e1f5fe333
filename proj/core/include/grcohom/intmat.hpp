#pragma once

#include <gmpxx.h>

#include <vector>

#include "grcohom/vec.hpp"

namespace grcohom {

// Small exact integer matrices (lattice work: HNF, SNF, solving). Entries are
// arbitrary-precision to keep eliminations safe.
class IntMat {
 public:
  IntMat() = default;
  IntMat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, 0) {}
  static IntMat from_columns(const std::vector<DegreeVector>& cols);
  static IntMat identity(size_t n);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  mpz_class& at(size_t i, size_t j) { return a_[i * c_ + j]; }
  const mpz_class& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

  DegreeVector column(size_t j) const;

  // Column-style Hermite normal form of the column lattice: returns a matrix
  // whose nonzero columns are a lattice basis (lower triangular up to row
  // permutation). rank() of the input is the number of nonzero columns.
  IntMat column_hermite() const;

  // Smith normal form: returns diagonal entries d_1 | d_2 | ... (nonzero ones).
  std::vector<mpz_class> smith_diagonal() const;

  long long rank() const;

  // Solve A x = b over the rationals; returns false if inconsistent.
  bool solve_rational(const std::vector<mpq_class>& b, std::vector<mpq_class>& x) const;

  // Primitive integer basis of the rational null space {x : A x = 0}.
  std::vector<DegreeVector> nullspace_basis() const;

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<mpz_class> a_;
};

// Does b lie in the lattice generated by the columns of basis (a HNF basis)?
bool lattice_contains(const IntMat& basis, const DegreeVector& b);

// Exact rational coordinates of b in the (full-rank, square) column basis.
std::vector<mpq_class> lattice_coordinates(const IntMat& basis, const DegreeVector& b);

}  // namespace grcohom
