#include "grcohom/intmat.hpp"

#include <algorithm>

namespace grcohom {

IntMat IntMat::from_columns(const std::vector<DegreeVector>& cols) {
  if (cols.empty()) return IntMat(0, 0);
  IntMat m(cols[0].size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < cols[0].size(); ++i) m.at(i, j) = static_cast<long>(cols[j][i]);
  return m;
}

IntMat IntMat::identity(size_t n) {
  IntMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

DegreeVector IntMat::column(size_t j) const {
  DegreeVector v(r_);
  for (size_t i = 0; i < r_; ++i) {
    if (!at(i, j).fits_slong_p()) fail(Errc::Internal, "lattice entry overflow");
    v[i] = at(i, j).get_si();
  }
  return v;
}

IntMat IntMat::column_hermite() const {
  IntMat m = *this;
  size_t row = 0, col = 0;
  while (row < m.rows() && col < m.cols()) {
    // gcd-reduce entries of this row across columns col..end
    size_t piv = col;
    bool nonzero = false;
    for (size_t j = col; j < m.cols(); ++j)
      if (m.at(row, j) != 0) {
        nonzero = true;
        break;
      }
    if (!nonzero) {
      ++row;
      continue;
    }
    for (;;) {
      piv = col;
      for (size_t j = col; j < m.cols(); ++j) {
        if (m.at(row, j) != 0 &&
            (m.at(row, piv) == 0 || abs(m.at(row, j)) < abs(m.at(row, piv))))
          piv = j;
      }
      if (piv != col)
        for (size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, piv), m.at(i, col));
      bool reduced = true;
      for (size_t j = col + 1; j < m.cols(); ++j) {
        if (m.at(row, j) == 0) continue;
        mpz_class q = m.at(row, j) / m.at(row, col);
        for (size_t i = 0; i < m.rows(); ++i) m.at(i, j) -= q * m.at(i, col);
        if (m.at(row, j) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (m.at(row, col) < 0)
      for (size_t i = 0; i < m.rows(); ++i) m.at(i, col) = -m.at(i, col);
    // reduce earlier columns against the pivot for canonicity
    for (size_t j = 0; j < col; ++j) {
      if (m.at(row, col) == 0) break;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(row, j).get_mpz_t(), m.at(row, col).get_mpz_t());
      if (q != 0)
        for (size_t i = 0; i < m.rows(); ++i) m.at(i, j) -= q * m.at(i, col);
    }
    ++row;
    ++col;
  }
  return m;
}

std::vector<mpz_class> IntMat::smith_diagonal() const {
  IntMat m = *this;
  size_t n = std::min(m.rows(), m.cols());
  std::vector<mpz_class> diag;
  size_t t = 0;
  while (t < n) {
    // find a nonzero pivot in the submatrix t..
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < m.rows() && !found; ++i)
      for (size_t j = t; j < m.cols() && !found; ++j)
        if (m.at(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pi, j), m.at(t, j));
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, pj), m.at(i, t));
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < m.rows(); ++i) {
        if (m.at(i, t) == 0) continue;
        mpz_class q = m.at(i, t) / m.at(t, t);
        for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) {
          for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(i, j), m.at(t, j));
          clean = false;
        }
      }
      for (size_t j = t + 1; j < m.cols(); ++j) {
        if (m.at(t, j) == 0) continue;
        mpz_class q = m.at(t, j) / m.at(t, t);
        for (size_t i = 0; i < m.rows(); ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) {
          for (size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, j), m.at(i, t));
          clean = false;
        }
      }
    }
    diag.push_back(abs(m.at(t, t)));
    ++t;
  }
  // enforce divisibility chain (not needed by callers beyond divisibility tests,
  // but cheap and canonical)
  for (size_t i = 0; i + 1 < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      mpz_class g = gcd(diag[i], diag[j]);
      mpz_class l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

long long IntMat::rank() const {
  IntMat h = column_hermite();
  long long rank = 0;
  for (size_t j = 0; j < h.cols(); ++j) {
    bool nz = false;
    for (size_t i = 0; i < h.rows(); ++i)
      if (h.at(i, j) != 0) nz = true;
    if (nz) ++rank;
  }
  return rank;
}

bool IntMat::solve_rational(const std::vector<mpq_class>& b, std::vector<mpq_class>& x) const {
  // Gaussian elimination over Q on [A | b].
  size_t R = rows(), C = cols();
  std::vector<std::vector<mpq_class>> aug(R, std::vector<mpq_class>(C + 1));
  for (size_t i = 0; i < R; ++i) {
    for (size_t j = 0; j < C; ++j) aug[i][j] = mpq_class(at(i, j));
    aug[i][C] = b[i];
  }
  std::vector<long long> pivot_col(R, -1);
  size_t row = 0;
  for (size_t col = 0; col < C && row < R; ++col) {
    size_t p = row;
    while (p < R && aug[p][col] == 0) ++p;
    if (p == R) continue;
    std::swap(aug[p], aug[row]);
    mpq_class inv = 1 / aug[row][col];
    for (size_t j = col; j <= C; ++j) aug[row][j] *= inv;
    for (size_t i = 0; i < R; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      mpq_class f = aug[i][col];
      for (size_t j = col; j <= C; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_col[row] = static_cast<long long>(col);
    ++row;
  }
  for (size_t i = row; i < R; ++i)
    if (aug[i][C] != 0) return false;
  x.assign(C, mpq_class(0));
  for (size_t i = 0; i < row; ++i) x[pivot_col[i]] = aug[i][C];
  return true;
}

std::vector<DegreeVector> IntMat::nullspace_basis() const {
  size_t R = rows(), C = cols();
  std::vector<std::vector<mpq_class>> a(R, std::vector<mpq_class>(C));
  for (size_t i = 0; i < R; ++i)
    for (size_t j = 0; j < C; ++j) a[i][j] = mpq_class(at(i, j));
  std::vector<long long> pivot_of_col(C, -1);
  size_t row = 0;
  for (size_t col = 0; col < C && row < R; ++col) {
    size_t p = row;
    while (p < R && a[p][col] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[row]);
    mpq_class inv = 1 / a[row][col];
    for (size_t j = col; j < C; ++j) a[row][j] *= inv;
    for (size_t i = 0; i < R; ++i) {
      if (i == row || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (size_t j = col; j < C; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_of_col[col] = static_cast<long long>(row);
    ++row;
  }
  std::vector<DegreeVector> basis;
  for (size_t fc = 0; fc < C; ++fc) {
    if (pivot_of_col[fc] >= 0) continue;
    std::vector<mpq_class> v(C, mpq_class(0));
    v[fc] = 1;
    for (size_t col = 0; col < C; ++col)
      if (pivot_of_col[col] >= 0) v[col] = -a[pivot_of_col[col]][fc];
    // clear denominators, make primitive integer
    mpz_class lcm_den = 1;
    for (auto& q : v) lcm_den = lcm(lcm_den, q.get_den());
    DegreeVector iv(C);
    mpz_class g = 0;
    std::vector<mpz_class> zv(C);
    for (size_t j = 0; j < C; ++j) {
      zv[j] = v[j].get_num() * (lcm_den / v[j].get_den());
      g = gcd(g, zv[j]);
    }
    for (size_t j = 0; j < C; ++j) {
      mpz_class e = (g == 0) ? zv[j] : mpz_class(zv[j] / g);
      if (!e.fits_slong_p()) fail(Errc::Internal, "nullspace entry overflow");
      iv[j] = e.get_si();
    }
    basis.push_back(iv);
  }
  return basis;
}

bool lattice_contains(const IntMat& basis, const DegreeVector& b) {
  if (basis.cols() == 0) return is_zero(b);
  // solve over Q, then check integrality
  std::vector<mpq_class> rhs(b.size());
  for (size_t i = 0; i < b.size(); ++i) rhs[i] = mpq_class(static_cast<long>(b[i]));
  std::vector<mpq_class> x;
  if (!basis.solve_rational(rhs, x)) return false;
  for (auto& q : x)
    if (q.get_den() != 1) return false;
  return true;
}

std::vector<mpq_class> lattice_coordinates(const IntMat& basis, const DegreeVector& b) {
  std::vector<mpq_class> rhs(b.size());
  for (size_t i = 0; i < b.size(); ++i) rhs[i] = mpq_class(static_cast<long>(b[i]));
  std::vector<mpq_class> x;
  if (!basis.solve_rational(rhs, x)) fail(Errc::Internal, "vector outside column span");
  return x;
}

}  // namespace grcohom
