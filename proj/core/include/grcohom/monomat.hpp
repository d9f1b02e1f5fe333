#pragma once

#include <vector>

#include "grcohom/matrix.hpp"
#include "grcohom/semigroup.hpp"

namespace grcohom {

// Row/column label of a monomial matrix: the indecomposable k{alpha + F - Q}.
struct InjLabel {
  int face_id = 0;
  DegreeVector degree;
  bool operator==(const InjLabel&) const = default;
};

// Scalar matrix with (face, degree) labels; rows index the source summands,
// columns the target summands. entries.at(q, p) is lambda_{qp}.
struct MonomialMatrix {
  std::vector<InjLabel> rows, cols;
  Matrix entries;
};

MonomialMatrix zero_monomial_matrix(std::vector<InjLabel> rows, std::vector<InjLabel> cols,
                                    Field f);

// Summand support test: alpha in label.degree + F - Q.
bool label_supports(const AffineSemigroup& q, const InjLabel& label, const DegreeVector& alpha);

std::vector<size_t> surviving_labels(const AffineSemigroup& q, const std::vector<InjLabel>& labels,
                                     const DegreeVector& alpha);

// [OP] evaluate_matrix_at_degree: delete dead rows/columns, keep the scalars.
Matrix evaluate_matrix_at_degree(const AffineSemigroup& q, const MonomialMatrix& mm,
                                 const DegreeVector& alpha);

// As a linear map (J_alpha -> J'_alpha) on column vectors indexed by the
// surviving rows: the transpose of evaluate_matrix_at_degree.
Matrix degree_map(const AffineSemigroup& q, const MonomialMatrix& mm, const DegreeVector& alpha);

// [OP] matrix_equal: equal scalars, equal faces, degrees congruent mod ZF.
bool matrix_equal(const AffineSemigroup& q, const MonomialMatrix& a, const MonomialMatrix& b);

// composite of first: J' -> J and second: J -> J'' (middle labels must agree)
MonomialMatrix compose(const AffineSemigroup& q, const MonomialMatrix& first,
                       const MonomialMatrix& second);

MonomialMatrix submatrix(const MonomialMatrix& mm, const std::vector<size_t>& row_idx,
                         const std::vector<size_t>& col_idx);

bool is_zero_matrix(const MonomialMatrix& mm);

// Defn d:injmat support condition on every nonzero entry.
void check_support_condition(const AffineSemigroup& q, const MonomialMatrix& mm);

}  // namespace grcohom
