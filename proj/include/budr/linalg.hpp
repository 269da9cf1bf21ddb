#pragma once

#include <optional>
#include <vector>

#include "budr/gf.hpp"

namespace budr {

// Exact linear algebra over GF(p) on dense Eigen matrices.  Pivoting is
// deterministic: first nonzero column, smallest row index.  Every basis
// these functions return is therefore reproducible byte-for-byte.

/// Reduced row echelon form in place; returns the pivot columns in order.
std::vector<int> rref_in_place(Mat& a);

inline Mat rref(Mat a) {
  rref_in_place(a);
  return a;
}

int rank_of(const Mat& a);

/// Kernel basis as matrix columns, one per free column of A, in ascending
/// free-column order (the standard reduced basis).
Mat kernel_basis(const Mat& a);

/// Result of solving A x = b.  Inconsistency is a normal outcome, not an
/// error.
struct LinearSolution {
  bool consistent = false;
  Vec particular;  // valid when consistent
  Mat kernel;      // kernel basis columns (independent of b)
};

LinearSolution solve_linear(const Mat& a, const Vec& b);

/// Particular solutions for several right-hand sides at once; nullopt when
/// any column is inconsistent.
std::optional<Mat> solve_matrix(const Mat& a, const Mat& b);

bool is_invertible(const Mat& a);

/// Inverse of a square invertible matrix (throws std::domain_error else).
Mat inverse_of(const Mat& a);

/// Basis of the column space, as a subset-echelon of the input columns.
Mat column_space_basis(const Mat& a);

/// True iff v lies in the span of the columns of basis.
bool in_span(const Mat& basis, const Vec& v);

/// Dimension of the span of the columns.
inline int span_dim(const Mat& cols) { return rank_of(cols); }

/// Indices j such that e_j extends the given column space to all of k^n.
std::vector<int> complement_indices(const Mat& cols, int n);

/// Stacks matrix entries column-major into one vector (the vectorization
/// used throughout the hom-space machinery).
Vec vectorize(const Mat& m);

Mat unvectorize(const Vec& v, int rows, int cols);

}  // namespace budr
