#include "budr/linalg.hpp"

#include <stdexcept>

namespace budr {

std::vector<int> rref_in_place(Mat& a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    Fp scale = a(r, c).inv();
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= scale;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Fp f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank_of(const Mat& a) {
  Mat b = a;
  return static_cast<int>(rref_in_place(b).size());
}

Mat kernel_basis(const Mat& a) {
  Mat r = a;
  std::vector<int> pivots = rref_in_place(r);
  const int cols = static_cast<int>(a.cols());
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Mat basis = Mat::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis(fc, static_cast<Eigen::Index>(k)) = Fp(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis(pivots[i], static_cast<Eigen::Index>(k)) =
          -r(static_cast<Eigen::Index>(i), fc);
  }
  return basis;
}

LinearSolution solve_linear(const Mat& a, const Vec& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve_linear: dimension mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<int> pivots = rref_in_place(aug);

  LinearSolution sol;
  sol.kernel = kernel_basis(a);
  if (!pivots.empty() && pivots.back() == static_cast<int>(a.cols())) {
    sol.consistent = false;
    return sol;
  }
  sol.consistent = true;
  sol.particular = Vec::Zero(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    sol.particular(pivots[i]) = aug(static_cast<Eigen::Index>(i), a.cols());
  return sol;
}

std::optional<Mat> solve_matrix(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve_matrix: dimension mismatch");
  Mat aug(a.rows(), a.cols() + b.cols());
  aug.leftCols(a.cols()) = a;
  aug.rightCols(b.cols()) = b;
  std::vector<int> pivots = rref_in_place(aug);
  for (int c : pivots)
    if (c >= static_cast<int>(a.cols())) return std::nullopt;
  Mat x = Mat::Zero(a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x.row(pivots[i]) = aug.block(static_cast<Eigen::Index>(i), a.cols(), 1, b.cols());
  return x;
}

bool is_invertible(const Mat& a) {
  return a.rows() == a.cols() && rank_of(a) == a.rows();
}

Mat inverse_of(const Mat& a) {
  if (a.rows() != a.cols()) throw std::domain_error("inverse_of: not square");
  const Eigen::Index n = a.rows();
  Mat aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Mat::Identity(n, n);
  std::vector<int> pivots = rref_in_place(aug);
  if (static_cast<Eigen::Index>(pivots.size()) != n || (n > 0 && pivots.back() >= n))
    throw std::domain_error("inverse_of: singular matrix");
  return aug.rightCols(n);
}

Mat column_space_basis(const Mat& a) {
  Mat r = a;
  std::vector<int> pivots = rref_in_place(r);
  Mat basis(a.rows(), static_cast<Eigen::Index>(pivots.size()));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    basis.col(static_cast<Eigen::Index>(i)) = a.col(pivots[i]);
  return basis;
}

bool in_span(const Mat& basis, const Vec& v) {
  return solve_linear(basis, v).consistent;
}

std::vector<int> complement_indices(const Mat& cols, int n) {
  // Echelonize [cols | I]; the identity columns that become pivots are the
  // complement.
  Mat aug(n, cols.cols() + n);
  aug.leftCols(cols.cols()) = cols;
  aug.rightCols(n) = Mat::Identity(n, n);
  std::vector<int> pivots = rref_in_place(aug);
  std::vector<int> out;
  for (int c : pivots)
    if (c >= static_cast<int>(cols.cols()))
      out.push_back(c - static_cast<int>(cols.cols()));
  return out;
}

Vec vectorize(const Mat& m) {
  Vec v(m.rows() * m.cols());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) v(k++) = m(i, j);
  return v;
}

Mat unvectorize(const Vec& v, int rows, int cols) {
  Mat m(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = v(k++);
  return m;
}

}  // namespace budr
