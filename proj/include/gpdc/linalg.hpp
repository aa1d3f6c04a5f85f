#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace gpdc {

/// Dense row-major matrix of doubles. Sized for the small problems this
/// library deals in (covariances up to ~25 x 25, Gram products up to d x d);
/// nothing here is tuned for large dimensions.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}
  Mat(std::size_t rows, std::size_t cols, std::initializer_list<double> vals)
      : rows_(rows), cols_(cols), a_(vals) {}

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }

  Mat transposed() const;
  Mat operator*(const Mat& rhs) const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

/// A^T * B without forming the transpose.
Mat gram_product(const Mat& a, const Mat& b);

/// Determinant by LU with partial pivoting; square matrices only.
double determinant(Mat m);

struct EigResult {
  std::vector<double> values;  // descending
  Mat vectors;                 // columns, same order as values, orthonormal
};

/// Symmetric eigendecomposition by the cyclic Jacobi method. At most
/// `max_sweeps` full sweeps; stops when every off-diagonal magnitude falls
/// below `tol` times the largest diagonal magnitude.
EigResult jacobi_eigh(const Mat& sym, int max_sweeps = 30, double tol = 1e-14);

struct SvdResult {
  Mat u;                        // m x k, k = min(m, n)
  std::vector<double> sigma;    // descending, nonnegative
  Mat v;                        // n x k
};

/// SVD by one-sided cyclic Jacobi (Hestenes). Intended for the small d x d
/// Gram products of frame geometry; 30 sweeps at tol 1e-14 is far more than
/// those need.
SvdResult jacobi_svd(const Mat& m, int max_sweeps = 30, double tol = 1e-14);

/// Modified Gram-Schmidt on the columns, in place. Throws NumericsError if a
/// column collapses below `tol`.
void orthonormalize_columns(Mat& m, double tol = 1e-12);

}  // namespace gpdc
