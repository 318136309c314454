#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace theta_guide {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

  static Matrix identity(int n, double diag = 1.0);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return data_[index(i, j)]; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }

  std::span<double> row(int i) {
    return {data_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_),
            static_cast<std::size_t>(cols_)};
  }
  std::span<const double> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_),
            static_cast<std::size_t>(cols_)};
  }
  std::span<double> flat() { return data_; }
  std::span<const double> flat() const { return data_; }
  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  void fill(double v);
  /// this += alpha * other
  void add_scaled(double alpha, const Matrix& other);
  /// Replaces the matrix with (M + M^T) / 2.
  void symmetrize();

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
/// a * b^T
Matrix multiply_transposed(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

/// <A, B> = tr(A^T B)
double frobenius_inner(const Matrix& a, const Matrix& b);
double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);
double trace(const Matrix& a);

/// Lower Cholesky factor L with A = L L^T. Only the lower triangle of `a`
/// is read. Returns false (leaving `l` unspecified) when a pivot falls to or
/// below `min_pivot`, i.e. the matrix is not numerically positive definite.
bool cholesky(const Matrix& a, Matrix& l, double min_pivot = 0.0);

/// Solves L L^T x = b in place given the Cholesky factor.
void cholesky_solve(const Matrix& l, std::span<double> b);

/// Inverse of a lower-triangular matrix (also lower triangular).
Matrix lower_triangular_inverse(const Matrix& l);

/// A^{-1} from its Cholesky factor, returned symmetric.
Matrix inverse_from_cholesky(const Matrix& l);

/// All eigenvalues of a symmetric matrix in ascending order (Householder
/// tridiagonalization followed by implicit QL).
std::vector<double> symmetric_eigenvalues(const Matrix& a);
double min_eigenvalue(const Matrix& a);

}  // namespace theta_guide
