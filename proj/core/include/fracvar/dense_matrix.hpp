#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracvar {

/// Row-major dense matrix of doubles.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<const double> data() const noexcept { return data_; }

  /// Max-absolute-row-sum norm.
  double infinity_norm() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

/// Solve A x = b by LU with partial pivoting (A is consumed by value).
///
/// Throws SingularMatrixError when a pivot falls below
/// machine epsilon * ||A||_inf * dimension, and InvalidArgument on shape
/// mismatch.
std::vector<double> lu_solve(Matrix a, std::vector<double> b);

}  // namespace fracvar
