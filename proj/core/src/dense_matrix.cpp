#include "fracvar/dense_matrix.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "fracvar/errors.hpp"

namespace fracvar {

double Matrix::infinity_norm() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) row += std::fabs((*this)(i, j));
    worst = std::max(worst, row);
  }
  return worst;
}

std::vector<double> lu_solve(Matrix a, std::vector<double> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) {
    throw InvalidArgument("lu_solve requires a square matrix matching the right-hand side");
  }
  const double pivot_floor = std::numeric_limits<double>::epsilon() *
                             a.infinity_norm() * static_cast<double>(n);

  for (std::size_t col = 0; col < n; ++col) {
    // Partial pivoting: bring the largest remaining entry of this column up.
    std::size_t pivot_row = col;
    double pivot_mag = std::fabs(a(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (std::fabs(a(i, col)) > pivot_mag) {
        pivot_mag = std::fabs(a(i, col));
        pivot_row = i;
      }
    }
    if (pivot_mag <= pivot_floor) {
      throw SingularMatrixError("lu_solve: pivot below breakdown threshold");
    }
    if (pivot_row != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot_row, j));
      std::swap(b[col], b[pivot_row]);
    }
    const double inv_pivot = 1.0 / a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      const double factor = a(i, col) * inv_pivot;
      if (factor == 0.0) continue;
      for (std::size_t j = col + 1; j < n; ++j) a(i, j) -= factor * a(col, j);
      b[i] -= factor * b[col];
    }
  }

  // Back substitution.
  std::vector<double> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double acc = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= a(ii, j) * x[j];
    x[ii] = acc / a(ii, ii);
  }
  return x;
}

}  // namespace fracvar
