#pragma once

#include <cstddef>

#include "fracvar/errors.hpp"

namespace fracvar {

/// Regular grid t_i = a + i*h over [a, b] with n subintervals.
///
/// Points are computed as a + i*h (never by accumulation) and the two
/// endpoints are returned exactly as given.
class Mesh {
 public:
  Mesh(double a, double b, std::size_t n) : a_(a), b_(b), n_(n) {
    if (!(b > a)) throw InvalidArgument("mesh requires b > a");
    if (n < 2) throw InvalidArgument("mesh requires n >= 2");
    h_ = (b - a) / static_cast<double>(n);
    if (!(h_ > 0.0)) throw InvalidArgument("mesh step underflowed to zero");
  }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  std::size_t n() const noexcept { return n_; }
  double h() const noexcept { return h_; }

  /// Number of grid points, n + 1.
  std::size_t point_count() const noexcept { return n_ + 1; }

  double point(std::size_t i) const {
    if (i > n_) throw InvalidArgument("mesh point index out of range");
    if (i == 0) return a_;
    if (i == n_) return b_;
    return a_ + static_cast<double>(i) * h_;
  }

 private:
  double a_;
  double b_;
  std::size_t n_;
  double h_;
};

}  // namespace fracvar
