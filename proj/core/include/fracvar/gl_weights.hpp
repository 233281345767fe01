#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracvar/fractional_order.hpp"

namespace fracvar {

/// Grunwald-Letnikov weight sequence w_k = (-1)^k C(alpha, k) for k = 0..m.
///
/// Weights follow the multiplicative recurrence
///   w_0 = 1,  w_k = w_{k-1} * (1 - (alpha + 1) / k),
/// which is stable for large k where the direct gamma-quotient form is not.
/// For alpha in (0, 1): w_0 = 1, every later weight is negative, and the
/// partial sums stay positive while strictly decreasing.
///
/// An instance acts as a per-solver cache: it is grown on demand with
/// extend() and never shared mutably between concurrent solves.
class GLWeights {
 public:
  GLWeights(FractionalOrder alpha, std::size_t m);

  FractionalOrder order() const noexcept { return alpha_; }

  /// Largest index currently available.
  std::size_t max_index() const noexcept { return w_.size() - 1; }

  /// Bounds-checked access to w_k.
  double operator[](std::size_t k) const;

  /// Grow the sequence so that max_index() >= m; no-op if already large enough.
  void extend(std::size_t m);

  /// Unchecked view of the whole sequence, for hot loops.
  std::span<const double> values() const noexcept { return w_; }

 private:
  FractionalOrder alpha_;
  std::vector<double> w_;
};

/// Weight sequence w_0..w_m for the given order.
GLWeights gl_weights(FractionalOrder alpha, std::size_t m);

}  // namespace fracvar
