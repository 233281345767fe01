#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracvar/fractional_order.hpp"
#include "fracvar/gl_weights.hpp"
#include "fracvar/mesh.hpp"

namespace fracvar {

/// Discrete left Riemann-Liouville derivative of mesh samples:
///   d_i = h^{-alpha} * sum_{k=0}^{i} w_k * x_{i-k},   i = 0..n.
///
/// d_0 equals x_0 / h^alpha; the continuum derivative may be unbounded at the
/// left endpoint when x(a) != 0, so consumers normally use i >= 1 only.
std::vector<double> rl_derivative_on_mesh(std::span<const double> samples,
                                          FractionalOrder alpha,
                                          const Mesh& mesh);

/// Same, reusing an existing weight sequence (must cover index mesh.n()).
std::vector<double> rl_derivative_on_mesh(std::span<const double> samples,
                                          const GLWeights& weights,
                                          const Mesh& mesh);

/// Caputo derivative values recovered from Riemann-Liouville ones by the
/// boundary correction c_i = rl_i - x_a (t_i - a)^{-alpha} / Gamma(1 - alpha).
///
/// The correction is singular at the left endpoint when x_a != 0, in which
/// case index 0 is flagged undefined and at(0) throws SingularityError.
struct CaputoValues {
  std::vector<double> values;  ///< aligned with the mesh; [0] valid only if origin_defined
  bool origin_defined;

  double at(std::size_t i) const;
};

CaputoValues caputo_from_rl(std::span<const double> rl_values, double x_a,
                            FractionalOrder alpha, const Mesh& mesh);

}  // namespace fracvar
