#include "fracvar/gl_derivative.hpp"

#include <cmath>

#include "fracvar/errors.hpp"
#include "fracvar/gamma_function.hpp"

namespace fracvar {

std::vector<double> rl_derivative_on_mesh(std::span<const double> samples,
                                          FractionalOrder alpha,
                                          const Mesh& mesh) {
  return rl_derivative_on_mesh(samples, GLWeights(alpha, mesh.n()), mesh);
}

std::vector<double> rl_derivative_on_mesh(std::span<const double> samples,
                                          const GLWeights& weights,
                                          const Mesh& mesh) {
  const std::size_t n = mesh.n();
  if (samples.size() != n + 1) {
    throw InvalidArgument("rl_derivative_on_mesh: samples must have n + 1 entries");
  }
  if (weights.max_index() < n) {
    throw InvalidArgument("rl_derivative_on_mesh: weight sequence too short");
  }
  const double inv_h_alpha = std::pow(mesh.h(), -weights.order().value());
  const std::span<const double> w = weights.values();

  std::vector<double> d(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k <= i; ++k) {
      acc += w[k] * samples[i - k];
    }
    d[i] = inv_h_alpha * acc;
  }
  return d;
}

double CaputoValues::at(std::size_t i) const {
  if (i >= values.size()) throw InvalidArgument("CaputoValues index out of range");
  if (i == 0 && !origin_defined) {
    throw SingularityError(
        "Caputo correction is singular at the left endpoint when x(a) != 0");
  }
  return values[i];
}

CaputoValues caputo_from_rl(std::span<const double> rl_values, double x_a,
                            FractionalOrder alpha, const Mesh& mesh) {
  const std::size_t n = mesh.n();
  if (rl_values.size() != n + 1) {
    throw InvalidArgument("caputo_from_rl: values must have n + 1 entries");
  }
  CaputoValues out;
  out.values.resize(n + 1);
  out.origin_defined = (x_a == 0.0);
  out.values[0] = out.origin_defined ? rl_values[0] : 0.0;

  const double a = mesh.a();
  const double scale = x_a / gamma_function(1.0 - alpha.value());
  for (std::size_t i = 1; i <= n; ++i) {
    const double correction =
        (x_a == 0.0) ? 0.0 : scale * std::pow(mesh.point(i) - a, -alpha.value());
    out.values[i] = rl_values[i] - correction;
  }
  return out;
}

}  // namespace fracvar
