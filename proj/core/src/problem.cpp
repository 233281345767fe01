#include "fracvar/problem.hpp"

#include <cmath>
#include <limits>

namespace fracvar {
namespace {

double fd_step(double v) {
  constexpr double cbrt_eps = 6.0554544523933429e-6;  // cbrt(2^-52)
  return (1.0 + std::fabs(v)) * cbrt_eps;
}

}  // namespace

Integrand with_finite_difference_partials(PointFn value) {
  Integrand out;
  out.dx = [value](double t, double x, double d) {
    const double e = fd_step(x);
    return (value(t, x + e, d) - value(t, x - e, d)) / (2.0 * e);
  };
  out.dd = [value](double t, double x, double d) {
    const double e = fd_step(d);
    return (value(t, x, d + e) - value(t, x, d - e)) / (2.0 * e);
  };
  out.value = std::move(value);
  return out;
}

Integrand augmented_integrand(const Integrand& lagrangian, const Integrand& g,
                              double lambda) {
  Integrand out;
  out.value = [L = lagrangian.value, gv = g.value, lambda](double t, double x, double d) {
    return L(t, x, d) + lambda * gv(t, x, d);
  };
  out.dx = [Lx = lagrangian.dx, gx = g.dx, lambda](double t, double x, double d) {
    return Lx(t, x, d) + lambda * gx(t, x, d);
  };
  out.dd = [Ld = lagrangian.dd, gd = g.dd, lambda](double t, double x, double d) {
    return Ld(t, x, d) + lambda * gd(t, x, d);
  };
  return out;
}

double max_partial_inconsistency(const Integrand& integrand,
                                 std::span<const std::array<double, 3>> probes) {
  const Integrand fd = with_finite_difference_partials(integrand.value);
  double worst = 0.0;
  for (const auto& [t, x, d] : probes) {
    const double rx = std::fabs(integrand.dx(t, x, d) - fd.dx(t, x, d)) /
                      (1.0 + std::fabs(fd.dx(t, x, d)));
    const double rd = std::fabs(integrand.dd(t, x, d) - fd.dd(t, x, d)) /
                      (1.0 + std::fabs(fd.dd(t, x, d)));
    worst = std::max(worst, std::max(rx, rd));
  }
  return worst;
}

}  // namespace fracvar
