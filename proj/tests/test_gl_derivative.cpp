#include "fracvar/gl_derivative.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "fracvar/errors.hpp"
#include "fracvar/gamma_function.hpp"

using fracvar::caputo_from_rl;
using fracvar::FractionalOrder;
using fracvar::GLWeights;
using fracvar::Mesh;
using fracvar::rl_derivative_on_mesh;

namespace {

std::vector<double> sample(const Mesh& mesh, double (*f)(double)) {
  std::vector<double> x(mesh.point_count());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = f(mesh.point(i));
  return x;
}

}  // namespace

TEST_SUITE("gl_derivative") {

TEST_CASE("zero input gives zero output") {
  const Mesh mesh(0.0, 1.0, 32);
  const std::vector<double> zero(mesh.point_count(), 0.0);
  for (const double d : rl_derivative_on_mesh(zero, FractionalOrder(0.4), mesh)) {
    CHECK(d == 0.0);
  }
}

TEST_CASE("linearity over random sample vectors") {
  const Mesh mesh(0.0, 2.0, 64);
  const FractionalOrder alpha(0.6);
  std::mt19937 rng(7011);
  std::uniform_real_distribution<double> pick(-1.0, 1.0);

  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> x(mesh.point_count()), y(mesh.point_count());
    for (auto& v : x) v = pick(rng);
    for (auto& v : y) v = pick(rng);
    const double c1 = 1.7, c2 = -0.6;

    std::vector<double> combined(mesh.point_count());
    for (std::size_t i = 0; i < combined.size(); ++i) combined[i] = c1 * x[i] + c2 * y[i];

    const auto d_combined = rl_derivative_on_mesh(combined, alpha, mesh);
    const auto d_x = rl_derivative_on_mesh(x, alpha, mesh);
    const auto d_y = rl_derivative_on_mesh(y, alpha, mesh);
    for (std::size_t i = 0; i < combined.size(); ++i) {
      CHECK(std::fabs(d_combined[i] - (c1 * d_x[i] + c2 * d_y[i])) <= 1e-12);
    }
  }
}

TEST_CASE("constant one reproduces the scaled partial weight sums") {
  const Mesh mesh(0.0, 1.0, 50);
  const FractionalOrder alpha(0.5);
  const GLWeights weights(alpha, mesh.n());
  const std::vector<double> ones(mesh.point_count(), 1.0);
  const auto d = rl_derivative_on_mesh(ones, weights, mesh);

  const double inv_h_alpha = std::pow(mesh.h(), -alpha.value());
  double partial_sum = 0.0;
  for (std::size_t i = 0; i <= mesh.n(); ++i) {
    partial_sum += weights[i];
    // same accumulation order as the implementation, so bit-equal
    CHECK(d[i] == inv_h_alpha * partial_sum);
  }
}

TEST_CASE("first-order consistency for x = t^2 away from the origin layer") {
  // Reference: the closed-form derivative 2 t^1.5 / Gamma(2.5). The layer
  // near t = 0 is excluded (i >= n/4); the interior error must shrink as the
  // mesh refines.
  const double c = 2.0 / fracvar::gamma_function(2.5);
  double previous = std::numeric_limits<double>::infinity();
  for (const std::size_t n : {32u, 64u, 128u, 256u}) {
    const Mesh mesh(0.0, 1.0, n);
    const auto d = rl_derivative_on_mesh(sample(mesh, [](double t) { return t * t; }),
                                         FractionalOrder(0.5), mesh);
    double err = 0.0;
    for (std::size_t i = n / 4; i <= n; ++i) {
      err = std::max(err, std::fabs(d[i] - c * std::pow(mesh.point(i), 1.5)));
    }
    CHECK(err < previous);
    previous = err;
  }
}

TEST_CASE("length and weight-coverage validation") {
  const Mesh mesh(0.0, 1.0, 16);
  const std::vector<double> short_vec(mesh.point_count() - 1, 0.0);
  CHECK_THROWS_AS(rl_derivative_on_mesh(short_vec, FractionalOrder(0.5), mesh),
                  fracvar::InvalidArgument);

  const std::vector<double> ok(mesh.point_count(), 0.0);
  const GLWeights too_short(FractionalOrder(0.5), mesh.n() - 1);
  CHECK_THROWS_AS(rl_derivative_on_mesh(ok, too_short, mesh), fracvar::InvalidArgument);
}

TEST_CASE("caputo equals riemann-liouville when x(a) = 0") {
  const Mesh mesh(0.0, 1.0, 40);
  const auto rl = rl_derivative_on_mesh(sample(mesh, [](double t) { return t * t; }),
                                        FractionalOrder(0.5), mesh);
  const auto caputo = caputo_from_rl(rl, 0.0, FractionalOrder(0.5), mesh);
  CHECK(caputo.origin_defined);
  for (std::size_t i = 0; i <= mesh.n(); ++i) CHECK(caputo.at(i) == rl[i]);
}

TEST_CASE("caputo of a constant decays with the step") {
  // Continuum value is zero; the discrete defect at fixed t = 0.5 is the GL
  // truncation error and must shrink as h does.
  const FractionalOrder alpha(0.5);
  double previous = std::numeric_limits<double>::infinity();
  for (const std::size_t n : {64u, 128u, 256u}) {
    const Mesh mesh(0.0, 1.0, n);
    const std::vector<double> ones(mesh.point_count(), 1.0);
    const auto caputo =
        caputo_from_rl(rl_derivative_on_mesh(ones, alpha, mesh), 1.0, alpha, mesh);
    const double defect = std::fabs(caputo.at(n / 2));
    CHECK(defect < previous);
    previous = defect;
  }
}

TEST_CASE("caputo left endpoint is flagged singular when x(a) != 0") {
  const Mesh mesh(0.0, 1.0, 8);
  const std::vector<double> ones(mesh.point_count(), 1.0);
  const auto caputo =
      caputo_from_rl(rl_derivative_on_mesh(ones, FractionalOrder(0.3), mesh), 1.0,
                     FractionalOrder(0.3), mesh);
  CHECK_FALSE(caputo.origin_defined);
  CHECK_THROWS_AS(caputo.at(0), fracvar::SingularityError);
  CHECK_NOTHROW(caputo.at(1));
  CHECK_THROWS_AS(caputo.at(mesh.n() + 1), fracvar::InvalidArgument);
}

}  // TEST_SUITE
