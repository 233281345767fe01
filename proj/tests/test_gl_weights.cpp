#include "fracvar/gl_weights.hpp"

#include <cmath>

#include <doctest.h>

#include "fracvar/errors.hpp"
#include "fracvar/gamma_function.hpp"

using fracvar::FractionalOrder;
using fracvar::GLWeights;
using fracvar::gl_weights;

namespace {

// Independent oracle: the direct quotient (-1)^k Gamma(alpha+1) /
// (Gamma(alpha-k+1) k!). Usable for k up to ~60 before k! leaves double
// range; the implementation under test never touches this formula.
double weight_by_gamma_quotient(double alpha, int k) {
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= static_cast<double>(i);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * fracvar::gamma_function(alpha + 1.0) /
         (fracvar::gamma_function(alpha - k + 1.0) * factorial);
}

}  // namespace

TEST_SUITE("gl_weights") {

TEST_CASE("recurrence agrees with the gamma-quotient oracle") {
  for (const double alpha : {0.1, 0.25, 0.3, 0.5, 0.7, 0.75, 0.9}) {
    const GLWeights w = gl_weights(FractionalOrder(alpha), 50);
    for (int k = 0; k <= 50; ++k) {
      CHECK(std::fabs(w[static_cast<std::size_t>(k)] -
                      weight_by_gamma_quotient(alpha, k)) <= 1e-12);
    }
  }
}

TEST_CASE("leading weights") {
  const GLWeights w = gl_weights(FractionalOrder(0.5), 2);
  CHECK(w[0] == 1.0);
  CHECK(w[1] == -0.5);
  CHECK(w[2] == -0.125);

  CHECK(gl_weights(FractionalOrder(0.5), 0).values().size() == 1);
  for (const double alpha : {0.1, 0.33, 0.5, 0.77, 0.99}) {
    const GLWeights seq = gl_weights(FractionalOrder(alpha), 1);
    CHECK(seq[0] == 1.0);
    CHECK(std::fabs(seq[1] + alpha) <= 1e-15);
  }
}

TEST_CASE("sign pattern up to m = 1000") {
  for (const double alpha : {0.05, 0.25, 0.5, 0.75, 0.95}) {
    const GLWeights w = gl_weights(FractionalOrder(alpha), 1000);
    CHECK(w[0] > 0.0);
    for (std::size_t k = 1; k <= 1000; ++k) CHECK(w[k] < 0.0);
  }
}

TEST_CASE("partial sums positive and strictly decreasing") {
  for (const double alpha : {0.1, 0.5, 0.9}) {
    const GLWeights w = gl_weights(FractionalOrder(alpha), 1000);
    double sum = w[0];
    CHECK(sum > 0.0);
    for (std::size_t k = 1; k <= 1000; ++k) {
      const double next = sum + w[k];
      CHECK(next > 0.0);
      CHECK(next < sum);
      sum = next;
    }
  }
}

TEST_CASE("recurrence consistency of the stored sequence") {
  const GLWeights w = gl_weights(FractionalOrder(0.7), 200);
  for (std::size_t k = 1; k <= 200; ++k) {
    CHECK(w[k] == w[k - 1] * (1.0 - (0.7 + 1.0) / static_cast<double>(k)));
  }
}

TEST_CASE("extension on demand matches a fresh computation bit for bit") {
  GLWeights grown = gl_weights(FractionalOrder(0.3), 10);
  grown.extend(500);
  grown.extend(3);  // no-op
  const GLWeights fresh = gl_weights(FractionalOrder(0.3), 500);
  REQUIRE(grown.max_index() == 500);
  for (std::size_t k = 0; k <= 500; ++k) CHECK(grown[k] == fresh[k]);
}

TEST_CASE("bounds and order validation") {
  CHECK_THROWS_AS(gl_weights(FractionalOrder(0.5), 3)[4], fracvar::InvalidArgument);
  CHECK_THROWS_AS(FractionalOrder(0.0), fracvar::InvalidArgument);
  CHECK_THROWS_AS(FractionalOrder(1.0), fracvar::InvalidArgument);
  CHECK_THROWS_AS(FractionalOrder(-0.2), fracvar::InvalidArgument);
  CHECK_THROWS_AS(FractionalOrder(1.7), fracvar::InvalidArgument);
  CHECK(FractionalOrder(0.5).value() == 0.5);
}

}  // TEST_SUITE
