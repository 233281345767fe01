#include "fracvar/gamma_function.hpp"

#include <cmath>
#include <random>

#include <doctest.h>

#include "fracvar/errors.hpp"

using fracvar::gamma_function;

TEST_SUITE("gamma_function") {

TEST_CASE("exact and frozen reference values") {
  CHECK(gamma_function(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_function(2.0) == doctest::Approx(1.0).epsilon(1e-14));

  // 40-digit references: sqrt(pi), 0.75*sqrt(pi), 19!.
  CHECK(gamma_function(0.5) == doctest::Approx(1.7724538509055160273).epsilon(1e-13));
  CHECK(gamma_function(2.5) == doctest::Approx(1.3293403881791370205).epsilon(1e-13));
  CHECK(gamma_function(20.0) == doctest::Approx(121645100408832000.0).epsilon(1e-13));
}

TEST_CASE("relative error stays below 1e-13 on [0.5, 20]") {
  // glibc's tgamma is correctly rounded to a few ulp here and serves as the
  // independent reference.
  for (double z = 0.5; z <= 20.0; z += 0.0437) {
    const double reference = std::tgamma(z);
    CHECK(std::fabs(gamma_function(z) - reference) <= 1e-13 * std::fabs(reference));
  }
}

TEST_CASE("functional equation Gamma(z + 1) = z Gamma(z)") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> pick(0.51, 19.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double z = pick(rng);
    CHECK(gamma_function(z + 1.0) ==
          doctest::Approx(z * gamma_function(z)).epsilon(1e-12));
  }
}

TEST_CASE("reflection zone and negative non-integers") {
  CHECK(gamma_function(0.25) == doctest::Approx(3.6256099082219083119).epsilon(1e-13));
  // Gamma(-1/2) = -2 sqrt(pi), Gamma(-3/2) = 4 sqrt(pi) / 3.
  CHECK(gamma_function(-0.5) == doctest::Approx(-3.5449077018110320546).epsilon(1e-12));
  CHECK(gamma_function(-1.5) == doctest::Approx(2.3632718012073547031).epsilon(1e-12));
  // Deep reflection, as used by the weight-oracle quotient.
  CHECK(gamma_function(-48.5) == doctest::Approx(std::tgamma(-48.5)).epsilon(1e-11));
}

TEST_CASE("poles and non-finite input rejected") {
  CHECK_THROWS_AS(gamma_function(0.0), fracvar::GammaPoleError);
  CHECK_THROWS_AS(gamma_function(-1.0), fracvar::GammaPoleError);
  CHECK_THROWS_AS(gamma_function(-2.0), fracvar::GammaPoleError);
  CHECK_THROWS_AS(gamma_function(-17.0), fracvar::GammaPoleError);
  CHECK_THROWS_AS(gamma_function(std::nan("")), fracvar::InvalidArgument);
  CHECK_THROWS_AS(gamma_function(std::numeric_limits<double>::infinity()),
                  fracvar::InvalidArgument);
}

}  // TEST_SUITE
