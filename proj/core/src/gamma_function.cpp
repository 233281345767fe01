#include "fracvar/gamma_function.hpp"

#include <array>
#include <cmath>

#include "fracvar/errors.hpp"

namespace fracvar {
namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's set).
constexpr double kG = 7.0;
constexpr std::array<double, 9> kCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Valid for z >= 0.5.
double lanczos(double z) {
  const double zm1 = z - 1.0;
  double series = kCoefficients[0];
  for (std::size_t k = 1; k < kCoefficients.size(); ++k) {
    series += kCoefficients[k] / (zm1 + static_cast<double>(k));
  }
  const double t = zm1 + kG + 0.5;
  constexpr double kSqrtTwoPi = 2.5066282746310005024;
  return kSqrtTwoPi * std::pow(t, zm1 + 0.5) * std::exp(-t) * series;
}

}  // namespace

double gamma_function(double z) {
  if (!std::isfinite(z)) {
    throw InvalidArgument("gamma_function requires a finite argument");
  }
  if (z <= 0.0 && z == std::floor(z)) {
    throw GammaPoleError("gamma_function has a pole at zero and the negative integers");
  }
  if (z < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    constexpr double kPi = 3.14159265358979323846;
    return kPi / (std::sin(kPi * z) * lanczos(1.0 - z));
  }
  return lanczos(z);
}

}  // namespace fracvar
