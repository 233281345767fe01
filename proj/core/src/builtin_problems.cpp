#include "fracvar/builtin_problems.hpp"

#include <cmath>

#include "fracvar/errors.hpp"
#include "fracvar/gamma_function.hpp"

namespace fracvar {

ExampleProblem example_1() {
  const double c = 2.0 / gamma_function(2.5);

  Integrand L;
  L.value = [c](double t, double, double d) {
    const double r = d - c * std::pow(t, 1.5);
    return r * r;
  };
  L.dx = [](double, double, double) { return 0.0; };
  L.dd = [c](double t, double, double d) { return 2.0 * (d - c * std::pow(t, 1.5)); };

  return {"example-1",
          {std::move(L), FractionalOrder(0.5), 0.0, 1.0, 0.0, 1.0},
          std::nullopt,
          {[](double t) { return t * t; }, "x(t) = t^2"}};
}

ExampleProblem example_2() {
  const double a = 16.0 * gamma_function(6.0) / gamma_function(5.5);
  const double b = 20.0 * gamma_function(4.0) / gamma_function(3.5);
  const double c = 5.0 / gamma_function(1.5);
  const auto profile = [a, b, c](double t) {
    return a * std::pow(t, 4.5) - b * std::pow(t, 2.5) + c * std::sqrt(t);
  };

  Integrand L;
  L.value = [profile](double t, double, double d) {
    const double r = d - profile(t);
    const double r2 = r * r;
    return r2 * r2;
  };
  L.dx = [](double, double, double) { return 0.0; };
  L.dd = [profile](double t, double, double d) {
    const double r = d - profile(t);
    return 4.0 * r * r * r;
  };

  return {"example-2",
          {std::move(L), FractionalOrder(0.5), 0.0, 1.0, 0.0, 1.0},
          std::nullopt,
          {[](double t) { return 16.0 * std::pow(t, 5) - 20.0 * std::pow(t, 3) + 5.0 * t; },
           "x(t) = 16 t^5 - 20 t^3 + 5 t"}};
}

ExampleProblem example_3() {
  Integrand L;
  L.value = [](double t, double, double d) {
    const double t2 = t * t;
    return t2 * t2 + d * d;
  };
  L.dx = [](double, double, double) { return 0.0; };
  L.dd = [](double, double, double d) { return 2.0 * d; };

  Integrand g;
  g.value = [](double t, double, double d) { return t * t * d; };
  g.dx = [](double, double, double) { return 0.0; };
  g.dd = [](double t, double, double) { return t * t; };

  const double scale = 16.0 / (15.0 * gamma_function(0.5));

  return {"example-3",
          {std::move(L), FractionalOrder(0.5), 0.0, 1.0, 0.0, scale},
          IsoperimetricConstraint{std::move(g), 0.2},
          {[scale](double t) { return scale * std::pow(t, 2.5); },
           "x(t) = 16 t^2.5 / (15 Gamma(0.5))"}};
}

ExampleProblem builtin_example(int id) {
  switch (id) {
    case 1: return example_1();
    case 2: return example_2();
    case 3: return example_3();
    default: throw InvalidArgument("builtin example id must be 1, 2 or 3");
  }
}

}  // namespace fracvar
