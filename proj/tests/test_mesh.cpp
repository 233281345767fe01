#include "fracvar/mesh.hpp"

#include <doctest.h>

#include "fracvar/errors.hpp"

using fracvar::Mesh;

TEST_SUITE("mesh") {

TEST_CASE("points and step") {
  const Mesh mesh(0.0, 1.0, 10);
  CHECK(mesh.h() == 0.1);
  CHECK(mesh.point_count() == 11);
  CHECK(mesh.point(3) == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("endpoints are exact even when a + n*h rounds") {
  const Mesh mesh(0.1, 0.7, 7);
  CHECK(mesh.point(0) == 0.1);
  CHECK(mesh.point(7) == 0.7);
}

TEST_CASE("construction and access validation") {
  CHECK_THROWS_AS(Mesh(1.0, 1.0, 4), fracvar::InvalidArgument);
  CHECK_THROWS_AS(Mesh(2.0, 1.0, 4), fracvar::InvalidArgument);
  CHECK_THROWS_AS(Mesh(0.0, 1.0, 1), fracvar::InvalidArgument);
  CHECK_THROWS_AS(Mesh(0.0, 1.0, 4).point(5), fracvar::InvalidArgument);
}

}  // TEST_SUITE
