#include "lpl/grid_field.hpp"

#include "lpl/deformation.hpp"

#include <doctest.h>

#include <cmath>

using namespace lpl;

namespace {

GridField constant_field(int n, const Eigen::Vector3d& v) {
  return grid_from_function(n, [v](const Eigen::Vector3d&) { return v; });
}

}  // namespace

TEST_SUITE("grid_field") {

TEST_CASE("pointwise deformation with the identity is the cross product") {
  const GridField v = grid_from_function(8, [](const Eigen::Vector3d& x) {
    return Eigen::Vector3d(std::sin(x.x()), std::cos(x.y()), x.z() / 7.0);
  });
  const GridField w = grid_from_function(8, [](const Eigen::Vector3d& x) {
    return Eigen::Vector3d(1.0, std::sin(x.z()), -0.5);
  });
  const GridField out = pointwise_deform(Eigen::Matrix3d::Identity(), v, w);
  for (long s = 0; s < out.sites(); ++s) {
    const Eigen::Vector3d expected = Eigen::Vector3d(v.values.col(s)).cross(Eigen::Vector3d(w.values.col(s)));
    CHECK((out.values.col(s) - expected).norm() < 1e-15);
  }
  // [v, v] = 0 pointwise
  CHECK(pointwise_deform(Eigen::Matrix3d::Identity(), v, v).values.norm() == 0.0);
}

TEST_CASE("pointwise type-III deformation matches the fiber algebra") {
  const StructureTensor fiber = local_type_iii_tensor();
  const GridField v = constant_field(4, {1.0, 0.0, 0.0});
  const GridField w = constant_field(4, {0.0, 0.0, 1.0});
  const GridField out = pointwise_deform(local_type_iii_matrix(), v, w);
  const Eigen::VectorXd expected = bracket(fiber, Eigen::Vector3d(1, 0, 0).eval(), Eigen::Vector3d(0, 0, 1).eval());
  for (long s = 0; s < out.sites(); ++s) CHECK((out.values.col(s) - expected).norm() == 0.0);
  // grid mismatch is an error
  CHECK_THROWS_AS(pointwise_deform(Eigen::Matrix3d::Identity(), v, constant_field(5, {1, 0, 0})),
                  std::invalid_argument);
}

TEST_CASE("the demo fiber algebra is a class-B type-III orientation") {
  const StructureTensor fiber = local_type_iii_tensor();
  CHECK(jacobi_residual(fiber) == 0.0);
  CHECK(classify(fiber).label == AlgebraClass::B);
  CHECK(derived_dim(fiber) == 1);
  // [e1, e3] = -e1
  CHECK((bracket(fiber, Eigen::Vector3d(1, 0, 0).eval(), Eigen::Vector3d(0, 0, 1).eval()) +
         Eigen::Vector3d(1, 0, 0))
            .norm() == 0.0);
}

TEST_CASE("closed-form local evolution: uniform h3 scales u1 by exp(-t)") {
  const GridField h = constant_field(8, {0.0, 0.0, 1.0});
  const GridField u0 = grid_from_function(8, [](const Eigen::Vector3d& x) {
    return Eigen::Vector3d(1.0 + std::sin(x.y()), 0.3, -0.2);
  });
  const GridField u1 = local_chiral_evolution(h, u0, 1.0);
  for (long s = 0; s < u0.sites(); ++s) {
    CHECK(u1.values(0, s) == doctest::Approx(u0.values(0, s) * std::exp(-1.0)).epsilon(1e-14));
    CHECK(u1.values(1, s) == u0.values(1, s));
    CHECK(u1.values(2, s) == u0.values(2, s));  // h1 = 0 here
  }
  // t = 0 is the identity
  const GridField u_same = local_chiral_evolution(h, u0, 0.0);
  CHECK((u_same.values - u0.values).norm() == 0.0);
}

TEST_CASE("spatially varying h3 = 1 + cos(x) produces a continuum of rates") {
  const int n = 16;
  const GridField h = grid_from_function(n, [](const Eigen::Vector3d& x) {
    return Eigen::Vector3d(0.0, 0.0, 1.0 + std::cos(x.x()));
  });
  const Eigen::VectorXd rates = local_decay_rates(h);
  CHECK(rates.minCoeff() == doctest::Approx(-2.0));
  CHECK(rates.maxCoeff() < 1e-12);
  // n distinct rates across the x-axis
  std::vector<double> distinct;
  for (int i = 0; i < n; ++i) {
    const double r = rates(i);
    bool seen = false;
    for (double d : distinct) seen = seen || std::abs(d - r) < 1e-12;
    if (!seen) distinct.push_back(r);
  }
  CHECK(distinct.size() >= size_t(n / 2));
}

TEST_CASE("closed form agrees with generic rk4 integration to 1e-8") {
  const int n = 8;
  const GridField h = grid_from_function(n, [](const Eigen::Vector3d& x) {
    return Eigen::Vector3d(0.5 * std::sin(x.y()), 0.0, 1.0 + std::cos(x.x()));
  });
  const GridField u0 = grid_from_function(n, [](const Eigen::Vector3d& x) {
    return Eigen::Vector3d(1.0 + 0.25 * std::cos(x.z()), 0.5, 0.25 * std::sin(x.y()));
  });
  const GridField closed = local_chiral_evolution(h, u0, 1.0);
  const GridField generic = local_generic_evolution(h, u0, 1.0, 1e-3);
  CHECK((closed.values - generic.values).cwiseAbs().maxCoeff() < 1e-8);
  // the u2 component is untouched by either route
  CHECK((closed.values.row(1) - u0.values.row(1)).norm() == 0.0);
}

TEST_CASE("u3 accumulates h1 times the integral of u1") {
  const GridField h = constant_field(4, {2.0, 0.0, 1.0});
  const GridField u0 = constant_field(4, {1.0, 0.0, 0.0});
  const double t = 0.7;
  const GridField out = local_chiral_evolution(h, u0, t);
  const double expected_u3 = 2.0 * (1.0 - std::exp(-t));  // h1 (1 - e^{-h3 t}) / h3
  for (long s = 0; s < out.sites(); ++s)
    CHECK(out.values(2, s) == doctest::Approx(expected_u3).epsilon(1e-14));
  // h3 = 0 branch: linear growth
  const GridField h0 = constant_field(4, {2.0, 0.0, 0.0});
  const GridField lin = local_chiral_evolution(h0, u0, t);
  for (long s = 0; s < lin.sites(); ++s)
    CHECK(lin.values(2, s) == doctest::Approx(2.0 * t).epsilon(1e-14));
}

}  // TEST_SUITE
