#pragma once

#include "lpl/structure_tensor.hpp"

#include <Eigen/Dense>

#include <functional>

namespace lpl {

/// A 3-vector field sampled on the uniform n^3 lattice of [0, 2pi)^3,
/// one column per site (x fastest, then y, then z).
struct GridField {
  int n = 0;
  Eigen::Matrix3Xd values;

  GridField() = default;
  explicit GridField(int points) : n(points), values(Eigen::Matrix3Xd::Zero(3, std::size_t(points) * points * points)) {}

  long site(int i, int j, int k) const { return (long(k) * n + j) * n + i; }
  Eigen::Vector3d point(long s) const {
    const double step = 2.0 * EIGEN_PI / n;
    return {step * (s % n), step * ((s / n) % n), step * (s / (long(n) * n))};
  }
  long sites() const { return values.cols(); }
};

GridField grid_from_function(int n, const std::function<Eigen::Vector3d(const Eigen::Vector3d&)>& f);

/// Fiberwise deformed bracket: out(x) = M^T (v(x) x w(x)).
GridField pointwise_deform(const Eigen::Matrix3d& m, const GridField& v, const GridField& w);

/// Type-III deformation matrix in the orientation whose singular-point flow
/// damps the first component (rate field -h3); its deformed table is
/// [e1,e3] = -e1.
Eigen::Matrix3d local_type_iii_matrix();

/// The deformed tensor used by the local chirality demo.
StructureTensor local_type_iii_tensor();

/// Closed-form fiberwise evolution of the linearized type-III system at the
/// singular section u1 = 0:
///   u1(x,t) = u1(x,0) exp(-h3(x) t),  u2 constant,
///   u3(x,t) = u3(x,0) + h1(x) * integral of u1.
GridField local_chiral_evolution(const GridField& h, const GridField& u0, double t);

/// Same flow integrated generically: rk4 on du/dt = A(x) u with the fiberwise
/// coadjoint generator A(x) = coadjoint_matrix(local tensor, h(x)).
GridField local_generic_evolution(const GridField& h, const GridField& u0, double t, double dt = 1e-3);

/// The pointwise exponential rates -h3(x): a continuum of decay constants.
Eigen::VectorXd local_decay_rates(const GridField& h);

}  // namespace lpl
