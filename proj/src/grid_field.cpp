#include "lpl/grid_field.hpp"

#include "lpl/deformation.hpp"

#include <cmath>

namespace lpl {

GridField grid_from_function(int n, const std::function<Eigen::Vector3d(const Eigen::Vector3d&)>& f) {
  GridField field(n);
  for (long s = 0; s < field.sites(); ++s) field.values.col(s) = f(field.point(s));
  return field;
}

GridField pointwise_deform(const Eigen::Matrix3d& m, const GridField& v, const GridField& w) {
  if (v.n != w.n) throw std::invalid_argument("pointwise_deform: grid mismatch");
  GridField out(v.n);
  const Eigen::Matrix3d mt = m.transpose();
  for (long s = 0; s < v.sites(); ++s)
    out.values.col(s) = mt * v.values.col(s).cross(w.values.col(s));
  return out;
}

Eigen::Matrix3d local_type_iii_matrix() {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  m(1, 0) = 1.0;
  return m;
}

StructureTensor local_type_iii_tensor() { return deform(so3_cross_tensor(), local_type_iii_matrix()); }

GridField local_chiral_evolution(const GridField& h, const GridField& u0, double t) {
  if (h.n != u0.n) throw std::invalid_argument("local_chiral_evolution: grid mismatch");
  GridField out(u0.n);
  for (long s = 0; s < u0.sites(); ++s) {
    const double h1 = h.values(0, s), h3 = h.values(2, s);
    const double u1 = u0.values(0, s);
    const double decay = std::exp(-h3 * t);
    // integral of u1 over [0, t]
    const double iu1 = h3 != 0.0 ? u1 * (1.0 - decay) / h3 : u1 * t;
    out.values(0, s) = u1 * decay;
    out.values(1, s) = u0.values(1, s);
    out.values(2, s) = u0.values(2, s) + h1 * iu1;
  }
  return out;
}

GridField local_generic_evolution(const GridField& h, const GridField& u0, double t, double dt) {
  if (h.n != u0.n) throw std::invalid_argument("local_generic_evolution: grid mismatch");
  const StructureTensor tensor = local_type_iii_tensor();
  const long steps = std::lround(t / dt);
  GridField out = u0;
  for (long s = 0; s < u0.sites(); ++s) {
    const Eigen::Matrix3d a = coadjoint_matrix(tensor, Eigen::VectorXd(h.values.col(s)));
    Eigen::Vector3d u = u0.values.col(s);
    for (long step = 0; step < steps; ++step) {
      const Eigen::Vector3d k1 = a * u;
      const Eigen::Vector3d k2 = a * (u + 0.5 * dt * k1);
      const Eigen::Vector3d k3 = a * (u + 0.5 * dt * k2);
      const Eigen::Vector3d k4 = a * (u + dt * k3);
      u += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    out.values.col(s) = u;
  }
  return out;
}

Eigen::VectorXd local_decay_rates(const GridField& h) {
  return (-h.values.row(2)).transpose();
}

}  // namespace lpl
