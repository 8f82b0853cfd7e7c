#include "lpl/lie_poisson.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <random>

namespace lpl {

namespace {

void check_gradient_consistency(const std::string& name, const SmoothFunction& f, int dim) {
  if (!f.value || !f.gradient) throw std::invalid_argument(name + ": hamiltonian needs value and gradient");
  std::mt19937_64 rng(0x5eedULL);  // fixed probe points; the check must be deterministic
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int probe = 0; probe < 5; ++probe) {
    Eigen::VectorXd xi(dim);
    for (int i = 0; i < dim; ++i) xi(i) = unit(rng);
    const double h = 1e-6 * (1.0 + xi.norm());
    const Eigen::VectorXd grad = f.gradient(xi);
    double scale = 1.0 + grad.cwiseAbs().maxCoeff();
    for (int i = 0; i < dim; ++i) {
      Eigen::VectorXd hi = xi, lo = xi;
      hi(i) += h;
      lo(i) -= h;
      const double fd = (f.value(hi) - f.value(lo)) / (2.0 * h);
      if (std::abs(fd - grad(i)) > 1e-6 * scale)
        throw std::invalid_argument(name + ": analytic gradient disagrees with finite differences");
    }
  }
}

double relative_drift(double value, double reference) {
  const double denom = std::abs(reference) > 1e-12 ? std::abs(reference) : 1.0;
  return std::abs(value - reference) / denom;
}

}  // namespace

LiePoissonSystem make_system(std::string name, StructureTensor tensor, SmoothFunction hamiltonian,
                             std::vector<CasimirFunction> casimirs) {
  check_gradient_consistency(name, hamiltonian, tensor.dim());
  return LiePoissonSystem{std::move(name), std::move(tensor), std::move(hamiltonian), std::move(casimirs)};
}

double bracket_eval(const LiePoissonSystem& sys, const SmoothFunction& g, const SmoothFunction& h,
                    const Eigen::VectorXd& xi) {
  return g.gradient(xi).dot(poisson_matrix(sys.tensor, xi) * h.gradient(xi));
}

Eigen::VectorXd vector_field(const LiePoissonSystem& sys, const Eigen::VectorXd& xi) {
  return poisson_matrix(sys.tensor, xi) * sys.hamiltonian.gradient(xi);
}

SmoothFunction energy_casimir(const LiePoissonSystem& sys, const std::vector<double>& multipliers) {
  if (multipliers.size() != sys.casimirs.size())
    throw std::invalid_argument("energy_casimir: one multiplier per casimir required");
  SmoothFunction h = sys.hamiltonian;
  std::vector<CasimirFunction> cs = sys.casimirs;
  std::vector<double> mu = multipliers;
  SmoothFunction f;
  f.value = [h, cs, mu](const Eigen::VectorXd& xi) {
    double v = h.value(xi);
    for (size_t i = 0; i < cs.size(); ++i) v += mu[i] * cs[i].value(xi);
    return v;
  };
  f.gradient = [h, cs, mu](const Eigen::VectorXd& xi) {
    Eigen::VectorXd g = h.gradient(xi);
    for (size_t i = 0; i < cs.size(); ++i) g += mu[i] * cs[i].gradient(xi);
    return g;
  };
  bool all_hessians = static_cast<bool>(h.hessian);
  for (const CasimirFunction& c : cs) all_hessians = all_hessians && static_cast<bool>(c.f.hessian);
  if (all_hessians) {
    f.hessian = [h, cs, mu](const Eigen::VectorXd& xi) {
      Eigen::MatrixXd m = h.hessian(xi);
      for (size_t i = 0; i < cs.size(); ++i) m += mu[i] * cs[i].f.hessian(xi);
      return m;
    };
  }
  return f;
}

RankProfile rank_profile(const StructureTensor& c, const Eigen::VectorXd& xi, double tol) {
  const Eigen::MatrixXd j = poisson_matrix(c, xi);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(j);
  const double cutoff = tol * std::max(1.0, svd.singularValues().size() ? svd.singularValues()(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cutoff) ++rank;
  return {rank, c.dim() - rank};
}

Scheme parse_scheme(const std::string& name) {
  if (name == "rk4") return Scheme::rk4;
  if (name == "midpoint") return Scheme::midpoint;
  throw std::invalid_argument("unknown scheme '" + name + "' (expected rk4 or midpoint)");
}

Trajectory integrate(const LiePoissonSystem& sys, const Eigen::VectorXd& xi0, double dt, double t_final,
                     const IntegrationOptions& options) {
  if (!(dt > 0.0) || !(t_final >= dt)) throw std::invalid_argument("integrate: need dt > 0 and T >= dt");
  const long steps = std::lround(t_final / dt);
  const int stride = std::max(1, options.log_stride);

  Trajectory traj;
  traj.casimir_logs.resize(sys.casimirs.size());
  traj.casimir_drifts.assign(sys.casimirs.size(), 0.0);

  std::vector<double> casimir_refs(sys.casimirs.size(), 0.0);
  std::vector<bool> casimir_has_ref(sys.casimirs.size(), false);
  std::vector<Eigen::VectorXd> casimir_signatures(sys.casimirs.size());
  double h_ref = 0.0;

  auto rhs = [&sys](const Eigen::VectorXd& xi) { return vector_field(sys, xi); };

  auto log_state = [&](double t, const Eigen::VectorXd& xi) {
    traj.times.push_back(t);
    traj.states.push_back(xi);
    const double h = sys.hamiltonian.value(xi);
    traj.hamiltonian_log.push_back(h);
    if (traj.times.size() == 1) h_ref = h;
    traj.hamiltonian_drift = std::max(traj.hamiltonian_drift, relative_drift(h, h_ref));
    for (size_t ci = 0; ci < sys.casimirs.size(); ++ci) {
      const CasimirFunction& c = sys.casimirs[ci];
      // Singular Casimirs are discontinuous across their domain boundary, so
      // the drift reference restarts whenever the orbit leaves the guarded
      // domain or a boundary coordinate changes sign between samples.
      if (c.domain_signature) {
        const Eigen::VectorXd signature = c.domain_signature(xi);
        if (casimir_signatures[ci].size() &&
            (signature.array() * casimir_signatures[ci].array() <= 0.0).any())
          casimir_has_ref[ci] = false;
        casimir_signatures[ci] = signature;
      }
      if (c.in_domain(xi, options.domain_guard)) {
        const double v = c.value(xi);
        traj.casimir_logs[ci].push_back(v);
        if (!casimir_has_ref[ci]) {
          casimir_refs[ci] = v;
          casimir_has_ref[ci] = true;
        }
        traj.casimir_drifts[ci] = std::max(traj.casimir_drifts[ci], relative_drift(v, casimir_refs[ci]));
      } else {
        traj.casimir_logs[ci].push_back(std::numeric_limits<double>::quiet_NaN());
        casimir_has_ref[ci] = false;
      }
    }
  };

  Eigen::VectorXd xi = xi0;
  log_state(0.0, xi);
  for (long step = 1; step <= steps; ++step) {
    if (options.scheme == Scheme::rk4) {
      const Eigen::VectorXd k1 = rhs(xi);
      const Eigen::VectorXd k2 = rhs(xi + 0.5 * dt * k1);
      const Eigen::VectorXd k3 = rhs(xi + 0.5 * dt * k2);
      const Eigen::VectorXd k4 = rhs(xi + dt * k3);
      xi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    } else {
      const Eigen::VectorXd k1 = rhs(xi);
      xi += dt * rhs(xi + 0.5 * dt * k1);
    }
    if (!xi.allFinite()) {
      traj.blew_up = true;
      traj.diagnostic = "nonfinite state at t = " + std::to_string(step * dt) + "; trajectory truncated";
      break;
    }
    if (step % stride == 0 || step == steps) log_state(step * dt, xi);
  }
  return traj;
}

SmoothFunction quadratic_energy(int dim) {
  SmoothFunction f;
  f.value = [](const Eigen::VectorXd& xi) { return 0.5 * xi.squaredNorm(); };
  f.gradient = [](const Eigen::VectorXd& xi) { return xi; };
  f.hessian = [dim](const Eigen::VectorXd&) { return Eigen::MatrixXd(Eigen::MatrixXd::Identity(dim, dim)); };
  return f;
}

LiePoissonSystem prs_system(double alpha) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("prs_system: alpha must be finite");
  // [e1,e3] = alpha e1, [e2,e3] = -e2, so J(xi) has rows
  // (0,0,alpha P), (0,0,-R), (-alpha P, R, 0) with xi = (P,R,S).
  StructureTensor c(3, {{0, 0, 2, alpha}, {1, 1, 2, -1.0}});

  CasimirFunction casimir;
  casimir.name = "R|P|^(1/alpha)";
  casimir.f.value = [alpha](const Eigen::VectorXd& xi) { return xi(1) * std::pow(std::abs(xi(0)), 1.0 / alpha); };
  casimir.f.gradient = [alpha](const Eigen::VectorXd& xi) {
    const double p = std::pow(std::abs(xi(0)), 1.0 / alpha);
    Eigen::VectorXd g(3);
    g << xi(1) * p / (alpha * xi(0)), p, 0.0;
    return g;
  };
  casimir.domain_signature = [](const Eigen::VectorXd& xi) { return Eigen::VectorXd(xi.segment(0, 1)); };

  return make_system("prs", std::move(c), quadratic_energy(3), {std::move(casimir)});
}

LiePoissonSystem euler_top(const Eigen::Vector3d& inertia, bool half_factor) {
  if (!(inertia.array() > 0.0).all()) throw std::invalid_argument("euler_top: moments of inertia must be positive");
  const double factor = half_factor ? 0.5 : 1.0;
  const Eigen::Vector3d inv = inertia.cwiseInverse();

  SmoothFunction h;
  h.value = [inv, factor](const Eigen::VectorXd& xi) {
    return factor * (xi.array().square() * inv.array()).sum();
  };
  h.gradient = [inv, factor](const Eigen::VectorXd& xi) {
    return Eigen::VectorXd(2.0 * factor * xi.cwiseProduct(Eigen::VectorXd(inv)));
  };
  h.hessian = [inv, factor](const Eigen::VectorXd&) {
    return Eigen::MatrixXd((2.0 * factor * inv).asDiagonal());
  };

  CasimirFunction casimir;
  casimir.name = "1/2 |xi|^2";
  casimir.f.value = [](const Eigen::VectorXd& xi) { return 0.5 * xi.squaredNorm(); };
  casimir.f.gradient = [](const Eigen::VectorXd& xi) { return xi; };
  casimir.f.hessian = [](const Eigen::VectorXd&) { return Eigen::MatrixXd(Eigen::MatrixXd::Identity(3, 3)); };

  return make_system("euler-top", so3_cross_tensor(), std::move(h), {std::move(casimir)});
}

}  // namespace lpl
