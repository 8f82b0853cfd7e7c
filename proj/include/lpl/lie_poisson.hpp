#pragma once

#include "lpl/smooth_function.hpp"
#include "lpl/structure_tensor.hpp"

#include <string>
#include <vector>

namespace lpl {

/// Lie-Poisson matrix J_{jk}(xi) = c^l_{jk} xi_l; antisymmetric, linear in xi.
template <typename Scalar>
typename StructureTensorT<Scalar>::Matrix poisson_matrix(const StructureTensorT<Scalar>& c,
                                                         const typename StructureTensorT<Scalar>::Vector& xi) {
  if (xi.size() != c.dim()) throw std::invalid_argument("poisson_matrix: dimension mismatch");
  typename StructureTensorT<Scalar>::Matrix j =
      StructureTensorT<Scalar>::Matrix::Zero(c.dim(), c.dim());
  for (int l = 0; l < c.dim(); ++l) j += xi(l) * c.component(l);
  return j;
}

/// A Lie-Poisson system: bracket tensor, Hamiltonian with analytic gradient,
/// and the known Casimirs. Construction cross-checks the supplied gradient
/// against central differences at a few sample points.
struct LiePoissonSystem {
  std::string name;
  StructureTensor tensor;
  SmoothFunction hamiltonian;
  std::vector<CasimirFunction> casimirs;
};

/// Builds a system and runs the finite-difference gradient consistency check
/// (central differences, h = 1e-6 (1 + |xi|), relative tolerance 1e-6).
LiePoissonSystem make_system(std::string name, StructureTensor tensor, SmoothFunction hamiltonian,
                             std::vector<CasimirFunction> casimirs = {});

/// {G, H}(xi) = <dG, J(xi) dH>; antisymmetric in (G, H).
double bracket_eval(const LiePoissonSystem& sys, const SmoothFunction& g, const SmoothFunction& h,
                    const Eigen::VectorXd& xi);

/// Hamiltonian vector field J(xi) dH(xi).
Eigen::VectorXd vector_field(const LiePoissonSystem& sys, const Eigen::VectorXd& xi);

/// Energy-Casimir function F = H + sum_i mu_i C_i with analytic gradient
/// (and Hessian if every ingredient provides one).
SmoothFunction energy_casimir(const LiePoissonSystem& sys, const std::vector<double>& multipliers);

struct RankProfile {
  int rank = 0;     // rank of J(xi); even
  int nullity = 0;  // n - rank
};

RankProfile rank_profile(const StructureTensor& c, const Eigen::VectorXd& xi, double tol = 1e-10);

enum class Scheme { rk4, midpoint };

Scheme parse_scheme(const std::string& name);

struct IntegrationOptions {
  Scheme scheme = Scheme::rk4;
  /// Casimir drift is only accounted where margin(xi) exceeds this guard,
  /// keeping singular Casimirs away from their validity-domain boundaries.
  double domain_guard = 1e-3;
  int log_stride = 1;  // record every log_stride-th step (step 0 and final always)
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;
  std::vector<double> hamiltonian_log;
  std::vector<std::vector<double>> casimir_logs;  // one log per casimir; NaN outside domain

  bool blew_up = false;
  std::string diagnostic;

  double hamiltonian_drift = 0.0;       // max relative drift over the run
  std::vector<double> casimir_drifts;   // per casimir, within the guarded domain
};

/// Fixed-step explicit integration of d(xi)/dt = J(xi) dH with per-step
/// invariant logging. Nonfinite states truncate the trajectory and set the
/// blow-up diagnostic.
Trajectory integrate(const LiePoissonSystem& sys, const Eigen::VectorXd& xi0, double dt, double t_final,
                     const IntegrationOptions& options = {});

/// Pitching-rolling-spinning rattleback system: J rows (0,0,alpha P),
/// (0,0,-R), (-alpha P, R, 0) and H = 1/2 (P^2 + R^2 + S^2). Carries the
/// Casimir R |P|^(1/alpha) on {P != 0}.
LiePoissonSystem prs_system(double alpha);

/// Euler top on so(3)*: H = sum xi_j^2 / I_j by default, or with a 1/2
/// factor when half_factor is set; Casimir 1/2 |xi|^2.
LiePoissonSystem euler_top(const Eigen::Vector3d& inertia, bool half_factor = false);

/// H = 1/2 |xi|^2 in any dimension, with analytic Hessian.
SmoothFunction quadratic_energy(int dim);

}  // namespace lpl
