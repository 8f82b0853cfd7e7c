#pragma once

#include "lpl/lie_poisson.hpp"

#include <complex>
#include <random>
#include <vector>

namespace lpl {

enum class EquilibriumKind { regular, singular, generic, not_equilibrium };

std::string to_string(EquilibriumKind k);

/// xi_e is singular when J(xi_e) = 0; a regular equilibrium when the
/// energy-Casimir gradient vanishes with J(xi_e) != 0; generic when J dF = 0
/// through a nontrivial kernel alignment; otherwise not an equilibrium.
EquilibriumKind classify_equilibrium(const LiePoissonSystem& sys, const Eigen::VectorXd& xi,
                                     const SmoothFunction& f, double tol = 1e-9);

enum class Provenance { regular, singular };

/// Generator of a linearized flow d(xi~)/dt = A xi~, together with how it was
/// produced. Singular provenance keeps the frozen gradient h = dH(xi_s), for
/// which A(j, a) = c^a_{jk} h^k = coadjoint_matrix(c, h).
struct LinearGenerator {
  Eigen::MatrixXd a;
  Provenance provenance = Provenance::singular;
  Eigen::VectorXd h;      // frozen gradient (singular case)
  Eigen::VectorXd point;  // expansion point
};

LinearGenerator linearize_singular(const LiePoissonSystem& sys, const Eigen::VectorXd& xi_s, double tol = 1e-9);

/// Generator assembled directly from a tensor and a frozen gradient vector.
LinearGenerator singular_generator(const StructureTensor& c, const Eigen::VectorXd& h);

/// A = J(xi_r) F''(xi_r); the Hessian is taken analytically when supplied,
/// else by central differences with step 1e-5 (1 + |xi|).
LinearGenerator linearize_regular(const LiePoissonSystem& sys, const Eigen::VectorXd& xi_r,
                                  const SmoothFunction& f, double tol = 1e-9);

struct SpectrumReport {
  std::vector<std::complex<double>> eigenvalues;
  Eigen::VectorXd char_poly;  // monic, ascending: p(x) = sum_i char_poly[i] x^i
  bool hamiltonian_symmetric = false;
  double chirality_measure = 0.0;  // Hausdorff distance between the spectrum and its negation
  double tolerance = 0.0;          // negation-closure tolerance actually used
  EquilibriumKind equilibrium_kind = EquilibriumKind::generic;
};

/// Eigenvalues with multiplicity, characteristic polynomial, and the symmetry
/// verdict. The polynomial is computed along two eigensolve-free routes
/// (determinant sampling and Faddeev-LeVerrier), cross-checked to 1e-8; the
/// zero-eigenvalue multiplicity read off its vanishing low-order coefficients
/// snaps the numerically perturbed zeros of defective generators. The verdict
/// is the parity test p(x) = (-1)^n p(-x), equivalent to negation closure of
/// the root multiset, at tolerance 1e-8 (1 + |A|) — exact even for nilpotent
/// generators where eigensolvers lose half the digits.
SpectrumReport spectrum(const Eigen::MatrixXd& a);
SpectrumReport spectrum(const LinearGenerator& gen);

/// Monic characteristic polynomial by determinant sampling at n+1 nodes plus a
/// Vandermonde solve; independent of any eigensolve.
Eigen::VectorXd char_poly_determinant(const Eigen::MatrixXd& a);

/// Monic characteristic polynomial by the Faddeev-LeVerrier trace recursion.
Eigen::VectorXd char_poly_faddeev_leverrier(const Eigen::MatrixXd& a);

/// Monic characteristic polynomial expanded from an eigenvalue multiset.
Eigen::VectorXd char_poly_from_eigenvalues(const std::vector<std::complex<double>>& eigenvalues);

struct InvariantDriftReport {
  double h1_drift = 0.0;                 // worst scaled |<h, xi~(t)> - <h, xi~(0)>|
  /// Worst scaled |C(xi~(T)) - C(xi~(0))| over trials whose whole path stays
  /// inside the Casimir's validity domain (class-B Casimirs are multivalued
  /// across their singular boundary, so only domain-staying paths compare
  /// endpoint values).
  double casimir_drift = 0.0;
  /// Worst scaled |dC/dt| = |<grad C(xi~), A xi~>| along the flow; the
  /// pointwise form of the same conservation law, valid on every sample.
  double casimir_derivative_residual = 0.0;
  int trials = 0;
  int domain_staying_trials = 0;
  int casimir_samples = 0;
};

/// Transports random perturbations with exp(tA) and measures the drift of the
/// first-order energy H1 = <h, xi~> and of the supplied Casimir along the flow.
InvariantDriftReport verify_linear_invariants(const LinearGenerator& gen, const CasimirFunction& casimir,
                                              int trials, std::mt19937_64& rng, double t_max = 1.0);

/// Factorization of a class-A singular generator: A = J_h M with the constant
/// antisymmetric matrix J_h = coadjoint_matrix(mother, h) and the quadratic
/// Hamiltonian 1/2 <M xi~, xi~>. H1 is a Casimir of J_h (J_h h = 0).
struct ClassASingularForm {
  Eigen::MatrixXd j_h;
  Eigen::MatrixXd quadratic_form;      // the symmetric M
  double factorization_residual = 0.0; // ||A - J_h M||_inf
  double h1_casimir_residual = 0.0;    // ||J_h h||_inf
};

ClassASingularForm class_a_singular_form(const StructureTensor& mother, const Eigen::MatrixXd& m,
                                         const Eigen::VectorXd& h);

/// Convenience wrapper for a system with a class-A witness, expanded at a
/// singular point xi_s in Ker M.
ClassASingularForm class_a_singular_form(const LiePoissonSystem& sys, const StructureTensor& mother,
                                         const Eigen::MatrixXd& m, const Eigen::VectorXd& xi_s);

}  // namespace lpl
