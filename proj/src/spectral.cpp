#include "lpl/spectral.hpp"

#include "lpl/deformation.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>

namespace lpl {

std::string to_string(EquilibriumKind k) {
  switch (k) {
    case EquilibriumKind::regular: return "regular";
    case EquilibriumKind::singular: return "singular";
    case EquilibriumKind::generic: return "generic";
    default: return "not_equilibrium";
  }
}

EquilibriumKind classify_equilibrium(const LiePoissonSystem& sys, const Eigen::VectorXd& xi,
                                     const SmoothFunction& f, double tol) {
  const Eigen::MatrixXd j = poisson_matrix(sys.tensor, xi);
  const double scale = 1.0 + xi.cwiseAbs().maxCoeff();
  if (j.cwiseAbs().maxCoeff() <= tol * scale * std::max(1.0, sys.tensor.max_abs()))
    return EquilibriumKind::singular;
  const Eigen::VectorXd grad = f.gradient(xi);
  if (grad.cwiseAbs().maxCoeff() <= tol * scale) return EquilibriumKind::regular;
  if ((j * grad).cwiseAbs().maxCoeff() <= tol * scale * (1.0 + grad.cwiseAbs().maxCoeff()))
    return EquilibriumKind::generic;
  return EquilibriumKind::not_equilibrium;
}

LinearGenerator singular_generator(const StructureTensor& c, const Eigen::VectorXd& h) {
  return {coadjoint_matrix(c, h), Provenance::singular, h, Eigen::VectorXd::Zero(c.dim())};
}

LinearGenerator linearize_singular(const LiePoissonSystem& sys, const Eigen::VectorXd& xi_s, double tol) {
  const Eigen::MatrixXd j = poisson_matrix(sys.tensor, xi_s);
  const double scale = (1.0 + xi_s.cwiseAbs().maxCoeff()) * std::max(1.0, sys.tensor.max_abs());
  if (j.cwiseAbs().maxCoeff() > tol * scale)
    throw std::invalid_argument("linearize_singular: J(xi) does not vanish at the given point");
  LinearGenerator gen = singular_generator(sys.tensor, sys.hamiltonian.gradient(xi_s));
  gen.point = xi_s;
  return gen;
}

namespace {

Eigen::MatrixXd central_difference_hessian(const SmoothFunction& f, const Eigen::VectorXd& xi) {
  const int n = static_cast<int>(xi.size());
  const double h = 1e-5 * (1.0 + xi.norm());
  Eigen::MatrixXd hess(n, n);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd hi = xi, lo = xi;
    hi(i) += h;
    lo(i) -= h;
    hess.col(i) = (f.gradient(hi) - f.gradient(lo)) / (2.0 * h);
  }
  return 0.5 * (hess + hess.transpose());
}

}  // namespace

LinearGenerator linearize_regular(const LiePoissonSystem& sys, const Eigen::VectorXd& xi_r,
                                  const SmoothFunction& f, double tol) {
  const Eigen::VectorXd grad = f.gradient(xi_r);
  const double scale = 1.0 + xi_r.cwiseAbs().maxCoeff();
  if (grad.cwiseAbs().maxCoeff() > tol * scale)
    throw std::invalid_argument("linearize_regular: gradient of the energy-Casimir does not vanish");
  const Eigen::MatrixXd j = poisson_matrix(sys.tensor, xi_r);
  if (j.cwiseAbs().maxCoeff() <= tol * scale * std::max(1.0, sys.tensor.max_abs()))
    throw std::invalid_argument("linearize_regular: point is singular (J = 0); use linearize_singular");
  const Eigen::MatrixXd hess = f.hessian ? Eigen::MatrixXd(f.hessian(xi_r)) : central_difference_hessian(f, xi_r);
  LinearGenerator gen;
  gen.a = j * hess;
  gen.provenance = Provenance::regular;
  gen.h = grad;
  gen.point = xi_r;
  return gen;
}

Eigen::VectorXd char_poly_determinant(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  // p(s) = det(sI - A) is monic of degree n: sample at n+1 spread nodes and
  // solve the Vandermonde system for the remaining coefficients.
  const double scale = 1.0 + a.cwiseAbs().maxCoeff();
  Eigen::VectorXd nodes(n + 1), values(n + 1);
  for (int i = 0; i <= n; ++i) {
    nodes(i) = scale * (i - 0.5 * n);
    values(i) = (nodes(i) * Eigen::MatrixXd::Identity(n, n) - a).fullPivLu().determinant();
  }
  Eigen::MatrixXd vandermonde(n + 1, n);
  Eigen::VectorXd rhs(n + 1);
  for (int i = 0; i <= n; ++i) {
    double p = 1.0;
    for (int j = 0; j < n; ++j) {
      vandermonde(i, j) = p;
      p *= nodes(i);
    }
    rhs(i) = values(i) - p;  // subtract the monic leading term nodes^n
  }
  Eigen::VectorXd coeffs(n + 1);
  coeffs.head(n) = vandermonde.colPivHouseholderQr().solve(rhs);
  coeffs(n) = 1.0;
  return coeffs;
}

Eigen::VectorXd char_poly_from_eigenvalues(const std::vector<std::complex<double>>& eigenvalues) {
  std::vector<std::complex<double>> coeffs{1.0};
  for (const std::complex<double>& lambda : eigenvalues) {
    coeffs.push_back(0.0);
    for (int i = static_cast<int>(coeffs.size()) - 1; i > 0; --i) coeffs[i] = coeffs[i - 1] - lambda * coeffs[i];
    coeffs[0] *= -lambda;
  }
  Eigen::VectorXd real(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) real(i) = coeffs[i].real();
  return real;
}

Eigen::VectorXd char_poly_faddeev_leverrier(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  Eigen::VectorXd coeffs(n + 1);
  coeffs(n) = 1.0;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    m = a * m + coeffs(n - k + 1) * Eigen::MatrixXd::Identity(n, n);
    coeffs(n - k) = -(a * m).trace() / k;
  }
  return coeffs;
}

namespace {

double hausdorff_to_negation(const std::vector<std::complex<double>>& ev) {
  double worst = 0.0;
  for (const auto& lambda : ev) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& mu : ev) best = std::min(best, std::abs(lambda + mu));
    worst = std::max(worst, best);
  }
  return worst;
}

/// Root multiset closed under negation <=> p(x) = (-1)^n p(-x) <=> the
/// coefficients c_i with n - i odd all vanish.
bool negation_closed_poly(const Eigen::VectorXd& coeffs, double tol) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  for (int i = 0; i < n; ++i)
    if ((n - i) % 2 == 1 && std::abs(coeffs(i)) > tol) return false;
  return true;
}

}  // namespace

SpectrumReport spectrum(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("spectrum: matrix must be square");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("spectrum: eigensolver failed to converge");

  SpectrumReport report;
  for (int i = 0; i < a.rows(); ++i) report.eigenvalues.push_back(solver.eigenvalues()(i));

  report.char_poly = char_poly_determinant(a);
  const Eigen::VectorXd faddeev = char_poly_faddeev_leverrier(a);
  const double coeff_scale = 1.0 + report.char_poly.cwiseAbs().maxCoeff();
  if ((report.char_poly - faddeev).cwiseAbs().maxCoeff() > 1e-8 * coeff_scale)
    throw std::runtime_error("spectrum: characteristic polynomial cross-check failed");

  // Zero multiplicity from the vanishing low-order coefficients; snap that
  // many smallest eigenvalues to zero (a defective zero of multiplicity m is
  // resolved by eigensolvers only to O(eps^(1/m))).
  int zero_multiplicity = 0;
  while (zero_multiplicity < a.rows() &&
         std::abs(report.char_poly(zero_multiplicity)) <= 1e-8 * coeff_scale)
    ++zero_multiplicity;
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
            [](const std::complex<double>& x, const std::complex<double>& y) {
              return std::abs(x) < std::abs(y);
            });
  for (int i = 0; i < zero_multiplicity; ++i) report.eigenvalues[i] = 0.0;
  // Deterministic presentation order (real part, then imaginary part).
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
            [](const std::complex<double>& x, const std::complex<double>& y) {
              return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
            });

  report.tolerance = 1e-8 * (1.0 + a.cwiseAbs().maxCoeff());
  report.hamiltonian_symmetric = negation_closed_poly(report.char_poly, 1e-8 * coeff_scale);
  report.chirality_measure = hausdorff_to_negation(report.eigenvalues);
  return report;
}

SpectrumReport spectrum(const LinearGenerator& gen) {
  SpectrumReport report = spectrum(gen.a);
  report.equilibrium_kind =
      gen.provenance == Provenance::singular ? EquilibriumKind::singular : EquilibriumKind::regular;
  return report;
}

InvariantDriftReport verify_linear_invariants(const LinearGenerator& gen, const CasimirFunction& casimir,
                                              int trials, std::mt19937_64& rng, double t_max) {
  if (gen.provenance != Provenance::singular)
    throw std::invalid_argument("verify_linear_invariants: singular provenance required");
  const int n = static_cast<int>(gen.a.rows());
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  InvariantDriftReport report;
  report.trials = trials;
  const int time_samples = 100;
  const Eigen::MatrixXd step = (gen.a * (t_max / time_samples)).exp();
  for (int trial = 0; trial < trials; ++trial) {
    Eigen::VectorXd xi(n);
    // Keep initial perturbations clear of the Casimir's domain boundary.
    do {
      for (int i = 0; i < n; ++i) xi(i) = unit(rng);
    } while (!casimir.in_domain(xi, 0.2));

    const double h1_ref = gen.h.dot(xi);
    const double c_ref = casimir.value(xi);
    bool stayed_in_domain = true;
    Eigen::VectorXd signature_prev;
    if (casimir.domain_signature) signature_prev = casimir.domain_signature(xi);
    for (int s = 0; s <= time_samples; ++s) {
      if (s > 0) xi = step * xi;
      if (casimir.domain_signature) {
        // a sign flip of any boundary coordinate means the path crossed the
        // validity-domain boundary between samples
        const Eigen::VectorXd signature = casimir.domain_signature(xi);
        if ((signature.array() * signature_prev.array() <= 0.0).any()) stayed_in_domain = false;
        signature_prev = signature;
      }
      report.h1_drift =
          std::max(report.h1_drift, std::abs(gen.h.dot(xi) - h1_ref) / (1.0 + std::abs(h1_ref)));
      if (casimir.in_domain(xi, 1e-6)) {
        const Eigen::VectorXd grad = casimir.gradient(xi);
        const Eigen::VectorXd velocity = gen.a * xi;
        const double rate = std::abs(grad.dot(velocity)) /
                            (1.0 + grad.cwiseAbs().maxCoeff() * velocity.cwiseAbs().maxCoeff());
        report.casimir_derivative_residual = std::max(report.casimir_derivative_residual, rate);
        ++report.casimir_samples;
      } else {
        stayed_in_domain = false;
      }
    }
    if (stayed_in_domain) {
      ++report.domain_staying_trials;
      report.casimir_drift =
          std::max(report.casimir_drift, std::abs(casimir.value(xi) - c_ref) / (1.0 + std::abs(c_ref)));
    }
  }
  return report;
}

ClassASingularForm class_a_singular_form(const StructureTensor& mother, const Eigen::MatrixXd& m,
                                         const Eigen::VectorXd& h) {
  if (!is_fully_antisymmetric(mother))
    throw std::invalid_argument("class_a_singular_form: mother bracket must be fully antisymmetric");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + m.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("class_a_singular_form: deformation matrix must be symmetric (class A)");
  ClassASingularForm form;
  form.j_h = coadjoint_matrix(mother, h);
  form.quadratic_form = m;
  const Eigen::MatrixXd a = coadjoint_matrix(deform(mother, m), h);
  form.factorization_residual = (a - form.j_h * m).cwiseAbs().maxCoeff();
  form.h1_casimir_residual = (form.j_h * h).cwiseAbs().maxCoeff();
  return form;
}

ClassASingularForm class_a_singular_form(const LiePoissonSystem& sys, const StructureTensor& mother,
                                         const Eigen::MatrixXd& m, const Eigen::VectorXd& xi_s) {
  if ((m * xi_s).cwiseAbs().maxCoeff() > 1e-9 * (1.0 + xi_s.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("class_a_singular_form: expansion point must lie in Ker M");
  return class_a_singular_form(mother, m, sys.hamiltonian.gradient(xi_s));
}

}  // namespace lpl
