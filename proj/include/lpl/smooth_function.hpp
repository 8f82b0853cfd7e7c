#pragma once

#include <Eigen/Dense>

#include <functional>
#include <limits>
#include <string>

namespace lpl {

/// A smooth scalar function of a phase-space point, with analytic gradient
/// and (optionally) analytic Hessian.
struct SmoothFunction {
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hessian;  // may be empty
};

/// A Casimir with its validity domain. domain_signature(xi) returns signed
/// coordinates whose zero set is the domain boundary (poles, log branch cuts);
/// the margin min_i |signature_i(xi)| keeps evaluations and drift accounting
/// away from it, and a sign change along a path detects a crossing even when
/// the sampled margins stay positive.
struct CasimirFunction {
  std::string name;
  SmoothFunction f;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> domain_signature;  // empty => valid everywhere

  double value(const Eigen::VectorXd& xi) const { return f.value(xi); }
  Eigen::VectorXd gradient(const Eigen::VectorXd& xi) const { return f.gradient(xi); }
  double margin_at(const Eigen::VectorXd& xi) const {
    if (!domain_signature) return std::numeric_limits<double>::infinity();
    return domain_signature(xi).cwiseAbs().minCoeff();
  }
  bool in_domain(const Eigen::VectorXd& xi, double guard = 0.0) const { return margin_at(xi) > guard; }
};

}  // namespace lpl
