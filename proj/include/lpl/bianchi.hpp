#pragma once

#include "lpl/deformation.hpp"
#include "lpl/smooth_function.hpp"
#include "lpl/structure_tensor.hpp"

#include <random>
#include <string>
#include <vector>

namespace lpl {

enum class BianchiLabel { I, II, III, IV, V, VI, VII, VIII, IX };

/// A Bianchi type; eta is meaningful only for VI and VII.
struct BianchiType {
  BianchiLabel label;
  double eta = 0.0;
};

bool has_parameter(BianchiLabel label);

/// Throws when VI/VII is requested without eta.
BianchiType bianchi_type(BianchiLabel label);
BianchiType bianchi_type(BianchiLabel label, double eta);
BianchiType parse_bianchi(const std::string& name, const double* eta = nullptr);

std::string to_string(const BianchiType& t);

/// 'A' for {I, II, VI(-1), VII(0), VIII, IX}, 'B' otherwise.
char bianchi_class(const BianchiType& t);

/// Multiplication table of the type (e.g. IX: [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2;
/// VI_eta: [e1,e3]=e1, [e2,e3]=eta e2).
StructureTensor bianchi_algebra(const BianchiType& t);

/// A Casimir of the type's Lie-Poisson bracket, with gradient and validity
/// domain. Class-A Casimirs are the quadratic forms 1/2<xi, M xi> with
/// M = recover_deformation(...); class-B Casimirs are singular functions.
/// Type I (trivial bracket) returns the designated coordinate function xi_1.
CasimirFunction casimir_of(const BianchiType& t);

/// The set {xi : J(xi) = 0}, always a coordinate subspace for the catalog:
/// a plane for II/III, the xi3-axis for IV..VII, the origin for VIII/IX.
struct SingularSet {
  std::vector<int> vanishing;  // 0-based coordinates that must vanish
  int dimension = 0;
  std::string description;

  bool contains(const Eigen::VectorXd& xi, double tol = 1e-12) const;
  Eigen::VectorXd sample(std::mt19937_64& rng, double scale = 1.0) const;
};

SingularSet singular_set(const BianchiType& t);  // throws for type I (J == 0 everywhere)

/// An involution T of phase space that reverses the Poisson matrix:
/// T J(T xi) T^T = -J(xi) for all xi.
struct ReversalTransform {
  std::string name;  // "T3", "T2", "T12"
  Eigen::Matrix3d t;
};

ReversalTransform reversal_t3();
ReversalTransform reversal_t2();
ReversalTransform reversal_t12();

/// The cataloged reversal transforms of the type: T3 always; T2 additionally
/// for {II, VII(0), VIII, IX}; T12 additionally for VI(-1).
std::vector<ReversalTransform> reversal_transforms(const BianchiType& t);

/// max over sampled xi of ||T J(T xi) T^T + J(xi)||_inf; zero (to round-off)
/// iff T reverses the bracket.
double reversal_defect(const StructureTensor& c, const Eigen::MatrixXd& t, std::mt19937_64& rng, int trials = 100);

namespace detail {
/// The logarithmic Casimir of VII_eta for |eta| > 2, parameterized by the
/// discriminant offset d in lambda± = (-eta ± sqrt(eta^2 - d))/2. The shipped
/// catalog uses d = 4; d = 1 is kept so tests can demonstrate that it fails
/// the J gradC = 0 residual oracle.
CasimirFunction vii_log_casimir(double eta, double discriminant_offset);
}  // namespace detail

}  // namespace lpl
