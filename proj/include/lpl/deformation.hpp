#pragma once

#include "lpl/structure_tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lpl {

enum class MatrixSymmetry { symmetric, n_oplus_zero_asymmetric, other_asymmetric };

/// A deformation endomorphism M of phase space, with its symmetry report and
/// kernel basis. Ker M is the singular set of the deformed Poisson matrix.
template <typename Scalar>
class DeformationMatrixT {
public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  explicit DeformationMatrixT(Matrix m, Scalar tol = Scalar(1e-12)) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("deformation matrix must be square");
    const Scalar scale = Scalar(1) + m_.cwiseAbs().maxCoeff();
    if ((m_ - m_.transpose()).cwiseAbs().maxCoeff() <= tol * scale) {
      symmetry_ = MatrixSymmetry::symmetric;
    } else {
      symmetry_ = leading_block_only(tol * scale) ? MatrixSymmetry::n_oplus_zero_asymmetric
                                                  : MatrixSymmetry::other_asymmetric;
    }
    Eigen::FullPivLU<Matrix> lu(m_);
    lu.setThreshold(Scalar(1e-12));
    kernel_ = lu.rank() < m_.rows() ? Matrix(lu.kernel()) : Matrix(m_.rows(), 0);
  }

  const Matrix& matrix() const { return m_; }
  MatrixSymmetry symmetry() const { return symmetry_; }
  bool symmetric() const { return symmetry_ == MatrixSymmetry::symmetric; }
  int dim() const { return static_cast<int>(m_.rows()); }

  /// Columns span Ker M (empty when M is regular).
  const Matrix& kernel_basis() const { return kernel_; }

private:
  bool leading_block_only(Scalar tol) const {
    for (int i = 0; i < m_.rows(); ++i)
      for (int j = 0; j < m_.cols(); ++j)
        if ((i >= 2 || j >= 2) && std::abs(m_(i, j)) > tol) return false;
    return true;
  }

  Matrix m_;
  MatrixSymmetry symmetry_;
  Matrix kernel_;
};

using DeformationMatrix = DeformationMatrixT<double>;

/// Deformed bracket [e_i, e_j]_M = M^T [e_i, e_j]: c'^m_{ij} = c^k_{ij} M_{km}.
/// The mother bracket must be fully antisymmetric; the result need not satisfy
/// Jacobi (see validate_deformation).
template <typename Scalar>
StructureTensorT<Scalar> deform(const StructureTensorT<Scalar>& mother,
                                const typename DeformationMatrixT<Scalar>::Matrix& m) {
  if (m.rows() != mother.dim() || m.cols() != mother.dim())
    throw std::invalid_argument("deform: matrix dimension does not match tensor");
  if (!is_fully_antisymmetric(mother))
    throw std::invalid_argument("deform: mother bracket is not fully antisymmetric");
  const int n = mother.dim();
  StructureTensorT<Scalar> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto w = basis_bracket(mother, i, j);
      for (int mm = 0; mm < n; ++mm) {
        Scalar v = Scalar(0);
        for (int k = 0; k < n; ++k) v += w(k) * m(k, mm);
        if (v != Scalar(0)) out.add(mm, i, j, v);
      }
    }
  return out;
}

template <typename Scalar>
StructureTensorT<Scalar> deform(const StructureTensorT<Scalar>& mother, const DeformationMatrixT<Scalar>& m) {
  return deform(mother, m.matrix());
}

/// Inverse of the 3-dimensional deformation map: the unique M with
/// deform(so3_cross_tensor(), M) = c. Closed form M_{km} = 1/2 eps_{kij} c^m_{ij},
/// exact on exact inputs (round-trip is bitwise).
template <typename Scalar>
DeformationMatrixT<Scalar> recover_deformation(const StructureTensorT<Scalar>& c) {
  if (c.dim() != 3) throw std::invalid_argument("recover_deformation: defined for dim 3 only");
  typename DeformationMatrixT<Scalar>::Matrix m(3, 3);
  for (int col = 0; col < 3; ++col) {
    m(0, col) = c.coeff(col, 1, 2);
    m(1, col) = c.coeff(col, 2, 0);
    m(2, col) = c.coeff(col, 0, 1);
  }
  return DeformationMatrixT<Scalar>(std::move(m));
}

/// Outcome of checking whether M^T [ , ] is a Lie bracket whose derived
/// algebra is an ideal. Both failure modes are reported independently.
struct DeformationVerdict {
  bool valid = false;
  double jacobi_residual = 0.0;
  Eigen::VectorXd jacobi_direction;  // unit vector along the worst Jacobiator; size 0 when none
  bool derived_is_ideal = true;
  StructureTensor deformed;
  std::vector<std::string> failures;
};

DeformationVerdict validate_deformation(const StructureTensor& mother, const DeformationMatrix& m);

/// Linear solve for M with deform(mother, M) = target. The deformation map is
/// linear in M, so exact (un)solvability is a finite check; when solvable the
/// affine solution set is searched for a symmetric member.
struct DeformationSolve {
  bool expressible = false;
  double residual = 0.0;                // least-squares defect of the best M
  Eigen::MatrixXd m;                    // a particular witness (when expressible)
  bool symmetric_witness = false;       // a symmetric M exists in the solution set
  Eigen::MatrixXd symmetric_m;          // that witness (when it exists)
};

DeformationSolve solve_deformation(const StructureTensor& mother, const StructureTensor& target);

enum class AlgebraClass { A, B, C, Unknown };

std::string to_string(AlgebraClass c);

struct Classification {
  AlgebraClass label = AlgebraClass::Unknown;
  std::optional<DeformationMatrix> witness_m;
  std::optional<StructureTensor> witness_mother;
  std::string note;
};

/// Class A/B/C of a Lie algebra tensor.
///  - dim 3: M is recovered in closed form from the so(3) mother; symmetric M
///    gives A, asymmetric gives B (every 3-dimensional bracket arises this way).
///  - dim > 3: fully antisymmetric tensors are A; otherwise each registered
///    fully antisymmetric mother of matching dimension is tried by linear
///    solve. Unsolvable against a nonempty registry yields C (a certificate
///    relative to that registry); an empty registry yields Unknown.
Classification classify(const StructureTensor& c,
                        const std::vector<StructureTensor>& mothers = {});

}  // namespace lpl
