#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace lpl {

/// Structure constants c^l_{jk} of a finite-dimensional real algebra,
/// stored densely as one n-by-n matrix per upper index:
/// component(l)(j,k) = c^l_{jk}, with [e_j, e_k] = c^l_{jk} e_l.
///
/// Antisymmetry in the lower index pair is enforced at construction;
/// Jacobi is a property of the *values* and is checked separately
/// (see jacobi_residual), so tensors that fail it can still be built
/// and diagnosed.
template <typename Scalar>
class StructureTensorT {
public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  /// One nonzero coefficient c^l_{jk} = value (0-based indices, j != k).
  /// The antisymmetric partner c^l_{kj} = -value is implied.
  struct Entry {
    int l, j, k;
    Scalar value;
  };

  StructureTensorT() = default;

  explicit StructureTensorT(int dim) : components_(check_dim(dim), Matrix::Zero(dim, dim)) {}

  StructureTensorT(int dim, const std::vector<Entry>& entries) : StructureTensorT(dim) {
    for (const Entry& e : entries) add(e.l, e.j, e.k, e.value);
  }

  int dim() const { return static_cast<int>(components_.size()); }

  /// c^l_{jk}
  Scalar coeff(int l, int j, int k) const { return components_[check_index(l)](check_index(j), check_index(k)); }

  /// Matrix (c^l_{jk})_{jk} for fixed upper index l.
  const Matrix& component(int l) const { return components_[check_index(l)]; }

  const std::vector<Matrix>& components() const { return components_; }

  /// Accumulates c^l_{jk} += value together with its antisymmetric partner.
  void add(int l, int j, int k, Scalar value) {
    if (j == k) throw std::invalid_argument("structure tensor: c^l_{jj} must vanish (j == k)");
    if (!std::isfinite(static_cast<double>(value)))
      throw std::invalid_argument("structure tensor: nonfinite coefficient");
    Matrix& cl = components_[check_index(l)];
    cl(check_index(j), check_index(k)) += value;
    cl(k, j) -= value;
  }

  /// Largest absolute coefficient; 0 for the zero (abelian) tensor.
  Scalar max_abs() const {
    Scalar m = Scalar(0);
    for (const Matrix& cl : components_) m = std::max<Scalar>(m, cl.cwiseAbs().maxCoeff());
    return m;
  }

  bool operator==(const StructureTensorT& other) const {
    if (dim() != other.dim()) return false;
    for (int l = 0; l < dim(); ++l)
      if (components_[l] != other.components_[l]) return false;
    return true;
  }
  bool operator!=(const StructureTensorT& other) const { return !(*this == other); }

private:
  static int check_dim(int dim) {
    if (dim < 1) throw std::invalid_argument("structure tensor: dim must be >= 1");
    return dim;
  }
  int check_index(int i) const {
    if (i < 0 || i >= dim()) throw std::out_of_range("structure tensor: index out of range");
    return i;
  }

  std::vector<Matrix> components_;
};

using StructureTensor = StructureTensorT<double>;

/// so(3) in the epsilon-tensor basis, [e_i, e_j] = eps_{ijk} e_k (the cross product).
template <typename Scalar = double>
StructureTensorT<Scalar> so3_cross_tensor() {
  return StructureTensorT<Scalar>(3, {{2, 0, 1, Scalar(1)}, {0, 1, 2, Scalar(1)}, {1, 2, 0, Scalar(1)}});
}

/// z^l = c^l_{jk} x^j y^k — the bracket [x, y] of two state vectors.
template <typename Scalar>
typename StructureTensorT<Scalar>::Vector bracket(const StructureTensorT<Scalar>& c,
                                                  const typename StructureTensorT<Scalar>::Vector& x,
                                                  const typename StructureTensorT<Scalar>::Vector& y) {
  if (x.size() != c.dim() || y.size() != c.dim())
    throw std::invalid_argument("bracket: vector dimension does not match tensor");
  typename StructureTensorT<Scalar>::Vector z(c.dim());
  for (int l = 0; l < c.dim(); ++l) z(l) = x.dot(c.component(l) * y);
  return z;
}

/// [e_i, e_j] as a coefficient vector.
template <typename Scalar>
typename StructureTensorT<Scalar>::Vector basis_bracket(const StructureTensorT<Scalar>& c, int i, int j) {
  typename StructureTensorT<Scalar>::Vector z(c.dim());
  for (int l = 0; l < c.dim(); ++l) z(l) = c.coeff(l, i, j);
  return z;
}

/// Jacobiator [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] as a vector.
template <typename Scalar>
typename StructureTensorT<Scalar>::Vector jacobi_residual_vector(const StructureTensorT<Scalar>& c, int i, int j,
                                                                 int k) {
  using Vector = typename StructureTensorT<Scalar>::Vector;
  const int n = c.dim();
  auto bracket_with_basis = [&](const Vector& v, int b) {
    Vector out(n);
    for (int m = 0; m < n; ++m) {
      Scalar s = Scalar(0);
      for (int l = 0; l < n; ++l) s += v(l) * c.coeff(m, l, b);
      out(m) = s;
    }
    return out;
  };
  return bracket_with_basis(basis_bracket(c, i, j), k) + bracket_with_basis(basis_bracket(c, j, k), i) +
         bracket_with_basis(basis_bracket(c, k, i), j);
}

/// max over basis triples of the sup norm of the Jacobiator; zero iff c is a Lie algebra.
template <typename Scalar>
Scalar jacobi_residual(const StructureTensorT<Scalar>& c) {
  Scalar worst = Scalar(0);
  for (int i = 0; i < c.dim(); ++i)
    for (int j = i + 1; j < c.dim(); ++j)
      for (int k = j + 1; k < c.dim(); ++k)
        worst = std::max<Scalar>(worst, jacobi_residual_vector(c, i, j, k).cwiseAbs().maxCoeff());
  return worst;
}

/// Absolute tolerance for "is a Lie algebra" predicates. Catalog tensors have
/// small integer or rational entries, so their residuals are exactly zero.
inline constexpr double kJacobiTolerance = 1e-10;

template <typename Scalar>
bool is_lie_algebra(const StructureTensorT<Scalar>& c, Scalar tol = Scalar(kJacobiTolerance)) {
  return jacobi_residual(c) <= tol;
}

template <typename Scalar>
struct KillingForm {
  typename StructureTensorT<Scalar>::Matrix metric;  // g_{jk} = c^b_{ja} c^a_{kb}
  bool regular;                                      // nondegenerate <=> semi-simple
};

template <typename Scalar>
KillingForm<Scalar> killing_form(const StructureTensorT<Scalar>& c) {
  const int n = c.dim();
  typename StructureTensorT<Scalar>::Matrix g = StructureTensorT<Scalar>::Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Scalar s = Scalar(0);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) s += c.coeff(b, j, a) * c.coeff(a, k, b);
      g(j, k) = s;
    }
  Eigen::FullPivLU<typename StructureTensorT<Scalar>::Matrix> lu(g);
  lu.setThreshold(Scalar(1e-10));
  return {g, lu.rank() == n};
}

/// True iff c_{ljk} (indices lowered with the identity metric) changes sign
/// under every transposition of its three indices. Together with the built-in
/// (j,k) antisymmetry it suffices to check the (l,j) swap.
template <typename Scalar>
bool is_fully_antisymmetric(const StructureTensorT<Scalar>& c, Scalar tol = Scalar(1e-12)) {
  const Scalar scale = std::max<Scalar>(Scalar(1), c.max_abs());
  for (int l = 0; l < c.dim(); ++l)
    for (int j = 0; j < c.dim(); ++j)
      for (int k = 0; k < c.dim(); ++k)
        if (std::abs(c.coeff(l, j, k) + c.coeff(j, l, k)) > tol * scale) return false;
  return true;
}

/// Antisymmetry defect of the Killing-lowered tensor c_{ijk} = c^a_{jk} g_{ai}
/// under the (i, j) transposition; vanishes for semi-simple algebras, where
/// bracket and cobracket coincide. Diagnostic companion to
/// is_fully_antisymmetric, which lowers with the identity metric instead.
template <typename Scalar>
Scalar killing_lowered_antisymmetry_defect(const StructureTensorT<Scalar>& c) {
  const auto killing = killing_form(c);
  const int n = c.dim();
  Scalar worst = Scalar(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Scalar lowered_ijk = Scalar(0), lowered_jik = Scalar(0);
        for (int a = 0; a < n; ++a) {
          lowered_ijk += c.coeff(a, j, k) * killing.metric(a, i);
          lowered_jik += c.coeff(a, i, k) * killing.metric(a, j);
        }
        worst = std::max<Scalar>(worst, std::abs(lowered_ijk + lowered_jik));
      }
  return worst;
}

/// Matrix of ad_v acting on state components: (ad_v x)^l = [x, v]^l = c^l_{jk} x^j v^k.
template <typename Scalar>
typename StructureTensorT<Scalar>::Matrix adjoint_matrix(const StructureTensorT<Scalar>& c,
                                                         const typename StructureTensorT<Scalar>::Vector& v) {
  if (v.size() != c.dim()) throw std::invalid_argument("adjoint_matrix: dimension mismatch");
  typename StructureTensorT<Scalar>::Matrix ad(c.dim(), c.dim());
  for (int l = 0; l < c.dim(); ++l) ad.row(l) = (c.component(l) * v).transpose();
  return ad;
}

/// Matrix of the coadjoint action ad*_v on phase (covariant) components:
/// (ad*_v xi)_j = c^a_{jk} v^k xi_a, i.e. A(j, a) = c^a_{jk} v^k. Satisfies
/// <x, ad*_v xi> = <[x, v], xi>, hence A = adjoint_matrix(c, v)^T.
template <typename Scalar>
typename StructureTensorT<Scalar>::Matrix coadjoint_matrix(const StructureTensorT<Scalar>& c,
                                                           const typename StructureTensorT<Scalar>::Vector& v) {
  if (v.size() != c.dim()) throw std::invalid_argument("coadjoint_matrix: dimension mismatch");
  typename StructureTensorT<Scalar>::Matrix a(c.dim(), c.dim());
  for (int alpha = 0; alpha < c.dim(); ++alpha) a.col(alpha) = c.component(alpha) * v;
  return a;
}

/// Dimension of the derived algebra: rank of the span of all basis brackets.
template <typename Scalar>
int derived_dim(const StructureTensorT<Scalar>& c, Scalar tol = Scalar(kJacobiTolerance)) {
  if (jacobi_residual(c) > tol) throw std::invalid_argument("derived_dim: tensor is not a Lie algebra");
  const int n = c.dim();
  typename StructureTensorT<Scalar>::Matrix span(n, n * (n - 1) / 2);
  int col = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) span.col(col++) = basis_bracket(c, i, j);
  Eigen::ColPivHouseholderQR<typename StructureTensorT<Scalar>::Matrix> qr(span);
  qr.setThreshold(Scalar(1e-10));
  return static_cast<int>(qr.rank());
}

}  // namespace lpl
