#include "lpl/deformation.hpp"

#include "lpl/bianchi.hpp"
#include "lpl/dim4.hpp"
#include "lpl/lie_poisson.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace lpl;

namespace {

const Eigen::Matrix3d kRemark4Case1 = (Eigen::Matrix3d() << 1, 1, 0, 0, 0, 1, 0, 0, 0).finished();
const Eigen::Matrix3d kRemark4Case2 = (Eigen::Matrix3d() << 1, 0, 0, 1, 0, 0, 0, 1, 0).finished();

Eigen::Matrix3d embed_2x2(const Eigen::Matrix2d& n) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  m.topLeftCorner<2, 2>() = n;
  return m;
}

}  // namespace

TEST_SUITE("deformation") {

TEST_CASE("identity deformation reproduces so(3)") {
  CHECK(deform(so3_cross_tensor(), Eigen::Matrix3d(Eigen::Matrix3d::Identity())) == so3_cross_tensor());
}

TEST_CASE("rank-one symmetric deformation gives the Heisenberg table") {
  const StructureTensor c = deform(so3_cross_tensor(), Eigen::Matrix3d(Eigen::Vector3d(1, 0, 0).asDiagonal()));
  CHECK(c == bianchi_algebra(bianchi_type(BianchiLabel::II)));
}

TEST_CASE("the type-III matrix (sole entry M21 = -1) gives [e1,e3] = e1") {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  m(1, 0) = -1.0;
  CHECK(deform(so3_cross_tensor(), m) == bianchi_algebra(bianchi_type(BianchiLabel::III)));
}

TEST_CASE("deform rejects a non-antisymmetric mother and bad dimensions") {
  const StructureTensor v = bianchi_algebra(bianchi_type(BianchiLabel::V));
  CHECK_THROWS_AS(deform(v, Eigen::Matrix3d(Eigen::Matrix3d::Identity())), std::invalid_argument);
  CHECK_THROWS_AS(deform(so3_cross_tensor(), Eigen::MatrixXd(Eigen::Matrix4d::Identity())),
                  std::invalid_argument);
}

TEST_CASE("recover_deformation matches the expected matrices") {
  CHECK(recover_deformation(so3_cross_tensor()).matrix().isApprox(Eigen::Matrix3d::Identity()));

  const DeformationMatrix m_vi = recover_deformation(bianchi_algebra(bianchi_type(BianchiLabel::VI, 0.7)));
  Eigen::Matrix3d expected = Eigen::Matrix3d::Zero();
  expected(0, 1) = 0.7;
  expected(1, 0) = -1.0;
  CHECK((m_vi.matrix() - expected).norm() == 0.0);
  CHECK_FALSE(m_vi.symmetric());

  const DeformationMatrix m_vii0 = recover_deformation(bianchi_algebra(bianchi_type(BianchiLabel::VII, 0.0)));
  CHECK((m_vii0.matrix() - Eigen::Vector3d(-1, -1, 0).asDiagonal().toDenseMatrix()).norm() == 0.0);
  CHECK(m_vii0.symmetric());

  CHECK_THROWS_AS(recover_deformation(mother_r_so3()), std::invalid_argument);
}

TEST_CASE("round trip deform(eps, recover_M(c)) = c exactly for all nine types") {
  for (double eta : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0}) {
    for (auto label : {BianchiLabel::I, BianchiLabel::II, BianchiLabel::III, BianchiLabel::IV, BianchiLabel::V,
                       BianchiLabel::VI, BianchiLabel::VII, BianchiLabel::VIII, BianchiLabel::IX}) {
      const BianchiType t = has_parameter(label) ? bianchi_type(label, eta) : bianchi_type(label);
      const StructureTensor c = bianchi_algebra(t);
      CHECK(deform(so3_cross_tensor(), recover_deformation(c)) == c);
    }
  }
}

TEST_CASE("symmetry report distinguishes the three shapes") {
  CHECK(DeformationMatrix(Eigen::Matrix3d::Identity()).symmetry() == MatrixSymmetry::symmetric);
  Eigen::Matrix3d n_oplus_0 = Eigen::Matrix3d::Zero();
  n_oplus_0(0, 1) = 1.0;
  n_oplus_0(1, 0) = -1.0;
  CHECK(DeformationMatrix(n_oplus_0).symmetry() == MatrixSymmetry::n_oplus_zero_asymmetric);
  CHECK(DeformationMatrix(Eigen::Matrix3d(kRemark4Case2)).symmetry() == MatrixSymmetry::other_asymmetric);
}

TEST_CASE("kernel basis spans Ker M") {
  std::mt19937_64 rng(11);
  for (int rank = 0; rank <= 3; ++rank) {
    const auto ranked = lpl_test::random_symmetric_with_rank(rng, 3, rank);
    const DeformationMatrix m(ranked.m);
    CHECK(m.kernel_basis().cols() == 3 - rank);
    for (int col = 0; col < m.kernel_basis().cols(); ++col)
      CHECK((ranked.m * m.kernel_basis().col(col)).norm() < 1e-12);
  }
}

TEST_CASE("theorem-1 class A: every symmetric M deforms to a Lie algebra") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::MatrixXd m = lpl_test::random_symmetric(rng, 3);
    const DeformationVerdict verdict = validate_deformation(so3_cross_tensor(), DeformationMatrix(m));
    CHECK(verdict.valid);
    CHECK(verdict.jacobi_residual == 0.0);
  }
}

TEST_CASE("theorem-1 class B: every N + 0 block matrix deforms to a Lie algebra") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Matrix2d n = lpl_test::random_matrix(rng, 2);
    const DeformationVerdict verdict = validate_deformation(so3_cross_tensor(), DeformationMatrix(embed_2x2(n)));
    CHECK(verdict.valid);
    CHECK(verdict.jacobi_residual == 0.0);
  }
}

TEST_CASE("inadequate deformations are rejected with the right diagnosis") {
  const DeformationVerdict case1 = validate_deformation(so3_cross_tensor(), DeformationMatrix(kRemark4Case1));
  CHECK_FALSE(case1.valid);
  CHECK_FALSE(case1.derived_is_ideal);  // [e3,e1]_M = e3 escapes the expected span
  // its table: [e2,e3] = e1+e2, [e3,e1] = e3
  Eigen::VectorXd e2 = Eigen::Vector3d::UnitY(), e3 = Eigen::Vector3d::UnitZ();
  CHECK((bracket(case1.deformed, e2, e3) - Eigen::Vector3d(1, 1, 0)).norm() == 0.0);
  CHECK((bracket(case1.deformed, e3, Eigen::VectorXd(Eigen::Vector3d::UnitX())) - e3).norm() == 0.0);

  const DeformationVerdict case2 = validate_deformation(so3_cross_tensor(), DeformationMatrix(kRemark4Case2));
  CHECK_FALSE(case2.valid);
  CHECK_FALSE(case2.derived_is_ideal);  // the transposed matrix misaligns the kernels the same way
  CHECK(case2.jacobi_residual > 0.5);
  // the Jacobiator lies in Ran M^T for any M: here along e1 + e2
  const Eigen::Vector3d expected = Eigen::Vector3d(1, 1, 0).normalized();
  CHECK(std::abs(std::abs(case2.jacobi_direction.dot(expected)) - 1.0) < 1e-12);
}

TEST_CASE("jacobiator equals M^T axial(M - M^T) on basis triples") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::MatrixXd m = lpl_test::random_matrix(rng, 3);
    const StructureTensor c = deform(so3_cross_tensor(), m);
    const Eigen::Vector3d axial(m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1));
    const Eigen::VectorXd expected = m.transpose() * axial;
    CHECK((jacobi_residual_vector(c, 0, 1, 2) - expected).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("Ker M is exactly the singular set of the deformed Poisson matrix") {
  std::mt19937_64 rng(15);
  for (int rank = 1; rank <= 3; ++rank) {
    const auto ranked = lpl_test::random_symmetric_with_rank(rng, 3, rank);
    const StructureTensor c = deform(so3_cross_tensor(), ranked.m);
    for (int col = 0; col < ranked.kernel.cols(); ++col)
      CHECK(poisson_matrix(c, Eigen::VectorXd(ranked.kernel.col(col))).cwiseAbs().maxCoeff() < 1e-12);
    // off the kernel, J does not vanish
    const Eigen::VectorXd generic = lpl_test::random_vector(rng, 3) + Eigen::Vector3d(2, 2, 2);
    if ((ranked.m * generic).norm() > 1e-3)
      CHECK(poisson_matrix(c, generic).cwiseAbs().maxCoeff() > 1e-6);
  }
}

TEST_CASE("classification of the catalog") {
  CHECK(classify(bianchi_algebra(bianchi_type(BianchiLabel::VI, -1.0))).label == AlgebraClass::A);
  CHECK(classify(bianchi_algebra(bianchi_type(BianchiLabel::V))).label == AlgebraClass::B);
  CHECK(classify(so3_cross_tensor()).label == AlgebraClass::A);
  CHECK(classify(bianchi_algebra(bianchi_type(BianchiLabel::III))).label == AlgebraClass::B);

  const std::vector<StructureTensor> registry{mother_r_so3()};
  CHECK(classify(mother_r_so3(), registry).label == AlgebraClass::A);
  CHECK(classify(dim4_entry(Dim4Name::A4_10).tensor, registry).label == AlgebraClass::A);
  CHECK(classify(dim4_entry(Dim4Name::A4_3).tensor, registry).label == AlgebraClass::B);
  CHECK(classify(dim4_entry(Dim4Name::A4_12).tensor, registry).label == AlgebraClass::C);

  // without a registered mother the honest answer for dim > 3 is "unknown"
  CHECK(classify(dim4_entry(Dim4Name::A4_12).tensor).label == AlgebraClass::Unknown);
  // aff(1) + R^3: a Lie algebra with no 5-dimensional registry entry
  const StructureTensor aff(5, {{0, 0, 1, 1.0}});
  CHECK(classify(aff).label == AlgebraClass::Unknown);

  const StructureTensor broken(3, {{1, 0, 1, 1.0}, {0, 1, 2, 1.0}, {0, 2, 0, 1.0}});
  CHECK_THROWS_AS(classify(broken), std::invalid_argument);
}

TEST_CASE("solve_deformation recovers the printed dim-4 witnesses") {
  const StructureTensor mother = mother_r_so3();
  for (auto name : {Dim4Name::A4_10, Dim4Name::A4_8, Dim4Name::A4_1, Dim4Name::A4_3}) {
    const Dim4Entry entry = dim4_entry(name);
    const DeformationSolve solve = solve_deformation(mother, entry.tensor);
    CHECK(solve.expressible);
    CHECK(deform(mother, solve.m) == entry.tensor);
    CHECK(solve.symmetric_witness == (entry.label == AlgebraClass::A));
    if (solve.symmetric_witness)
      CHECK((deform(mother, solve.symmetric_m) != entry.tensor) == false);
  }
  CHECK_FALSE(solve_deformation(mother, dim4_entry(Dim4Name::A4_12).tensor).expressible);
}

}  // TEST_SUITE
