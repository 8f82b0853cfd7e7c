#include "lpl/bianchi.hpp"

#include "lpl/deformation.hpp"
#include "lpl/lie_poisson.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace lpl;

namespace {

// A point of the Casimir's validity domain, margin at least `guard`.
Eigen::VectorXd domain_sample(const CasimirFunction& c, std::mt19937_64& rng, double guard = 0.05) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Eigen::VectorXd xi = lpl_test::random_vector(rng, 3, -2.0, 2.0);
    if (c.in_domain(xi, guard)) return xi;
  }
  throw std::runtime_error("domain_sample: could not find an interior point");
}

double casimir_residual(const StructureTensor& tensor, const CasimirFunction& c, const Eigen::VectorXd& xi) {
  const Eigen::VectorXd grad = c.gradient(xi);
  return (poisson_matrix(tensor, xi) * grad).cwiseAbs().maxCoeff() / (1.0 + grad.cwiseAbs().maxCoeff());
}

std::vector<BianchiType> representative_types() {
  return {bianchi_type(BianchiLabel::I),
          bianchi_type(BianchiLabel::II),
          bianchi_type(BianchiLabel::III),
          bianchi_type(BianchiLabel::IV),
          bianchi_type(BianchiLabel::V),
          bianchi_type(BianchiLabel::VI, -1.0),
          bianchi_type(BianchiLabel::VI, -2.0),
          bianchi_type(BianchiLabel::VI, 0.5),
          bianchi_type(BianchiLabel::VII, 0.0),
          bianchi_type(BianchiLabel::VII, 1.0),   // spiral regime
          bianchi_type(BianchiLabel::VII, 2.0),   // double root
          bianchi_type(BianchiLabel::VII, -2.0),  // double root, other sign
          bianchi_type(BianchiLabel::VII, 3.0),   // real log regime
          bianchi_type(BianchiLabel::VIII),
          bianchi_type(BianchiLabel::IX)};
}

}  // namespace

TEST_SUITE("bianchi") {

TEST_CASE("multiplication tables match the classification list") {
  const StructureTensor ix = bianchi_algebra(bianchi_type(BianchiLabel::IX));
  CHECK(ix == so3_cross_tensor());

  const StructureTensor ii = bianchi_algebra(bianchi_type(BianchiLabel::II));
  CHECK(ii.coeff(0, 1, 2) == 1.0);  // [e2,e3] = e1, all else zero
  CHECK(ii.max_abs() == 1.0);
  CHECK(derived_dim(ii) == 1);

  const StructureTensor vi_m1 = bianchi_algebra(bianchi_type(BianchiLabel::VI, -1.0));
  CHECK(vi_m1.coeff(0, 0, 2) == 1.0);   // [e1,e3] = e1
  CHECK(vi_m1.coeff(1, 1, 2) == -1.0);  // [e2,e3] = -e2

  CHECK_THROWS_AS(bianchi_type(BianchiLabel::VI), std::invalid_argument);  // missing eta
}

TEST_CASE("class split: A = {I, II, VI(-1), VII(0), VIII, IX}") {
  CHECK(bianchi_class(bianchi_type(BianchiLabel::I)) == 'A');
  CHECK(bianchi_class(bianchi_type(BianchiLabel::II)) == 'A');
  CHECK(bianchi_class(bianchi_type(BianchiLabel::VI, -1.0)) == 'A');
  CHECK(bianchi_class(bianchi_type(BianchiLabel::VII, 0.0)) == 'A');
  CHECK(bianchi_class(bianchi_type(BianchiLabel::VIII)) == 'A');
  CHECK(bianchi_class(bianchi_type(BianchiLabel::IX)) == 'A');
  CHECK(bianchi_class(bianchi_type(BianchiLabel::III)) == 'B');
  CHECK(bianchi_class(bianchi_type(BianchiLabel::IV)) == 'B');
  CHECK(bianchi_class(bianchi_type(BianchiLabel::V)) == 'B');
  CHECK(bianchi_class(bianchi_type(BianchiLabel::VI, 0.5)) == 'B');
  CHECK(bianchi_class(bianchi_type(BianchiLabel::VII, 1.0)) == 'B');
  // the class matches the symmetry of the recovered deformation matrix
  for (const auto& t : representative_types()) {
    const bool symmetric = recover_deformation(bianchi_algebra(t)).symmetric();
    CHECK(symmetric == (bianchi_class(t) == 'A'));
  }
}

TEST_CASE("every cataloged Casimir annihilates its Poisson matrix at 1000 points") {
  std::mt19937_64 rng(21);
  for (const auto& t : representative_types()) {
    const StructureTensor tensor = bianchi_algebra(t);
    const CasimirFunction casimir = casimir_of(t);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i)
      worst = std::max(worst, casimir_residual(tensor, casimir, domain_sample(casimir, rng)));
    INFO("type ", to_string(t), " worst residual ", worst);
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("specific Casimirs: IX quadratic and V rational") {
  const CasimirFunction ix = casimir_of(bianchi_type(BianchiLabel::IX));
  const Eigen::Vector3d p(1.0, 2.0, -3.0);
  CHECK(ix.value(p) == doctest::Approx(0.5 * 14.0));

  const CasimirFunction v = casimir_of(bianchi_type(BianchiLabel::V));
  CHECK(v.value(Eigen::Vector3d(3.0, 2.0, 7.0)) == doctest::Approx(1.5));
  CHECK_FALSE(v.in_domain(Eigen::Vector3d(1.0, 0.0, 0.0)));
}

TEST_CASE("class-A Casimirs are 1/2 <xi, M xi> with M = recover_deformation") {
  std::mt19937_64 rng(22);
  for (const auto& t : {bianchi_type(BianchiLabel::II), bianchi_type(BianchiLabel::VI, -1.0),
                        bianchi_type(BianchiLabel::VII, 0.0), bianchi_type(BianchiLabel::VIII),
                        bianchi_type(BianchiLabel::IX)}) {
    const Eigen::MatrixXd m = recover_deformation(bianchi_algebra(t)).matrix();
    const CasimirFunction casimir = casimir_of(t);
    for (int i = 0; i < 50; ++i) {
      const Eigen::VectorXd xi = lpl_test::random_vector(rng, 3, -2.0, 2.0);
      CHECK(casimir.value(xi) == doctest::Approx(0.5 * xi.dot(m * xi)).epsilon(1e-12));
    }
  }
}

TEST_CASE("VII(eta) real regime: the eta^2 - 4 discriminant is the one that vanishes") {
  std::mt19937_64 rng(23);
  const double eta = 3.0;
  const StructureTensor tensor = bianchi_algebra(bianchi_type(BianchiLabel::VII, eta));
  const CasimirFunction good = detail::vii_log_casimir(eta, 4.0);
  const CasimirFunction bad = detail::vii_log_casimir(eta, 1.0);
  double worst_good = 0.0, best_bad = 1e300;
  for (int i = 0; i < 200; ++i) {
    worst_good = std::max(worst_good, casimir_residual(tensor, good, domain_sample(good, rng)));
    best_bad = std::min(best_bad, casimir_residual(tensor, bad, domain_sample(bad, rng)));
  }
  CHECK(worst_good < 1e-12);
  CHECK(best_bad > 1e-3);
}

TEST_CASE("singular sets: dimension and location") {
  std::mt19937_64 rng(24);
  for (const auto& t : representative_types()) {
    if (t.label == BianchiLabel::I) continue;
    const StructureTensor tensor = bianchi_algebra(t);
    const SingularSet sigma = singular_set(t);
    for (int i = 0; i < 50; ++i) {
      const Eigen::VectorXd xi_s = sigma.sample(rng);
      CHECK(poisson_matrix(tensor, xi_s).cwiseAbs().maxCoeff() == 0.0);
    }
    // a generic point is not singular
    const Eigen::VectorXd off = Eigen::Vector3d(1.0, 1.0, 1.0);
    CHECK(poisson_matrix(tensor, off).cwiseAbs().maxCoeff() > 0.5);
  }
  CHECK(singular_set(bianchi_type(BianchiLabel::II)).dimension == 2);
  CHECK(singular_set(bianchi_type(BianchiLabel::III)).dimension == 2);
  CHECK(singular_set(bianchi_type(BianchiLabel::VI, 2.0)).dimension == 1);
  CHECK(singular_set(bianchi_type(BianchiLabel::VIII)).dimension == 0);
  CHECK(singular_set(bianchi_type(BianchiLabel::IX)).dimension == 0);
  CHECK_THROWS_AS(singular_set(bianchi_type(BianchiLabel::I)), std::invalid_argument);
}

TEST_CASE("T3 reverses every type; the extra transforms belong to class A") {
  std::mt19937_64 rng(25);
  for (const auto& t : representative_types()) {
    const StructureTensor tensor = bianchi_algebra(t);
    CHECK(reversal_defect(tensor, reversal_t3().t, rng, 100) == 0.0);
    for (const auto& r : reversal_transforms(t)) {
      CHECK(reversal_defect(tensor, r.t, rng, 100) == 0.0);
      CHECK((r.t * r.t - Eigen::Matrix3d::Identity()).norm() == 0.0);  // involution
    }
  }
}

TEST_CASE("catalog of extra transforms is exact") {
  auto names = [](const BianchiType& t) {
    std::vector<std::string> out;
    for (const auto& r : reversal_transforms(t)) out.push_back(r.name);
    return out;
  };
  CHECK(names(bianchi_type(BianchiLabel::II)) == std::vector<std::string>{"T3", "T2"});
  CHECK(names(bianchi_type(BianchiLabel::VII, 0.0)) == std::vector<std::string>{"T3", "T2"});
  CHECK(names(bianchi_type(BianchiLabel::VIII)) == std::vector<std::string>{"T3", "T2"});
  CHECK(names(bianchi_type(BianchiLabel::IX)) == std::vector<std::string>{"T3", "T2"});
  CHECK(names(bianchi_type(BianchiLabel::VI, -1.0)) == std::vector<std::string>{"T3", "T12"});
  CHECK(names(bianchi_type(BianchiLabel::V)) == std::vector<std::string>{"T3"});
}

TEST_CASE("candidate T2 fails on type V and is excluded") {
  std::mt19937_64 rng(26);
  const StructureTensor v = bianchi_algebra(bianchi_type(BianchiLabel::V));
  CHECK(reversal_defect(v, reversal_t2().t, rng, 100) > 0.1);
}

}  // TEST_SUITE
