#include "lpl/dim4.hpp"

#include "lpl/spectral.hpp"

namespace lpl {

StructureTensor mother_r_so3() {
  return StructureTensor(4, {{3, 1, 2, 1.0}, {2, 1, 3, -1.0}, {1, 2, 3, 1.0}});
}

Dim4Name parse_dim4(const std::string& name) {
  if (name == "A4_10") return Dim4Name::A4_10;
  if (name == "A4_8") return Dim4Name::A4_8;
  if (name == "A4_1") return Dim4Name::A4_1;
  if (name == "A4_3") return Dim4Name::A4_3;
  if (name == "A4_12") return Dim4Name::A4_12;
  throw std::invalid_argument("unknown 4-dimensional catalog name '" + name + "'");
}

std::string to_string(Dim4Name name) {
  switch (name) {
    case Dim4Name::A4_10: return "A4_10";
    case Dim4Name::A4_8: return "A4_8";
    case Dim4Name::A4_1: return "A4_1";
    case Dim4Name::A4_3: return "A4_3";
    default: return "A4_12";
  }
}

namespace {

// The deformation matrices are printed transposed in the reference tables;
// storage keeps M itself, with the transpose applied here at the boundary.
Eigen::Matrix4d from_transposed(std::initializer_list<double> rows) {
  Eigen::Matrix4d mt;
  int i = 0;
  for (double v : rows) {
    mt(i / 4, i % 4) = v;
    ++i;
  }
  return mt.transpose();
}

Eigen::VectorXd monic4(double c0, double c1, double c2, double c3) {
  Eigen::VectorXd p(5);
  p << c0, c1, c2, c3, 1.0;
  return p;
}

}  // namespace

Dim4Entry mother_entry() {
  Dim4Entry e;
  e.name = "R+so3";
  e.tensor = mother_r_so3();
  e.m = DeformationMatrix(Eigen::Matrix4d::Identity());
  e.label = AlgebraClass::A;
  // lambda^2 (lambda^2 + |h|^2) with |h|^2 = h2^2 + h3^2 + h4^2 (e1 is central).
  e.reference_char_poly = [](const Eigen::Vector4d& h) {
    return monic4(0.0, 0.0, h.tail(3).squaredNorm(), 0.0);
  };
  e.char_poly_text = "x^2 (x^2 + h2^2 + h3^2 + h4^2)";
  e.sigma = {{1, 2, 3}, 1, "xi1-axis {xi2 = xi3 = xi4 = 0}"};
  return e;
}

Dim4Entry dim4_entry(Dim4Name name) {
  Dim4Entry e;
  e.name = to_string(name);
  switch (name) {
    case Dim4Name::A4_10:
      // [e2,e3] = e1, [e2,e4] = -e3, [e3,e4] = e2
      e.tensor = StructureTensor(4, {{0, 1, 2, 1.0}, {2, 1, 3, -1.0}, {1, 2, 3, 1.0}});
      e.m = DeformationMatrix(from_transposed({0, 0, 0, 1,  //
                                               0, 1, 0, 0,  //
                                               0, 0, 1, 0,  //
                                               1, 0, 0, 0}));
      e.label = AlgebraClass::A;
      e.reference_char_poly = [](const Eigen::Vector4d& h) { return monic4(0.0, 0.0, h(3) * h(3), 0.0); };
      e.char_poly_text = "x^2 (x^2 + h4^2)";
      e.sigma = {{0, 1, 2}, 1, "xi4-axis {xi1 = xi2 = xi3 = 0}"};
      break;
    case Dim4Name::A4_8:
      // [e2,e3] = e1, [e2,e4] = e2, [e3,e4] = -e3
      e.tensor = StructureTensor(4, {{0, 1, 2, 1.0}, {1, 1, 3, 1.0}, {2, 2, 3, -1.0}});
      e.m = DeformationMatrix(from_transposed({0, 0, 0, 1,   //
                                               0, 0, -1, 0,  //
                                               0, -1, 0, 0,  //
                                               1, 0, 0, 0}));
      e.label = AlgebraClass::A;
      e.reference_char_poly = [](const Eigen::Vector4d& h) { return monic4(0.0, 0.0, -h(3) * h(3), 0.0); };
      e.char_poly_text = "x^2 (x - h4)(x + h4)";
      e.sigma = {{0, 1, 2}, 1, "xi4-axis {xi1 = xi2 = xi3 = 0}"};
      break;
    case Dim4Name::A4_1:
      // [e2,e3] = e1, [e3,e4] = -e2
      e.tensor = StructureTensor(4, {{0, 1, 2, 1.0}, {1, 2, 3, -1.0}});
      e.m = DeformationMatrix(from_transposed({0, 0, 0, 1,   //
                                               0, -1, 0, 0,  //
                                               0, 0, 0, 0,   //
                                               1, 0, 0, 0}));
      e.label = AlgebraClass::A;
      e.reference_char_poly = [](const Eigen::Vector4d&) { return monic4(0.0, 0.0, 0.0, 0.0); };
      e.char_poly_text = "x^4";
      e.sigma = {{0, 1}, 2, "plane {xi1 = xi2 = 0}"};
      break;
    case Dim4Name::A4_3:
      // [e2,e3] = e2, [e3,e4] = -e1
      e.tensor = StructureTensor(4, {{1, 1, 2, 1.0}, {0, 2, 3, -1.0}});
      e.m = DeformationMatrix(from_transposed({0, -1, 0, 0,  //
                                               0, 0, 0, 1,   //
                                               0, 0, 0, 0,   //
                                               0, 0, 0, 0}));
      e.label = AlgebraClass::B;
      e.reference_char_poly = [](const Eigen::Vector4d& h) { return monic4(0.0, 0.0, 0.0, -h(2)); };
      e.char_poly_text = "x^3 (x - h3)";
      e.sigma = {{0, 1}, 2, "plane {xi1 = xi2 = 0}"};
      break;
    case Dim4Name::A4_12:
      // [e1,e3] = e1, [e1,e4] = -e2, [e2,e3] = e2, [e2,e4] = e1
      e.tensor = StructureTensor(4, {{0, 0, 2, 1.0}, {1, 0, 3, -1.0}, {1, 1, 2, 1.0}, {0, 1, 3, 1.0}});
      e.label = AlgebraClass::C;
      // x^2 [(x - h3)^2 + h4^2]; the generator is block lower triangular with
      // the rotation-plus-scaling block [[h3, -h4], [h4, h3]].
      e.reference_char_poly = [](const Eigen::Vector4d& h) {
        return monic4(0.0, 0.0, h(2) * h(2) + h(3) * h(3), -2.0 * h(2));
      };
      e.char_poly_text = "x^2 ((x - h3)^2 + h4^2)";
      e.sigma = {{0, 1}, 2, "plane {xi1 = xi2 = 0}"};
      break;
  }
  return e;
}

std::vector<Dim4Entry> dim4_catalog() {
  return {mother_entry(),          dim4_entry(Dim4Name::A4_10), dim4_entry(Dim4Name::A4_8),
          dim4_entry(Dim4Name::A4_1), dim4_entry(Dim4Name::A4_3),  dim4_entry(Dim4Name::A4_12)};
}

CharPolyReport verify_char_polys(const Dim4Entry& entry, int trials, std::mt19937_64& rng, double tol) {
  std::uniform_real_distribution<double> unit(-2.0, 2.0);
  CharPolyReport report;
  for (int trial = 0; trial < trials; ++trial) {
    Eigen::Vector4d h;
    for (int i = 0; i < 4; ++i) h(i) = unit(rng);
    const Eigen::VectorXd computed = spectrum(coadjoint_matrix(entry.tensor, Eigen::VectorXd(h))).char_poly;
    const Eigen::VectorXd reference = entry.reference_char_poly(h);
    const double err =
        (computed - reference).cwiseAbs().maxCoeff() / (1.0 + reference.cwiseAbs().maxCoeff());
    if (err > report.worst_relative_error) {
      report.worst_relative_error = err;
      report.worst_h = h;
      report.computed = computed;
      report.reference = reference;
    }
  }
  report.ok = report.worst_relative_error <= tol;
  return report;
}

}  // namespace lpl
