#pragma once

#include "lpl/bianchi.hpp"
#include "lpl/deformation.hpp"
#include "lpl/structure_tensor.hpp"

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace lpl {

/// The fully antisymmetric 4-dimensional algebra R + so(3):
/// [e2,e3] = e4, [e2,e4] = -e3, [e3,e4] = e2, with e1 central.
StructureTensor mother_r_so3();

enum class Dim4Name { A4_10, A4_8, A4_1, A4_3, A4_12 };

Dim4Name parse_dim4(const std::string& name);
std::string to_string(Dim4Name name);

/// One cataloged 4-dimensional algebra: its multiplication table, the
/// deformation matrix from the R + so(3) mother when one exists, its class,
/// the reference characteristic polynomial of the singular-point generator
/// (monic, ascending coefficients in the components of h), and its singular set.
struct Dim4Entry {
  std::string name;
  StructureTensor tensor;
  std::optional<DeformationMatrix> m;
  AlgebraClass label = AlgebraClass::Unknown;
  std::function<Eigen::VectorXd(const Eigen::Vector4d& h)> reference_char_poly;
  std::string char_poly_text;
  SingularSet sigma;
};

Dim4Entry dim4_entry(Dim4Name name);

/// Catalog entry for the mother itself (class A, M = identity).
Dim4Entry mother_entry();

/// All six cataloged tensors: mother + five named algebras.
std::vector<Dim4Entry> dim4_catalog();

struct CharPolyReport {
  bool ok = true;
  double worst_relative_error = 0.0;
  Eigen::Vector4d worst_h = Eigen::Vector4d::Zero();
  Eigen::VectorXd computed;   // at worst_h
  Eigen::VectorXd reference;  // at worst_h
};

/// Numerically computed characteristic polynomial of the singular-point
/// generator c^a_{jk} h^k versus the entry's reference descriptor at random h.
CharPolyReport verify_char_polys(const Dim4Entry& entry, int trials, std::mt19937_64& rng, double tol = 1e-8);

}  // namespace lpl
