#include "lpl/bianchi.hpp"

#include "lpl/lie_poisson.hpp"

#include <cmath>
#include <map>

namespace lpl {

bool has_parameter(BianchiLabel label) { return label == BianchiLabel::VI || label == BianchiLabel::VII; }

BianchiType bianchi_type(BianchiLabel label) {
  if (has_parameter(label)) throw std::invalid_argument("bianchi_type: VI and VII require eta");
  return {label, 0.0};
}

BianchiType bianchi_type(BianchiLabel label, double eta) {
  if (!std::isfinite(eta)) throw std::invalid_argument("bianchi_type: eta must be finite");
  return {label, has_parameter(label) ? eta : 0.0};
}

BianchiType parse_bianchi(const std::string& name, const double* eta) {
  static const std::map<std::string, BianchiLabel> names = {
      {"I", BianchiLabel::I},     {"II", BianchiLabel::II},   {"III", BianchiLabel::III},
      {"IV", BianchiLabel::IV},   {"V", BianchiLabel::V},     {"VI", BianchiLabel::VI},
      {"VII", BianchiLabel::VII}, {"VIII", BianchiLabel::VIII}, {"IX", BianchiLabel::IX}};
  const auto it = names.find(name);
  if (it == names.end()) throw std::invalid_argument("unknown Bianchi type '" + name + "'");
  if (has_parameter(it->second)) {
    if (!eta) throw std::invalid_argument("Bianchi type " + name + " requires --eta");
    return bianchi_type(it->second, *eta);
  }
  return bianchi_type(it->second);
}

std::string to_string(const BianchiType& t) {
  static const char* names[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX"};
  std::string out = names[static_cast<int>(t.label)];
  if (has_parameter(t.label)) out += "(eta=" + std::to_string(t.eta) + ")";
  return out;
}

char bianchi_class(const BianchiType& t) {
  switch (t.label) {
    case BianchiLabel::I:
    case BianchiLabel::II:
    case BianchiLabel::VIII:
    case BianchiLabel::IX: return 'A';
    case BianchiLabel::VI: return t.eta == -1.0 ? 'A' : 'B';
    case BianchiLabel::VII: return t.eta == 0.0 ? 'A' : 'B';
    default: return 'B';
  }
}

StructureTensor bianchi_algebra(const BianchiType& t) {
  switch (t.label) {
    case BianchiLabel::I: return StructureTensor(3);
    case BianchiLabel::II:  // Heisenberg: [e2,e3] = e1
      return StructureTensor(3, {{0, 1, 2, 1.0}});
    case BianchiLabel::III:  // [e1,e3] = e1
      return StructureTensor(3, {{0, 0, 2, 1.0}});
    case BianchiLabel::IV:  // [e1,e3] = e1, [e2,e3] = e1 + e2
      return StructureTensor(3, {{0, 0, 2, 1.0}, {0, 1, 2, 1.0}, {1, 1, 2, 1.0}});
    case BianchiLabel::V:  // [e1,e3] = e1, [e2,e3] = e2
      return StructureTensor(3, {{0, 0, 2, 1.0}, {1, 1, 2, 1.0}});
    case BianchiLabel::VI:  // [e1,e3] = e1, [e2,e3] = eta e2
      return StructureTensor(3, {{0, 0, 2, 1.0}, {1, 1, 2, t.eta}});
    case BianchiLabel::VII:  // [e1,e3] = e2, [e2,e3] = -e1 + eta e2
      return StructureTensor(3, {{1, 0, 2, 1.0}, {0, 1, 2, -1.0}, {1, 1, 2, t.eta}});
    case BianchiLabel::VIII:  // [e1,e2] = e3, [e1,e3] = e2, [e2,e3] = -e1
      return StructureTensor(3, {{2, 0, 1, 1.0}, {1, 0, 2, 1.0}, {0, 1, 2, -1.0}});
    case BianchiLabel::IX: return so3_cross_tensor();
  }
  throw std::logic_error("unreachable");
}

namespace {

CasimirFunction coordinate_casimir(int index, const std::string& name) {
  CasimirFunction c;
  c.name = name;
  c.f.value = [index](const Eigen::VectorXd& xi) { return xi(index); };
  c.f.gradient = [index](const Eigen::VectorXd& xi) {
    return Eigen::VectorXd(Eigen::VectorXd::Unit(xi.size(), index));
  };
  c.f.hessian = [](const Eigen::VectorXd& xi) {
    return Eigen::MatrixXd(Eigen::MatrixXd::Zero(xi.size(), xi.size()));
  };
  return c;
}

/// 1/2 <xi, Q xi> with symmetric Q — the class-A quadratic Casimirs.
CasimirFunction quadratic_casimir(const Eigen::Matrix3d& q, const std::string& name) {
  CasimirFunction c;
  c.name = name;
  c.f.value = [q](const Eigen::VectorXd& xi) { return 0.5 * xi.dot(q * xi); };
  c.f.gradient = [q](const Eigen::VectorXd& xi) { return Eigen::VectorXd(q * xi); };
  c.f.hessian = [q](const Eigen::VectorXd&) { return Eigen::MatrixXd(q); };
  return c;
}

CasimirFunction casimir_iv() {
  CasimirFunction c;
  c.name = "xi2/xi1 - log|xi1|";
  c.f.value = [](const Eigen::VectorXd& xi) { return xi(1) / xi(0) - std::log(std::abs(xi(0))); };
  c.f.gradient = [](const Eigen::VectorXd& xi) {
    Eigen::VectorXd g(3);
    g << -xi(1) / (xi(0) * xi(0)) - 1.0 / xi(0), 1.0 / xi(0), 0.0;
    return g;
  };
  c.domain_signature = [](const Eigen::VectorXd& xi) { return Eigen::VectorXd(xi.segment(0, 1)); };
  return c;
}

CasimirFunction casimir_v() {
  CasimirFunction c;
  c.name = "xi1/xi2";
  c.f.value = [](const Eigen::VectorXd& xi) { return xi(0) / xi(1); };
  c.f.gradient = [](const Eigen::VectorXd& xi) {
    Eigen::VectorXd g(3);
    g << 1.0 / xi(1), -xi(0) / (xi(1) * xi(1)), 0.0;
    return g;
  };
  c.domain_signature = [](const Eigen::VectorXd& xi) { return Eigen::VectorXd(xi.segment(1, 1)); };
  return c;
}

CasimirFunction casimir_vi(double eta) {
  CasimirFunction c;
  c.name = "xi2 |xi1|^(-eta)";
  c.f.value = [eta](const Eigen::VectorXd& xi) { return xi(1) * std::pow(std::abs(xi(0)), -eta); };
  c.f.gradient = [eta](const Eigen::VectorXd& xi) {
    const double p = std::pow(std::abs(xi(0)), -eta);
    Eigen::VectorXd g(3);
    g << -eta * xi(1) * p / xi(0), p, 0.0;
    return g;
  };
  c.domain_signature = [](const Eigen::VectorXd& xi) { return Eigen::VectorXd(xi.segment(0, 1)); };
  return c;
}

/// VII_eta, eta = ±2 (double root): C = s xi2 / w + log|w| with s = eta/2, w = xi1 - s xi2.
CasimirFunction casimir_vii_double_root(double eta) {
  const double s = eta / 2.0;
  CasimirFunction c;
  c.name = "s*xi2/(xi1 - s*xi2) + log|xi1 - s*xi2|";
  c.f.value = [s](const Eigen::VectorXd& xi) {
    const double w = xi(0) - s * xi(1);
    return s * xi(1) / w + std::log(std::abs(w));
  };
  c.f.gradient = [s](const Eigen::VectorXd& xi) {
    const double w = xi(0) - s * xi(1);
    Eigen::VectorXd g(3);
    g << -s * xi(1) / (w * w) + 1.0 / w, s * xi(0) / (w * w) - s / w, 0.0;
    return g;
  };
  c.domain_signature = [s](const Eigen::VectorXd& xi) {
    Eigen::VectorXd w(1);
    w << xi(0) - s * xi(1);
    return w;
  };
  return c;
}

/// VII_eta, eta^2 < 4: C = 2a atan(u/v) - omega log(u^2 + v^2),
/// u = a xi1 + xi2, v = omega xi1, a = -eta/2, omega = sqrt(1 - eta^2/4).
CasimirFunction casimir_vii_spiral(double eta) {
  const double a = -eta / 2.0;
  const double omega = std::sqrt(1.0 - eta * eta / 4.0);
  CasimirFunction c;
  c.name = "2a*atan((a*xi1+xi2)/(omega*xi1)) - omega*log((a*xi1+xi2)^2 + (omega*xi1)^2)";
  c.f.value = [a, omega](const Eigen::VectorXd& xi) {
    const double u = a * xi(0) + xi(1);
    const double v = omega * xi(0);
    return 2.0 * a * std::atan(u / v) - omega * std::log(u * u + v * v);
  };
  c.f.gradient = [a, omega](const Eigen::VectorXd& xi) {
    const double u = a * xi(0) + xi(1);
    const double v = omega * xi(0);
    const double r2 = u * u + v * v;
    Eigen::VectorXd g(3);
    g << (2.0 * (a * a - omega * omega) * v - 4.0 * a * omega * u) / r2,
        (2.0 * a * v - 2.0 * omega * u) / r2, 0.0;
    return g;
  };
  c.domain_signature = [](const Eigen::VectorXd& xi) { return Eigen::VectorXd(xi.segment(0, 1)); };
  return c;
}

}  // namespace

namespace detail {

CasimirFunction vii_log_casimir(double eta, double discriminant_offset) {
  const double disc = eta * eta - discriminant_offset;
  if (!(disc > 0.0)) throw std::invalid_argument("vii_log_casimir: discriminant not positive");
  const double lp = (-eta + std::sqrt(disc)) / 2.0;
  const double lm = (-eta - std::sqrt(disc)) / 2.0;
  CasimirFunction c;
  c.name = "lm*log|-lm*xi1 - xi2| - lp*log|lp*xi1 + xi2|";
  c.f.value = [lp, lm](const Eigen::VectorXd& xi) {
    const double u = -lm * xi(0) - xi(1);
    const double v = lp * xi(0) + xi(1);
    return lm * std::log(std::abs(u)) - lp * std::log(std::abs(v));
  };
  c.f.gradient = [lp, lm](const Eigen::VectorXd& xi) {
    const double u = -lm * xi(0) - xi(1);
    const double v = lp * xi(0) + xi(1);
    Eigen::VectorXd g(3);
    g << -lm * lm / u - lp * lp / v, -lm / u - lp / v, 0.0;
    return g;
  };
  c.domain_signature = [lp, lm](const Eigen::VectorXd& xi) {
    Eigen::VectorXd w(2);
    w << -lm * xi(0) - xi(1), lp * xi(0) + xi(1);
    return w;
  };
  return c;
}

}  // namespace detail

CasimirFunction casimir_of(const BianchiType& t) {
  switch (t.label) {
    case BianchiLabel::I:
      // Trivial bracket: every function is a Casimir; ship a coordinate.
      return coordinate_casimir(0, "xi1");
    case BianchiLabel::II: return quadratic_casimir(Eigen::Vector3d(1, 0, 0).asDiagonal(), "1/2 xi1^2");
    case BianchiLabel::III: return coordinate_casimir(1, "xi2");
    case BianchiLabel::IV: return casimir_iv();
    case BianchiLabel::V: return casimir_v();
    case BianchiLabel::VI:
      if (t.eta == -1.0) {
        Eigen::Matrix3d q = Eigen::Matrix3d::Zero();
        q(0, 1) = q(1, 0) = -1.0;
        return quadratic_casimir(q, "-xi1 xi2");
      }
      return casimir_vi(t.eta);
    case BianchiLabel::VII:
      if (t.eta == 0.0)
        return quadratic_casimir(Eigen::Vector3d(-1, -1, 0).asDiagonal(), "-1/2 (xi1^2 + xi2^2)");
      if (t.eta * t.eta > 4.0) return detail::vii_log_casimir(t.eta, 4.0);
      if (t.eta == 2.0 || t.eta == -2.0) return casimir_vii_double_root(t.eta);
      return casimir_vii_spiral(t.eta);
    case BianchiLabel::VIII: return quadratic_casimir(Eigen::Vector3d(-1, -1, 1).asDiagonal(), "1/2 (xi3^2 - xi1^2 - xi2^2)");
    case BianchiLabel::IX: return quadratic_casimir(Eigen::Matrix3d::Identity(), "1/2 |xi|^2");
  }
  throw std::logic_error("unreachable");
}

bool SingularSet::contains(const Eigen::VectorXd& xi, double tol) const {
  for (int i : vanishing)
    if (std::abs(xi(i)) > tol) return false;
  return true;
}

Eigen::VectorXd SingularSet::sample(std::mt19937_64& rng, double scale) const {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Eigen::VectorXd xi(dimension + static_cast<int>(vanishing.size()));
  for (int i = 0; i < xi.size(); ++i) xi(i) = scale * unit(rng);
  for (int i : vanishing) xi(i) = 0.0;
  return xi;
}

SingularSet singular_set(const BianchiType& t) {
  switch (t.label) {
    case BianchiLabel::I:
      throw std::invalid_argument("singular_set: type I has J == 0 everywhere");
    case BianchiLabel::II:
    case BianchiLabel::III: return {{0}, 2, "plane {xi1 = 0}"};
    case BianchiLabel::IV:
    case BianchiLabel::V:
    case BianchiLabel::VI:
    case BianchiLabel::VII: return {{0, 1}, 1, "xi3-axis {xi1 = xi2 = 0}"};
    case BianchiLabel::VIII:
    case BianchiLabel::IX: return {{0, 1, 2}, 0, "origin"};
  }
  throw std::logic_error("unreachable");
}

ReversalTransform reversal_t3() { return {"T3", Eigen::Vector3d(1, 1, -1).asDiagonal()}; }
ReversalTransform reversal_t2() { return {"T2", Eigen::Vector3d(1, -1, 1).asDiagonal()}; }
ReversalTransform reversal_t12() {
  Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
  t(0, 1) = t(1, 0) = t(2, 2) = 1.0;
  return {"T12", t};
}

std::vector<ReversalTransform> reversal_transforms(const BianchiType& t) {
  std::vector<ReversalTransform> out{reversal_t3()};
  const bool extra_t2 = t.label == BianchiLabel::II || (t.label == BianchiLabel::VII && t.eta == 0.0) ||
                        t.label == BianchiLabel::VIII || t.label == BianchiLabel::IX;
  if (extra_t2) out.push_back(reversal_t2());
  if (t.label == BianchiLabel::VI && t.eta == -1.0) out.push_back(reversal_t12());
  return out;
}

double reversal_defect(const StructureTensor& c, const Eigen::MatrixXd& t, std::mt19937_64& rng, int trials) {
  if (t.rows() != c.dim() || t.cols() != c.dim())
    throw std::invalid_argument("reversal_defect: transform dimension mismatch");
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Eigen::VectorXd xi(c.dim());
    for (int i = 0; i < xi.size(); ++i) xi(i) = unit(rng);
    const Eigen::MatrixXd pushforward = t * poisson_matrix(c, Eigen::VectorXd(t * xi)) * t.transpose();
    worst = std::max(worst, (pushforward + poisson_matrix(c, xi)).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace lpl
