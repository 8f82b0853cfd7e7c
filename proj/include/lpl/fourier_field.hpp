#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <string>
#include <vector>

namespace lpl {

/// A real 3-vector field on the 2pi-periodic 3-torus, held as Fourier
/// coefficients u^(k) for integer wavevectors with |k|_inf <= K. The reality
/// constraint is u^(-k) = conj(u^(k)); solenoidal states satisfy k . u^(k) = 0.
class FourierField {
public:
  FourierField() = default;
  explicit FourierField(int truncation)
      : k_(truncation), modes_(cube(truncation), Eigen::Vector3cd::Zero()) {
    if (truncation < 1) throw std::invalid_argument("FourierField: truncation must be >= 1");
  }

  int truncation() const { return k_; }
  long mode_count() const { return static_cast<long>(modes_.size()); }

  bool holds(const Eigen::Vector3i& k) const {
    return std::abs(k.x()) <= k_ && std::abs(k.y()) <= k_ && std::abs(k.z()) <= k_;
  }

  Eigen::Vector3cd& at(const Eigen::Vector3i& k) { return modes_[index(k)]; }
  const Eigen::Vector3cd& at(const Eigen::Vector3i& k) const { return modes_[index(k)]; }

  /// All wavevectors in deterministic lexicographic order (z, y, x ascending).
  const std::vector<Eigen::Vector3i>& wavevectors() const;

  FourierField& operator+=(const FourierField& other);
  FourierField& operator*=(double scale);
  friend FourierField operator+(FourierField a, const FourierField& b) { return a += b; }
  friend FourierField operator*(double s, FourierField f) { return f *= s; }

  bool all_finite() const;

private:
  static long cube(int k) { return static_cast<long>(2 * k + 1) * (2 * k + 1) * (2 * k + 1); }
  long index(const Eigen::Vector3i& k) const {
    if (!holds(k)) throw std::out_of_range("FourierField: wavevector outside truncation");
    const long w = 2 * k_ + 1;
    return ((k.z() + k_) * w + (k.y() + k_)) * w + (k.x() + k_);
  }

  int k_ = 0;
  std::vector<Eigen::Vector3cd> modes_;
  mutable std::vector<Eigen::Vector3i> wavevector_cache_;
};

/// Orthonormal eigenvectors of curl at wavevector k != 0:
/// i k x hplus = +|k| hplus, i k x hminus = -|k| hminus.
struct HelicalFrame {
  Eigen::Vector3d e1, e2;  // real unit vectors orthogonal to k
  Eigen::Vector3cd hplus, hminus;
};

HelicalFrame helical_frame(const Eigen::Vector3i& k);

/// Per-mode helical amplitudes a± with u^(k) = a+ hplus + a- hminus (k != 0).
struct HelicalAmplitudes {
  std::complex<double> plus, minus;
};

HelicalAmplitudes helical_amplitudes(const FourierField& f, const Eigen::Vector3i& k);

double reality_defect(const FourierField& f);      // max |u^(-k) - conj(u^(k))|
double solenoidal_defect(const FourierField& f);   // max |k . u^(k)|
bool is_zero_mean(const FourierField& f, double tol = 1e-14);

/// Removes the component along k at every k != 0 (leaves the mean mode alone).
FourierField solenoidal_project(const FourierField& f);

/// L2 inner product over the torus: <f, g> = (2pi)^3 sum_k f^(k) . conj(g^(k)).
double inner(const FourierField& f, const FourierField& g);

FourierField curl(const FourierField& f);

/// Inverse of curl on the zero-mean solenoidal subspace (helical amplitudes
/// scale by ±1/|k|). Throws on non-solenoidal input or a nonzero mean mode.
FourierField curl_inv(const FourierField& f);

/// Adds the real Beltrami mode of curl-eigenvalue sign*|k| with pointwise
/// amplitude `amp` at wavevector pair ±k: u(x) = amp*(e1 cos(k.x) - sign*e2 sin(k.x)).
void add_beltrami_mode(FourierField& f, const Eigen::Vector3i& k, int sign, double amp);

FourierField beltrami_state(int truncation, const Eigen::Vector3i& k, int sign, double amp = 1.0);

/// Superposition of +1-helicity Beltrami modes at |k| = 1 and |k| = 2.
FourierField two_beltrami_state(int truncation);

/// Zero-mean solenoidal field with seeded random helical amplitudes, spectral
/// amplitude decay 1/|k|^2.
FourierField random_solenoidal_state(int truncation, std::mt19937_64& rng);

/// Mirror (parity) image: u'(x) = -u(-x); flips helicity, preserves energy.
FourierField mirror(const FourierField& f);

/// Truncated convolution of the pointwise cross product:
/// out^(k) = sum_{p+q=k} a^(p) x b^(q), |k|_inf <= K, fixed summation order.
FourierField cross_convolve(const FourierField& a, const FourierField& b);

/// Galerkin-truncated vortex dynamics: d(omega)/dt = -curl(omega x u) with
/// u = curl_inv(omega), projected back onto the retained solenoidal modes.
FourierField vortex_rhs(const FourierField& omega);

/// E = 1/2 the integral of |u|^2 with u = curl_inv(omega).
double energy(const FourierField& omega);

/// C = 1/2 the integral of omega . curl_inv(omega) (the helicity).
double helicity(const FourierField& omega);

struct FieldTrajectory {
  std::vector<double> times;
  std::vector<double> energy_log;
  std::vector<double> helicity_log;
  FourierField final_state;
  bool blew_up = false;
  std::string diagnostic;
  double energy_drift = 0.0;    // max relative
  double helicity_drift = 0.0;  // max relative
};

FieldTrajectory integrate_field(const FourierField& omega0, double dt, double t_final, int log_stride = 1);

/// Linearized vortex flow about omega = 0 with frozen h: d(omega~)/dt = curl(h x omega~).
FourierField vortex_linearized_rhs(const FourierField& h, const FourierField& omega_tilde);

/// The same generator written through the constant Poisson operator
/// J(h) v = curl((curl v) x h) applied to the quadratic-Casimir gradient
/// curl_inv(omega~); returning -J(h) curl_inv(omega~).
FourierField vortex_linearized_via_casimir(const FourierField& h, const FourierField& omega_tilde);

}  // namespace lpl
