#include "lpl/fourier_field.hpp"

#include <cmath>

namespace lpl {

namespace {

constexpr double kTwoPi = 2.0 * EIGEN_PI;
const std::complex<double> kI{0.0, 1.0};

double volume() { return kTwoPi * kTwoPi * kTwoPi; }

// Bilinear cross product. Eigen's cross() conjugates complex operands, which
// is not the convolution algebra needed here.
Eigen::Vector3cd ccross(const Eigen::Vector3cd& a, const Eigen::Vector3cd& b) {
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0)};
}

Eigen::Vector3cd ccross(const Eigen::Vector3d& a, const Eigen::Vector3cd& b) {
  return ccross(Eigen::Vector3cd(a.cast<std::complex<double>>()), b);
}

}  // namespace

const std::vector<Eigen::Vector3i>& FourierField::wavevectors() const {
  if (wavevector_cache_.empty()) {
    wavevector_cache_.reserve(modes_.size());
    for (int kz = -k_; kz <= k_; ++kz)
      for (int ky = -k_; ky <= k_; ++ky)
        for (int kx = -k_; kx <= k_; ++kx) wavevector_cache_.emplace_back(kx, ky, kz);
  }
  return wavevector_cache_;
}

FourierField& FourierField::operator+=(const FourierField& other) {
  if (k_ != other.k_) throw std::invalid_argument("FourierField: truncation mismatch");
  for (size_t i = 0; i < modes_.size(); ++i) modes_[i] += other.modes_[i];
  return *this;
}

FourierField& FourierField::operator*=(double scale) {
  for (auto& m : modes_) m *= scale;
  return *this;
}

bool FourierField::all_finite() const {
  for (const auto& m : modes_)
    if (!m.allFinite()) return false;
  return true;
}

HelicalFrame helical_frame(const Eigen::Vector3i& k) {
  if (k == Eigen::Vector3i::Zero()) throw std::invalid_argument("helical_frame: k = 0 has no helical basis");
  const Eigen::Vector3d kappa = k.cast<double>().normalized();
  const Eigen::Vector3d ref =
      std::abs(kappa.z()) < 0.9 ? Eigen::Vector3d::UnitZ() : Eigen::Vector3d::UnitX();
  HelicalFrame frame;
  frame.e1 = ref.cross(kappa).normalized();
  frame.e2 = kappa.cross(frame.e1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  frame.hplus = inv_sqrt2 * (frame.e1.cast<std::complex<double>>() + kI * frame.e2.cast<std::complex<double>>());
  frame.hminus = inv_sqrt2 * (frame.e1.cast<std::complex<double>>() - kI * frame.e2.cast<std::complex<double>>());
  return frame;
}

HelicalAmplitudes helical_amplitudes(const FourierField& f, const Eigen::Vector3i& k) {
  const HelicalFrame frame = helical_frame(k);
  // Eigen's dot conjugates its first argument, which is exactly <u, h>.
  return {frame.hplus.dot(f.at(k)), frame.hminus.dot(f.at(k))};
}

double reality_defect(const FourierField& f) {
  double worst = 0.0;
  for (const auto& k : f.wavevectors())
    worst = std::max(worst, (f.at(-k) - f.at(k).conjugate()).cwiseAbs().maxCoeff());
  return worst;
}

double solenoidal_defect(const FourierField& f) {
  double worst = 0.0;
  for (const auto& k : f.wavevectors()) {
    if (k == Eigen::Vector3i::Zero()) continue;
    worst = std::max(worst, std::abs(k.cast<double>().cast<std::complex<double>>().dot(f.at(k))));
  }
  return worst;
}

bool is_zero_mean(const FourierField& f, double tol) {
  return f.at(Eigen::Vector3i::Zero()).cwiseAbs().maxCoeff() <= tol;
}

FourierField solenoidal_project(const FourierField& f) {
  FourierField out = f;
  for (const auto& k : f.wavevectors()) {
    if (k == Eigen::Vector3i::Zero()) continue;
    const Eigen::Vector3d kappa = k.cast<double>().normalized();
    const Eigen::Vector3cd u = out.at(k);
    out.at(k) = u - kappa.cast<std::complex<double>>() * (kappa.cast<std::complex<double>>().dot(u));
  }
  return out;
}

double inner(const FourierField& f, const FourierField& g) {
  if (f.truncation() != g.truncation()) throw std::invalid_argument("inner: truncation mismatch");
  std::complex<double> sum = 0.0;
  for (const auto& k : f.wavevectors()) sum += g.at(k).dot(f.at(k));  // sum_k f . conj(g)
  return volume() * sum.real();
}

FourierField curl(const FourierField& f) {
  FourierField out(f.truncation());
  for (const auto& k : f.wavevectors()) {
    if (k == Eigen::Vector3i::Zero()) continue;
    out.at(k) = kI * ccross(k.cast<double>().eval(), f.at(k));
  }
  return out;
}

FourierField curl_inv(const FourierField& f) {
  double scale = 1.0;
  for (const auto& k : f.wavevectors()) scale = std::max(scale, f.at(k).cwiseAbs().maxCoeff());
  if (!is_zero_mean(f, 1e-10 * scale))
    throw std::invalid_argument("curl_inv: input has a nonzero mean (k = 0) component");
  if (solenoidal_defect(f) > 1e-10 * scale * std::sqrt(3.0) * f.truncation())
    throw std::invalid_argument("curl_inv: input is not solenoidal");
  FourierField out(f.truncation());
  for (const auto& k : f.wavevectors()) {
    if (k == Eigen::Vector3i::Zero()) continue;
    const Eigen::Vector3d kd = k.cast<double>();
    // For solenoidal u^: (ik x)(ik x u^) = |k|^2 u^, so the inverse is ik x / |k|^2.
    out.at(k) = kI * ccross(kd, f.at(k)) / kd.squaredNorm();
  }
  return out;
}

void add_beltrami_mode(FourierField& f, const Eigen::Vector3i& k, int sign, double amp) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("add_beltrami_mode: sign must be +1 or -1");
  const HelicalFrame frame = helical_frame(k);
  const Eigen::Vector3cd coeff = (amp / std::sqrt(2.0)) * (sign > 0 ? frame.hplus : frame.hminus);
  f.at(k) += coeff;
  f.at(-k) += coeff.conjugate();
}

FourierField beltrami_state(int truncation, const Eigen::Vector3i& k, int sign, double amp) {
  FourierField f(truncation);
  add_beltrami_mode(f, k, sign, amp);
  return f;
}

FourierField two_beltrami_state(int truncation) {
  FourierField f(truncation);
  add_beltrami_mode(f, {0, 0, 1}, +1, 1.0);
  add_beltrami_mode(f, {0, 2, 0}, +1, 0.8);
  return f;
}

FourierField random_solenoidal_state(int truncation, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  FourierField f(truncation);
  for (const auto& k : f.wavevectors()) {
    // one representative per conjugate pair
    if (k.z() < 0) continue;
    if (k.z() == 0 && k.y() < 0) continue;
    if (k.z() == 0 && k.y() == 0 && k.x() <= 0) continue;
    const HelicalFrame frame = helical_frame(k);
    const double decay = 1.0 / k.cast<double>().squaredNorm();
    const std::complex<double> ap{gauss(rng) * decay, gauss(rng) * decay};
    const std::complex<double> am{gauss(rng) * decay, gauss(rng) * decay};
    const Eigen::Vector3cd u = ap * frame.hplus + am * frame.hminus;
    f.at(k) += u;
    f.at(-k) += u.conjugate();
  }
  return f;
}

FourierField mirror(const FourierField& f) {
  FourierField out(f.truncation());
  for (const auto& k : f.wavevectors()) out.at(k) = -f.at(-k);
  return out;
}

FourierField cross_convolve(const FourierField& a, const FourierField& b) {
  if (a.truncation() != b.truncation()) throw std::invalid_argument("cross_convolve: truncation mismatch");
  FourierField out(a.truncation());
  const auto& ks = a.wavevectors();
  for (const auto& p : ks) {
    const Eigen::Vector3cd& ap = a.at(p);
    if (ap.squaredNorm() == 0.0) continue;
    for (const auto& q : ks) {
      const Eigen::Vector3i k = p + q;
      if (!out.holds(k)) continue;
      const Eigen::Vector3cd& bq = b.at(q);
      if (bq.squaredNorm() == 0.0) continue;
      out.at(k) += ccross(ap, bq);
    }
  }
  return out;
}

FourierField vortex_rhs(const FourierField& omega) {
  const FourierField u = curl_inv(omega);
  FourierField rhs = curl(cross_convolve(omega, u));
  rhs *= -1.0;
  return solenoidal_project(rhs);
}

double energy(const FourierField& omega) {
  const FourierField u = curl_inv(omega);
  return 0.5 * inner(u, u);
}

double helicity(const FourierField& omega) { return 0.5 * inner(omega, curl_inv(omega)); }

FieldTrajectory integrate_field(const FourierField& omega0, double dt, double t_final, int log_stride) {
  if (!(dt > 0.0) || !(t_final >= dt)) throw std::invalid_argument("integrate_field: need dt > 0 and T >= dt");
  const long steps = std::lround(t_final / dt);
  const int stride = std::max(1, log_stride);

  FieldTrajectory traj;
  double e_ref = 0.0, c_ref = 0.0;
  auto log_state = [&](double t, const FourierField& w) {
    const double e = energy(w);
    const double c = helicity(w);
    traj.times.push_back(t);
    traj.energy_log.push_back(e);
    traj.helicity_log.push_back(c);
    if (traj.times.size() == 1) {
      e_ref = e;
      c_ref = c;
    }
    const double e_den = std::abs(e_ref) > 1e-12 ? std::abs(e_ref) : 1.0;
    const double c_den = std::abs(c_ref) > 1e-12 ? std::abs(c_ref) : 1.0;
    traj.energy_drift = std::max(traj.energy_drift, std::abs(e - e_ref) / e_den);
    traj.helicity_drift = std::max(traj.helicity_drift, std::abs(c - c_ref) / c_den);
  };

  FourierField w = omega0;
  log_state(0.0, w);
  for (long step = 1; step <= steps; ++step) {
    const FourierField k1 = vortex_rhs(w);
    const FourierField k2 = vortex_rhs(w + 0.5 * dt * k1);
    const FourierField k3 = vortex_rhs(w + 0.5 * dt * k2);
    const FourierField k4 = vortex_rhs(w + dt * k3);
    w += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!w.all_finite()) {
      traj.blew_up = true;
      traj.diagnostic = "nonfinite mode at t = " + std::to_string(step * dt) + "; trajectory truncated";
      break;
    }
    if (step % stride == 0 || step == steps) log_state(step * dt, w);
  }
  traj.final_state = w;
  return traj;
}

FourierField vortex_linearized_rhs(const FourierField& h, const FourierField& omega_tilde) {
  return curl(cross_convolve(h, omega_tilde));
}

FourierField vortex_linearized_via_casimir(const FourierField& h, const FourierField& omega_tilde) {
  const FourierField grad_c = curl_inv(omega_tilde);  // gradient of 1/2 <curl_inv w, w>
  FourierField out = curl(cross_convolve(curl(grad_c), h));
  out *= -1.0;
  return out;
}

}  // namespace lpl
