#include "groverphase/amplitude.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace groverphase {

namespace {
constexpr double kPi = std::numbers::pi;
}

double canonical_phase(double phi) {
  const double wrapped = std::remainder(phi, 2.0 * kPi);  // in [-pi, pi]
  return wrapped <= -kPi ? kPi : wrapped;
}

double circular_distance(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * kPi));
}

double clamp_probability(double p) {
  if (p < -1e-12 || p > 1.0 + 1e-12) {
    throw std::runtime_error("probability out of range: " + std::to_string(p));
  }
  if (p < 0.0) return 0.0;
  if (p > 1.0) return 1.0;
  return p;
}

ComplexPair::ComplexPair(complexd tau, complexd a) : v_tau(tau), v_a(a) {
  const double norm2 = std::norm(v_tau) + std::norm(v_a);
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw std::domain_error("amplitude pair is not normalized: |v|^2 = " +
                            std::to_string(norm2));
  }
  if (norm2 != 1.0) {
    const double inv = 1.0 / std::sqrt(norm2);
    v_tau *= inv;
    v_a *= inv;
  }
}

PolarForm::PolarForm(double alpha_, double theta_)
    : alpha(alpha_), theta(canonical_phase(theta_)) {
  if (!(alpha >= 0.0 && alpha <= kPi / 2.0)) {
    throw std::domain_error("alpha outside [0, pi/2]: " + std::to_string(alpha));
  }
}

BetaParams::BetaParams(std::uint64_t n) : n_size(n) {
  if (n < 2) {
    throw std::domain_error("database size must be at least 2, got " +
                            std::to_string(n));
  }
  const double nd = static_cast<double>(n);
  sin_beta = 1.0 / std::sqrt(nd);
  cos_beta = std::sqrt((nd - 1.0) / nd);
  sin_2beta = 2.0 * std::sqrt(nd - 1.0) / nd;
  cos_2beta = (nd - 2.0) / nd;
}

ComplexPair hadamard_init(const BetaParams& params) {
  return ComplexPair(params.sin_beta, params.cos_beta);
}

PolarForm polar_decompose(const ComplexPair& v) {
  const double mag_tau = std::abs(v.v_tau);
  const double mag_a = std::abs(v.v_a);
  // atan2 instead of asin(|v_tau|): identical for normalized input but
  // stays well-conditioned when one component is close to zero.
  const double alpha = std::atan2(mag_tau, mag_a);
  double theta = 0.0;
  if (mag_tau != 0.0 && mag_a != 0.0) {
    theta = canonical_phase(std::arg(v.v_tau) - std::arg(v.v_a));
  }
  return PolarForm(alpha, theta);
}

ComplexPair from_polar(const PolarForm& p) {
  return ComplexPair(std::polar(std::sin(p.alpha), p.theta), std::cos(p.alpha));
}

}  // namespace groverphase
