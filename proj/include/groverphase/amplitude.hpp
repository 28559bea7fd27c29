#pragma once

#include <complex>
#include <cstdint>

namespace groverphase {

using complexd = std::complex<double>;

/// Input vectors whose squared norm deviates from 1 by more than this are
/// rejected; smaller deviations are silently renormalized.
inline constexpr double kNormTolerance = 1e-9;

/// Wraps an angle into (-pi, pi]; an exact -pi maps to +pi.
double canonical_phase(double phi);

/// Absolute distance between two angles on the circle, in [0, pi].
double circular_distance(double a, double b);

/// Clamps a computed probability into [0, 1]. Excursions beyond 1e-12 of
/// either boundary indicate a broken formula and throw std::runtime_error
/// instead of being masked.
double clamp_probability(double p);

/// Reduced two-component amplitude vector: the target amplitude and the
/// amplitude of the collapsed non-target basis vector. Normalized on
/// construction; construction throws std::domain_error when the input norm
/// is off by more than kNormTolerance.
struct ComplexPair {
  complexd v_tau;
  complexd v_a;

  ComplexPair(complexd tau, complexd a);

  double target_probability() const { return std::norm(v_tau); }
};

/// Polar parameterization of a reduced amplitude after the global phase of
/// the non-target component has been factored out:
///   v = (sin(alpha) e^{i theta}, cos(alpha)),  alpha in [0, pi/2],
///   theta in (-pi, pi].
struct PolarForm {
  double alpha;
  double theta;

  /// theta is canonicalized into (-pi, pi]; alpha outside [0, pi/2] throws.
  PolarForm(double alpha, double theta);
};

/// Database-size angle beta with sin(beta) = 1/sqrt(N). The derived values
/// are computed once here so every formula downstream shares identical
/// floating-point constants.
struct BetaParams {
  std::uint64_t n_size;
  double sin_beta;   // 1/sqrt(N)
  double cos_beta;   // sqrt((N-1)/N)
  double sin_2beta;  // 2 sqrt(N-1)/N
  double cos_2beta;  // (N-2)/N

  /// Throws std::domain_error for n < 2.
  explicit BetaParams(std::uint64_t n);
};

/// Uniform-superposition start vector (1/sqrt(N), sqrt((N-1)/N)).
/// Real and positive, so its polar form has theta = 0 exactly.
ComplexPair hadamard_init(const BetaParams& params);

/// alpha = arcsin(|v_tau|); theta = arg(v_tau) - arg(v_a) canonicalized.
/// When either component is exactly zero the relative phase is undefined
/// and theta is 0 by convention.
PolarForm polar_decompose(const ComplexPair& v);

/// Reconstructs (sin(alpha) e^{i theta}, cos(alpha)).
ComplexPair from_polar(const PolarForm& p);

}  // namespace groverphase
