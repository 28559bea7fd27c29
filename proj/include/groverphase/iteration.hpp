#pragma once

#include "groverphase/amplitude.hpp"

namespace groverphase {

/// One step of the generalized iteration in the reduced basis, as the 2x2
/// complex matrix
///
///   [ e^{ip}((1-e^{ip})/N - 1)        (sqrt(N-1)/N)(1-e^{ip})      ]
///   [ (sqrt(N-1)/N) e^{ip}(1-e^{ip})  -(1/N + (1-1/N) e^{ip})      ]
///
/// including the overall sign convention (A is -I at phi = 0). Unitary.
struct IterationMatrix {
  complexd m00, m01, m10, m11;
  double phi;
  std::uint64_t n_size;
};

IterationMatrix iteration_matrix(const BetaParams& params, double phi);

/// Matrix-vector product; the result is renormalized against accumulated
/// rounding (unitarity keeps the drift below kNormTolerance).
ComplexPair apply_step(const IterationMatrix& m, const ComplexPair& v);

/// |first component of A^phi v|^2, evaluated through the matrix product.
double target_probability_direct(const BetaParams& params, double phi,
                                 const ComplexPair& v);

/// Closed-form one-step target probability for the polar-form input
/// (sin(a) e^{it}, cos(a)):
///
///   P = (2 sqrt(N-1)/N) [ (sqrt(N-1)/N cos 2a + 1/N sin 2a cos(p+t))(1-cos p)
///                         - 1/2 sin 2a cos(p+t) ]
///       + (sqrt(N-1)/N) sin 2a cos t + sin^2 a
double target_probability_closed_form(const BetaParams& params, double phi,
                                      const PolarForm& p);

/// d/dphi of target_probability_closed_form at fixed (alpha, theta).
double target_probability_derivative(const BetaParams& params, double phi,
                                     const PolarForm& p);

/// For real input vectors (theta = 0) the one-step probability is the
/// concave quadratic -a u^2 - b u + c in u = cos(phi), with
///   a = sin^2(b) sin(2b) sin(2alpha) >= 0
///   b = 1/2 sin(2b) sin(2alpha + 2b)
///   c = B^2 + C^2.
struct QuadraticCoeffs {
  double a_coef;
  double b_coef;
  double const_coef;
};

QuadraticCoeffs quadratic_coeffs(const BetaParams& params, double alpha);

/// Evaluates -a u^2 - b u + c.
double quadratic_objective(const QuadraticCoeffs& q, double u);

/// First-step probability from the uniform start, as a quadratic in
/// u = cos(phi) with a = cos(2 beta):
///   P(u) = (1-a)/2 ((a^2-1) u^2 - 2a(a+1) u + (a+1)^2 + 1)
/// Its maximizer over [-1, 1] is u = -1 whenever N >= 4.
double first_step_objective(const BetaParams& params, double u);

}  // namespace groverphase
