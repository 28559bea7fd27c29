#include "groverphase/iteration.hpp"

#include <cmath>

namespace groverphase {

IterationMatrix iteration_matrix(const BetaParams& params, double phi) {
  const double inv_n = 1.0 / static_cast<double>(params.n_size);
  const double root = params.sin_2beta / 2.0;  // sqrt(N-1)/N
  const complexd e = std::polar(1.0, phi);
  const complexd one_minus_e = 1.0 - e;

  IterationMatrix m;
  m.m00 = e * (one_minus_e * inv_n - 1.0);
  m.m01 = root * one_minus_e;
  m.m10 = root * e * one_minus_e;
  m.m11 = -(inv_n + (1.0 - inv_n) * e);
  m.phi = phi;
  m.n_size = params.n_size;
  return m;
}

ComplexPair apply_step(const IterationMatrix& m, const ComplexPair& v) {
  return ComplexPair(m.m00 * v.v_tau + m.m01 * v.v_a,
                     m.m10 * v.v_tau + m.m11 * v.v_a);
}

double target_probability_direct(const BetaParams& params, double phi,
                                 const ComplexPair& v) {
  const IterationMatrix m = iteration_matrix(params, phi);
  return clamp_probability(std::norm(m.m00 * v.v_tau + m.m01 * v.v_a));
}

double target_probability_closed_form(const BetaParams& params, double phi,
                                      const PolarForm& p) {
  const double root = params.sin_2beta / 2.0;  // sqrt(N-1)/N
  const double inv_n = 1.0 / static_cast<double>(params.n_size);
  const double sin_2a = std::sin(2.0 * p.alpha);
  const double cos_2a = std::cos(2.0 * p.alpha);
  const double cos_pt = std::cos(phi + p.theta);
  const double sin_a = std::sin(p.alpha);

  const double bracket = (root * cos_2a + inv_n * sin_2a * cos_pt) *
                             (1.0 - std::cos(phi)) -
                         0.5 * sin_2a * cos_pt;
  const double prob = params.sin_2beta * bracket +
                      root * sin_2a * std::cos(p.theta) + sin_a * sin_a;
  return clamp_probability(prob);
}

double target_probability_derivative(const BetaParams& params, double phi,
                                     const PolarForm& p) {
  const double root = params.sin_2beta / 2.0;
  const double inv_n = 1.0 / static_cast<double>(params.n_size);
  const double sin_2a = std::sin(2.0 * p.alpha);
  const double cos_2a = std::cos(2.0 * p.alpha);
  const double cos_pt = std::cos(phi + p.theta);
  const double sin_pt = std::sin(phi + p.theta);

  return params.sin_2beta *
         (-inv_n * sin_2a * sin_pt * (1.0 - std::cos(phi)) +
          (root * cos_2a + inv_n * sin_2a * cos_pt) * std::sin(phi) +
          0.5 * sin_2a * sin_pt);
}

QuadraticCoeffs quadratic_coeffs(const BetaParams& params, double alpha) {
  const double sin_2a = std::sin(2.0 * alpha);
  const double cos_2a = std::cos(2.0 * alpha);
  const double sb2 = params.sin_beta * params.sin_beta;
  const double sbcb = params.sin_2beta / 2.0;

  QuadraticCoeffs q;
  q.a_coef = sb2 * params.sin_2beta * sin_2a;
  // sin(2a + 2b) expanded so no separate beta angle is needed
  q.b_coef = 0.5 * params.sin_2beta *
             (sin_2a * params.cos_2beta + cos_2a * params.sin_2beta);
  const double b_term = std::sin(alpha) * params.cos_beta * params.cos_beta +
                        std::cos(alpha) * sbcb;
  const double c_term = sb2 * std::sin(alpha) + sbcb * std::cos(alpha);
  q.const_coef = b_term * b_term + c_term * c_term;
  return q;
}

double quadratic_objective(const QuadraticCoeffs& q, double u) {
  return -q.a_coef * u * u - q.b_coef * u + q.const_coef;
}

double first_step_objective(const BetaParams& params, double u) {
  const double a = params.cos_2beta;
  return 0.5 * (1.0 - a) *
         ((a * a - 1.0) * u * u - 2.0 * a * (a + 1.0) * u +
          (a + 1.0) * (a + 1.0) + 1.0);
}

}  // namespace groverphase
