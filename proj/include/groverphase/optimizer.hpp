#pragma once

#include "groverphase/amplitude.hpp"
#include "groverphase/iteration.hpp"

namespace groverphase {

/// arccot on the (0, pi) branch, so 1/2 arccot(.) lands in (0, pi/2).
double arccot(double x);

enum class Region { R1, R2, R3 };

const char* region_name(Region r);

/// The two alpha angles splitting [0, pi/2] into the three optimal-phase
/// regions for real input vectors:
///   low  = 1/2 arccot((-N+6)/(2 sqrt(N-1)))
///   high = 1/2 arccot((-N-2)/(2 sqrt(N-1)))
struct RegionBoundaries {
  double low;
  double high;
};

RegionBoundaries region_boundaries(const BetaParams& params);

struct RegionReport {
  Region region;
  double alpha;
  double boundary_low;
  double boundary_high;
  double phi_opt;  // pi on R1, the arccos expression on R2, 0 on R3
};

/// Classifies alpha in (0, pi/2) by the vertex ratio b/(2a) of the real
/// quadratic; ratio >= 1 is R1, ratio <= -1 is R3. Exact alpha = 0 or pi/2
/// degenerates the quadratic and throws std::domain_error.
RegionReport classify_region(const BetaParams& params, double alpha);

/// arccos(1/4 (-N + 2 - 2 sqrt(N-1) cot(2 alpha))), valid on R2; the
/// argument drifting outside [-1, 1] beyond rounding throws.
double phi_max_closed_form(const BetaParams& params, double alpha);

struct OptimizerConfig {
  int scan_points = 1024;
  int refine_iters = 64;
  double tol = 1e-10;
  bool parallel_scan = true;
};

struct OptimizationResult {
  double phi_opt;      // in [-pi, pi]
  double p_opt;
  double p_pi;         // probability achieved by phi = pi
  double improvement;  // p_opt - p_pi, >= 0
  long evaluations;    // objective evaluations spent
};

/// Region-dispatch optimum for real vectors (theta = 0).
OptimizationResult optimal_phase_real(const BetaParams& params, double alpha);

/// Global maximizer of the one-step probability over phi in [-pi, pi] for an
/// arbitrary polar-form vector. Deterministic: a uniform dense scan (plus
/// probes at phi = 0 and pi) brackets the maximum, then bisection on the
/// analytic derivative pins it down; golden-section is the fallback when the
/// bracket carries no derivative sign change. Results do not depend on the
/// number of worker threads.
OptimizationResult optimal_phase_general(const BetaParams& params,
                                         const PolarForm& p,
                                         const OptimizerConfig& cfg = {});

/// Piecewise estimate phi = pi - theta (theta > 0) or -pi - theta
/// (theta < 0); returns pi at theta = 0 for continuity with the classical
/// phase.
double rough_phase_estimate(const PolarForm& p);

/// P_r(N) = 1/2 (1 + (N-6)/sqrt(N^2 - 8N + 32)): the target probability at
/// which the optimal phase for a real vector first differs from pi. Equals
/// sin^2(boundary_low).
double threshold_probability(const BetaParams& params);

}  // namespace groverphase
