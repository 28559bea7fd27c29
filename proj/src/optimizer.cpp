#include "groverphase/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace groverphase {

namespace {

constexpr double kPi = std::numbers::pi;

// Uniform grid over [lo, hi] with exact endpoints.
double grid_point(double lo, double hi, int i, int count) {
  if (i == 0) return lo;
  if (i == count - 1) return hi;
  return lo + (hi - lo) * (static_cast<double>(i) / (count - 1));
}

double vertex_ratio(const BetaParams& params, double alpha) {
  const double nd = static_cast<double>(params.n_size);
  const double sin_2a = std::sin(2.0 * alpha);
  const double cos_2a = std::cos(2.0 * alpha);
  return 0.25 * (nd - 2.0 + 2.0 * std::sqrt(nd - 1.0) * cos_2a / sin_2a);
}

void check_nondegenerate(double alpha) {
  if (alpha <= 0.0 || alpha >= kPi / 2.0) {
    throw std::domain_error(
        "alpha degenerate for real-vector region analysis: " +
        std::to_string(alpha));
  }
}

}  // namespace

double arccot(double x) { return kPi / 2.0 - std::atan(x); }

const char* region_name(Region r) {
  switch (r) {
    case Region::R1: return "R1";
    case Region::R2: return "R2";
    case Region::R3: return "R3";
  }
  return "?";
}

RegionBoundaries region_boundaries(const BetaParams& params) {
  const double nd = static_cast<double>(params.n_size);
  const double denom = 2.0 * std::sqrt(nd - 1.0);
  return RegionBoundaries{0.5 * arccot((-nd + 6.0) / denom),
                          0.5 * arccot((-nd - 2.0) / denom)};
}

RegionReport classify_region(const BetaParams& params, double alpha) {
  check_nondegenerate(alpha);
  const RegionBoundaries b = region_boundaries(params);
  const double ratio = vertex_ratio(params, alpha);

  RegionReport report;
  report.alpha = alpha;
  report.boundary_low = b.low;
  report.boundary_high = b.high;
  if (ratio >= 1.0) {  // alpha <= boundary_low; R1 owns its upper endpoint
    report.region = Region::R1;
    report.phi_opt = kPi;
  } else if (ratio <= -1.0) {
    report.region = Region::R3;
    report.phi_opt = 0.0;
  } else {
    report.region = Region::R2;
    report.phi_opt = std::acos(-ratio);
  }
  return report;
}

double phi_max_closed_form(const BetaParams& params, double alpha) {
  check_nondegenerate(alpha);
  const double arg = -vertex_ratio(params, alpha);
  if (std::abs(arg) > 1.0 + 1e-9) {
    throw std::domain_error("alpha outside R2: arccos argument " +
                            std::to_string(arg));
  }
  return std::acos(std::clamp(arg, -1.0, 1.0));
}

OptimizationResult optimal_phase_real(const BetaParams& params, double alpha) {
  const RegionReport report = classify_region(params, alpha);
  const PolarForm p(alpha, 0.0);

  OptimizationResult result;
  result.phi_opt = report.phi_opt;
  result.p_opt = target_probability_closed_form(params, report.phi_opt, p);
  result.p_pi = target_probability_closed_form(params, kPi, p);
  result.improvement = result.p_opt - result.p_pi;
  result.evaluations = 2;
  return result;
}

OptimizationResult optimal_phase_general(const BetaParams& params,
                                         const PolarForm& p,
                                         const OptimizerConfig& cfg) {
  const int n = std::max(cfg.scan_points, 33);
  std::vector<double> values(static_cast<std::size_t>(n));

  const auto objective = [&](double phi) {
    return target_probability_closed_form(params, phi, p);
  };
  const auto slope = [&](double phi) {
    return target_probability_derivative(params, phi, p);
  };

  // Each slot is computed independently, so the parallel fill is
  // bitwise-identical to the serial one.
  if (cfg.parallel_scan) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      values[static_cast<std::size_t>(i)] =
          objective(grid_point(-kPi, kPi, i, n));
    }
  } else {
    for (int i = 0; i < n; ++i) {
      values[static_cast<std::size_t>(i)] =
          objective(grid_point(-kPi, kPi, i, n));
    }
  }
  long evaluations = n;

  // Serial argmax; exact value ties resolve to the larger phi so the
  // symmetric theta = 0 objective reports the non-negative representative.
  int best = 0;
  for (int i = 1; i < n; ++i) {
    const std::size_t iu = static_cast<std::size_t>(i);
    if (values[iu] > values[static_cast<std::size_t>(best)] ||
        (values[iu] == values[static_cast<std::size_t>(best)] && i > best)) {
      best = i;
    }
  }
  double phi_best = grid_point(-kPi, kPi, best, n);
  double p_best = values[static_cast<std::size_t>(best)];

  // The boundary phases of the real-vector quadratic are exact candidates;
  // probing them keeps improvement >= 0 without relying on grid alignment.
  const double p_pi = objective(kPi);
  const double p_zero = objective(0.0);
  evaluations += 2;
  if (p_pi > p_best) {
    p_best = p_pi;
    phi_best = kPi;
  }
  if (p_zero > p_best) {
    p_best = p_zero;
    phi_best = 0.0;
  }

  // Bracket one grid step around the winner. The objective is 2pi-periodic,
  // so the bracket may run past +-pi and the result is wrapped afterwards.
  const double h = 2.0 * kPi / (n - 1);
  double lo = phi_best - h;
  double hi = phi_best + h;

  double phi_refined = phi_best;
  const double d_lo = slope(lo);
  const double d_hi = slope(hi);
  if (d_lo > 0.0 && d_hi < 0.0) {
    // Bisection on the derivative sign: resolves the maximizer to machine
    // precision even where the objective itself is flat to rounding.
    double a = lo, b = hi;
    for (int it = 0; it < 200 && (b - a) > 1e-15; ++it) {
      const double mid = 0.5 * (a + b);
      if (slope(mid) > 0.0) {
        a = mid;
      } else {
        b = mid;
      }
    }
    phi_refined = 0.5 * (a + b);
  } else {
    // No interior sign change (flat or monotone bracket): golden section.
    constexpr double kInvGolden = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - kInvGolden * (b - a);
    double d = a + kInvGolden * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    evaluations += 2;
    for (int it = 0; it < cfg.refine_iters && (b - a) > 1e-14; ++it) {
      if (fc < fd) {
        a = c;
        c = d;
        fc = fd;
        d = a + kInvGolden * (b - a);
        fd = objective(d);
      } else {
        b = d;
        d = c;
        fd = fc;
        c = b - kInvGolden * (b - a);
        fc = objective(c);
      }
      ++evaluations;
      if ((b - a) < 1e-6 && std::abs(fc - fd) < cfg.tol) break;
    }
    phi_refined = 0.5 * (a + b);
  }

  phi_refined = canonical_phase(phi_refined);
  const double p_refined = objective(phi_refined);
  ++evaluations;

  // The refined point wins ties: where the objective is flat to rounding it
  // carries the accurate phase, and the probes guarantee dominance.
  double phi_opt = phi_refined;
  double p_opt = p_refined;
  if (p_best > p_opt) {
    phi_opt = phi_best;
    p_opt = p_best;
  }

  OptimizationResult result;
  result.phi_opt = phi_opt;
  result.p_opt = p_opt;
  result.p_pi = p_pi;
  result.improvement = p_opt - p_pi;
  result.evaluations = evaluations;
  return result;
}

double rough_phase_estimate(const PolarForm& p) {
  if (p.theta > 0.0) return kPi - p.theta;
  if (p.theta < 0.0) return -kPi - p.theta;
  return kPi;
}

double threshold_probability(const BetaParams& params) {
  const double nd = static_cast<double>(params.n_size);
  return 0.5 * (1.0 + (nd - 6.0) / std::sqrt(nd * nd - 8.0 * nd + 32.0));
}

}  // namespace groverphase
