#pragma once

#include <cstddef>
#include <vector>

#include "groverphase/amplitude.hpp"

namespace groverphase {

/// Dense simulation is kept to desk scale; beyond this the N^2 sign
/// transform stops being a reasonable brute-force check.
inline constexpr int kMaxQubits = 14;

/// Full N = 2^n dimensional amplitude vector.
struct StateVector {
  int n_qubits;
  std::vector<complexd> amplitudes;

  /// All-zero amplitudes (not normalized; fill before use).
  explicit StateVector(int n);

  static StateVector basis_state(int n, std::size_t index);
  static StateVector uniform_state(int n);

  std::size_t dimension() const { return amplitudes.size(); }
  double probability(std::size_t index) const;
  double norm() const;
};

/// Selective phase rotation: multiplies the amplitude at one index by
/// e^{i phi} and leaves the rest untouched. phi = pi is the reflection used
/// by the classical search.
struct PhaseOracle {
  std::size_t target;
  complexd factor;

  PhaseOracle(int n_qubits, std::size_t target, double phi);
  void apply(StateVector& state) const;
};

/// Sign transform with entries 2^{-n/2} (-1)^{popcount(i & j)}. Real,
/// symmetric, self-inverse. Applied as a dense O(N^2) transform with the
/// signs generated on the fly, so no N x N matrix is ever materialized.
struct FourierSign {
  int n_qubits;
  double scale;  // 2^{-n/2}

  explicit FourierSign(int n_qubits);

  double entry(std::size_t i, std::size_t j) const;
  /// OpenMP over output indices; bitwise-identical to apply_serial.
  void apply(StateVector& state) const;
  void apply_serial(StateVector& state) const;
};

/// One full-space search iteration G = -(F I^phi_0 F) I^phi_tau. The leading
/// -1 is a global phase fixed once so that the restriction of G to
/// span{|tau>, |a>} reproduces the reduced 2x2 map amplitude-for-amplitude,
/// not just in probability.
struct GroverIterate {
  PhaseOracle oracle_target;
  PhaseOracle oracle_zero;
  FourierSign fourier;

  GroverIterate(int n_qubits, std::size_t target, double phi);
  void apply(StateVector& state, bool parallel = true) const;
};

/// A reduced pair placed into the full space: v_tau at the target index and
/// v_a / sqrt(N-1) everywhere else.
struct SymmetricEmbedding {
  std::size_t target_index;
  ComplexPair reduced;

  StateVector embed(int n_qubits) const;
};

/// Coefficients of a state on span{|tau>, |a>} plus the norm of what lies
/// outside that span.
struct SymmetricProjection {
  complexd c_tau;
  complexd c_a;
  double leakage;
};

SymmetricProjection project_symmetric(const StateVector& state,
                                      std::size_t target_index);

struct ReductionReport {
  double probability_discrepancy;  // max over the two components
  double leakage;
};

/// Embeds, runs one full-space iteration, projects back, and compares the
/// component probabilities against the reduced 2x2 step. Leakage beyond
/// 1e-10 means the operator construction is broken and throws.
ReductionReport verify_reduction(int n_qubits, std::size_t target_index,
                                 double phi, const ComplexPair& reduced,
                                 bool parallel = true);

struct VerifyRunReport {
  double max_discrepancy = 0.0;
  double max_leakage = 0.0;
  long samples_run = 0;

  bool ok(double bound = 1e-10) const { return max_discrepancy <= bound; }
};

/// Randomized reduction sweep over n = 2..n_qubits_max with samples_per_n
/// draws of (target, phi, reduced pair) each. Per-sample seeds are derived
/// from the base seed, so the report is identical for any thread count.
VerifyRunReport run_verify(int n_qubits_max, int samples_per_n,
                           std::uint64_t seed, bool parallel = true);

}  // namespace groverphase
