#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qftc/circuit.hpp"
#include "qftc/fixed_point.hpp"

namespace qftc {

enum class QftcMode { kFull, kBlockDiagonal };

// L is implied by the input length (N = 2^L). p_est/p_a of 0 select the
// derived defaults; both stay overridable (the monolithic full mode is only
// feasible at small explicit p_est).
struct QftcConfig {
  int p0 = 3;
  double delta = 0.1;
  int p_est = 0;  // 0 => p0 + ceil(log2(2 + 1/(2 delta))) + 10 guard digits
  int p_a = 0;    // 0 => p0 + 4 working fraction digits
  QftcMode mode = QftcMode::kBlockDiagonal;
  int max_qubits = 24;  // dense-simulation budget (monolithic / assembled)

  int eff_p_est() const;
  int eff_p_a() const { return p_a > 0 ? p_a : p0 + 4; }
};

int derived_p_est(int p0, double delta);

struct QftcPerK {
  int k = 0;
  double y_exact = 0.0;
  double y_hat = 0.0;
  std::uint64_t y_code = 0;  // complemental code of y_hat, p0 fraction digits
  double prob_mass = 0.0;    // joint probability (1/N) * P(y_code | k)
};

struct QftcResult {
  int l = 0, p0 = 0, p_est = 0, p_a = 0;
  double fidelity = 0.0;
  std::vector<QftcPerK> per_k;
  // Conditional P(y-code | k), including off-peak estimation leakage.
  std::vector<std::map<std::uint64_t, double>> dist;
  GateTally tally;
};

// --- Register layouts --------------------------------------------------------
// Per branch (suffix "p" for the phi_+ branch, "m" for phi_-):
//   w(L) g(1): the phi_k register (flag g last), z(L) f(1): the phi_+-
//   register (flag f last), s(1): swap-test ancilla, est(p_est).
// Full layout prepends "k"(L) and appends "y"(p0+1); the block layout is the
// same without "k".
RegisterLayout qftc_full_layout(int l, const QftcConfig& cfg);
RegisterLayout qftc_block_layout(int l, const QftcConfig& cfg);

// The A operator of one branch (Steps 2-5) on `layout`'s registers with the
// given suffix. k >= 0 folds the phase network to constant phases for that k;
// k == -1 emits the k-controlled network on the "k" register (the global
// circuit). `oracle` is the O_x program on this branch's w qubits (pass an
// empty program for tally-only builds, where only the call count matters).
CircuitProgram branch_preparation(const RegisterLayout& layout,
                                  const std::string& sfx, int sign, int l,
                                  int k, const CircuitProgram& oracle,
                                  bool tally_only = false);

// (L+1)-qubit phi states (qubits: j-part then flag) for invariant tests.
StateVector make_phi_pm(int l, int sign);
StateVector make_phi_k(const cvec& x, int k);

// Fused dense unitary of the Grover operator Q = -A S_0 A^dag S_chi of one
// branch with k folded in, on the (2L+3)-qubit branch space.
cmat branch_q_matrix(const cvec& x, int l, int k, int sign);

// --- Semantic arithmetic pipeline --------------------------------------------
// f(m) = round_half_up(2 sin^2(pi m / 2^p_est) - 1, p_a) as a scaled signed
// integer f * 2^p_a (no ring wrap; the value +1 stays representable).
std::int64_t pipeline_f_scaled(std::uint64_t m, int p_est, int p_a);
// y code = round_half_up(f_plus - f_minus, complemental p0 ring).
std::uint64_t pipeline_y_bits(std::int64_t f_plus, std::int64_t f_minus,
                              int p_a, int p0);

// --- Analytic tally -----------------------------------------------------------
// Cost ledger of the whole Step 1-9 circuit, built by running the real
// constructors in tally-only mode (no executor, any L). phase_network is the
// multi-controlled phase-network component (5 L^2 per A instance), the term
// carrying the (log N)^2 factor of the complexity claim.
struct QftcTallyBreakdown {
  GateTally total;
  long long phase_network = 0;
  long long a_instances = 0;
};
QftcTallyBreakdown qftc_tally(int l, const QftcConfig& cfg);

// --- End-to-end runs ----------------------------------------------------------
// x must be a unit vector with a real DFT (apply real_reduction first
// otherwise); rejected if any |y_k| >= 1 - 2^{-p0-1} (no representational
// headroom). In full mode `state` (if non-null) receives the final state on
// the full layout; in block-diagonal mode a non-null `state` requests the
// assembled (1/sqrt(N)) sum_k |k> (x) block_k state, which needs
// L + block-layout qubits of budget.
QftcResult qftc_run(const cvec& x, const QftcConfig& cfg,
                    StateVector* state = nullptr);

// Block-diagonal path (what qftc_run dispatches to in that mode).
QftcResult run_block_diagonal(const cvec& x, const QftcConfig& cfg,
                              StateVector* state = nullptr);

// Per-k distributions, decoded values and fidelity read off a final
// full-layout state.
QftcResult decode_results(const StateVector& final_state, const cvec& x,
                          const QftcConfig& cfg);

// Slice of a full-layout state at all ancillas |0>, reindexed to (k, y) only.
// Unnormalized: its squared norm is the uncompute success probability.
StateVector restrict_to_ky(const StateVector& final_state, int l,
                           const QftcConfig& cfg);

}  // namespace qftc
