#pragma once

#include <optional>
#include <vector>

#include "qftc/circuit.hpp"

namespace qftc {

// Standard circuit blocks. All qubit lists are MSB-first, matching the
// register convention of RegisterLayout.

// |x> -> (1/sqrt(2^n)) sum_y e^{+2 pi i x y / 2^n} |y>, bit-reversal swaps
// included unless suppressed.
CircuitProgram qft_program(const std::vector<int>& q, bool include_swaps = true);

// e^{sign * 2 pi i j k / 2^L} between two L-qubit registers: one controlled
// phase per digit pair (a, b) with angle sign * 2 pi 2^{L-2-a-b}, optionally
// under extra controls. All L^2 pairs are emitted to match the network's
// published gate count.
void append_controlled_phase_network(CircuitProgram& prog,
                                     const std::vector<int>& j_q,
                                     const std::vector<int>& k_q, int sign,
                                     const std::vector<Control>& extra = {});

// |phi_+-> = (H^L x (Z^{0|1} H)) |0^{L+1}>: uniform superposition on the
// L-qubit companion register j_q, flag (the trailing qubit of the phi
// register) in (|0> +- |1>)/sqrt(2).
void append_phi_pm_prep(CircuitProgram& prog, const std::vector<int>& j_q,
                        int flag_qubit, int sign);

// Swap test: H(anc), controlled swaps of a[i] <-> b[i], H(anc).
// P(anc = 0) = (1 + |<A|B>|^2)/2 for product inputs.
void append_swap_test(CircuitProgram& prog, int ancilla,
                      const std::vector<int>& a, const std::vector<int>& b);

// Grover operator Q = -A S_0 A^dag S_chi, where the good subspace is
// swap-test ancilla |0>, and S_0 flips the sign of |0...0> on a_qubits.
// With `control` set, only S_chi, S_0 and the leading -1 are controlled;
// A and A^dag run uncontrolled since they cancel when the control is off.
CircuitProgram grover_q_program(const CircuitProgram& a_prog,
                                const std::vector<int>& a_qubits,
                                int swap_ancilla,
                                std::optional<int> control = std::nullopt);

// Textbook amplitude estimation: H layer on est, controlled Q^{2^{p-1-e}}
// ladder (est qubit e is the MSB of the estimate), inverse QFT with swaps.
// Powers are realized by literally repeating the controlled-Q program.
void append_amplitude_estimation(CircuitProgram& prog,
                                 const std::vector<int>& est,
                                 const CircuitProgram& a_prog,
                                 const std::vector<int>& a_qubits,
                                 int swap_ancilla);

}  // namespace qftc
