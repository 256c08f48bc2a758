#include "qftc/circuits_std.hpp"

#include <cmath>

namespace qftc {

CircuitProgram qft_program(const std::vector<int>& q, bool include_swaps) {
  const int n = static_cast<int>(q.size());
  CircuitProgram prog;
  for (int i = 0; i < n; ++i) {
    prog.append(g_h(q[i]));
    for (int j = i + 1; j < n; ++j) {
      const double angle = 2.0 * kPi / std::ldexp(1.0, j - i + 1);
      prog.append(with_controls(g_phase(q[i], angle), {{q[j], true}}));
    }
  }
  if (include_swaps) {
    for (int i = 0; i < n / 2; ++i) prog.append(g_swap(q[i], q[n - 1 - i]));
  }
  return prog;
}

void append_controlled_phase_network(CircuitProgram& prog,
                                     const std::vector<int>& j_q,
                                     const std::vector<int>& k_q, int sign,
                                     const std::vector<Control>& extra) {
  const int l = static_cast<int>(j_q.size());
  if (static_cast<int>(k_q.size()) != l) {
    fail("phase network: register width mismatch");
  }
  for (int a = 0; a < l; ++a) {
    for (int b = 0; b < l; ++b) {
      const double angle =
          (sign >= 0 ? 1.0 : -1.0) * 2.0 * kPi * std::ldexp(1.0, l - 2 - a - b);
      GateOp g = g_phase(j_q[a], angle);
      g.controls.push_back({k_q[b], true});
      for (const auto& c : extra) g.controls.push_back(c);
      prog.append(g);
    }
  }
}

void append_phi_pm_prep(CircuitProgram& prog, const std::vector<int>& j_q,
                        int flag_qubit, int sign) {
  for (int q : j_q) prog.append(g_h(q));
  prog.append(g_h(flag_qubit));
  if (sign < 0) prog.append(g_z(flag_qubit));
}

void append_swap_test(CircuitProgram& prog, int ancilla,
                      const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) fail("swap test: register width mismatch");
  prog.append(g_h(ancilla));
  for (std::size_t i = 0; i < a.size(); ++i) {
    prog.append(with_controls(g_swap(a[i], b[i]), {{ancilla, true}}));
  }
  prog.append(g_h(ancilla));
}

CircuitProgram grover_q_program(const CircuitProgram& a_prog,
                                const std::vector<int>& a_qubits,
                                int swap_ancilla, std::optional<int> control) {
  CircuitProgram q;
  std::vector<Control> base;
  if (control) base.push_back({*control, true});

  // S_chi: -1 on the good subspace (swap-test ancilla |0>).
  q.append(with_controls(g_global_phase(-1.0),
                         [&] {
                           auto c = base;
                           c.push_back({swap_ancilla, false});
                           return c;
                         }()));
  q.append(a_prog.inverse());
  // S_0: -1 on |0...0> over the A workspace.
  {
    std::vector<Control> c = base;
    for (int qb : a_qubits) c.push_back({qb, false});
    q.append(with_controls(g_global_phase(-1.0), c));
  }
  q.append(a_prog);
  // Leading -1.
  q.append(with_controls(g_global_phase(-1.0), base));
  return q;
}

void append_amplitude_estimation(CircuitProgram& prog,
                                 const std::vector<int>& est,
                                 const CircuitProgram& a_prog,
                                 const std::vector<int>& a_qubits,
                                 int swap_ancilla) {
  const int p = static_cast<int>(est.size());
  for (int e = 0; e < p; ++e) prog.append(g_h(est[e]));
  for (int e = 0; e < p; ++e) {
    const CircuitProgram cq =
        grover_q_program(a_prog, a_qubits, swap_ancilla, est[e]);
    const long long reps = 1LL << (p - 1 - e);
    for (long long r = 0; r < reps; ++r) prog.append(cq);
  }
  prog.append(qft_program(est).inverse());
}

}  // namespace qftc
