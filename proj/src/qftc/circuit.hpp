#pragma once

#include <vector>

#include "qftc/gate_op.hpp"
#include "qftc/sparse_state.hpp"
#include "qftc/state_vector.hpp"

namespace qftc {

// A flat gate program plus its cost ledger. Oracle sub-programs are inlined
// for execution but charged as whole invocations: their internal gates do not
// contribute to one_two_qubit_count.
class CircuitProgram {
 public:
  CircuitProgram() = default;
  explicit CircuitProgram(RegisterLayout layout) : layout_(std::move(layout)) {}

  RegisterLayout& layout() { return layout_; }
  const RegisterLayout& layout() const { return layout_; }

  // In tally-only mode the cost ledger is maintained but no gates are stored;
  // used to compute analytic tallies of circuits far too wide to build
  // (acceptance scaling sweeps). A gate's inverse has the same cost, so
  // inverse() of a tally-only program just swaps the oracle-call directions.
  void set_tally_only(bool v) { tally_only_ = v; }
  bool tally_only() const { return tally_only_; }

  void append(GateOp g);
  void append(const CircuitProgram& sub);
  void append_oracle(const CircuitProgram& oracle, bool inverse_call = false);

  const std::vector<GateOp>& gates() const { return gates_; }
  const GateTally& tally() const { return tally_; }

  CircuitProgram inverse() const;

  void run(StateVector& s) const;
  void run(SparseState& s) const;

  // Dense unitary of the program on `num_qubits` qubits, built by running
  // every basis column. Only sensible for small qubit counts.
  cmat to_matrix(int num_qubits) const;

 private:
  RegisterLayout layout_;
  std::vector<GateOp> gates_;
  GateTally tally_;
  bool tally_only_ = false;
};

cmat mat_mul(const cmat& a, const cmat& b);
// B^e by literal repeated multiplication (gate-faithful powering: one factor
// per application of the program).
cmat mat_pow_repeated(const cmat& b, long long e);
// B^(2^r) by repeated squaring (semantic executors only).
cmat mat_pow2k(cmat b, int r);

}  // namespace qftc
