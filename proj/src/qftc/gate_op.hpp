#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qftc/common.hpp"

namespace qftc {

// Gate/oracle accounting per the complexity claims: one- and two-qubit gates
// are counted individually; ops with >= 2 controls are charged a configurable
// constant; oracle invocations are counted per call, not per internal gate.
inline constexpr long long kMultiControlCost = 5;

struct GateTally {
  long long one_two_qubit_count = 0;
  long long oracle_calls = 0;
  long long inverse_oracle_calls = 0;

  GateTally& operator+=(const GateTally& o) {
    one_two_qubit_count += o.one_two_qubit_count;
    oracle_calls += o.oracle_calls;
    inverse_oracle_calls += o.inverse_oracle_calls;
    return *this;
  }
  GateTally operator*(long long s) const {
    return {one_two_qubit_count * s, oracle_calls * s,
            inverse_oracle_calls * s};
  }
  GateTally operator+(const GateTally& o) const {
    GateTally t = *this;
    t += o;
    return t;
  }
};

struct Control {
  int qubit;
  bool positive;  // fire on |1> when true, on |0> when false
};

// Elementary operation: a 2x2 unitary on one target, a SWAP of two targets,
// or a pure scalar phase — each with an arbitrary control list.
struct GateOp {
  enum class Kind { kOneQubit, kSwap, kPhaseScalar };

  Kind kind = Kind::kOneQubit;
  std::array<cplx, 4> u{};  // row-major 2x2 (kOneQubit)
  cplx phase = 1.0;         // kPhaseScalar
  int target = -1;
  int target2 = -1;  // kSwap only
  std::vector<Control> controls;

  GateOp inverse() const;
  long long tally_cost() const;
  bool is_diagonal() const;     // kOneQubit with zero off-diagonals
  bool is_antidiagonal() const; // kOneQubit with zero diagonals
  void check_unitary() const;   // throws unless U U^dagger = I within 1e-12
};

// Constructors for the gates used throughout.
GateOp g_h(int q);
GateOp g_x(int q);
GateOp g_z(int q);
GateOp g_phase(int q, double angle);            // diag(1, e^{i angle})
GateOp g_ry(int q, double angle);               // exp(-i angle Y / 2)
GateOp g_rz(int q, double angle);               // diag(e^{-i a/2}, e^{i a/2})
GateOp g_one_qubit(int q, const std::array<cplx, 4>& u);
GateOp g_swap(int q1, int q2);
GateOp g_global_phase(cplx phase);

GateOp with_controls(GateOp g, std::vector<Control> extra);

}  // namespace qftc
