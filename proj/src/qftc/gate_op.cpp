#include "qftc/gate_op.hpp"

#include <cmath>

namespace qftc {

GateOp GateOp::inverse() const {
  GateOp g = *this;
  switch (kind) {
    case Kind::kOneQubit:
      g.u = {std::conj(u[0]), std::conj(u[2]), std::conj(u[1]),
             std::conj(u[3])};
      break;
    case Kind::kSwap:
      break;  // self-inverse
    case Kind::kPhaseScalar:
      g.phase = std::conj(phase);
      break;
  }
  return g;
}

long long GateOp::tally_cost() const {
  if (kind == Kind::kPhaseScalar && controls.empty()) return 0;
  const std::size_t nc = controls.size();
  if (kind == Kind::kPhaseScalar) {
    // A singly-controlled scalar phase is a one-qubit phase gate.
    return nc == 1 ? 1 : kMultiControlCost;
  }
  return nc <= 1 ? 1 : kMultiControlCost;
}

bool GateOp::is_diagonal() const {
  return kind == Kind::kOneQubit && std::abs(u[1]) == 0.0 &&
         std::abs(u[2]) == 0.0;
}

bool GateOp::is_antidiagonal() const {
  return kind == Kind::kOneQubit && std::abs(u[0]) == 0.0 &&
         std::abs(u[3]) == 0.0;
}

void GateOp::check_unitary() const {
  if (kind == Kind::kPhaseScalar) {
    if (std::abs(std::abs(phase) - 1.0) > 1e-12) {
      fail("GateOp: non-unit scalar phase");
    }
    return;
  }
  if (kind == Kind::kSwap) return;
  // Rows of U must be orthonormal.
  const double r0 = std::norm(u[0]) + std::norm(u[1]);
  const double r1 = std::norm(u[2]) + std::norm(u[3]);
  const cplx dot = u[0] * std::conj(u[2]) + u[1] * std::conj(u[3]);
  if (std::abs(r0 - 1.0) > 1e-12 || std::abs(r1 - 1.0) > 1e-12 ||
      std::abs(dot) > 1e-12) {
    fail("GateOp: 2x2 matrix is not unitary");
  }
}

GateOp g_one_qubit(int q, const std::array<cplx, 4>& u) {
  GateOp g;
  g.kind = GateOp::Kind::kOneQubit;
  g.u = u;
  g.target = q;
  g.check_unitary();
  return g;
}

GateOp g_h(int q) {
  const double s = 1.0 / std::sqrt(2.0);
  return g_one_qubit(q, {cplx(s), cplx(s), cplx(s), cplx(-s)});
}

GateOp g_x(int q) {
  return g_one_qubit(q, {cplx(0.0), cplx(1.0), cplx(1.0), cplx(0.0)});
}

GateOp g_z(int q) {
  return g_one_qubit(q, {cplx(1.0), cplx(0.0), cplx(0.0), cplx(-1.0)});
}

GateOp g_phase(int q, double angle) {
  return g_one_qubit(
      q, {cplx(1.0), cplx(0.0), cplx(0.0), std::polar(1.0, angle)});
}

GateOp g_ry(int q, double angle) {
  const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
  return g_one_qubit(q, {cplx(c), cplx(-s), cplx(s), cplx(c)});
}

GateOp g_rz(int q, double angle) {
  return g_one_qubit(q, {std::polar(1.0, -angle / 2.0), cplx(0.0), cplx(0.0),
                         std::polar(1.0, angle / 2.0)});
}

GateOp g_swap(int q1, int q2) {
  if (q1 == q2) fail("g_swap: identical targets");
  GateOp g;
  g.kind = GateOp::Kind::kSwap;
  g.target = q1;
  g.target2 = q2;
  return g;
}

GateOp g_global_phase(cplx phase) {
  GateOp g;
  g.kind = GateOp::Kind::kPhaseScalar;
  g.phase = phase;
  g.check_unitary();
  return g;
}

GateOp with_controls(GateOp g, std::vector<Control> extra) {
  for (const auto& c : extra) g.controls.push_back(c);
  return g;
}

}  // namespace qftc
