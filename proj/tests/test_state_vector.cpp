#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "qftc/state_vector.hpp"

using namespace qftc;

TEST_CASE("register layout bit fields") {
  RegisterLayout lay;
  CHECK(lay.add("a", 3) == 0);
  CHECK(lay.add("b", 2) == 3);
  CHECK(lay.add("c", 1) == 5);
  CHECK(lay.num_qubits() == 6);
  CHECK(lay.qubit("b", 0) == 3);  // MSB-first within the register
  CHECK(lay.qubit("b", 1) == 4);
  CHECK(lay.mask("a") == 0b111000ull);
  CHECK(lay.mask("c") == 0b000001ull);
  CHECK(lay.bit_shift("b") == 1);

  std::uint64_t idx = 0;
  idx = lay.insert(idx, "a", 0b101);
  idx = lay.insert(idx, "b", 0b10);
  idx = lay.insert(idx, "c", 1);
  CHECK(idx == 0b101101ull);
  CHECK(lay.extract(idx, "a") == 0b101);
  CHECK(lay.extract(idx, "b") == 0b10);
  CHECK(lay.extract(idx, "c") == 1);
  CHECK(lay.has("a"));
  CHECK_FALSE(lay.has("zz"));
}

TEST_CASE("single-qubit gates on basis states") {
  StateVector s(2, 0b00);  // qubit 0 is the MSB
  s.apply(g_x(1));
  CHECK(std::abs(s.amplitudes()[0b01] - 1.0) < 1e-14);
  s.apply(g_h(0));
  CHECK(std::abs(s.amplitudes()[0b01] - std::sqrt(0.5)) < 1e-14);
  CHECK(std::abs(s.amplitudes()[0b11] - std::sqrt(0.5)) < 1e-14);
  s.apply(g_z(0));
  CHECK(std::abs(s.amplitudes()[0b11] + std::sqrt(0.5)) < 1e-14);
}

TEST_CASE("controls fire on the requested polarity") {
  StateVector s(2, 0b10);  // qubit 0 = 1, qubit 1 = 0
  s.apply(with_controls(g_x(1), {{0, true}}));
  CHECK(std::abs(s.amplitudes()[0b11] - 1.0) < 1e-14);
  s.apply(with_controls(g_x(1), {{0, false}}));  // negative control: no-op
  CHECK(std::abs(s.amplitudes()[0b11] - 1.0) < 1e-14);

  StateVector t(2, 0b00);
  t.apply(with_controls(g_x(1), {{0, false}}));
  CHECK(std::abs(t.amplitudes()[0b01] - 1.0) < 1e-14);
}

TEST_CASE("swap and scalar-phase gates") {
  StateVector s(2, 0b10);
  s.apply(g_swap(0, 1));
  CHECK(std::abs(s.amplitudes()[0b01] - 1.0) < 1e-14);
  s.apply(g_global_phase(cplx(0.0, 1.0)));
  CHECK(std::abs(s.amplitudes()[0b01] - cplx(0.0, 1.0)) < 1e-14);
  // A controlled scalar phase acts only on matching basis states.
  StateVector u(1, 0);
  u.apply(g_h(0));
  u.apply(with_controls(g_global_phase(-1.0), {{0, true}}));
  CHECK(std::abs(u.amplitudes()[0] - std::sqrt(0.5)) < 1e-14);
  CHECK(std::abs(u.amplitudes()[1] + std::sqrt(0.5)) < 1e-14);
}

TEST_CASE("gate inverses undo the gate") {
  Rng rng(21);
  StateVector s(3, 0);
  for (int q = 0; q < 3; ++q) s.apply(g_h(q));
  const cvec before = s.amplitudes();
  std::vector<GateOp> gates{
      g_ry(1, 0.7), g_rz(2, -1.3), g_phase(0, 2.1),
      with_controls(g_ry(0, 0.4), {{1, true}, {2, false}}), g_swap(0, 2)};
  for (const auto& g : gates) s.apply(g);
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    s.apply(it->inverse());
  }
  for (std::size_t i = 0; i < s.dim(); ++i) {
    CHECK(std::abs(s.amplitudes()[i] - before[i]) < 1e-13);
  }
}

TEST_CASE("tally costs per the accounting rules") {
  CHECK(g_h(0).tally_cost() == 1);
  CHECK(with_controls(g_h(0), {{1, true}}).tally_cost() == 1);
  CHECK(with_controls(g_h(0), {{1, true}, {2, true}}).tally_cost() ==
        kMultiControlCost);
  CHECK(g_global_phase(-1.0).tally_cost() == 0);  // unobservable alone
  CHECK(with_controls(g_global_phase(-1.0), {{0, true}}).tally_cost() == 1);
  GateTally t;
  StateVector s(3, 0);
  s.apply(g_h(0), &t);
  s.apply(with_controls(g_x(1), {{0, true}, {2, false}}), &t);
  CHECK(t.one_two_qubit_count == 1 + kMultiControlCost);
}

TEST_CASE("apply_dense matches the gate sequence") {
  Rng rng(22);
  StateVector a(3, 0), b(3, 0);
  for (int q = 0; q < 3; ++q) {
    a.apply(g_h(q));
    b.apply(g_h(q));
  }
  const GateOp g = g_ry(0, 0.9);
  a.apply(with_controls(g, {{2, true}}));
  const cmat u{{g.u[0], g.u[1]}, {g.u[2], g.u[3]}};
  b.apply_dense({0}, u, {{2, true}});
  for (std::size_t i = 0; i < a.dim(); ++i) {
    CHECK(std::abs(a.amplitudes()[i] - b.amplitudes()[i]) < 1e-13);
  }
}

TEST_CASE("basis permutations") {
  StateVector s(3, 0);
  for (int q = 0; q < 3; ++q) s.apply(g_h(q));
  const cvec before = s.amplitudes();
  s.apply_basis_permutation([](std::uint64_t i) { return (i + 3) & 7; });
  for (std::uint64_t i = 0; i < 8; ++i) {
    CHECK(std::abs(s.amplitudes()[(i + 3) & 7] - before[i]) < 1e-14);
  }
  CHECK_THROWS(s.apply_basis_permutation(
      [](std::uint64_t) -> std::uint64_t { return 0; }));  // not a bijection
}

TEST_CASE("postselect and prob_of") {
  StateVector s(2, 0);
  s.apply(g_h(0));
  s.apply(g_ry(1, 2.0 * std::asin(0.6)));
  CHECK(s.prob_of(0b01, 0b01) == doctest::Approx(0.36).epsilon(1e-12));
  const double p = s.postselect(0b01, 0b01);
  CHECK(p == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(s.amplitudes()[0b00]) < 1e-14);
  // Vanishing-probability outcomes are rejected.
  StateVector t(1, 0);
  CHECK_THROWS(t.postselect(1, 1));
}

TEST_CASE("overlap") {
  StateVector a(1, 0), b(1, 0);
  b.apply(g_h(0));
  CHECK(std::abs(overlap(a, b) - std::sqrt(0.5)) < 1e-14);
}

TEST_CASE("gate unitarity check") {
  GateOp g = g_h(0);
  CHECK_NOTHROW(g.check_unitary());
  g.u[0] = 2.0;
  CHECK_THROWS(g.check_unitary());
}
