#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "qftc/arithmetic.hpp"
#include "qftc/circuits_std.hpp"
#include "qftc/oracle_prep.hpp"
#include "qftc/qftc_algorithm.hpp"
#include "qftc/reference.hpp"

using namespace qftc;

namespace {

// Random real-DFT unit vector: sample real y on the unit sphere (optionally
// capped), then x = inverse-DFT(y).
cvec random_real_dft_input(Rng& rng, std::size_t n, double y_cap) {
  while (true) {
    std::vector<double> y(n);
    double n2 = 0.0;
    for (auto& v : y) {
      v = rng.normal();
      n2 += v * v;
    }
    const double inv = 1.0 / std::sqrt(n2);
    bool ok = true;
    for (auto& v : y) {
      v *= inv;
      ok = ok && std::abs(v) <= y_cap;
    }
    if (!ok) continue;
    cvec x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = y[j];
    fft_pow2(x, -1);
    for (auto& v : x) v /= std::sqrt(static_cast<double>(n));
    return x;
  }
}

}  // namespace

TEST_CASE("phi overlap-difference identity |<phi+|phi_k>|^2-|<phi-|phi_k>|^2=y_k") {
  Rng rng(61);
  for (int l : {1, 2, 3}) {
    const std::size_t n = std::size_t{1} << l;
    const cvec x = random_real_dft_input(rng, n, 0.999);
    const cvec y = dft_reference(x);
    const StateVector phip = make_phi_pm(l, +1);
    const StateVector phim = make_phi_pm(l, -1);
    for (int k = 0; k < static_cast<int>(n); ++k) {
      const StateVector phik = make_phi_k(x, k);
      const double diff =
          std::norm(overlap(phip, phik)) - std::norm(overlap(phim, phik));
      CHECK(std::abs(diff - y[k].real()) < 1e-10);
    }
  }
}

TEST_CASE("e_0 input at N=2, p0=3: both y within epsilon, fidelity >= 0.9") {
  const cvec x{1.0, 0.0};
  QftcConfig cfg;  // p0 = 3, delta = 0.1, block-diagonal
  const QftcResult r = qftc_run(x, cfg);
  const double h = std::sqrt(0.5);
  for (const auto& row : r.per_k) {
    CHECK(row.y_exact == doctest::Approx(h).epsilon(1e-12));
    CHECK(std::abs(row.y_hat - row.y_exact) <= 0.125);
  }
  CHECK(r.fidelity >= 0.9);
}

TEST_CASE("x=(0.6,0.8): y=(0.98995,-0.14142), negative sign decoded") {
  const cvec x{0.6, 0.8};
  QftcConfig cfg;
  cfg.p0 = 6;  // headroom: 1 - 2^-7 = 0.9922 > 0.98995
  const QftcResult r = qftc_run(x, cfg);
  CHECK(r.per_k[0].y_exact == doctest::Approx(1.4 / std::sqrt(2.0)));
  CHECK(r.per_k[1].y_exact == doctest::Approx(-0.2 / std::sqrt(2.0)));
  CHECK(r.per_k[1].y_hat < 0.0);
  for (const auto& row : r.per_k) {
    CHECK(std::abs(row.y_hat - row.y_exact) <= std::ldexp(1.0, -6));
  }
}

TEST_CASE("uniform input at N=4 is rejected (y_0 = 1 unrepresentable)") {
  const cvec x{0.5, 0.5, 0.5, 0.5};
  CHECK_THROWS_WITH_AS(qftc_run(x, QftcConfig{}),
                       doctest::Contains("unrepresentable"),
                       std::runtime_error);
}

TEST_CASE("complex-DFT input is rejected with real_reduction guidance") {
  const cvec x{cplx(0, 1), 0, 0, 0};  // DFT has imaginary parts
  CHECK_THROWS_WITH_AS(qftc_run(x, QftcConfig{}),
                       doctest::Contains("real_reduction"),
                       std::runtime_error);
}

TEST_CASE("fused Q matrix equals the unfused Grover program") {
  Rng rng(62);
  const int l = 1;
  const cvec x = random_real_dft_input(rng, 2, 0.9);
  for (int k : {0, 1}) {
    for (int sign : {+1, -1}) {
      const cmat fused = branch_q_matrix(x, l, k, sign);
      // Rebuild unfused: A = branch preparation on a standalone branch
      // register file, then Q = -A S0 A^dag S_chi as a gate program.
      RegisterLayout blay;
      blay.add("w", l);
      blay.add("g", 1);
      blay.add("z", l);
      blay.add("f", 1);
      blay.add("s", 1);
      const int nq = 2 * l + 3;
      std::vector<int> all(nq);
      for (int i = 0; i < nq; ++i) all[i] = i;
      const CircuitProgram a_prog = branch_preparation(
          blay, "", sign, l, k, prepare_oracle(x, reg_qubits(blay, "w")));
      const cmat unfused =
          grover_q_program(a_prog, all, blay.qubit("s", 0)).to_matrix(nq);
      for (std::size_t r = 0; r < fused.size(); ++r) {
        for (std::size_t c = 0; c < fused.size(); ++c) {
          CHECK(std::abs(fused[r][c] - unfused[r][c]) < 1e-11);
        }
      }
    }
  }
}

TEST_CASE("full and block-diagonal modes agree at L=1") {
  Rng rng(63);
  const cvec x = random_real_dft_input(rng, 2, 0.9);
  QftcConfig cfg;
  cfg.p0 = 2;
  cfg.p_est = 4;  // trimmed so the monolithic circuit fits in 22 qubits
  cfg.max_qubits = 22;

  cfg.mode = QftcMode::kFull;
  RegisterLayout lay = qftc_full_layout(1, cfg);
  StateVector full(lay.num_qubits());
  const QftcResult rf = qftc_run(x, cfg, &full);

  cfg.mode = QftcMode::kBlockDiagonal;
  StateVector block(lay.num_qubits());
  const QftcResult rb = qftc_run(x, cfg, &block);

  double max_diff = 0.0;
  for (std::size_t i = 0; i < full.dim(); ++i) {
    max_diff = std::max(max_diff, std::abs(full.amplitudes()[i] -
                                           block.amplitudes()[i]));
  }
  CHECK(max_diff < 1e-9);
  CHECK(rf.fidelity == doctest::Approx(rb.fidelity).epsilon(1e-9));
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(rf.per_k[k].y_code == rb.per_k[k].y_code);
  }
}

TEST_CASE("conditional distributions are normalized; joint mass is 1/N") {
  Rng rng(64);
  const cvec x = random_real_dft_input(rng, 4, 0.9);
  const QftcResult r = qftc_run(x, QftcConfig{});
  for (const auto& dk : r.dist) {
    double sum = 0.0;
    for (const auto& [code, pr] : dk) sum += pr;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
  for (const auto& row : r.per_k) {
    CHECK(row.prob_mass <= 0.25 + 1e-12);
    CHECK(row.prob_mass > 0.0);
  }
}

TEST_CASE("decoded value equals the code-level arithmetic identity chain") {
  // For every estimation outcome pair, the y code is exactly the pipeline of
  // f(m) = round(2 sin^2(pi m / 2^p) - 1) and the Sigma-minus rounding.
  const int p_est = 5, p_a = 7, p0 = 3;
  for (std::uint64_t mp : {0ull, 3ull, 13ull, 31ull}) {
    for (std::uint64_t mm : {1ull, 7ull, 30ull}) {
      const std::int64_t fp = pipeline_f_scaled(mp, p_est, p_a);
      const std::int64_t fm = pipeline_f_scaled(mm, p_est, p_a);
      const std::uint64_t code = pipeline_y_bits(fp, fm, p_a, p0);
      // Independent recomputation from the definitions.
      const double plus = 2.0 * std::pow(std::sin(kPi * mp / 32.0), 2) - 1.0;
      const double minus = 2.0 * std::pow(std::sin(kPi * mm / 32.0), 2) - 1.0;
      const double fp_r = std::floor(std::ldexp(plus, p_a) + 0.5);
      const double fm_r = std::floor(std::ldexp(minus, p_a) + 0.5);
      const std::uint64_t want = ring_round_half_up(
          std::ldexp(fp_r - fm_r, -p_a), FixedPointFormat::complement(p0));
      CHECK(code == want);
    }
  }
}

TEST_CASE("branch symmetry: M and 2^p_est - M decode identically") {
  const int p_est = 6, p_a = 8;
  for (std::uint64_t m = 1; m < 32; ++m) {
    CHECK(pipeline_f_scaled(m, p_est, p_a) ==
          pipeline_f_scaled((1u << p_est) - m, p_est, p_a));
  }
}

namespace {
// Clean-ancilla population after the uncompute, from the conditional code
// distributions: each (k, y) retains amplitude P(y|k)/sqrt(N).
double clean_population(const QftcResult& r) {
  double pop = 0.0;
  for (const auto& dk : r.dist) {
    for (const auto& [code, pr] : dk) pop += pr * pr;
  }
  return pop / static_cast<double>(r.dist.size());
}
}  // namespace

TEST_CASE("uncompute: measured clean population matches the P(y|k)^2 formula") {
  Rng rng(65);
  const cvec x = random_real_dft_input(rng, 2, 0.9);
  QftcConfig cfg;
  cfg.p0 = 2;
  cfg.p_est = 4;  // lean padding, just to make the monolithic run feasible
  cfg.max_qubits = 22;
  cfg.mode = QftcMode::kFull;
  RegisterLayout lay = qftc_full_layout(1, cfg);
  StateVector full(lay.num_qubits());
  const QftcResult r = qftc_run(x, cfg, &full);
  const StateVector clean = restrict_to_ky(full, 1, cfg);
  double pop = 0.0;
  for (const auto& a : clean.amplitudes()) pop += std::norm(a);
  CHECK(pop == doctest::Approx(clean_population(r)).epsilon(1e-9));
  CHECK(r.fidelity * r.fidelity <= pop + 1e-12);  // ideal lives in the slice
}

TEST_CASE("uncompute population >= 1 - delta at the derived padding") {
  Rng rng(66);
  for (std::size_t n : {2u, 4u}) {
    const cvec x = random_real_dft_input(rng, n, 0.9);
    QftcConfig cfg;  // p0 = 3, delta = 0.1 -> p_est = 16
    const QftcResult r = qftc_run(x, cfg);
    CHECK(clean_population(r) >= 1.0 - cfg.delta);
  }
}

TEST_CASE("analytic tally formulas at p_est = 5") {
  QftcConfig cfg;
  cfg.p_est = 5;
  for (int l : {1, 3}) {
    const QftcTallyBreakdown tb = qftc_tally(l, cfg);
    // Two branches, each: 1 preparation A + (2^p_est - 1) Grover iterations
    // with A and A^dag, mirrored once more by the uncompute.
    const long long per_branch = 2 * (1 + 2 * (31));
    CHECK(tb.a_instances == 2 * per_branch);
    CHECK(tb.total.oracle_calls == per_branch);
    CHECK(tb.total.inverse_oracle_calls == per_branch);
    CHECK(tb.phase_network == tb.a_instances * 5 * l * l);
    CHECK(tb.total.one_two_qubit_count > tb.phase_network);
  }
}

TEST_CASE("derived p_est padding") {
  CHECK(derived_p_est(3, 0.1) == 3 + 3 + 10);
  CHECK(derived_p_est(3, 0.05) == 3 + 4 + 10);
  QftcConfig cfg;
  cfg.p0 = 4;
  CHECK(cfg.eff_p_est() == derived_p_est(4, 0.1));
  CHECK(cfg.eff_p_a() == 8);
  cfg.p_est = 5;  // below the p0 + 2 floor
  CHECK_THROWS_WITH_AS(cfg.eff_p_est(), doctest::Contains("p0 + 2"),
                       std::runtime_error);
}

TEST_CASE("full mode over budget advises block_diagonal") {
  const cvec x{1.0, 0.0};
  QftcConfig cfg;
  cfg.mode = QftcMode::kFull;  // derived p_est = 16 needs ~47 qubits
  CHECK_THROWS_WITH_AS(qftc_run(x, cfg),
                       doctest::Contains("block_diagonal"),
                       std::runtime_error);
}
