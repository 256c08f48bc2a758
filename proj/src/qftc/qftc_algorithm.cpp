#include "qftc/qftc_algorithm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <variant>

#include "qftc/arithmetic.hpp"
#include "qftc/circuits_std.hpp"
#include "qftc/oracle_prep.hpp"
#include "qftc/reference.hpp"

namespace qftc {

int derived_p_est(int p0, double delta) {
  if (delta <= 0.0 || delta >= 1.0) fail("delta must lie in (0, 1)");
  const int pad =
      static_cast<int>(std::ceil(std::log2(2.0 + 1.0 / (2.0 * delta))));
  // The textbook padding alone misses the fidelity target once the two-branch
  // subtraction stage is taken into account; the measured guard is +10.
  return p0 + pad + 10;
}

int QftcConfig::eff_p_est() const {
  if (p_est > 0 && p_est < p0 + 2) {
    fail("p_est must be at least p0 + 2 = " + std::to_string(p0 + 2));
  }
  return p_est > 0 ? p_est : derived_p_est(p0, delta);
}

// --- Layouts -----------------------------------------------------------------

namespace {

void add_branch_regs(RegisterLayout& lay, const std::string& sfx, int l,
                     int p) {
  lay.add("w" + sfx, l);
  lay.add("g" + sfx, 1);
  lay.add("z" + sfx, l);
  lay.add("f" + sfx, 1);
  lay.add("s" + sfx, 1);
  lay.add("est" + sfx, p);
}

std::vector<int> branch_space_qubits(const RegisterLayout& lay,
                                     const std::string& sfx) {
  std::vector<int> q = reg_qubits(lay, "w" + sfx);
  q.push_back(lay.qubit("g" + sfx, 0));
  for (int z : reg_qubits(lay, "z" + sfx)) q.push_back(z);
  q.push_back(lay.qubit("f" + sfx, 0));
  q.push_back(lay.qubit("s" + sfx, 0));
  return q;
}

cmat dagger(const cmat& a) {
  const std::size_t n = a.size();
  cmat d(n, cvec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = std::conj(a[j][i]);
  }
  return d;
}

cplx dot(const cvec& a, const cvec& b) {
  cplx s(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace

RegisterLayout qftc_full_layout(int l, const QftcConfig& cfg) {
  RegisterLayout lay;
  lay.add("k", l);
  add_branch_regs(lay, "p", l, cfg.eff_p_est());
  add_branch_regs(lay, "m", l, cfg.eff_p_est());
  lay.add("y", cfg.p0 + 1);
  return lay;
}

RegisterLayout qftc_block_layout(int l, const QftcConfig& cfg) {
  RegisterLayout lay;
  add_branch_regs(lay, "p", l, cfg.eff_p_est());
  add_branch_regs(lay, "m", l, cfg.eff_p_est());
  lay.add("y", cfg.p0 + 1);
  return lay;
}

// --- Branch preparation (Steps 2-5) -------------------------------------------

CircuitProgram branch_preparation(const RegisterLayout& layout,
                                  const std::string& sfx, int sign, int l,
                                  int k, const CircuitProgram& oracle,
                                  bool tally_only) {
  if (l < 1) fail("branch_preparation: L >= 1 required");
  const auto w = reg_qubits(layout, "w" + sfx);
  const int g = layout.qubit("g" + sfx, 0);
  const auto z = reg_qubits(layout, "z" + sfx);
  const int f = layout.qubit("f" + sfx, 0);
  const int s = layout.qubit("s" + sfx, 0);

  CircuitProgram prog(layout);
  prog.set_tally_only(tally_only);

  // Step 4: |phi_+-> on (z, f).
  append_phi_pm_prep(prog, z, f, sign);

  // Steps 2-3: flag superposition, then O_x (x) |1><1| + H^L (x) |0><0| and
  // the k-dependent phase network on the phi_k register (w, g).
  prog.append(g_h(g));
  prog.append_oracle(add_control(oracle, {g, true}));
  for (int wq : w) prog.append(with_controls(g_h(wq), {{g, false}}));
  if (k < 0) {
    append_controlled_phase_network(prog, w, reg_qubits(layout, "k"), +1,
                                    {{g, true}});
  } else {
    for (int a = 0; a < l; ++a) {
      const double angle =
          2.0 * kPi *
          static_cast<double>((static_cast<std::uint64_t>(k) << (l - 1 - a)) &
                              ((std::uint64_t{1} << l) - 1)) /
          std::ldexp(1.0, l);
      prog.append(with_controls(g_phase(w[a], angle), {{g, true}}));
    }
  }

  // Step 5: swap test between (w, g) and (z, f).
  std::vector<int> aq = w;
  aq.push_back(g);
  std::vector<int> bq = z;
  bq.push_back(f);
  append_swap_test(prog, s, aq, bq);
  return prog;
}

StateVector make_phi_pm(int l, int sign) {
  RegisterLayout lay;
  lay.add("j", l);
  lay.add("flag", 1);
  CircuitProgram prog(lay);
  append_phi_pm_prep(prog, reg_qubits(lay, "j"), lay.qubit("flag", 0), sign);
  StateVector s(l + 1);
  prog.run(s);
  return s;
}

StateVector make_phi_k(const cvec& x, int k) {
  const int l = ilog2(x.size());
  RegisterLayout lay;
  lay.add("j", l);
  lay.add("flag", 1);
  const auto j = reg_qubits(lay, "j");
  const int flag = lay.qubit("flag", 0);
  CircuitProgram prog(lay);
  prog.append(g_h(flag));
  prog.append_oracle(add_control(prepare_oracle(x, j), {flag, true}));
  for (int q : j) prog.append(with_controls(g_h(q), {{flag, false}}));
  for (int a = 0; a < l; ++a) {
    const double angle =
        2.0 * kPi *
        static_cast<double>((std::uint64_t(k) << (l - 1 - a)) &
                            ((std::uint64_t{1} << l) - 1)) /
        std::ldexp(1.0, l);
    prog.append(with_controls(g_phase(j[a], angle), {{flag, true}}));
  }
  StateVector s(l + 1);
  prog.run(s);
  return s;
}

cmat branch_q_matrix(const cvec& x, int l, int k, int sign) {
  // Pruned layout holding only the branch space.
  RegisterLayout blay;
  blay.add("w", l);
  blay.add("g", 1);
  blay.add("z", l);
  blay.add("f", 1);
  blay.add("s", 1);
  const CircuitProgram oracle = prepare_oracle(x, reg_qubits(blay, "w"));
  const CircuitProgram a_prog =
      branch_preparation(blay, "", sign, l, k, oracle);
  const int nq = 2 * l + 3;
  const cmat a = a_prog.to_matrix(nq);
  cmat t = dagger(a);
  const std::size_t dim = t.size();
  // t := A^dag * S_chi (column scaling; good subspace = swap ancilla |0>,
  // the ancilla is the last qubit, i.e. the index LSB).
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if ((j & 1) == 0) t[i][j] = -t[i][j];
    }
  }
  // t := S_0 * t (row scaling).
  for (std::size_t j = 0; j < dim; ++j) t[0][j] = -t[0][j];
  cmat q = mat_mul(a, t);
  for (auto& row : q) {
    for (auto& v : row) v = -v;
  }
  return q;
}

// --- Semantic arithmetic pipeline ---------------------------------------------

std::int64_t pipeline_f_scaled(std::uint64_t m, int p_est, int p_a) {
  const double v =
      -std::cos(2.0 * kPi * static_cast<double>(m) / std::ldexp(1.0, p_est));
  return static_cast<std::int64_t>(std::floor(std::ldexp(v, p_a) + 0.5));
}

std::uint64_t pipeline_y_bits(std::int64_t f_plus, std::int64_t f_minus,
                              int p_a, int p0) {
  const double y = std::ldexp(static_cast<double>(f_plus - f_minus), -p_a);
  return ring_round_half_up(y, FixedPointFormat::complement(p0));
}

// --- Input validation ----------------------------------------------------------

namespace {

// Returns the exact (real) DFT values; throws on every precondition breach.
std::vector<double> validate_input(const cvec& x, int p0) {
  if (!is_pow2(x.size()) || x.size() < 2) {
    fail("qftc: input length must be a power of two with L >= 1");
  }
  double n2 = 0.0;
  for (const auto& v : x) n2 += std::norm(v);
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-8) fail("qftc: non-unit input");
  const cvec y = dft_reference(x);
  std::vector<double> yr(y.size());
  const double headroom = 1.0 - std::ldexp(1.0, -p0 - 1);
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (std::abs(y[k].imag()) > 1e-9) {
      fail("qftc: DFT of input is not real; apply real_reduction first");
    }
    yr[k] = y[k].real();
    if (std::abs(yr[k]) >= headroom) {
      fail("qftc: y_" + std::to_string(k) +
           " is unrepresentable at p0 (|y| >= 1 - 2^-(p0+1)); no "
           "representational headroom");
    }
  }
  return yr;
}

// --- Fused execution of Steps 2-7 ----------------------------------------------

struct DenseOp {
  std::vector<int> qubits;
  cmat u;
  std::vector<Control> controls;
};
using StepOp = std::variant<GateOp, DenseOp>;

// Steps 2-7 on `lay` (with "k" register when k_folded < 0). Q^{2^r} powers
// are fused per (branch, k) by literal repeated multiplication and applied as
// controlled dense blocks.
std::vector<StepOp> build_step27_ops(const cvec& x, const RegisterLayout& lay,
                                     int l, int k_folded, int p) {
  std::vector<StepOp> ops;
  const struct {
    const char* sfx;
    int sign;
  } branches[2] = {{"p", +1}, {"m", -1}};
  for (const auto& br : branches) {
    const std::string sfx = br.sfx;
    const auto w = reg_qubits(lay, "w" + sfx);
    const CircuitProgram oracle = prepare_oracle(x, w);
    const CircuitProgram a_prog =
        branch_preparation(lay, sfx, br.sign, l, k_folded, oracle);
    for (const auto& g : a_prog.gates()) ops.push_back(g);

    const auto est = reg_qubits(lay, "est" + sfx);
    const auto bq = branch_space_qubits(lay, sfx);
    for (int e = 0; e < p; ++e) ops.push_back(g_h(est[e]));
    const int n_k = k_folded >= 0 ? 1 : (1 << l);
    for (int kv = 0; kv < n_k; ++kv) {
      const int k_val = k_folded >= 0 ? k_folded : kv;
      const cmat q = branch_q_matrix(x, l, k_val, br.sign);
      for (int e = 0; e < p; ++e) {
        DenseOp op;
        op.qubits = bq;
        op.u = mat_pow_repeated(q, 1LL << (p - 1 - e));
        op.controls.push_back({est[e], true});
        if (k_folded < 0) {
          const auto kq = reg_qubits(lay, "k");
          for (int i = 0; i < l; ++i) {
            op.controls.push_back({kq[i], ((k_val >> (l - 1 - i)) & 1) != 0});
          }
        }
        ops.push_back(std::move(op));
      }
    }
    const CircuitProgram iqft = qft_program(est).inverse();
    for (const auto& g : iqft.gates()) ops.push_back(g);
  }
  return ops;
}

void run_ops(StateVector& s, const std::vector<StepOp>& ops, bool inverse) {
  auto apply_one = [&](const StepOp& op, bool inv) {
    if (std::holds_alternative<GateOp>(op)) {
      const GateOp& g = std::get<GateOp>(op);
      s.apply(inv ? g.inverse() : g);
    } else {
      const DenseOp& d = std::get<DenseOp>(op);
      s.apply_dense(d.qubits, inv ? dagger(d.u) : d.u, d.controls);
    }
  };
  if (!inverse) {
    for (const auto& op : ops) apply_one(op, false);
  } else {
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) apply_one(*it, true);
  }
}

// Steps 1-9 on `lay`; with k_folded >= 0 the layout has no "k" register and
// Step 1 is skipped (the caller assembles the uniform superposition).
void run_pipeline(StateVector& s, const cvec& x, const RegisterLayout& lay,
                  int l, int k_folded, int p, int p_a, int p0) {
  if (k_folded < 0) {
    for (int i = 0; i < l; ++i) s.apply(g_h(lay.qubit("k", i)));
  }
  const std::vector<StepOp> ops = build_step27_ops(x, lay, l, k_folded, p);
  run_ops(s, ops, false);
  const std::uint64_t y_ring = std::uint64_t{1} << (p0 + 1);
  s.apply_basis_permutation([&](std::uint64_t i) {
    const std::uint64_t mp = lay.extract(i, "estp");
    const std::uint64_t mm = lay.extract(i, "estm");
    const std::uint64_t y = lay.extract(i, "y");
    const std::uint64_t yb = pipeline_y_bits(pipeline_f_scaled(mp, p, p_a),
                                             pipeline_f_scaled(mm, p, p_a),
                                             p_a, p0);
    return lay.insert(i, "y", (y + yb) & (y_ring - 1));
  });
  run_ops(s, ops, true);  // Step 9: uncompute
}

// --- Reduced (2D invariant subspace) per-branch math ---------------------------

std::map<std::int64_t, double> branch_distribution(const cvec& x, int l, int k,
                                                   int sign, int p, int p_a) {
  RegisterLayout blay;
  blay.add("w", l);
  blay.add("g", 1);
  blay.add("z", l);
  blay.add("f", 1);
  blay.add("s", 1);
  const CircuitProgram oracle = prepare_oracle(x, reg_qubits(blay, "w"));
  const CircuitProgram a_prog =
      branch_preparation(blay, "", sign, l, k, oracle);
  const int nq = 2 * l + 3;
  StateVector init(nq);
  a_prog.run(init);
  const cvec& amp = init.amplitudes();
  const std::size_t dim = amp.size();

  // Good subspace: swap ancilla (index LSB) = 0.
  double a_prob = 0.0;
  for (std::size_t i = 0; i < dim; i += 2) a_prob += std::norm(amp[i]);
  if (a_prob < 1e-15 || a_prob > 1.0 - 1e-15) {
    fail("qftc: degenerate estimation angle (|y_k| at the boundary)");
  }
  const double st = std::sqrt(a_prob), ct = std::sqrt(1.0 - a_prob);
  cvec v1(dim, cplx(0.0, 0.0)), v2(dim, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & 1) == 0) {
      v1[i] = amp[i] / st;
    } else {
      v2[i] = amp[i] / ct;
    }
  }
  const cmat q = branch_q_matrix(x, l, k, sign);
  const cvec q1 = matvec(q, v1), q2 = matvec(q, v2);
  const cmat m2{cvec{dot(v1, q1), dot(v1, q2)},
                cvec{dot(v2, q1), dot(v2, q2)}};

  // Amplitude-estimation ladder restricted to span{v1, v2}.
  const std::size_t dimp = std::size_t{1} << p;
  const double h = 1.0 / std::sqrt(static_cast<double>(dimp));
  std::vector<std::array<cplx, 2>> v(dimp, {st * h, ct * h});
  for (int e = 0; e < p; ++e) {
    const cmat mp = mat_pow2k(m2, p - 1 - e);
    for (std::size_t m = 0; m < dimp; ++m) {
      if ((m >> (p - 1 - e)) & 1) {
        const cplx a0 = v[m][0], a1 = v[m][1];
        v[m][0] = mp[0][0] * a0 + mp[0][1] * a1;
        v[m][1] = mp[1][0] * a0 + mp[1][1] * a1;
      }
    }
  }
  // Inverse QFT on the estimation index.
  for (int c = 0; c < 2; ++c) {
    cvec col(dimp);
    for (std::size_t m = 0; m < dimp; ++m) col[m] = v[m][c];
    fft_pow2(col, -1);
    for (std::size_t m = 0; m < dimp; ++m) v[m][c] = col[m] * h;
  }
  std::map<std::int64_t, double> d;
  for (std::size_t m = 0; m < dimp; ++m) {
    d[pipeline_f_scaled(m, p, p_a)] +=
        std::norm(v[m][0]) + std::norm(v[m][1]);
  }
  return d;
}

// Decoded values / fidelity from per-k conditional code distributions.
void finalize_result(QftcResult& res, const std::vector<double>& y_exact) {
  const std::size_t n = res.dist.size();
  const FixedPointFormat fmt = FixedPointFormat::complement(res.p0);
  res.per_k.resize(n);
  double fid = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t best_code = 0;
    double best_p = -1.0;
    for (const auto& [code, pr] : res.dist[k]) {
      if (pr > best_p) {
        best_p = pr;
        best_code = code;
      }
    }
    QftcPerK& row = res.per_k[k];
    row.k = static_cast<int>(k);
    row.y_exact = y_exact[k];
    row.y_code = best_code;
    row.y_hat = decode_bits(best_code, fmt);
    row.prob_mass = best_p / static_cast<double>(n);
    fid += best_p;
  }
  res.fidelity = fid / static_cast<double>(n);
}

}  // namespace

// --- Analytic tally -------------------------------------------------------------

QftcTallyBreakdown qftc_tally(int l, const QftcConfig& cfg) {
  const int p = cfg.eff_p_est();
  const int p_a = cfg.eff_p_a();
  const RegisterLayout lay = qftc_full_layout(l, cfg);
  CircuitProgram prog(lay);
  prog.set_tally_only(true);
  for (int i = 0; i < l; ++i) prog.append(g_h(lay.qubit("k", i)));

  const CircuitProgram empty_oracle;
  const struct {
    const char* sfx;
    int sign;
  } branches[2] = {{"p", +1}, {"m", -1}};
  for (const auto& br : branches) {
    const std::string sfx = br.sfx;
    CircuitProgram steps27(lay);
    steps27.set_tally_only(true);
    const CircuitProgram a_prog = branch_preparation(
        lay, sfx, br.sign, l, -1, empty_oracle, /*tally_only=*/true);
    steps27.append(a_prog);
    append_amplitude_estimation(steps27, reg_qubits(lay, "est" + sfx), a_prog,
                                branch_space_qubits(lay, sfx),
                                lay.qubit("s" + sfx, 0));
    prog.append(steps27);
    prog.append(steps27.inverse());  // Step 9 mirror
  }

  // Arithmetic box, charged at its gate-level widths: two cosine gates on the
  // p_est-digit estimates, Sigma^- at p_a digits, and the final round-half-up
  // constant adder on the (p0+1)-digit output (all compute/uncompute included
  // in the gate constructions themselves).
  prog.append(sine_gate_program(SineGateConfig::cos_gate(p),
                                /*tally_only=*/true));
  prog.append(sine_gate_program(SineGateConfig::cos_gate(p),
                                /*tally_only=*/true));
  {
    RegisterLayout slay;
    slay.add("out", p_a + 1);
    slay.add("a", p_a);
    slay.add("b", p_a);
    slay.add("y", cfg.p0 + 1);
    CircuitProgram box(slay);
    box.set_tally_only(true);
    append_sigma_minus(box, reg_qubits(slay, "out"), reg_qubits(slay, "a"),
                       reg_qubits(slay, "b"));
    const auto yq = reg_qubits(slay, "y");
    box.append(qft_program(yq));
    append_const_cascade(box, yq, 1, +1);  // + ulp/2 before dropping digits
    box.append(qft_program(yq).inverse());
    prog.append(box);
  }

  QftcTallyBreakdown out;
  out.total = prog.tally();
  // A instances: one preparation plus two per controlled-Q application, per
  // branch, mirrored by the uncompute.
  out.a_instances = 4LL * (1 + 2 * ((1LL << p) - 1));
  out.phase_network = out.a_instances * 5LL * l * l;
  return out;
}

// --- End-to-end runs --------------------------------------------------------------

QftcResult decode_results(const StateVector& final_state, const cvec& x,
                          const QftcConfig& cfg) {
  const int l = ilog2(x.size());
  const RegisterLayout lay = qftc_full_layout(l, cfg);
  if (lay.num_qubits() != final_state.num_qubits()) {
    fail("decode_results: state does not match the full layout");
  }
  const std::vector<double> y_exact = validate_input(x, cfg.p0);
  QftcResult res;
  res.l = l;
  res.p0 = cfg.p0;
  res.p_est = cfg.eff_p_est();
  res.p_a = cfg.eff_p_a();
  res.tally = qftc_tally(l, cfg).total;
  const std::size_t n = x.size();
  res.dist.assign(n, {});

  const cvec& amp = final_state.amplitudes();
  for (std::size_t i = 0; i < amp.size(); ++i) {
    const double pr = std::norm(amp[i]);
    if (pr == 0.0) continue;
    const std::uint64_t k = lay.extract(i, "k");
    const std::uint64_t y = lay.extract(i, "y");
    res.dist[k][y] += pr * static_cast<double>(n);  // conditional on k
  }
  finalize_result(res, y_exact);

  // Fidelity against the ideal (1/sqrt(N)) sum_k |k>|0...0>|y~_k>: overlap
  // picks out the clean-ancilla amplitudes only.
  cplx ov(0.0, 0.0);
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t idx = 0;
    idx = lay.insert(idx, "k", k);
    idx = lay.insert(idx, "y", res.per_k[k].y_code);
    ov += amp[idx] * inv_sqrt_n;
  }
  res.fidelity = std::abs(ov);
  return res;
}

StateVector restrict_to_ky(const StateVector& final_state, int l,
                           const QftcConfig& cfg) {
  const RegisterLayout lay = qftc_full_layout(l, cfg);
  if (lay.num_qubits() != final_state.num_qubits()) {
    fail("restrict_to_ky: state does not match the full layout");
  }
  const int yw = cfg.p0 + 1;
  StateVector out(l + yw);
  out.amplitudes().assign(out.dim(), cplx(0.0, 0.0));
  const cvec& amp = final_state.amplitudes();
  const std::uint64_t n = std::uint64_t{1} << l;
  const std::uint64_t yring = std::uint64_t{1} << yw;
  for (std::uint64_t k = 0; k < n; ++k) {
    for (std::uint64_t y = 0; y < yring; ++y) {
      std::uint64_t idx = 0;
      idx = lay.insert(idx, "k", k);
      idx = lay.insert(idx, "y", y);
      out.amplitudes()[(k << yw) | y] = amp[idx];
    }
  }
  return out;
}

namespace {

QftcResult run_full(const cvec& x, const QftcConfig& cfg, StateVector* state) {
  const int l = ilog2(x.size());
  validate_input(x, cfg.p0);
  const int p = cfg.eff_p_est();
  const RegisterLayout lay = qftc_full_layout(l, cfg);
  if (lay.num_qubits() > cfg.max_qubits) {
    fail("qftc: full mode needs " + std::to_string(lay.num_qubits()) +
         " qubits, over the budget of " + std::to_string(cfg.max_qubits) +
         "; use block_diagonal mode");
  }
  StateVector s(lay.num_qubits());
  run_pipeline(s, x, lay, l, -1, p, cfg.eff_p_a(), cfg.p0);
  QftcResult res = decode_results(s, x, cfg);
  if (state != nullptr) *state = std::move(s);
  return res;
}

}  // namespace

QftcResult run_block_diagonal(const cvec& x, const QftcConfig& cfg,
                              StateVector* state) {
  const int l = ilog2(x.size());
  const std::vector<double> y_exact = validate_input(x, cfg.p0);
  const int p = cfg.eff_p_est();
  const int p_a = cfg.eff_p_a();
  const std::size_t n = x.size();

  QftcResult res;
  res.l = l;
  res.p0 = cfg.p0;
  res.p_est = p;
  res.p_a = p_a;
  res.tally = qftc_tally(l, cfg).total;
  res.dist.assign(n, {});
  for (std::size_t k = 0; k < n; ++k) {
    const auto dp = branch_distribution(x, l, static_cast<int>(k), +1, p, p_a);
    const auto dm = branch_distribution(x, l, static_cast<int>(k), -1, p, p_a);
    auto& dk = res.dist[k];
    for (const auto& [fp, qp] : dp) {
      for (const auto& [fm, qm] : dm) {
        dk[pipeline_y_bits(fp, fm, p_a, cfg.p0)] += qp * qm;
      }
    }
  }
  finalize_result(res, y_exact);

  if (state != nullptr) {
    // Assemble the dense state from per-k block simulations.
    const RegisterLayout blay = qftc_block_layout(l, cfg);
    const int bn = blay.num_qubits();
    if (l + bn > cfg.max_qubits) {
      fail("qftc: assembling the block-diagonal state needs " +
           std::to_string(l + bn) + " qubits, over the budget of " +
           std::to_string(cfg.max_qubits));
    }
    StateVector full(l + bn);
    full.amplitudes().assign(full.dim(), cplx(0.0, 0.0));
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
      StateVector blk(bn);
      run_pipeline(blk, x, blay, l, static_cast<int>(k), p, p_a, cfg.p0);
      const std::uint64_t base = k << bn;
      for (std::size_t i = 0; i < blk.dim(); ++i) {
        full.amplitudes()[base | i] = blk.amplitudes()[i] * inv_sqrt_n;
      }
    }
    *state = std::move(full);
  }
  return res;
}

QftcResult qftc_run(const cvec& x, const QftcConfig& cfg, StateVector* state) {
  if (cfg.mode == QftcMode::kFull) return run_full(x, cfg, state);
  return run_block_diagonal(x, cfg, state);
}

}  // namespace qftc
