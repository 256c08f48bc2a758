#include "qftc/arithmetic.hpp"

#include <cmath>

#include "qftc/circuits_std.hpp"
#include "qftc/reference.hpp"

namespace qftc {

std::vector<int> reg_qubits(const RegisterLayout& layout,
                            const std::string& name) {
  const Register& r = layout.reg(name);
  std::vector<int> q(r.width);
  for (int i = 0; i < r.width; ++i) q[i] = r.start + i;
  return q;
}

void append_const_cascade(CircuitProgram& prog, const std::vector<int>& c_q,
                          std::uint64_t amount, int sign,
                          const std::vector<Control>& ctrl) {
  const int w = static_cast<int>(c_q.size());
  const std::uint64_t ring = std::uint64_t{1} << w;
  amount %= ring;
  const std::uint64_t eff = sign >= 0 ? amount : (ring - amount) % ring;
  for (int m = 0; m < w; ++m) {
    // eff * 2^(w-1-m) mod 2^w, overflow-safe.
    const std::uint64_t rem = eff & ((std::uint64_t{2} << m) - 1);
    const std::uint64_t shifted = (rem << (w - 1 - m)) & (ring - 1);
    const double angle =
        2.0 * kPi * static_cast<double>(shifted) / static_cast<double>(ring);
    prog.append(with_controls(g_phase(c_q[m], angle), ctrl));
  }
}

void append_add_cascade(CircuitProgram& prog, const std::vector<int>& c_q,
                        const FixedPointFormat& fmt_c,
                        const std::vector<int>& b_q, int l, int sign,
                        const std::vector<Control>& ctrl) {
  if (static_cast<int>(c_q.size()) != fmt_c.width()) {
    fail("add cascade: register/format width mismatch");
  }
  const int n_b = static_cast<int>(b_q.size());
  for (int i = 1; i <= n_b; ++i) {
    const int pow = fmt_c.fraction_digits - i - l;
    if (pow < 0) fail("add cascade: 2^-l*b not representable in target");
    std::vector<Control> c = ctrl;
    c.push_back({b_q[i - 1], true});
    append_const_cascade(prog, c_q, std::uint64_t{1} << pow, sign, c);
  }
}

void append_mul_cascade(CircuitProgram& prog, const std::vector<int>& c_q,
                        const FixedPointFormat& fmt_c,
                        const std::vector<int>& a_q,
                        const std::vector<int>& b_q, int sign,
                        int scale_pow2) {
  if (static_cast<int>(c_q.size()) != fmt_c.width()) {
    fail("mul cascade: register/format width mismatch");
  }
  const int m = static_cast<int>(a_q.size());
  const int n = static_cast<int>(b_q.size());
  const std::uint64_t ring = fmt_c.ring();
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int pow = fmt_c.fraction_digits + scale_pow2 - i - j;
      std::uint64_t amount;
      if (pow >= 0) {
        amount = (std::uint64_t{1} << pow) % ring;
      } else {
        amount = (pow == -1) ? 1 : 0;  // per-pair round half up
      }
      if (amount == 0) continue;
      std::vector<Control> c{{a_q[i - 1], true}};
      if (b_q[j - 1] != a_q[i - 1]) c.push_back({b_q[j - 1], true});
      append_const_cascade(prog, c_q, amount, sign, c);
    }
  }
}

void append_const_mul_cascade(CircuitProgram& prog, const std::vector<int>& c_q,
                              const FixedPointFormat& fmt_c, double k,
                              int k_digits, const std::vector<int>& r_q,
                              int sign, int scale_pow2) {
  const double k_enc =
      std::floor(std::ldexp(k, k_digits) + 0.5) * std::ldexp(1.0, -k_digits);
  const int q = static_cast<int>(r_q.size());
  for (int j = 1; j <= q; ++j) {
    const std::uint64_t amount =
        ring_round_half_up(std::ldexp(k_enc, scale_pow2 - j), fmt_c);
    if (amount == 0) continue;
    append_const_cascade(prog, c_q, amount, sign, {{r_q[j - 1], true}});
  }
}

void append_qft_adder(CircuitProgram& prog, const std::vector<int>& c_q,
                      const FixedPointFormat& fmt_c,
                      const std::vector<int>& b_q, int l, int sign) {
  prog.append(qft_program(c_q));
  append_add_cascade(prog, c_q, fmt_c, b_q, l, sign);
  prog.append(qft_program(c_q).inverse());
}

void append_multiply_adder(CircuitProgram& prog, const std::vector<int>& c_q,
                           const FixedPointFormat& fmt_c,
                           const std::vector<int>& a_q,
                           const std::vector<int>& b_q, int sign,
                           int scale_pow2) {
  prog.append(qft_program(c_q));
  append_mul_cascade(prog, c_q, fmt_c, a_q, b_q, sign, scale_pow2);
  prog.append(qft_program(c_q).inverse());
}

void append_const_multiply_adder(CircuitProgram& prog,
                                 const std::vector<int>& c_q,
                                 const FixedPointFormat& fmt_c, double k,
                                 int k_digits, const std::vector<int>& r_q,
                                 int sign, int scale_pow2) {
  prog.append(qft_program(c_q));
  append_const_mul_cascade(prog, c_q, fmt_c, k, k_digits, r_q, sign,
                           scale_pow2);
  prog.append(qft_program(c_q).inverse());
}

void append_sigma_minus(CircuitProgram& prog, const std::vector<int>& out_q,
                        const std::vector<int>& alpha_q,
                        const std::vector<int>& beta_q) {
  const int width = static_cast<int>(alpha_q.size());
  if (beta_q.size() != alpha_q.size() ||
      static_cast<int>(out_q.size()) != width + 1) {
    fail("sigma minus: register width mismatch");
  }
  const FixedPointFormat fmt = FixedPointFormat::complement(width);
  prog.append(qft_program(out_q));
  append_add_cascade(prog, out_q, fmt, alpha_q, 0, +1);
  append_add_cascade(prog, out_q, fmt, beta_q, 0, -1);
  prog.append(qft_program(out_q).inverse());
}

// --- Sine / cosine gates -----------------------------------------------------

namespace {

// pi^e / e! with e = 2j+1 (sine) or 2j (cosine).
double taylor_coeff(int j, bool cosine) {
  const int e = cosine ? 2 * j : 2 * j + 1;
  double v = 1.0;
  for (int i = 1; i <= e; ++i) v *= kPi / static_cast<double>(i);
  return v;
}

int ceil_log2(int n) {
  int b = 0;
  while ((1 << b) < n) ++b;
  return b;
}

}  // namespace

SineGateConfig SineGateConfig::sine(int n) {
  SineGateConfig c;
  c.n = n;
  c.cosine = false;
  c.terms = n + 1;
  c.working_digits = n + ceil_log2(n) + 2 * c.terms;
  c.acc_digits = c.working_digits + 5;
  c.k_digits = c.acc_digits + 4;
  return c;
}

SineGateConfig SineGateConfig::cos_gate(int n) {
  SineGateConfig c;
  c.n = n;
  c.cosine = true;
  c.terms = n + 1;
  c.working_digits = n + ceil_log2(n) + 2 * c.terms;
  c.acc_digits = c.working_digits + 5;
  c.k_digits = c.acc_digits + 4;
  return c;
}

CircuitProgram sine_gate_program(const SineGateConfig& cfg, bool tally_only) {
  const int n = cfg.n, t = cfg.terms;
  const int pw = cfg.working_digits, aw = cfg.acc_digits;
  // Wide ancilla registers first so x/out stay within the low 64 bits of the
  // (possibly >64-qubit) sparse keys.
  RegisterLayout lay;
  lay.add("acc", aw);
  lay.add("x2", pw);
  const int first_w = cfg.cosine ? 2 : 1;
  for (int j = first_w; j <= t - 1; ++j) lay.add("w" + std::to_string(j), pw);
  lay.add("x", n);
  lay.add("out", cfg.out_qubits());

  const auto xq = reg_qubits(lay, "x");
  const auto outq = reg_qubits(lay, "out");
  const auto accq = reg_qubits(lay, "acc");
  const auto x2q = reg_qubits(lay, "x2");
  const FixedPointFormat fmt_p = FixedPointFormat::plain(pw);
  const FixedPointFormat fmt_acc = FixedPointFormat::plain(aw);

  CircuitProgram compute(lay);
  compute.set_tally_only(tally_only);
  append_multiply_adder(compute, x2q, fmt_p, xq, xq, +1);

  // Operand register (x^{2j+1} for sine, x^{2j} for cosine) per term.
  std::vector<std::vector<int>> op(t);
  if (cfg.cosine) {
    if (t >= 2) op[1] = x2q;
    std::vector<int> prev = x2q;
    for (int j = 2; j <= t - 1; ++j) {
      op[j] = reg_qubits(lay, "w" + std::to_string(j));
      append_multiply_adder(compute, op[j], fmt_p, prev, x2q, +1);
      prev = op[j];
    }
  } else {
    op[0] = xq;
    std::vector<int> prev = xq;
    for (int j = 1; j <= t - 1; ++j) {
      op[j] = reg_qubits(lay, "w" + std::to_string(j));
      append_multiply_adder(compute, op[j], fmt_p, prev, x2q, +1);
      prev = op[j];
    }
  }

  // Accumulate all scaled Taylor terms (and the output rounding constant)
  // with acc held in the Fourier basis across the whole run.
  compute.append(qft_program(accq));
  const int j0 = cfg.cosine ? 1 : 0;
  if (cfg.cosine) {
    append_const_cascade(compute, accq, ring_round_half_up(0.125, fmt_acc),
                         +1);
  }
  for (int j = j0; j <= t - 1; ++j) {
    const double kj = taylor_coeff(j, cfg.cosine) / 8.0;
    append_const_mul_cascade(compute, accq, fmt_acc, kj, cfg.k_digits, op[j],
                             (j % 2 == 0) ? +1 : -1);
  }
  append_const_cascade(compute, accq, std::uint64_t{1} << (aw - 4 - n), +1);
  compute.append(qft_program(accq).inverse());

  CircuitProgram prog(lay);
  prog.set_tally_only(tally_only);
  prog.append(compute);

  // Copy the relabeled digits (acc value scaled by 8) into out, then apply
  // the saturation fixups for results that rounded to exactly +1.
  if (cfg.cosine) {
    for (int i = 0; i <= n; ++i) {
      prog.append(with_controls(g_x(outq[i]), {{accq[2 + i], true}}));
    }
    std::vector<Control> cond{{accq[0], false}, {accq[1], false},
                              {accq[2], true}};
    for (int i = 1; i <= n; ++i) cond.push_back({accq[2 + i], false});
    for (int i = 0; i <= n; ++i) {
      prog.append(with_controls(g_x(outq[i]), cond));
    }
  } else {
    for (int i = 0; i < n; ++i) {
      prog.append(with_controls(g_x(outq[i]), {{accq[3 + i], true}}));
    }
    for (int i = 0; i < n; ++i) {
      prog.append(with_controls(g_x(outq[i]), {{accq[2], true}}));
    }
  }

  prog.append(compute.inverse());
  return prog;
}

std::uint64_t ref_sine_gate(std::uint64_t x_bits, const SineGateConfig& cfg) {
  const int n = cfg.n, t = cfg.terms;
  const int pw = cfg.working_digits, aw = cfg.acc_digits;
  const FixedPointFormat fmt_p = FixedPointFormat::plain(pw);
  const FixedPointFormat fmt_acc = FixedPointFormat::plain(aw);
  const std::uint64_t ring = fmt_acc.ring();

  const std::uint64_t x2 = ref_mul_amount(x_bits, n, x_bits, n, 0, fmt_p);

  struct Operand {
    std::uint64_t bits;
    int digits;
  };
  std::vector<Operand> op(t);
  if (cfg.cosine) {
    if (t >= 2) op[1] = {x2, pw};
    std::uint64_t prev = x2;
    for (int j = 2; j <= t - 1; ++j) {
      prev = ref_mul_amount(prev, pw, x2, pw, 0, fmt_p);
      op[j] = {prev, pw};
    }
  } else {
    op[0] = {x_bits, n};
    std::uint64_t prev = x_bits;
    int prev_digits = n;
    for (int j = 1; j <= t - 1; ++j) {
      prev = ref_mul_amount(prev, prev_digits, x2, pw, 0, fmt_p);
      prev_digits = pw;
      op[j] = {prev, pw};
    }
  }

  std::uint64_t acc = 0;
  if (cfg.cosine) {
    acc = (acc + ring_round_half_up(0.125, fmt_acc)) % ring;
  }
  for (int j = (cfg.cosine ? 1 : 0); j <= t - 1; ++j) {
    const double kj = taylor_coeff(j, cfg.cosine) / 8.0;
    const std::uint64_t amount = ref_const_mul_amount(
        kj, cfg.k_digits, op[j].bits, op[j].digits, 0, fmt_acc);
    acc = (acc + ((j % 2 == 0) ? amount : (ring - amount) % ring)) % ring;
  }
  acc = (acc + (std::uint64_t{1} << (aw - 4 - n))) % ring;

  if (cfg.cosine) {
    std::uint64_t out =
        (acc >> (aw - 3 - n)) & ((std::uint64_t{1} << (n + 1)) - 1);
    const bool d1 = (acc >> (aw - 1)) & 1;
    const bool d2 = (acc >> (aw - 2)) & 1;
    if (!d1 && !d2 && out == (std::uint64_t{1} << n)) {
      out = (std::uint64_t{1} << n) - 1;  // +1 saturates to 1 - 2^-n
    }
    return out;
  }
  std::uint64_t out = (acc >> (aw - 3 - n)) & ((std::uint64_t{1} << n) - 1);
  const bool d3 = (acc >> (aw - 3)) & 1;
  if (d3) {
    if (out != 0) fail("ref_sine_gate: overflow with nonzero digits");
    out = (std::uint64_t{1} << n) - 1;
  }
  return out;
}

}  // namespace qftc
