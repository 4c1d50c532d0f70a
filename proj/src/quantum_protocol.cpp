#include "iclab/quantum_protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "iclab/kernels.hpp"
#include "iclab/qinfo.hpp"

namespace iclab {

namespace {

Mat single_qubit_gate(const std::string& g) {
  Mat m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  if (g == "H")
    m << s, s, s, -s;
  else if (g == "X")
    m << 0, 1, 1, 0;
  else if (g == "Z")
    m << 1, 0, 0, -1;
  else
    throw std::invalid_argument("unknown gate '" + g + "'");
  return m;
}

Mat embed_single(int ws_bits, int q, const Mat& g) {
  if (q < 0 || q >= ws_bits) throw std::invalid_argument("gate qubit out of range");
  Mat out = Mat::Identity(1, 1);
  for (int i = 0; i < ws_bits; ++i)
    out = tensor_product(out, i == q ? g : Mat(Mat::Identity(2, 2)));
  return out;
}

Mat embed_cx(int ws_bits, int c, int q) {
  if (c < 0 || c >= ws_bits || q < 0 || q >= ws_bits || c == q)
    throw std::invalid_argument("bad CX qubits");
  const std::int64_t dim = std::int64_t{1} << ws_bits;
  Mat out = Mat::Zero(dim, dim);
  for (std::int64_t i = 0; i < dim; ++i) {
    std::int64_t j = i;
    if ((i >> (ws_bits - 1 - c)) & 1) j = i ^ (std::int64_t{1} << (ws_bits - 1 - q));
    out(j, i) = Cx(1.0, 0.0);
  }
  return out;
}

}  // namespace

std::vector<Mat> blocks_from_gates(int input_bits, int ws_bits, const std::vector<Gate>& gates) {
  const std::uint64_t values = std::uint64_t{1} << input_bits;
  const std::int64_t dim = std::int64_t{1} << ws_bits;
  std::vector<Mat> blocks(values, Mat::Identity(dim, dim));
  for (const auto& gate : gates) {
    Mat g = gate.g == "CX" ? embed_cx(ws_bits, gate.c, gate.q)
                           : embed_single(ws_bits, gate.q, single_qubit_gate(gate.g));
    for (std::uint64_t v = 0; v < values; ++v) {
      if (gate.if_input_bit >= 0) {
        if (gate.if_input_bit >= input_bits) throw std::invalid_argument("input bit out of range");
        if (get_bit(v, gate.if_input_bit, input_bits) != gate.eq_value) continue;
      }
      blocks[v] = g * blocks[v];
    }
  }
  return blocks;
}

int QuantumProtocol::qcc() const {
  int total = 0;
  for (const auto& r : rounds) total += r.msg_bits;
  return total;
}

std::vector<RegionWidths> QuantumProtocol::width_chain() const {
  std::vector<RegionWidths> chain;
  chain.push_back({a0, 0, b0});
  for (int r = 1; r <= t(); ++r) {
    const auto& prev = chain.back();
    const int msg = rounds[r - 1].msg_bits;
    RegionWidths w;
    if (r % 2 == 1) {  // Alice: workspace A_{r-1} C_{r-1} splits into A_r C_r
      const int ws = prev.a + prev.c;
      if (msg > ws) throw std::invalid_argument("message wider than the sender's workspace");
      w = {ws - msg, msg, prev.b};
    } else {  // Bob: workspace C_{r-1} B_{r-1} splits into C_r B_r
      const int ws = prev.c + prev.b;
      if (msg > ws) throw std::invalid_argument("message wider than the sender's workspace");
      w = {prev.a, msg, ws - msg};
    }
    chain.push_back(w);
  }
  return chain;
}

int QuantumProtocol::output_region_width() const {
  const auto chain = width_chain();
  const auto& last = chain.back();
  return alice_outputs() ? last.a + last.c : last.c + last.b;
}

Vec QuantumProtocol::initial_workspace() const {
  const std::int64_t dim = std::int64_t{1} << workspace_width();
  if (theta0.size() == 0) {
    Vec v = Vec::Zero(dim);
    v[0] = Cx(1.0, 0.0);
    return v;
  }
  if (theta0.size() != dim) throw std::invalid_argument("initial state dimension mismatch");
  return theta0;
}

void QuantumProtocol::validate(const Tolerances& tol) const {
  if (x_bits < 1 || y_bits < 1) throw std::invalid_argument("inputs need at least one bit");
  if (a0 < 0 || b0 < 0 || a0 + b0 < 1) throw std::invalid_argument("bad workspace widths");
  if (rounds.empty()) throw std::invalid_argument("protocol needs at least one round");
  if (theta0.size() != 0) {
    if (theta0.size() != (Eigen::Index{1} << workspace_width()))
      throw std::invalid_argument("initial state dimension mismatch");
    if (std::abs(theta0.norm() - 1.0) > tol.state_tol)
      throw std::invalid_argument("initial state is not normalized");
  }
  const auto chain = width_chain();  // throws on width mismatches
  for (int r = 1; r <= t(); ++r) {
    const auto& round = rounds[r - 1];
    if (round.msg_bits < 0) throw std::invalid_argument("negative message width");
    const int in_bits = (r % 2 == 1) ? x_bits : y_bits;
    if (round.blocks.size() != (std::size_t{1} << in_bits))
      throw std::invalid_argument("need one block per input value");
    const int ws = (r % 2 == 1) ? chain[r - 1].a + chain[r - 1].c : chain[r - 1].c + chain[r - 1].b;
    const std::int64_t dim = std::int64_t{1} << ws;
    for (const auto& g : round.blocks) {
      if (g.rows() != dim || g.cols() != dim) throw std::invalid_argument("block dimension mismatch");
      double dev = (g.adjoint() * g - Mat::Identity(dim, dim)).cwiseAbs().maxCoeff();
      if (dev > tol.state_tol) throw std::invalid_argument("round operator is not unitary");
    }
  }
  if (meas_blocks.empty()) throw std::invalid_argument("missing final measurement");
  const int out_bits = alice_outputs() ? x_bits : y_bits;
  if (meas_blocks.size() != 1 && meas_blocks.size() != (std::size_t{1} << out_bits))
    throw std::invalid_argument("need one effect, or one per outputter input value");
  const std::int64_t mdim = std::int64_t{1} << output_region_width();
  for (const auto& m : meas_blocks) {
    if (m.rows() != mdim || m.cols() != mdim)
      throw std::invalid_argument("measurement dimension mismatch");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol.state_tol)
      throw std::invalid_argument("measurement effect is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol.state_tol ||
        es.eigenvalues().maxCoeff() > 1.0 + tol.state_tol)
      throw std::invalid_argument("measurement effect is not between 0 and I");
  }
}

std::vector<Vec> run_custom(const QuantumProtocol& p, Vec state, int total,
                            const std::vector<int>& x_pos, const std::vector<int>& y_pos,
                            int w_offset, bool record) {
  if (total > kSimulationCap) throw std::runtime_error("simulation exceeds the 24-qubit cap");
  if (static_cast<int>(x_pos.size()) != p.x_bits || static_cast<int>(y_pos.size()) != p.y_bits)
    throw std::invalid_argument("control position counts do not match the input widths");
  const auto chain = p.width_chain();
  std::vector<Vec> out;
  if (record) out.push_back(state);
  for (int r = 1; r <= p.t(); ++r) {
    const bool alice = (r % 2 == 1);
    const auto& prev = chain[r - 1];
    const int ws_lo = w_offset + (alice ? 0 : prev.a);
    const int ws = alice ? prev.a + prev.c : prev.c + prev.b;
    apply_blocks(state, total, alice ? x_pos : y_pos, ws_lo, ws, p.rounds[r - 1].blocks);
    if (record) out.push_back(state);
  }
  if (!record) out.push_back(std::move(state));
  return out;
}

PureState prepare_initial(const QuantumProtocol& p, const InputDist& mu) {
  mu.validate();
  if (mu.nx != (std::uint64_t{1} << p.x_bits) || mu.ny != (std::uint64_t{1} << p.y_bits))
    throw std::invalid_argument("distribution does not match the input widths");
  const int n = p.workspace_width();
  const int total = 2 * p.x_bits + 2 * p.y_bits + n;
  if (total > kSimulationCap) throw std::runtime_error("simulation exceeds the 24-qubit cap");

  std::vector<Register> regs;
  auto add_bits = [&regs](const std::string& prefix, int count) {
    for (int i = 1; i <= count; ++i) regs.push_back({prefix + std::to_string(i), 1});
  };
  add_bits("X", p.x_bits);
  add_bits("RX", p.x_bits);
  add_bits("Y", p.y_bits);
  add_bits("RY", p.y_bits);
  add_bits("W", n);
  RegisterLayout layout(regs);

  const Vec w0 = p.initial_workspace();
  Vec amps = Vec::Zero(static_cast<Eigen::Index>(layout.dim()));
  const std::int64_t wdim = std::int64_t{1} << n;
  for (std::uint64_t x = 0; x < mu.nx; ++x)
    for (std::uint64_t y = 0; y < mu.ny; ++y) {
      const double pxy = mu.at(x, y);
      if (pxy == 0.0) continue;
      const double coeff = std::sqrt(pxy);
      std::uint64_t head = x;
      head = (head << p.x_bits) | x;
      head = (head << p.y_bits) | y;
      head = (head << p.y_bits) | y;
      const std::int64_t base = static_cast<std::int64_t>(head) << n;
      for (std::int64_t w = 0; w < wdim; ++w) amps[base | w] = coeff * w0[w];
    }
  return PureState(std::move(layout), std::move(amps));
}

RoundTrace::RoundTrace(const QuantumProtocol& p, const InputDist& mu)
    : x_bits_(p.x_bits), y_bits_(p.y_bits), n_(p.workspace_width()), mu_(mu) {
  p.validate();
  PureState init = prepare_initial(p, mu);
  const int total = init.total_width();
  std::vector<int> x_pos(p.x_bits), y_pos(p.y_bits);
  for (int i = 0; i < p.x_bits; ++i) x_pos[i] = i;
  for (int i = 0; i < p.y_bits; ++i) y_pos[i] = 2 * p.x_bits + i;
  auto states = run_custom(p, init.amplitudes(), total, x_pos, y_pos,
                           2 * p.x_bits + 2 * p.y_bits, true);
  widths_ = p.width_chain();
  states_.reserve(states.size());
  for (auto& s : states) states_.emplace_back(init.layout(), std::move(s));
}

RoundTrace run_rounds(const QuantumProtocol& p, const InputDist& mu) { return RoundTrace(p, mu); }

namespace {
std::vector<std::string> bit_labels(const std::string& prefix, int from, int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(from + i));
  return out;
}
}  // namespace

std::vector<std::string> RoundTrace::x_labels() const { return bit_labels("X", 1, x_bits_); }
std::vector<std::string> RoundTrace::rx_labels() const { return bit_labels("RX", 1, x_bits_); }
std::vector<std::string> RoundTrace::y_labels() const { return bit_labels("Y", 1, y_bits_); }
std::vector<std::string> RoundTrace::ry_labels() const { return bit_labels("RY", 1, y_bits_); }
std::vector<std::string> RoundTrace::a_labels(int r) const {
  return bit_labels("W", 1, widths_.at(r).a);
}
std::vector<std::string> RoundTrace::c_labels(int r) const {
  return bit_labels("W", widths_.at(r).a + 1, widths_.at(r).c);
}
std::vector<std::string> RoundTrace::b_labels(int r) const {
  return bit_labels("W", widths_.at(r).a + widths_.at(r).c + 1, widths_.at(r).b);
}

Mat FixedRun::reduced(int r, int lo, int width) const {
  std::vector<int> keep(width);
  for (int i = 0; i < width; ++i) keep[i] = lo + i;
  return partial_trace_pure(states.at(r), n, keep);
}

Mat FixedRun::reduced_a_prime(int r) const {
  return reduced(r, 0, widths.at(r).a + widths.at(r).c);
}

Mat FixedRun::reduced_b_prime(int r) const {
  return reduced(r, widths.at(r).a, widths.at(r).c + widths.at(r).b);
}

FixedRun run_on_input_trace(const QuantumProtocol& p, std::uint64_t x, std::uint64_t y) {
  if (x >= (std::uint64_t{1} << p.x_bits) || y >= (std::uint64_t{1} << p.y_bits))
    throw std::invalid_argument("input out of range");
  FixedRun run;
  run.n = p.workspace_width();
  run.widths = p.width_chain();
  Vec state = p.initial_workspace();
  run.states.push_back(state);
  for (int r = 1; r <= p.t(); ++r) {
    const bool alice = (r % 2 == 1);
    const auto& prev = run.widths[r - 1];
    const int ws_lo = alice ? 0 : prev.a;
    const int ws = alice ? prev.a + prev.c : prev.c + prev.b;
    const std::uint64_t v = alice ? x : y;
    apply_blocks(state, run.n, {}, ws_lo, ws, {p.rounds[r - 1].blocks[v]});
    run.states.push_back(state);
  }
  return run;
}

std::pair<PureState, double> run_on_input(const QuantumProtocol& p, std::uint64_t x,
                                          std::uint64_t y) {
  FixedRun run = run_on_input_trace(p, x, y);
  Mat region = p.alice_outputs() ? run.reduced_a_prime(p.t()) : run.reduced_b_prime(p.t());
  const std::uint64_t v = p.alice_outputs() ? x : y;
  const Mat& m = p.meas_blocks.size() == 1 ? p.meas_blocks[0] : p.meas_blocks[v];
  double acc = (region * m).trace().real();
  acc = std::clamp(acc, 0.0, 1.0);
  RegisterLayout wl = RegisterLayout::single("W", run.n);
  return {PureState(wl, run.states.back()), acc};
}

double acceptance_probability(const QuantumProtocol& p, std::uint64_t x, std::uint64_t y) {
  return run_on_input(p, x, y).second;
}

double quantum_worst_case_error(const QuantumProtocol& p, const BooleanFunction& f) {
  p.validate();
  if (f.x_bits != p.x_bits || f.y_bits != p.y_bits)
    throw std::invalid_argument("function domain does not match the protocol");
  double worst = 0.0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << p.x_bits); ++x)
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << p.y_bits); ++y) {
      const double acc = acceptance_probability(p, x, y);
      worst = std::max(worst, f(x, y) ? 1.0 - acc : acc);
    }
  return worst;
}

namespace {
std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}
}  // namespace

double qic(const RoundTrace& trace) {
  double total = 0.0;
  const auto rxy = cat(trace.rx_labels(), trace.ry_labels());
  for (int i = 1; i <= trace.t(); ++i) {
    if (i % 2 == 1)
      total += conditional_mutual_information(trace.psi(i), rxy, trace.c_labels(i),
                                              cat(trace.y_labels(), trace.b_labels(i)));
    else
      total += conditional_mutual_information(trace.psi(i), rxy, trace.c_labels(i),
                                              cat(trace.x_labels(), trace.a_labels(i)));
  }
  return total;
}

double hqic(const RoundTrace& trace) {
  double total = 0.0;
  for (int i = 1; i <= trace.t(); ++i) {
    if (i % 2 == 1)
      total += conditional_mutual_information(trace.psi(i), trace.x_labels(),
                                              cat(trace.b_labels(i), trace.c_labels(i)),
                                              trace.y_labels());
    else
      total += conditional_mutual_information(trace.psi(i), trace.y_labels(),
                                              cat(trace.a_labels(i), trace.c_labels(i)),
                                              trace.x_labels());
  }
  return total;
}

double sqic(const RoundTrace& trace, const InputDist& mu) {
  if (!mu.is_product(default_tol().exact_tol))
    throw std::invalid_argument("SQIC requires a product input distribution");
  double total = 0.0;
  for (int i = 1; i <= trace.t(); ++i) {
    if (i % 2 == 1)
      total += mutual_information(
          trace.psi(i), trace.x_labels(),
          cat(cat(trace.y_labels(), trace.ry_labels()),
              cat(trace.b_labels(i), trace.c_labels(i))));
    else
      total += mutual_information(
          trace.psi(i), trace.y_labels(),
          cat(cat(trace.x_labels(), trace.rx_labels()),
              cat(trace.a_labels(i), trace.c_labels(i))));
  }
  return total;
}

int qcc(const QuantumProtocol& p) { return p.qcc(); }

// ---- builders ----------------------------------------------------------------

namespace {

// permutation block |w> -> |w xor v|
Mat xor_block(int bits, std::uint64_t v) {
  const std::int64_t dim = std::int64_t{1} << bits;
  Mat m = Mat::Zero(dim, dim);
  for (std::int64_t i = 0; i < dim; ++i) m(i ^ static_cast<std::int64_t>(v), i) = Cx(1.0, 0.0);
  return m;
}

// |w, b> -> |b xor pred(w), w| on bits+1 qubits (answer moved to the front)
Mat answer_to_front_block(int bits, const std::function<int(std::uint64_t)>& pred) {
  const std::int64_t dim = std::int64_t{1} << (bits + 1);
  Mat m = Mat::Zero(dim, dim);
  for (std::int64_t w = 0; w < (std::int64_t{1} << bits); ++w)
    for (std::int64_t b = 0; b < 2; ++b) {
      const std::int64_t in = (w << 1) | b;
      const std::int64_t out = ((b ^ pred(w)) << bits) | w;
      m(out, in) = Cx(1.0, 0.0);
    }
  return m;
}

QuantumProtocol copy_send_protocol(int bits, const std::function<Mat(std::uint64_t)>& effect_for_y,
                                   const std::string& fname) {
  QuantumProtocol p;
  p.x_bits = bits;
  p.y_bits = bits;
  p.a0 = bits;
  p.b0 = 0;
  p.function_name = fname;
  QuantumRound r1;
  r1.msg_bits = bits;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << bits); ++x)
    r1.blocks.push_back(xor_block(bits, x));
  p.rounds.push_back(std::move(r1));
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << bits); ++y)
    p.meas_blocks.push_back(effect_for_y(y));
  return p;
}

QuantumProtocol two_round_protocol(int bits,
                                   const std::function<int(std::uint64_t, std::uint64_t)>& f,
                                   const std::string& fname) {
  QuantumProtocol p;
  p.x_bits = bits;
  p.y_bits = bits;
  p.a0 = bits;
  p.b0 = 1;
  p.function_name = fname;
  QuantumRound r1;
  r1.msg_bits = bits;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << bits); ++x)
    r1.blocks.push_back(xor_block(bits, x));
  p.rounds.push_back(std::move(r1));
  QuantumRound r2;
  r2.msg_bits = 1;
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << bits); ++y)
    r2.blocks.push_back(
        answer_to_front_block(bits, [f, y](std::uint64_t w) { return f(w, y); }));
  p.rounds.push_back(std::move(r2));
  Mat accept = Mat::Zero(2, 2);
  accept(1, 1) = Cx(1.0, 0.0);
  p.meas_blocks.push_back(accept);
  return p;
}

}  // namespace

QuantumProtocol quantum_eq_copy_protocol(int k) {
  return copy_send_protocol(
      k,
      [k](std::uint64_t y) {
        const std::int64_t dim = std::int64_t{1} << k;
        Mat m = Mat::Zero(dim, dim);
        m(y, y) = Cx(1.0, 0.0);
        return m;
      },
      "eq:" + std::to_string(k));
}

QuantumProtocol quantum_sinkxor_send_protocol(int m) {
  const int e = m * (m - 1) / 2;
  return copy_send_protocol(
      e,
      [m, e](std::uint64_t y) {
        const std::int64_t dim = std::int64_t{1} << e;
        Mat eff = Mat::Zero(dim, dim);
        for (std::int64_t w = 0; w < dim; ++w)
          if (sink(m, static_cast<std::uint64_t>(w) ^ y)) eff(w, w) = Cx(1.0, 0.0);
        return eff;
      },
      "sink_xor:" + std::to_string(m));
}

QuantumProtocol quantum_eq_two_round_protocol(int k) {
  return two_round_protocol(
      k, [](std::uint64_t w, std::uint64_t y) { return w == y ? 1 : 0; },
      "eq:" + std::to_string(k));
}

QuantumProtocol quantum_sinkxor_two_round_protocol(int m) {
  const int e = m * (m - 1) / 2;
  return two_round_protocol(
      e, [m](std::uint64_t w, std::uint64_t y) { return sink(m, w ^ y); },
      "sink_xor:" + std::to_string(m));
}

}  // namespace iclab
