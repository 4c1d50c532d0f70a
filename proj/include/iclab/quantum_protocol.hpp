#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iclab/boolfn.hpp"
#include "iclab/state.hpp"
#include "iclab/types.hpp"

namespace iclab {

// One message round. The sender is fixed by parity (odd rounds are Alice's,
// and she speaks first). The operator is input-controlled: blocks[v] is the
// unitary applied to the sender's workspace when their classical input
// register holds v, which makes the full round operator block-diagonal in
// the computational basis of that register.
struct QuantumRound {
  int msg_bits = 1;
  std::vector<Mat> blocks;
};

// Gate-list description of a round operator; materialized into dense blocks.
// `q`/`c` index workspace qubits (0 = most significant). A gate with
// if_input_bit >= 0 fires only when that bit of the sender's input equals
// eq_value.
struct Gate {
  std::string g;  // "H" | "X" | "Z" | "CX"
  int q = -1;
  int c = -1;
  int if_input_bit = -1;
  int eq_value = 1;
};

std::vector<Mat> blocks_from_gates(int input_bits, int ws_bits, const std::vector<Gate>& gates);

// Register widths after round r. The workspace vector W keeps Alice's block
// on the left, the in-transit message in the middle, Bob's block on the
// right; total width never changes, only the boundaries move.
struct RegionWidths {
  int a = 0, c = 0, b = 0;
};

// Entanglement-assisted protocol with classical inputs: pre-shared pure state
// on A0 B0, alternating input-controlled unitaries, message handover by
// relabeling, and one final two-outcome measurement by the receiver of the
// last message (Alice when the round count is even). Measurement effects may
// be keyed by the outputter's own classical input; a single block means an
// input-independent effect.
class QuantumProtocol {
 public:
  int x_bits = 1, y_bits = 1;
  int a0 = 1, b0 = 1;
  Vec theta0;  // dim 2^(a0+b0); empty means |0...0>
  std::vector<QuantumRound> rounds;
  std::vector<Mat> meas_blocks;
  std::string function_name;

  int t() const { return static_cast<int>(rounds.size()); }
  bool alice_outputs() const { return t() % 2 == 0; }
  int workspace_width() const { return a0 + b0; }
  int qcc() const;

  std::vector<RegionWidths> width_chain() const;
  // width of the outputter's final registers (A_t C_t or C_t B_t)
  int output_region_width() const;

  Vec initial_workspace() const;
  void validate(const Tolerances& tol = default_tol()) const;
};

// ---- simulation -------------------------------------------------------------

inline constexpr int kSimulationCap = 24;  // qubits in any simulated pure state

// Runs the protocol's rounds on an arbitrary pure state. `x_pos`/`y_pos` give
// the global positions of the classical control bits in coordinate order; the
// workspace occupies [w_offset, w_offset + a0 + b0). States after every round
// are returned (index 0 = initial) when `record` is set, otherwise only the
// final state.
std::vector<Vec> run_custom(const QuantumProtocol& p, Vec state, int total,
                            const std::vector<int>& x_pos, const std::vector<int>& y_pos,
                            int w_offset, bool record);

// |mu>_{X R_X Y R_Y} (x) |Theta_0>_{A0 B0}
PureState prepare_initial(const QuantumProtocol& p, const InputDist& mu);

// Purified run: records Psi_r for every round.
class RoundTrace {
 public:
  RoundTrace(const QuantumProtocol& p, const InputDist& mu);

  int t() const { return static_cast<int>(widths_.size()) - 1; }
  const PureState& psi(int r) const { return states_.at(r); }
  const RegionWidths& widths(int r) const { return widths_.at(r); }
  const InputDist& mu() const { return mu_; }
  int x_bits() const { return x_bits_; }
  int y_bits() const { return y_bits_; }

  std::vector<std::string> x_labels() const;
  std::vector<std::string> rx_labels() const;
  std::vector<std::string> y_labels() const;
  std::vector<std::string> ry_labels() const;
  std::vector<std::string> a_labels(int r) const;  // Alice's memory after round r
  std::vector<std::string> c_labels(int r) const;  // message of round r (in transit)
  std::vector<std::string> b_labels(int r) const;  // Bob's memory after round r

 private:
  int x_bits_, y_bits_, n_;
  InputDist mu_;
  std::vector<PureState> states_;
  std::vector<RegionWidths> widths_;
};

RoundTrace run_rounds(const QuantumProtocol& p, const InputDist& mu);

// Fixed-input run on the workspace alone (inputs enter as block selectors).
struct FixedRun {
  std::vector<Vec> states;  // workspace states per round, index 0 = initial
  std::vector<RegionWidths> widths;
  int n = 0;  // workspace width

  // reduced state on a qubit range of the workspace
  Mat reduced(int r, int lo, int width) const;
  Mat reduced_a_prime(int r) const;  // A_r C_r
  Mat reduced_b_prime(int r) const;  // C_r B_r
};

FixedRun run_on_input_trace(const QuantumProtocol& p, std::uint64_t x, std::uint64_t y);

// final state Theta_t^{x,y} on the workspace plus the acceptance probability
std::pair<PureState, double> run_on_input(const QuantumProtocol& p, std::uint64_t x,
                                          std::uint64_t y);

double acceptance_probability(const QuantumProtocol& p, std::uint64_t x, std::uint64_t y);
double quantum_worst_case_error(const QuantumProtocol& p, const BooleanFunction& f);

// ---- information costs -------------------------------------------------------

// QIC  = sum_odd I(R_X R_Y : C_i | Y B_i) + sum_even I(R_X R_Y : C_i | X A_i)
// HQIC = sum_odd I(X : B_i C_i | Y)       + sum_even I(Y : A_i C_i | X)
// SQIC = sum_odd I(X : Y R_Y B_i C_i)     + sum_even I(Y : X R_X A_i C_i)
// B_i / A_i denote the receiver's memory before absorbing C_i, which is what
// the trace holds at round i (the message is still in transit there).
double qic(const RoundTrace& trace);
double hqic(const RoundTrace& trace);
// mu must be a product distribution (checked within exact_tol)
double sqic(const RoundTrace& trace, const InputDist& mu);

int qcc(const QuantumProtocol& p);

// ---- builders ----------------------------------------------------------------

// Alice copies her x into fresh qubits and sends them; the receiver measures
// {|y><y|} against his input. One round, Bob outputs, zero error on Eq.
QuantumProtocol quantum_eq_copy_protocol(int k);

// Round 1: Alice sends a copy of x (C(m,2) qubits). Bob measures the
// projector onto {w : Sink(w xor y) = 1}. One round, zero error on Sink o Xor.
QuantumProtocol quantum_sinkxor_send_protocol(int m);

// Two-round variant: Bob computes the answer into an ancilla and returns it;
// Alice measures it. Zero error, t = 2.
QuantumProtocol quantum_sinkxor_two_round_protocol(int m);
QuantumProtocol quantum_eq_two_round_protocol(int k);

}  // namespace iclab
