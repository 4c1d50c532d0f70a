#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "iclab/boolfn.hpp"
#include "iclab/joint.hpp"
#include "iclab/state.hpp"

namespace iclab {

// One message of a classical protocol. The sender is determined by the round
// index (rounds alternate and Alice communicates first). The function must be
// total on (own input, own private randomness, public randomness, transcript
// so far); messages have a fixed width per round.
struct ClassicalRound {
  int bits = 1;
  // (own_input, own_rand, pub_rand, transcript_prefix_code) -> message
  std::function<std::uint64_t(std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t)> fn;
};

// Randomized two-party protocol over finite domains, simulated by exhaustive
// enumeration. Transcripts exclude the public randomness; information
// quantities condition on it explicitly. The output is a function of the
// transcript alone and Alice (who also speaks first) produces it.
class ClassicalProtocol {
 public:
  std::uint64_t x_size = 2, y_size = 2;
  ClassicalDistribution pub_r{{1.0}};    // degenerate = no public randomness
  ClassicalDistribution alice_r{{1.0}};
  ClassicalDistribution bob_r{{1.0}};
  std::vector<ClassicalRound> rounds;
  std::function<int(std::uint64_t)> output_fn;  // transcript code -> {0,1}

  int cc() const;  // sum of per-round widths
  int transcript_bits() const { return cc(); }
  static bool alice_owns(int round_index_1based) { return round_index_1based % 2 == 1; }

  // deterministic transcript for fixed inputs and randomness; messages are
  // concatenated with the first round in the most significant position
  std::uint64_t run_transcript(std::uint64_t x, std::uint64_t y, std::uint64_t r,
                               std::uint64_t ra, std::uint64_t rb) const;

  void validate() const;
};

// Exact joint distribution over (x, y, r, ra, rb, pi, out).
struct TranscriptTable {
  JointTable joint;
};

inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 24;

TranscriptTable enumerate_joint(const ClassicalProtocol& p, const InputDist& mu);

// IC(p, mu) = I(X : Pi | Y R R_B) + I(Y : Pi | X R R_A)
double classical_ic(const ClassicalProtocol& p, const InputDist& mu);
double classical_ic(const TranscriptTable& table);

double worst_case_error(const ClassicalProtocol& p, const BooleanFunction& f);

// Distribution of the publicly visible outcome (r, transcript, output) for
// fixed inputs, private randomness summed out. Packing: ((r << tbits) | pi)
// * 2 + out. Including the public coin keeps the cut-and-paste identity
// exact; the transcript alone does not satisfy it.
std::vector<double> transcript_distribution(const ClassicalProtocol& p, std::uint64_t x,
                                            std::uint64_t y);

// ---- builders used by tests, checks and the bundled protocol files ---------

// r1: Alice sends x; r2: Bob sends back f(x,y); output = that bit
ClassicalProtocol classical_send_and_answer(const BooleanFunction& f);
// r1: Alice sends x; r2: Bob sends y; output = f(x,y)
ClassicalProtocol classical_full_exchange(const BooleanFunction& f);
// Equality via `reps` shared random inner-product hashes (1 bit each way per
// hash round would need 2*reps rounds; here Alice sends all her parities,
// Bob answers with his, output = all agree)
ClassicalProtocol classical_eq_public_hash(int k, int reps);

}  // namespace iclab
