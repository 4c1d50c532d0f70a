#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iclab/classical_protocol.hpp"
#include "iclab/quantum_protocol.hpp"

namespace iclab {

// One member of the random-set distribution: a size-t subset of the m input
// coordinates together with the basis permutations the parties apply to their
// embedded inputs under this draw.
struct EmbeddingSet {
  double prob = 0.0;
  std::vector<int> coords;            // 0-based, strictly increasing, size t
  std::vector<std::uint64_t> perm_a;  // basis permutation on 2^{t*xc} values
  std::vector<std::uint64_t> perm_b;  // basis permutation on 2^{t*yc} values
};

// Distribution over index sets S with the marginal guarantee
// max_i Pr[i in S] <= 1/k_bound, plus the per-coordinate product input
// distribution mu = mu1 (x) mu2 that must be invariant under every
// (perm_a, perm_b) pair.
struct EmbeddingSpec {
  int m_coords = 3;
  int t = 2;
  int xc = 1, yc = 1;                // bits per coordinate, per side
  std::vector<double> mu1, mu2;      // sizes 2^xc, 2^yc
  std::vector<EmbeddingSet> sets;
  double k_bound = 1.0;

  void validate() const;
  // max_i Pr[i in S], by direct summation over the support
  double max_marginal() const;
};

// S uniform over {E_{v_1},...,E_{v_m}}; Alice's permutation is the bitwise
// shift by z_{v_i}, Bob's is the identity; k_bound = m/2 (each edge lies in
// exactly two of the sets); mu is uniform on 1+1 bits.
EmbeddingSpec sink_embedding_spec(int m);

// max over sets S and inputs (x,y) of |mu^t(perm_a(x), perm_b(y)) - mu^t(x,y)|
double invariance_deviation(const EmbeddingSpec& spec);
bool verify_invariance(const EmbeddingSpec& spec, double tol = default_tol().exact_tol);

// mu^{(x) copies} as a protocol input distribution
InputDist embedded_input_dist(const EmbeddingSpec& spec, int copies);

// scatter `inside` over the coordinates in s_coords and `outside` over the
// rest (values packed per coordinate, msb first)
std::uint64_t merge_coords(const std::vector<int>& s_coords, int m, int cbits,
                           std::uint64_t inside, std::uint64_t outside);

// ---- classical reduction ------------------------------------------------------

// From a protocol for Sink o Xor on C(m,2)+C(m,2) bits to a protocol for Eq
// on (m-1)+(m-1) bits: sample s = E_{v_i} from fresh public randomness, embed
// x_s = c and y_s = d xor z_{v_i}, fill the remaining coordinates from fresh
// private uniform randomness, and run the original protocol.
ClassicalProtocol classical_embed(const ClassicalProtocol& p, int m);

// ---- quantum embeddings -------------------------------------------------------

// Protocol Pi_S: both parties privately prepare purified samples |mu> for the
// coordinates outside S (kept in their memories together with the
// purifications), embed their inputs into S, and run p. The returned object
// is an ordinary protocol on t-coordinate inputs.
QuantumProtocol quantum_embed_fixed_set(const QuantumProtocol& p, const EmbeddingSpec& spec,
                                        const std::vector<int>& coords);

// Classical mixture of protocols: the shared |phi_S> is a classical random
// variable, so the averaged protocol is a branch per S (with the input
// permutations folded into the block indexing) and every measured quantity is
// the exact p(S)-weighted average over branches.
struct BranchedProtocol {
  int x_bits = 0, y_bits = 0, t_rounds = 0;
  std::vector<double> probs;
  std::vector<QuantumProtocol> branches;
  std::string function_name;

  int t() const { return t_rounds; }
  void validate(const Tolerances& tol = default_tol()) const;
};

BranchedProtocol quantum_embed_averaged(const QuantumProtocol& p, const EmbeddingSpec& spec);

double quantum_worst_case_error(const BranchedProtocol& bp, const BooleanFunction& f);
double acceptance_probability(const BranchedProtocol& bp, std::uint64_t x, std::uint64_t y);
double sqic(const BranchedProtocol& bp, const InputDist& nu);
double hqic(const BranchedProtocol& bp, const InputDist& nu);
double qic(const BranchedProtocol& bp, const InputDist& nu);
int qcc(const BranchedProtocol& bp);

// Exact error of the averaged embedding computed through p's acceptance table
// alone: the privately sampled coordinates are classical mixtures that the
// controlled unitaries never place in superposition, so the acceptance of a
// branch is the mu-weighted average of p's acceptance over the outside
// assignments. Feasible at m=4 where materializing the branch protocols'
// dense blocks is not.
double embedded_error_via_base(const QuantumProtocol& p, const EmbeddingSpec& spec,
                               const BooleanFunction& f_target);

// 1 - |<final state of Pi_S | final state of p on sigma (x) rho_mu>| for a
// pure input sigma on X_S Y_S, after aligning the register orders. Checks the
// channel identity at the purified level.
double channel_identity_deviation(const QuantumProtocol& p, const EmbeddingSpec& spec,
                                  const std::vector<int>& coords, const Vec& sigma);

}  // namespace iclab
