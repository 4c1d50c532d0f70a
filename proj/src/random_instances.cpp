#include "iclab/random_instances.hpp"

#include <stdexcept>

namespace iclab {

ClassicalProtocol random_classical_protocol(Rng& rng) {
  ClassicalProtocol p;
  p.x_size = 2 + rng.below(3);
  p.y_size = 2 + rng.below(3);
  p.pub_r = ClassicalDistribution(random_probs(1 + static_cast<int>(rng.below(3)), rng));
  p.alice_r = ClassicalDistribution(random_probs(1 + static_cast<int>(rng.below(3)), rng));
  p.bob_r = ClassicalDistribution(random_probs(1 + static_cast<int>(rng.below(3)), rng));
  const int t = 1 + static_cast<int>(rng.below(3));
  int prefix_bits = 0;
  for (int r = 1; r <= t; ++r) {
    const int bits = 1 + static_cast<int>(rng.below(2));
    const bool alice = ClassicalProtocol::alice_owns(r);
    const std::uint64_t own_n = alice ? p.x_size : p.y_size;
    const std::uint64_t rand_n = alice ? p.alice_r.size() : p.bob_r.size();
    const std::uint64_t pub_n = p.pub_r.size();
    const std::uint64_t prefix_n = std::uint64_t{1} << prefix_bits;
    std::vector<std::uint64_t> table(own_n * rand_n * pub_n * prefix_n);
    for (auto& v : table) v = rng.below(std::uint64_t{1} << bits);
    ClassicalRound round;
    round.bits = bits;
    round.fn = [table, rand_n, pub_n, prefix_n](std::uint64_t own, std::uint64_t own_rand,
                                                std::uint64_t pub, std::uint64_t prefix) {
      return table[((own * rand_n + own_rand) * pub_n + pub) * prefix_n + prefix];
    };
    p.rounds.push_back(std::move(round));
    prefix_bits += bits;
  }
  std::vector<int> out(std::size_t{1} << prefix_bits);
  for (auto& v : out) v = static_cast<int>(rng.below(2));
  p.output_fn = [out](std::uint64_t pi) { return out[pi]; };
  return p;
}

QuantumProtocol random_quantum_protocol(Rng& rng, int max_rounds, int max_total) {
  QuantumProtocol p;
  p.x_bits = 1 + static_cast<int>(rng.below(2));
  p.y_bits = 1 + static_cast<int>(rng.below(2));
  int budget = max_total - 2 * (p.x_bits + p.y_bits);
  if (budget < 2) {
    p.x_bits = p.y_bits = 1;
    budget = max_total - 4;
  }
  if (budget < 2) throw std::invalid_argument("qubit budget too small");
  const int ws_max = std::min(budget, 6);
  p.a0 = 1 + static_cast<int>(rng.below(std::min(3, ws_max - 1)));
  p.b0 = 1 + static_cast<int>(rng.below(std::min(2, ws_max - p.a0)));
  p.theta0 = random_pure_vec(1 << (p.a0 + p.b0), rng);

  const int t = 2 + static_cast<int>(rng.below(max_rounds - 1));
  RegionWidths w{p.a0, 0, p.b0};
  for (int r = 1; r <= t; ++r) {
    const bool alice = (r % 2 == 1);
    const int ws = alice ? w.a + w.c : w.c + w.b;
    if (ws == 0) break;
    const int msg = 1 + static_cast<int>(rng.below(ws));
    QuantumRound round;
    round.msg_bits = msg;
    const int in_bits = alice ? p.x_bits : p.y_bits;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << in_bits); ++v)
      round.blocks.push_back(haar_unitary(1 << ws, rng));
    p.rounds.push_back(std::move(round));
    if (alice)
      w = {ws - msg, msg, w.b};
    else
      w = {w.a, msg, ws - msg};
  }
  const int out_w = p.output_region_width();
  if (rng.uniform() < 0.5) {
    p.meas_blocks.push_back(random_effect(1 << out_w, rng));
  } else {
    const int in_bits = p.alice_outputs() ? p.x_bits : p.y_bits;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << in_bits); ++v)
      p.meas_blocks.push_back(random_effect(1 << out_w, rng));
  }
  return p;
}

InputDist random_input_dist(Rng& rng, std::size_t nx, std::size_t ny) {
  InputDist d{nx, ny, random_probs(static_cast<int>(nx * ny), rng)};
  return d;
}

InputDist random_product_dist(Rng& rng, std::size_t nx, std::size_t ny) {
  return InputDist::product(random_probs(static_cast<int>(nx), rng),
                            random_probs(static_cast<int>(ny), rng));
}

}  // namespace iclab
