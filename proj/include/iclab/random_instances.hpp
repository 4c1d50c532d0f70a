#pragma once

#include "iclab/classical_protocol.hpp"
#include "iclab/quantum_protocol.hpp"
#include "iclab/random_states.hpp"
#include "iclab/rng.hpp"

namespace iclab {

// Random lookup-table protocol: 1-3 rounds of 1-2 bits, input domains of size
// 2-4, randomness domains of size 1-3 with random (non-uniform) weights.
ClassicalProtocol random_classical_protocol(Rng& rng);

// Random entanglement-assisted protocol: Haar initial state, Haar blocks per
// input value, random message widths, random final effect (input-keyed half
// of the time). Total purified width stays within `max_total` qubits.
QuantumProtocol random_quantum_protocol(Rng& rng, int max_rounds = 4, int max_total = 10);

InputDist random_input_dist(Rng& rng, std::size_t nx, std::size_t ny);
InputDist random_product_dist(Rng& rng, std::size_t nx, std::size_t ny);

}  // namespace iclab
