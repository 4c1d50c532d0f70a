#pragma once

#include <vector>

#include "iclab/rng.hpp"
#include "iclab/types.hpp"

namespace iclab {

// Haar-distributed unitary via Gram-Schmidt orthonormalization of a complex
// Gaussian matrix (two passes for numerical orthogonality).
Mat haar_unitary(int dim, Rng& rng);

// normalized complex Gaussian vector
Vec random_pure_vec(int dim, Rng& rng);

// G G^dag / Tr(...) with G of shape dim x rank
Mat random_density_mat(int dim, Rng& rng, int rank = 0);

// Dirichlet(1,...,1) point, i.e. normalized Exp(1) draws
std::vector<double> random_probs(int n, Rng& rng);

// random measurement operator 0 <= M <= I (random eigenbasis, uniform eigenvalues)
Mat random_effect(int dim, Rng& rng);

}  // namespace iclab
