#pragma once

#include <string>
#include <vector>

#include "iclab/state.hpp"
#include "iclab/types.hpp"

// Distance and information measures. All logarithms are base 2; entropies and
// mutual informations are reported in bits. Eigenvalues in [-state_tol, 0)
// are clipped to 0 before logs and square roots; anything more negative is an
// error. Reduced states handed to an eigendecomposition are capped at 12
// qubits; entropies of subsystems of a pure state use whichever of the subset
// and its complement is smaller.

namespace iclab {

// sum of singular values (Hermitian inputs take the eigenvalue route)
double trace_norm(const Mat& m);

// principal square root of a Hermitian PSD matrix, negative part clipped
Mat sqrt_psd(const Mat& herm, double state_tol = default_tol().state_tol);

// eigenvalues of a Hermitian matrix, clipped per the rule above, descending
std::vector<double> clipped_spectrum(const Mat& herm, double state_tol = default_tol().state_tol);

double entropy_of_spectrum(const std::vector<double>& eigs);

// ---- matrix-level measures (no layout bookkeeping) -------------------------

double fidelity_m(const Mat& rho, const Mat& sigma, double state_tol = default_tol().state_tol);
double trace_distance_m(const Mat& rho, const Mat& sigma);
double bures_m(const Mat& rho, const Mat& sigma, double state_tol = default_tol().state_tol);
double von_neumann_entropy_m(const Mat& rho, double state_tol = default_tol().state_tol);

// ---- state-level measures ---------------------------------------------------

DensityMatrix partial_trace(const PureState& s, const std::vector<std::string>& keep);
DensityMatrix partial_trace(const DensityMatrix& s, const std::vector<std::string>& keep);

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);
double bures(const DensityMatrix& rho, const DensityMatrix& sigma);

double von_neumann_entropy(const DensityMatrix& rho);

// entropy of the reduced state on `regs` (global state pure, so the
// complement may be diagonalized instead when it is smaller)
double entropy_of(const PureState& psi, const std::vector<std::string>& regs);

double mutual_information(const DensityMatrix& rho, const std::vector<std::string>& a,
                          const std::vector<std::string>& b);
double mutual_information(const PureState& psi, const std::vector<std::string>& a,
                          const std::vector<std::string>& b);

double conditional_mutual_information(const DensityMatrix& rho, const std::vector<std::string>& a,
                                      const std::vector<std::string>& b,
                                      const std::vector<std::string>& c);
double conditional_mutual_information(const PureState& psi, const std::vector<std::string>& a,
                                      const std::vector<std::string>& b,
                                      const std::vector<std::string>& c);

// ---- classical specializations ----------------------------------------------
// Same measures on probability vectors (equal to the quantum ones on
// diagonal states, without the matrix machinery).

double classical_fidelity(const std::vector<double>& p, const std::vector<double>& q);
double classical_trace_distance(const std::vector<double>& p, const std::vector<double>& q);
double classical_bures(const std::vector<double>& p, const std::vector<double>& q);
double shannon_entropy(const std::vector<double>& p);

}  // namespace iclab
