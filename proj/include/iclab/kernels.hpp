#pragma once

#include <vector>

#include "iclab/types.hpp"

// Low-level amplitude kernels. All of them index basis states with qubit 0 as
// the most significant bit: the bit of global qubit position q inside a basis
// index is (total-1-q). Qubit position lists are given in the order that the
// output should use them (first listed position becomes the most significant
// bit of the sub-index).
//
// The kernels in iclab:: are the production implementations and parallelize
// their outer loops with OpenMP. iclab::ref:: holds independent serial
// implementations (including the dense-matrix route for the pure-state
// partial trace) that the tests and the kernel benchmark compare against.

namespace iclab {

// Reduced density matrix of a pure state, computed by index grouping directly
// from the amplitudes (cost 4^keep * 2^traced); the full density matrix is
// never materialized.
Mat partial_trace_pure(const Vec& amps, int total, const std::vector<int>& keep);

// Reduced density matrix of a dense density matrix.
Mat partial_trace_dense(const Mat& rho, int total, const std::vector<int>& keep);

// In-place application of an input-controlled block unitary. The workspace is
// the contiguous qubit range [ws_lo, ws_lo + ws_width); `blocks[v]` is applied
// to it on every amplitude group whose control qubits spell out the value v
// (msb-first over `control_qubits`, which must be disjoint from the
// workspace). With an empty control list, blocks[0] is applied everywhere.
void apply_blocks(Vec& amps, int total, const std::vector<int>& control_qubits, int ws_lo,
                  int ws_width, const std::vector<Mat>& blocks);

// Kronecker products (first factor most significant).
Vec tensor_product(const Vec& a, const Vec& b);
Mat tensor_product(const Mat& a, const Mat& b);

// Reorders qubits: new position q holds what old position new_from_old[q] held.
Vec permute_qubits(const Vec& amps, int total, const std::vector<int>& new_from_old);

namespace kernel_detail {
// scatter table: sub-index over `positions` -> partial basis index
std::vector<std::uint64_t> scatter_table(int total, const std::vector<int>& positions);
}  // namespace kernel_detail

namespace ref {

// Dense oracle: forms the full |psi><psi| and traces out the complement.
Mat partial_trace_pure(const Vec& amps, int total, const std::vector<int>& keep);

Mat partial_trace_dense(const Mat& rho, int total, const std::vector<int>& keep);

void apply_blocks(Vec& amps, int total, const std::vector<int>& control_qubits, int ws_lo,
                  int ws_width, const std::vector<Mat>& blocks);

Vec permute_qubits(const Vec& amps, int total, const std::vector<int>& new_from_old);

}  // namespace ref

}  // namespace iclab
