#include "iclab/kernels.hpp"

#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace iclab {

namespace kernel_detail {

std::vector<std::uint64_t> scatter_table(int total, const std::vector<int>& positions) {
  const int n = static_cast<int>(positions.size());
  std::vector<std::uint64_t> table(std::uint64_t{1} << n);
  for (std::uint64_t sub = 0; sub < table.size(); ++sub) {
    std::uint64_t idx = 0;
    for (int j = 0; j < n; ++j) {
      std::uint64_t bit = (sub >> (n - 1 - j)) & 1u;
      idx |= bit << (total - 1 - positions[j]);
    }
    table[sub] = idx;
  }
  return table;
}

static std::vector<int> complement_positions(int total, const std::vector<int>& keep) {
  std::vector<char> kept(total, 0);
  for (int q : keep) {
    if (q < 0 || q >= total) throw std::invalid_argument("qubit position out of range");
    if (kept[q]) throw std::invalid_argument("repeated qubit position");
    kept[q] = 1;
  }
  std::vector<int> rest;
  for (int q = 0; q < total; ++q)
    if (!kept[q]) rest.push_back(q);
  return rest;
}

}  // namespace kernel_detail

using kernel_detail::complement_positions;
using kernel_detail::scatter_table;

Mat partial_trace_pure(const Vec& amps, int total, const std::vector<int>& keep) {
  if (amps.size() != (Eigen::Index{1} << total)) throw std::invalid_argument("amplitude count mismatch");
  const auto traced = complement_positions(total, keep);
  const auto sk = scatter_table(total, keep);
  const auto st = scatter_table(total, traced);
  const std::int64_t dk = std::int64_t{1} << keep.size();
  const std::int64_t dt = std::int64_t{1} << traced.size();

  Mat rho(dk, dk);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < dk; ++i) {
    for (std::int64_t j = 0; j <= i; ++j) {
      Cx acc(0.0, 0.0);
      for (std::int64_t e = 0; e < dt; ++e)
        acc += amps[sk[i] | st[e]] * std::conj(amps[sk[j] | st[e]]);
      rho(i, j) = acc;
      if (i != j) rho(j, i) = std::conj(acc);
    }
  }
  return rho;
}

Mat partial_trace_dense(const Mat& rho, int total, const std::vector<int>& keep) {
  if (rho.rows() != (Eigen::Index{1} << total) || rho.rows() != rho.cols())
    throw std::invalid_argument("density matrix dimension mismatch");
  const auto traced = complement_positions(total, keep);
  const auto sk = scatter_table(total, keep);
  const auto st = scatter_table(total, traced);
  const std::int64_t dk = std::int64_t{1} << keep.size();
  const std::int64_t dt = std::int64_t{1} << traced.size();

  Mat out(dk, dk);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < dk; ++i)
    for (std::int64_t j = 0; j < dk; ++j) {
      Cx acc(0.0, 0.0);
      for (std::int64_t e = 0; e < dt; ++e) acc += rho(sk[i] | st[e], sk[j] | st[e]);
      out(i, j) = acc;
    }
  return out;
}

void apply_blocks(Vec& amps, int total, const std::vector<int>& control_qubits, int ws_lo,
                  int ws_width, const std::vector<Mat>& blocks) {
  const std::int64_t dim = std::int64_t{1} << total;
  if (amps.size() != dim) throw std::invalid_argument("amplitude count mismatch");
  const std::int64_t bd = std::int64_t{1} << ws_width;
  const int nc = static_cast<int>(control_qubits.size());
  if (blocks.size() != (std::size_t{1} << nc))
    throw std::invalid_argument("need one block per control value");
  for (const auto& b : blocks)
    if (b.rows() != bd || b.cols() != bd) throw std::invalid_argument("block dimension mismatch");
  for (int q : control_qubits)
    if (q >= ws_lo && q < ws_lo + ws_width)
      throw std::invalid_argument("control qubit inside workspace");

  const int right = total - ws_lo - ws_width;  // qubits to the right of the workspace field
  const std::int64_t stride = std::int64_t{1} << right;
  const std::int64_t rmask = stride - 1;
  const std::int64_t groups = dim >> ws_width;

#pragma omp parallel
  {
    Vec buf(bd);
#pragma omp for schedule(static)
    for (std::int64_t g = 0; g < groups; ++g) {
      const std::int64_t base = ((g >> right) << (ws_width + right)) | (g & rmask);
      std::uint64_t v = 0;
      for (int j = 0; j < nc; ++j)
        v = (v << 1) | ((static_cast<std::uint64_t>(base) >> (total - 1 - control_qubits[j])) & 1u);
      const Mat& G = blocks[v];
      for (std::int64_t j = 0; j < bd; ++j) buf[j] = amps[base + (j << right)];
      for (std::int64_t o = 0; o < bd; ++o) {
        Cx acc(0.0, 0.0);
        for (std::int64_t j = 0; j < bd; ++j) acc += G(o, j) * buf[j];
        amps[base + (o << right)] = acc;
      }
    }
  }
}

Vec tensor_product(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  const Eigen::Index nb = b.size();
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < nb; ++j) out[i * nb + j] = a[i] * b[j];
  return out;
}

Mat tensor_product(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  const Eigen::Index br = b.rows(), bc = b.cols();
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

Vec permute_qubits(const Vec& amps, int total, const std::vector<int>& new_from_old) {
  if (static_cast<int>(new_from_old.size()) != total)
    throw std::invalid_argument("permutation size mismatch");
  const std::int64_t dim = std::int64_t{1} << total;
  // shift of old position feeding each new bit, msb-first
  std::vector<int> src_shift(total), dst_shift(total);
  for (int q = 0; q < total; ++q) {
    src_shift[q] = total - 1 - new_from_old[q];
    dst_shift[q] = total - 1 - q;
  }
  Vec out(dim);
#pragma omp parallel for schedule(static)
  for (std::int64_t n = 0; n < dim; ++n) {
    std::int64_t o = 0;
    for (int q = 0; q < total; ++q) o |= ((n >> dst_shift[q]) & 1) << src_shift[q];
    out[n] = amps[o];
  }
  return out;
}

namespace ref {

Mat partial_trace_pure(const Vec& amps, int total, const std::vector<int>& keep) {
  // dense route: materialize the full projector, then sum out the complement
  Mat full = amps * amps.adjoint();
  return ref::partial_trace_dense(full, total, keep);
}

Mat partial_trace_dense(const Mat& rho, int total, const std::vector<int>& keep) {
  const auto traced = complement_positions(total, keep);
  const auto sk = scatter_table(total, keep);
  const auto st = scatter_table(total, traced);
  const std::int64_t dk = std::int64_t{1} << keep.size();
  const std::int64_t dt = std::int64_t{1} << traced.size();
  Mat out = Mat::Zero(dk, dk);
  for (std::int64_t e = 0; e < dt; ++e)
    for (std::int64_t i = 0; i < dk; ++i)
      for (std::int64_t j = 0; j < dk; ++j) out(i, j) += rho(sk[i] | st[e], sk[j] | st[e]);
  return out;
}

void apply_blocks(Vec& amps, int total, const std::vector<int>& control_qubits, int ws_lo,
                  int ws_width, const std::vector<Mat>& blocks) {
  const std::int64_t dim = std::int64_t{1} << total;
  const std::int64_t bd = std::int64_t{1} << ws_width;
  const int right = total - ws_lo - ws_width;
  const std::int64_t stride = std::int64_t{1} << right;
  const int nc = static_cast<int>(control_qubits.size());

  Vec out(dim);
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    std::uint64_t v = 0;
    for (int j = 0; j < nc; ++j)
      v = (v << 1) | ((static_cast<std::uint64_t>(idx) >> (total - 1 - control_qubits[j])) & 1u);
    const std::int64_t o = (idx >> right) & (bd - 1);
    const std::int64_t base = idx & ~(((bd - 1)) << right);
    Cx acc(0.0, 0.0);
    for (std::int64_t j = 0; j < bd; ++j) acc += blocks[v](o, j) * amps[base | (j << right)];
    out[idx] = acc;
  }
  amps = std::move(out);
  (void)stride;
}

Vec permute_qubits(const Vec& amps, int total, const std::vector<int>& new_from_old) {
  const std::int64_t dim = std::int64_t{1} << total;
  Vec out(dim);
  for (std::int64_t o = 0; o < dim; ++o) {
    std::int64_t n = 0;
    for (int q = 0; q < total; ++q) {
      std::int64_t bit = (o >> (total - 1 - new_from_old[q])) & 1;
      n |= bit << (total - 1 - q);
    }
    out[n] = amps[o];
  }
  return out;
}

}  // namespace ref

}  // namespace iclab
