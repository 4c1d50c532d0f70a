#include "iclab/qinfo.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "iclab/kernels.hpp"

namespace iclab {

namespace {

constexpr int kReducedCap = 12;  // eigendecompositions capped at 4096 dims

void check_same_layout(const DensityMatrix& a, const DensityMatrix& b) {
  if (!a.layout().same_shape(b.layout()))
    throw std::invalid_argument("states live on different layouts");
}

void check_disjoint(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::set<std::string> sa(a.begin(), a.end());
  for (const auto& l : b)
    if (sa.count(l)) throw std::invalid_argument("register sets overlap on '" + l + "'");
}

std::vector<std::string> join(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

double trace_norm(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("trace norm needs a square matrix");
  double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev <= 1e-12) {
    Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues().sum();
}

std::vector<double> clipped_spectrum(const Mat& herm, double state_tol) {
  Eigen::SelfAdjointEigenSolver<Mat> es(herm, Eigen::EigenvaluesOnly);
  std::vector<double> eigs(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  for (double& v : eigs) {
    if (v < -state_tol)
      throw std::invalid_argument("state has eigenvalue below -state_tol");
    if (v < 0.0) v = 0.0;
  }
  std::sort(eigs.rbegin(), eigs.rend());
  return eigs;
}

Mat sqrt_psd(const Mat& herm, double state_tol) {
  Eigen::SelfAdjointEigenSolver<Mat> es(herm);
  Eigen::VectorXd lam = es.eigenvalues();
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam[i] < -state_tol) throw std::invalid_argument("matrix is not PSD within state_tol");
    lam[i] = std::sqrt(std::max(lam[i], 0.0));
  }
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

double entropy_of_spectrum(const std::vector<double>& eigs) {
  double h = 0.0;
  for (double v : eigs)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

double fidelity_m(const Mat& rho, const Mat& sigma, double state_tol) {
  Mat prod = sqrt_psd(rho, state_tol) * sqrt_psd(sigma, state_tol);
  double f = trace_norm(prod);
  return std::clamp(f, 0.0, 1.0 + 1e-9);
}

double trace_distance_m(const Mat& rho, const Mat& sigma) { return 0.5 * trace_norm(rho - sigma); }

double bures_m(const Mat& rho, const Mat& sigma, double state_tol) {
  double f = fidelity_m(rho, sigma, state_tol);
  return std::sqrt(std::max(0.0, 1.0 - f));
}

double von_neumann_entropy_m(const Mat& rho, double state_tol) {
  return entropy_of_spectrum(clipped_spectrum(rho, state_tol));
}

DensityMatrix partial_trace(const PureState& s, const std::vector<std::string>& keep) {
  auto pos = s.layout().positions(keep);
  Mat red = partial_trace_pure(s.amplitudes(), s.total_width(), pos);
  return DensityMatrix::unchecked(s.layout().subset(keep), std::move(red));
}

DensityMatrix partial_trace(const DensityMatrix& s, const std::vector<std::string>& keep) {
  auto pos = s.layout().positions(keep);
  Mat red = partial_trace_dense(s.matrix(), s.total_width(), pos);
  return DensityMatrix::unchecked(s.layout().subset(keep), std::move(red));
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_layout(rho, sigma);
  return fidelity_m(rho.matrix(), sigma.matrix());
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_layout(rho, sigma);
  return trace_distance_m(rho.matrix(), sigma.matrix());
}

double bures(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_layout(rho, sigma);
  return bures_m(rho.matrix(), sigma.matrix());
}

double von_neumann_entropy(const DensityMatrix& rho) {
  if (rho.total_width() > kReducedCap)
    throw std::invalid_argument("state exceeds the 12-qubit eigendecomposition cap");
  return von_neumann_entropy_m(rho.matrix());
}

double entropy_of(const PureState& psi, const std::vector<std::string>& regs) {
  auto comp = psi.layout().complement(regs);
  const auto& smaller = (psi.layout().positions(regs).size() <=
                         psi.layout().positions(comp).size())
                            ? regs
                            : comp;
  auto pos = psi.layout().positions(smaller);
  if (static_cast<int>(pos.size()) > kReducedCap)
    throw std::invalid_argument("reduced state exceeds the 12-qubit cap");
  Mat red = partial_trace_pure(psi.amplitudes(), psi.total_width(), pos);
  return von_neumann_entropy_m(red);
}

double mutual_information(const DensityMatrix& rho, const std::vector<std::string>& a,
                          const std::vector<std::string>& b) {
  check_disjoint(a, b);
  auto ab = join(a, b);
  return von_neumann_entropy(partial_trace(rho, a)) + von_neumann_entropy(partial_trace(rho, b)) -
         von_neumann_entropy(partial_trace(rho, ab));
}

double mutual_information(const PureState& psi, const std::vector<std::string>& a,
                          const std::vector<std::string>& b) {
  check_disjoint(a, b);
  return entropy_of(psi, a) + entropy_of(psi, b) - entropy_of(psi, join(a, b));
}

double conditional_mutual_information(const DensityMatrix& rho, const std::vector<std::string>& a,
                                      const std::vector<std::string>& b,
                                      const std::vector<std::string>& c) {
  check_disjoint(a, b);
  check_disjoint(a, c);
  check_disjoint(b, c);
  return mutual_information(rho, a, join(b, c)) - mutual_information(rho, a, c);
}

double conditional_mutual_information(const PureState& psi, const std::vector<std::string>& a,
                                      const std::vector<std::string>& b,
                                      const std::vector<std::string>& c) {
  check_disjoint(a, b);
  check_disjoint(a, c);
  check_disjoint(b, c);
  if (c.empty()) return mutual_information(psi, a, b);
  // I(A:BC) - I(A:C) with the shared terms cancelled:
  // S(AC) + S(BC) - S(ABC) - S(C)
  return entropy_of(psi, join(a, c)) + entropy_of(psi, join(b, c)) -
         entropy_of(psi, join(join(a, b), c)) - entropy_of(psi, c);
}

double classical_fidelity(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw std::invalid_argument("distribution size mismatch");
  double f = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) f += std::sqrt(p[i] * q[i]);
  return f;
}

double classical_trace_distance(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw std::invalid_argument("distribution size mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) d += std::abs(p[i] - q[i]);
  return 0.5 * d;
}

double classical_bures(const std::vector<double>& p, const std::vector<double>& q) {
  return std::sqrt(std::max(0.0, 1.0 - classical_fidelity(p, q)));
}

double shannon_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

}  // namespace iclab
