#include "iclab/state.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "iclab/kernels.hpp"

namespace iclab {

PureState::PureState(RegisterLayout layout, Vec amplitudes, const Tolerances& tol)
    : layout_(std::move(layout)), amps_(std::move(amplitudes)) {
  if (amps_.size() != static_cast<Eigen::Index>(layout_.dim()))
    throw std::invalid_argument("amplitude vector does not match layout dimension");
  double norm = amps_.norm();
  if (std::abs(norm - 1.0) > tol.state_tol)
    throw std::invalid_argument("pure state is not normalized");
}

PureState PureState::basis(RegisterLayout layout, std::uint64_t index) {
  Vec v = Vec::Zero(static_cast<Eigen::Index>(layout.dim()));
  if (index >= layout.dim()) throw std::invalid_argument("basis index out of range");
  v[static_cast<Eigen::Index>(index)] = Cx(1.0, 0.0);
  return PureState(std::move(layout), std::move(v));
}

DensityMatrix::DensityMatrix(RegisterLayout layout, Mat matrix, const Tolerances& tol)
    : layout_(std::move(layout)), mat_(std::move(matrix)) {
  const auto dim = static_cast<Eigen::Index>(layout_.dim());
  if (mat_.rows() != dim || mat_.cols() != dim)
    throw std::invalid_argument("matrix does not match layout dimension");
  double herm_dev = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol.state_tol) throw std::invalid_argument("matrix is not Hermitian");
  double tr_dev = std::abs(mat_.trace() - Cx(1.0, 0.0));
  if (tr_dev > tol.state_tol) throw std::invalid_argument("matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Mat> es(mat_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol.state_tol)
    throw std::invalid_argument("matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  DensityMatrix d;
  d.layout_ = psi.layout();
  d.mat_ = psi.amplitudes() * psi.amplitudes().adjoint();
  return d;
}

DensityMatrix DensityMatrix::diagonal(RegisterLayout layout, const std::vector<double>& probs) {
  if (probs.size() != layout.dim())
    throw std::invalid_argument("probability vector does not match layout dimension");
  DensityMatrix d;
  d.mat_ = Mat::Zero(probs.size(), probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) d.mat_(i, i) = Cx(probs[i], 0.0);
  d.layout_ = std::move(layout);
  return d;
}

DensityMatrix DensityMatrix::unchecked(RegisterLayout layout, Mat matrix) {
  DensityMatrix d;
  d.layout_ = std::move(layout);
  d.mat_ = std::move(matrix);
  return d;
}

ClassicalDistribution::ClassicalDistribution(std::vector<double> probs,
                                             std::vector<std::string> labels)
    : p_(std::move(probs)), labels_(std::move(labels)) {
  if (p_.empty()) throw std::invalid_argument("empty distribution");
  double sum = 0.0;
  for (double v : p_) {
    if (v < 0.0) throw std::invalid_argument("negative probability");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("probabilities do not sum to 1");
  if (!labels_.empty() && labels_.size() != p_.size())
    throw std::invalid_argument("label count mismatch");
}

ClassicalDistribution ClassicalDistribution::uniform(std::size_t n) {
  return ClassicalDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ClassicalDistribution ClassicalDistribution::point(std::size_t n, std::size_t at) {
  std::vector<double> p(n, 0.0);
  p.at(at) = 1.0;
  return ClassicalDistribution(std::move(p));
}

InputDist InputDist::uniform(std::size_t nx, std::size_t ny) {
  InputDist d{nx, ny, std::vector<double>(nx * ny, 1.0 / static_cast<double>(nx * ny))};
  return d;
}

InputDist InputDist::product(const std::vector<double>& px, const std::vector<double>& py) {
  InputDist d{px.size(), py.size(), {}};
  d.p.resize(px.size() * py.size());
  for (std::size_t x = 0; x < px.size(); ++x)
    for (std::size_t y = 0; y < py.size(); ++y) d.p[x * py.size() + y] = px[x] * py[y];
  return d;
}

InputDist InputDist::point(std::size_t nx, std::size_t ny, std::size_t x, std::size_t y) {
  InputDist d{nx, ny, std::vector<double>(nx * ny, 0.0)};
  d.p.at(x * ny + y) = 1.0;
  return d;
}

std::vector<double> InputDist::marginal_x() const {
  std::vector<double> m(nx, 0.0);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) m[x] += at(x, y);
  return m;
}

std::vector<double> InputDist::marginal_y() const {
  std::vector<double> m(ny, 0.0);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) m[y] += at(x, y);
  return m;
}

bool InputDist::is_product(double tol) const {
  auto mx = marginal_x();
  auto my = marginal_y();
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y)
      if (std::abs(at(x, y) - mx[x] * my[y]) > tol) return false;
  return true;
}

void InputDist::validate() const {
  if (p.size() != nx * ny) throw std::invalid_argument("input distribution size mismatch");
  double sum = std::accumulate(p.begin(), p.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("input distribution does not sum to 1");
  for (double v : p)
    if (v < 0.0) throw std::invalid_argument("negative probability");
}

PureState tensor(const PureState& a, const PureState& b) {
  return PureState(a.layout().concat(b.layout()),
                   tensor_product(a.amplitudes(), b.amplitudes()));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::unchecked(a.layout().concat(b.layout()),
                                  tensor_product(a.matrix(), b.matrix()));
}

PureState relabel(const PureState& s, const std::map<std::string, std::string>& renaming) {
  return PureState(s.layout().renamed(renaming), s.amplitudes());
}

DensityMatrix relabel(const DensityMatrix& s, const std::map<std::string, std::string>& renaming) {
  return DensityMatrix::unchecked(s.layout().renamed(renaming), s.matrix());
}

}  // namespace iclab
