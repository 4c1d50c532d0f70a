#pragma once

#include <map>
#include <string>
#include <vector>

#include "iclab/layout.hpp"
#include "iclab/types.hpp"

namespace iclab {

// Normalized state vector over a register layout.
class PureState {
 public:
  PureState(RegisterLayout layout, Vec amplitudes, const Tolerances& tol = default_tol());

  const RegisterLayout& layout() const { return layout_; }
  const Vec& amplitudes() const { return amps_; }
  int total_width() const { return layout_.total_width(); }

  // computational basis state |bits> (index interpreted per the layout order)
  static PureState basis(RegisterLayout layout, std::uint64_t index);

 private:
  RegisterLayout layout_;
  Vec amps_;
};

// Hermitian, positive semidefinite, unit-trace matrix over a register layout.
class DensityMatrix {
 public:
  DensityMatrix(RegisterLayout layout, Mat matrix, const Tolerances& tol = default_tol());

  const RegisterLayout& layout() const { return layout_; }
  const Mat& matrix() const { return mat_; }
  int total_width() const { return layout_.total_width(); }

  static DensityMatrix from_pure(const PureState& psi);
  // classical (diagonal) state from a probability vector
  static DensityMatrix diagonal(RegisterLayout layout, const std::vector<double>& probs);
  // trusted constructor for matrices produced by the library itself
  static DensityMatrix unchecked(RegisterLayout layout, Mat matrix);

 private:
  DensityMatrix() = default;
  RegisterLayout layout_;
  Mat mat_;
};

// Probability distribution over outcomes 0..n-1 (optionally labeled).
class ClassicalDistribution {
 public:
  explicit ClassicalDistribution(std::vector<double> probs,
                                 std::vector<std::string> labels = {});

  static ClassicalDistribution uniform(std::size_t n);
  static ClassicalDistribution point(std::size_t n, std::size_t at);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::vector<double>& probs() const { return p_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<double> p_;
  std::vector<std::string> labels_;
};

// Distribution over input pairs (x,y), x-major. Used for protocol inputs.
struct InputDist {
  std::size_t nx = 0, ny = 0;
  std::vector<double> p;  // size nx*ny, p[x*ny + y]

  static InputDist uniform(std::size_t nx, std::size_t ny);
  static InputDist product(const std::vector<double>& px, const std::vector<double>& py);
  static InputDist point(std::size_t nx, std::size_t ny, std::size_t x, std::size_t y);

  double at(std::size_t x, std::size_t y) const { return p[x * ny + y]; }
  std::vector<double> marginal_x() const;
  std::vector<double> marginal_y() const;
  // true when p = marginal_x (x) marginal_y within tol
  bool is_product(double tol) const;
  void validate() const;
};

// ---- operations -----------------------------------------------------------

PureState tensor(const PureState& a, const PureState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

PureState relabel(const PureState& s, const std::map<std::string, std::string>& renaming);
DensityMatrix relabel(const DensityMatrix& s, const std::map<std::string, std::string>& renaming);

}  // namespace iclab
