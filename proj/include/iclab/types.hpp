#pragma once

#include <complex>
#include <Eigen/Dense>

namespace iclab {

using Cx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Numerical tolerances used across the library.
//   state_tol  : admissibility of states (norms, Hermiticity, eigenvalue clipping)
//   check_slack: slack allowed when verifying inequalities on computed quantities
//   exact_tol  : slack for identities that hold exactly up to floating point
struct Tolerances {
  double state_tol = 1e-9;
  double check_slack = 1e-7;
  double exact_tol = 1e-12;
};

inline const Tolerances& default_tol() {
  static const Tolerances t{};
  return t;
}

}  // namespace iclab
