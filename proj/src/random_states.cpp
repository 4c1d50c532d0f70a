#include "iclab/random_states.hpp"

#include <cmath>
#include <stdexcept>

namespace iclab {

static Mat gaussian_matrix(int rows, int cols, Rng& rng) {
  Mat g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) g(i, j) = Cx(rng.normal(), rng.normal());
  return g;
}

Mat haar_unitary(int dim, Rng& rng) {
  Mat g = gaussian_matrix(dim, dim, rng);
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < j; ++k) {
        Cx proj = g.col(k).dot(g.col(j));  // conjugates the first argument
        g.col(j) -= proj * g.col(k);
      }
      double n = g.col(j).norm();
      if (n < 1e-12) throw std::runtime_error("degenerate Gaussian draw");
      g.col(j) /= n;
    }
  }
  return g;
}

Vec random_pure_vec(int dim, Rng& rng) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Cx(rng.normal(), rng.normal());
  v /= v.norm();
  return v;
}

Mat random_density_mat(int dim, Rng& rng, int rank) {
  if (rank <= 0) rank = dim;
  Mat g = gaussian_matrix(dim, rank, rng);
  Mat rho = g * g.adjoint();
  rho /= rho.trace().real();
  // symmetrize away round-off
  rho = (rho + Mat(rho.adjoint())) / 2.0;
  return rho;
}

std::vector<double> random_probs(int n, Rng& rng) {
  std::vector<double> p(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double u = rng.uniform();
    while (u <= 1e-300) u = rng.uniform();
    p[i] = -std::log(u);
    sum += p[i];
  }
  for (double& v : p) v /= sum;
  return p;
}

Mat random_effect(int dim, Rng& rng) {
  Mat u = haar_unitary(dim, rng);
  Eigen::VectorXd lam(dim);
  for (int i = 0; i < dim; ++i) lam[i] = rng.uniform();
  Mat m = u * lam.asDiagonal() * u.adjoint();
  return (m + Mat(m.adjoint())) / 2.0;
}

}  // namespace iclab
