#include "corrwork/random.hpp"

#include <cmath>

namespace corrwork {
namespace {

Eigen::MatrixXcd ginibre(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index c = 0; c < n; ++c)
    for (Eigen::Index r = 0; r < n; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = cplx(re, im);
    }
  return g;
}

}  // namespace

DensityMatrix random_density_matrix(std::size_t dim, Rng& rng) {
  if (dim == 0) throw ShapeError("random_density_matrix needs dim >= 1");
  if (dim > kDefaultDimCap) throw CapacityError("random state exceeds the dimension cap");
  const Eigen::MatrixXcd g = ginibre(dim, rng);
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(HermitianMatrix::dense(std::move(rho)));
}

Eigen::MatrixXcd random_unitary(std::size_t dim, Rng& rng) {
  if (dim == 0) throw ShapeError("random_unitary needs dim >= 1");
  if (dim > kDefaultDimCap) throw CapacityError("random unitary exceeds the dimension cap");
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre(dim, rng));
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

}  // namespace corrwork
