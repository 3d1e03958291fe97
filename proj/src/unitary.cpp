#include "corrwork/unitary.hpp"

#include <cmath>
#include <string>

namespace corrwork {

StructuredUnitary::StructuredUnitary(std::size_t dim, std::vector<PairRotation> rotations)
    : dim_(dim), rotations_(std::move(rotations)) {
  std::vector<char> used(dim_, 0);
  for (const auto& r : rotations_) {
    if (r.a >= dim_ || r.b >= dim_) throw ValidityError("rotation index out of range");
    if (r.a == r.b) throw ValidityError("rotation needs two distinct basis states");
    if (!std::isfinite(r.angle)) throw ValidityError("rotation angle must be finite");
    if (used[r.a] || used[r.b])
      throw ValidityError("rotation pairs overlap at basis index " +
                          std::to_string(used[r.a] ? r.a : r.b));
    used[r.a] = used[r.b] = 1;
  }
}

bool StructuredUnitary::pairs_are_complementary() const {
  for (const auto& r : rotations_)
    if (r.b != dim_ - 1 - r.a) return false;
  return true;
}

StructuredUnitary StructuredUnitary::adjoint() const {
  auto inverse = rotations_;
  for (auto& r : inverse) r.angle = -r.angle;
  return {dim_, std::move(inverse)};
}

Eigen::MatrixXcd StructuredUnitary::materialize() const {
  if (dim_ > kDefaultDimCap) throw CapacityError("refusing to materialize a dense unitary");
  const auto n = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
  for (const auto& r : rotations_) {
    const auto a = static_cast<Eigen::Index>(r.a);
    const auto b = static_cast<Eigen::Index>(r.b);
    const double c = std::cos(r.angle);
    const double s = std::sin(r.angle);
    u(a, a) = c;
    u(b, a) = s;
    u(a, b) = -s;
    u(b, b) = c;
  }
  return u;
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const StructuredUnitary& unitary) {
  if (unitary.dim() != rho.dim()) throw ShapeError("unitary and state dimensions differ");
  const auto& m = rho.matrix();

  if (m.is_x() && unitary.pairs_are_complementary()) {
    Eigen::VectorXd diag = m.diagonal_entries();
    Eigen::VectorXcd anti = m.anti_entries();
    for (const auto& r : unitary.rotations()) {
      const auto a = static_cast<Eigen::Index>(r.a);
      const auto b = static_cast<Eigen::Index>(r.b);
      const double c = std::cos(r.angle);
      const double s = std::sin(r.angle);
      Eigen::Matrix2cd block;
      block << diag[a], anti[a], anti[b], diag[b];
      Eigen::Matrix2d rot;
      rot << c, -s, s, c;
      const Eigen::Matrix2cd out = rot * block * rot.transpose();
      diag[a] = out(0, 0).real();
      diag[b] = out(1, 1).real();
      anti[a] = out(0, 1);
      anti[b] = out(1, 0);
    }
    return DensityMatrix(HermitianMatrix::x_shaped(std::move(diag), std::move(anti)));
  }

  Eigen::MatrixXcd a = m.to_dense();
  for (const auto& r : unitary.rotations()) {
    const auto ia = static_cast<Eigen::Index>(r.a);
    const auto ib = static_cast<Eigen::Index>(r.b);
    const double c = std::cos(r.angle);
    const double s = std::sin(r.angle);
    // rows: U rho
    const Eigen::RowVectorXcd row_a = a.row(ia);
    const Eigen::RowVectorXcd row_b = a.row(ib);
    a.row(ia) = c * row_a - s * row_b;
    a.row(ib) = s * row_a + c * row_b;
    // columns: (U rho) U^dagger
    const Eigen::VectorXcd col_a = a.col(ia);
    const Eigen::VectorXcd col_b = a.col(ib);
    a.col(ia) = c * col_a - s * col_b;
    a.col(ib) = s * col_a + c * col_b;
  }
  a = (a + a.adjoint()).eval() * 0.5;
  return DensityMatrix(HermitianMatrix::dense(std::move(a)));
}

}  // namespace corrwork
