#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "corrwork/core.hpp"

namespace corrwork {

/// Rotation by `angle` inside span{|a>, |b>}:
///   U|a> =  cos|a> + sin|b>,   U|b> = -sin|a> + cos|b>.
struct PairRotation {
  std::size_t a;
  std::size_t b;
  double angle;

  friend bool operator==(const PairRotation&, const PairRotation&) = default;
};

/// Product of rotations on pairwise disjoint 2D subspaces; identity elsewhere.
class StructuredUnitary {
 public:
  /// Throws ValidityError if an index is out of range, a == b, or pairs overlap.
  StructuredUnitary(std::size_t dim, std::vector<PairRotation> rotations);

  static StructuredUnitary identity(std::size_t dim) { return {dim, {}}; }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<PairRotation>& rotations() const noexcept { return rotations_; }

  /// True when every pair is {|i>, |dim-1-i>}, so X-layout states stay X-shaped.
  bool pairs_are_complementary() const;

  StructuredUnitary adjoint() const;
  Eigen::MatrixXcd materialize() const;

 private:
  std::size_t dim_;
  std::vector<PairRotation> rotations_;
};

/// U rho U^dagger without materializing U. X-layout input with complementary
/// pairs stays in X layout; anything else is applied to dense storage.
DensityMatrix apply_unitary(const DensityMatrix& rho, const StructuredUnitary& unitary);

}  // namespace corrwork
