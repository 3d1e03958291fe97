#pragma once

// Seeded sampling of density matrices and unitaries for the randomized
// property suites.

#include <cstdint>
#include <random>

#include "corrwork/core.hpp"

namespace corrwork {

using Rng = std::mt19937_64;

/// Ginibre ensemble: G G^dagger / Tr(G G^dagger), G with i.i.d. complex normal
/// entries. Full rank with probability one; dense layout.
DensityMatrix random_density_matrix(std::size_t dim, Rng& rng);

/// Haar unitary from the QR decomposition of a complex Ginibre matrix,
/// phases of R's diagonal absorbed into Q.
Eigen::MatrixXcd random_unitary(std::size_t dim, Rng& rng);

}  // namespace corrwork
