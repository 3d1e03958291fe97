#pragma once

// Work-storage unitaries acting on pairs of complementary qubit strings
// {|i>, |i-bar>}: the uniform rotation U_alpha and the level-wise population
// inversion V.

#include <vector>

#include "corrwork/core.hpp"
#include "corrwork/unitary.hpp"

namespace corrwork {

/// Rotation by alpha in every {|i>, |i-bar>} with |i| < n/2; strings of
/// weight exactly n/2 are left alone. Qubits only.
StructuredUnitary u_alpha(const SystemSpec& spec, double alpha);

/// Full swap (angle pi/2) on every {|i>, |i-bar>} with |i| = level, 0 <= level < n/2.
StructuredUnitary inversion_v(const SystemSpec& spec, int level);

/// Local bias <0|rho_k|0> - <1|rho_k|1> of subsystem k (1-based).
double measured_bias(const DensityMatrix& rho, const SystemSpec& spec, int subsystem = 1);

struct ProtocolResult {
  DensityMatrix state;
  double achieved_bias = 0.0;
  double target_bias = 0.0;
  /// (2/E) atanh(achieved_bias).
  double beta_local = 0.0;
  /// |achieved - target|.
  double residual = 0.0;
  /// Inversion levels applied, in order (inversion sequence only).
  std::vector<int> levels;
  /// False when the target lies outside [-z', z'] and only a best effort was made.
  bool reachable = true;
};

/// U_alpha tau_{beta'}^{(x) n} U_alpha^dagger with alpha = arccos(target_z / z') / 2.
/// Throws UnreachableBiasError when |target_z| > z'.
ProtocolResult prepare_locally_thermal(const SystemSpec& spec, double beta_prime, double target_z);

/// Local bias after inverting level `level` of tau_{beta'}^{(x) n}, where p' is
/// the excited population of tau_{beta'}:
///   z'' = z' - 2 C(n,l) (z' + 2 mu / n) (p'^l (1-p')^{n-l} - p'^{n-l} (1-p')^l),
/// mu = n p' - l.
double bias_after_inversion(const SystemSpec& spec, double p_prime, int level);

/// Greedy sequence of level inversions on tau_{beta'}^{(x) n} steering the local
/// bias toward target_z. Levels are visited at l = round(n p') - mu for
/// mu = 0, 1, -1, 2, -2, ...; a level is applied only if it brings the bias
/// strictly closer to the target.
ProtocolResult inversion_sequence_to_bias(const SystemSpec& spec, double beta_prime, double target_z);

}  // namespace corrwork
