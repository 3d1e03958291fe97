#include "corrwork/protocols.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "corrwork/families.hpp"
#include "corrwork/passivity.hpp"

namespace corrwork {
namespace {

void require_qubits(const SystemSpec& spec, const char* what) {
  if (spec.d() != 2) throw UnsupportedError(std::string(what) + " is defined for qubits only");
}

int weight(std::size_t i) { return std::popcount(static_cast<std::uint64_t>(i)); }

double beta_from_bias(double bias, double gap) {
  if (std::abs(bias) >= 1.0) return std::copysign(std::numeric_limits<double>::infinity(), bias);
  return 2.0 / gap * std::atanh(bias);
}

}  // namespace

StructuredUnitary u_alpha(const SystemSpec& spec, double alpha) {
  require_qubits(spec, "u_alpha");
  const std::size_t dim = spec.dim();
  std::vector<PairRotation> rotations;
  for (std::size_t i = 0; i < dim; ++i)
    if (2 * weight(i) < spec.n()) rotations.push_back({i, dim - 1 - i, alpha});
  return {dim, std::move(rotations)};
}

StructuredUnitary inversion_v(const SystemSpec& spec, int level) {
  require_qubits(spec, "inversion_v");
  if (level < 0 || 2 * level >= spec.n())
    throw DomainError("inversion level " + std::to_string(level) + " is outside [0, n/2)");
  const std::size_t dim = spec.dim();
  std::vector<PairRotation> rotations;
  for (std::size_t i = 0; i < dim; ++i)
    if (weight(i) == level) rotations.push_back({i, dim - 1 - i, std::numbers::pi / 2});
  return {dim, std::move(rotations)};
}

double measured_bias(const DensityMatrix& rho, const SystemSpec& spec, int subsystem) {
  require_qubits(spec, "measured_bias");
  const auto marginal = partial_trace_to(rho, spec, subsystem);
  return (marginal(0, 0) - marginal(1, 1)).real();
}

ProtocolResult prepare_locally_thermal(const SystemSpec& spec, double beta_prime, double target_z) {
  require_qubits(spec, "prepare_locally_thermal");
  const double z_prime = thermal_bias(beta_prime, spec.gap());
  if (!(std::abs(target_z) <= z_prime))
    throw UnreachableBiasError("target bias " + std::to_string(target_z) +
                               " exceeds the reachable range |z| <= " + std::to_string(z_prime));
  const double ratio = z_prime > 0.0 ? std::clamp(target_z / z_prime, -1.0, 1.0) : 1.0;
  const double alpha = 0.5 * std::acos(ratio);
  auto state = apply_unitary(product_thermal(spec, beta_prime), u_alpha(spec, alpha));
  const double bias = measured_bias(state, spec);
  return ProtocolResult{std::move(state), bias, target_z, beta_from_bias(bias, spec.gap()),
                        std::abs(bias - target_z), {}, true};
}

double bias_after_inversion(const SystemSpec& spec, double p_prime, int level) {
  require_qubits(spec, "bias_after_inversion");
  const int n = spec.n();
  if (level < 0 || 2 * level >= n)
    throw DomainError("inversion level " + std::to_string(level) + " is outside [0, n/2)");
  const double z_prime = 1.0 - 2.0 * p_prime;
  const double mu = n * p_prime - level;
  const double swapped = std::pow(p_prime, level) * std::pow(1.0 - p_prime, n - level) -
                         std::pow(p_prime, n - level) * std::pow(1.0 - p_prime, level);
  return z_prime - 2.0 * binomial(n, level) * (z_prime + 2.0 * mu / n) * swapped;
}

ProtocolResult inversion_sequence_to_bias(const SystemSpec& spec, double beta_prime, double target_z) {
  require_qubits(spec, "inversion_sequence_to_bias");
  const int n = spec.n();
  const double z_prime = thermal_bias(beta_prime, spec.gap());
  const double p_prime = 0.5 * (1.0 - z_prime);

  DensityMatrix state = product_thermal(spec, beta_prime);
  double bias = measured_bias(state, spec);
  std::vector<int> applied;
  std::set<int> visited;
  const int centre = static_cast<int>(std::lround(n * p_prime));
  for (int step = 0; step <= 2 * n; ++step) {
    // mu = 0, 1, -1, 2, -2, ...
    const int mu = step % 2 == 1 ? (step + 1) / 2 : -(step / 2);
    const int level = centre - mu;
    if (level < 0 || 2 * level >= n || !visited.insert(level).second) continue;
    auto candidate = apply_unitary(state, inversion_v(spec, level));
    const double candidate_bias = measured_bias(candidate, spec);
    if (std::abs(candidate_bias - target_z) < std::abs(bias - target_z)) {
      state = std::move(candidate);
      bias = candidate_bias;
      applied.push_back(level);
    }
  }
  return ProtocolResult{std::move(state),
                        bias,
                        target_z,
                        beta_from_bias(bias, spec.gap()),
                        std::abs(bias - target_z),
                        std::move(applied),
                        std::abs(target_z) <= z_prime};
}

}  // namespace corrwork
