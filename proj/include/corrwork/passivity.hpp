#pragma once

// Thermal and passive states, ergotropy, and the analytic work bounds for
// locally thermal ensembles.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "corrwork/core.hpp"

namespace corrwork {

/// Gibbs populations e^{-beta E_a} / Z of one subsystem.
struct ThermalParams {
  double beta_prime = 0.0;
  std::vector<double> populations;
  double partition_function = 1.0;
  double mean_energy = 0.0;

  double entropy() const { return shannon_entropy(populations); }
  /// Population(0) - population(1).
  double bias() const { return populations.at(0) - populations.at(1); }
  /// Population of the first excited level.
  double excited_population() const { return populations.at(1); }
};

ThermalParams thermal_params(const SystemSpec& spec, double beta);

/// tau_beta = e^{-beta h} / Z on one subsystem.
DensityMatrix thermal_state(const SystemSpec& spec, double beta);

/// Qubit bias tanh(beta E / 2).
double thermal_bias(double beta, double gap);

/// Permutation listing basis indices by ascending energy, ties by ascending index.
std::vector<std::size_t> passive_order(std::span<const double> hamiltonian);

/// Diagonal state with rho's eigenvalues, largest on the lowest energy.
DensityMatrix passive_state(const DensityMatrix& rho, std::span<const double> hamiltonian);

struct WorkReport {
  double initial_energy = 0.0;
  double passive_energy = 0.0;
  double ergotropy = 0.0;
  /// n E_beta; only known when a SystemSpec is supplied.
  std::optional<double> bound_nEbeta;
  /// Entropy-constrained bound evaluated at S(rho).
  std::optional<double> bound_entropy;
  /// ergotropy / bound_nEbeta (0 when the bound vanishes).
  std::optional<double> ratio_to_bound;
};

WorkReport ergotropy(const DensityMatrix& rho, std::span<const double> hamiltonian);
/// Same as above with the bounds filled in from the system description.
WorkReport ergotropy(const DensityMatrix& rho, const SystemSpec& spec);

/// Energy of the passive state built from a spectrum.
double passive_energy(const Spectrum& spectrum, std::span<const double> hamiltonian);

/// Diagonal in the energy basis with populations non-increasing in energy.
bool is_passive(const DensityMatrix& rho, std::span<const double> hamiltonian);

struct EntropyInversionOptions {
  /// Stands in for beta' = infinity, in units of 1/E_1.
  double beta_max_in_gap_units = 1e6;
  double tolerance = 1e-12;
  int max_iterations = 200;
};

/// beta' >= 0 with S(tau_beta') = s_per_subsystem, by bisection on the
/// monotone map beta' -> S(tau_beta').
ThermalParams beta_for_entropy(const SystemSpec& spec, double s_per_subsystem,
                               const EntropyInversionOptions& options = {});

/// n E_beta - n Tr(tau_beta' h), beta' solving S(tau_beta') = S_total / n.
double bound_entropy_constrained(const SystemSpec& spec, double s_total);

/// Work from the optimal separable locally thermal state, n E_beta - E_1 (1 - 1/Z).
/// Requires n >= d - 1.
double w_sep_formula(const SystemSpec& spec);

/// n E_beta at the spec's beta.
double max_work_bound(const SystemSpec& spec);

}  // namespace corrwork
