#pragma once

// Constructors for the locally thermal state families.

#include <cstddef>
#include <utility>
#include <vector>

#include "corrwork/core.hpp"

namespace corrwork {

/// sum_a e^{-beta E_a / 2} |a...a> / sqrt(Z), for any n >= 1. For n = 1 this
/// is not locally thermal; use entangled_phi for the checked constructor.
DensityMatrix phi_formula_state(const SystemSpec& spec);

/// Pure locally thermal state with all energy extractable. Requires n >= 2.
DensityMatrix entangled_phi(const SystemSpec& spec);

/// sum_a p_a |a...a><a...a|: entangled_phi dephased in the energy basis. Requires n >= 2.
DensityMatrix rho_sep(const SystemSpec& spec);

/// tau_{beta'}^{(x) n}.
DensityMatrix product_thermal(const SystemSpec& spec, double beta_prime);

/// t * rho_sep + (1 - t) * tau_beta^{(x) n}: separable and locally thermal for every t.
DensityMatrix separable_mixture(const SystemSpec& spec, double t);

/// Basis states of n qubits with Hamming weight k, ascending.
struct DickeIndexSet {
  int k = 0;
  std::vector<std::size_t> indices;
};

DickeIndexSet dicke_indices(int n, int k);

/// Binomial mixture of Dicke projectors sum_k C(n,k) p^k (1-p)^{n-k} |D_{n,k}><D_{n,k}|.
/// Qubits only.
DensityMatrix rho_deg(const SystemSpec& spec);

struct OmegaParams {
  double epsilon = 0.0;
  double delta = 0.0;
  double gamma = 0.0;
  int D = 0;
};

/// Smallest D in [0, floor(n/2)] with ln C(n, D) >= S. Throws InfeasibleError otherwise.
int choose_D(int n, double s);

/// Entropy of Omega(eps, delta, gamma) once eps and delta are eliminated through
/// normalization and local thermality.
double omega_entropy(int n, int D, double p, double gamma);

/// Largest gamma keeping eps and delta nonnegative.
double omega_gamma_max(int n, int D, double p);

/// eps |0..0><0..0| + delta |1..1><1..1| + gamma / C(n,D) sum_{|i|=D} |i><i|,
/// locally thermal at the spec's beta and with entropy s_total. Qubits only.
std::pair<DensityMatrix, OmegaParams> omega_state(const SystemSpec& spec, double s_total);

/// Largest entry-wise deviation of any single-subsystem marginal from tau_beta.
double local_thermality_error(const DensityMatrix& rho, const SystemSpec& spec, double beta);

/// ln C(n, k).
double log_binomial(int n, int k);
/// C(n, k) as a double (exact below 2^53).
double binomial(int n, int k);

}  // namespace corrwork
