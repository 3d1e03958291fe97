#pragma once

// Entanglement detection by partial transposition, bath-assisted work
// bounds, multipartite mutual information and energy-level counting.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "corrwork/core.hpp"

namespace corrwork {

/// Split of subsystems {1..n} into A and its complement.
class Bipartition {
 public:
  /// Throws DomainError unless side_a is a nonempty proper subset of {1..n}.
  Bipartition(std::vector<int> side_a, int n);

  /// {1..n/2} | {n/2+1..n}.
  static Bipartition half_half(int n);
  /// Every bipartition with subsystem 1 on side A (each split listed once).
  static std::vector<Bipartition> all(int n);

  const std::vector<int>& side_a() const noexcept { return side_a_; }
  const std::vector<int>& side_b() const noexcept { return side_b_; }
  int n() const noexcept { return n_; }
  bool in_a(int subsystem) const;

 private:
  std::vector<int> side_a_;
  std::vector<int> side_b_;
  int n_;
};

/// Transpose on the side-A factors. X-layout input yields X-layout output.
HermitianMatrix partial_transpose(const DensityMatrix& rho, const SystemSpec& spec,
                                  const Bipartition& part);

struct EntanglementVerdict {
  enum class Kind { Entangled, PptUndecided };
  double min_pt_eigenvalue = 0.0;
  std::optional<double> b8_lhs;
  Kind verdict = Kind::PptUndecided;

  bool entangled() const { return verdict == Kind::Entangled; }
};

inline constexpr double kNptThreshold = -1e-10;

/// NPT test across `part`; `b8_lhs` is carried through for reporting.
EntanglementVerdict ppt_test(const DensityMatrix& rho, const SystemSpec& spec,
                             const Bipartition& part, std::optional<double> b8_lhs = std::nullopt);

/// sin(2 alpha)(1 - e^{-beta' E n}) - 2 e^{-beta' E n / 2}. Positive values
/// certify that U_alpha tau_{beta'}^{(x) n} U_alpha^dagger is entangled across
/// the half-half split. Qubits, even n.
double b8_condition(const SystemSpec& spec, double beta_prime, double alpha);

/// Tr(H rho) - S(rho) / beta.
double free_energy(const DensityMatrix& rho, std::span<const double> hamiltonian, double beta);

/// (n S(tau_beta) - S_total) / beta: work available with a bath at the local temperature.
double bath_extractable_work(const SystemSpec& spec, double s_total);

/// sum_i S(rho_i) - S(rho).
double mutual_information_multipartite(const DensityMatrix& rho, const SystemSpec& spec);

/// Number of distinct global energies for a generic d-level ladder: C(n+d-1, d-1).
std::uint64_t count_global_energies(int n, int d);

/// n E_beta - (1 - max_k C(n,k) p^k (1-p)^{n-k}) E. Qubits.
double w_deg_qubit_formula(const SystemSpec& spec);

/// (1 - max_k C(n,k) p^k (1-p)^{n-k}) E, the passive energy of the degenerate-subspace state.
double deg_correction_qubit(const SystemSpec& spec);

/// Smallest global energy E_min such that at least C(n+d-1, d-1) basis states
/// lie at or below it; n E_beta - E_min lower-bounds the work of the
/// degenerate-subspace state for any ladder.
double deg_passive_energy_bound(const SystemSpec& spec);

}  // namespace corrwork
