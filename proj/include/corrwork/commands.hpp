#pragma once

// Library side of the command-line front-end: figure1 work-ratio rows, state-family
// selection for single evaluations, and parameter sweeps.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corrwork/core.hpp"
#include "corrwork/families.hpp"
#include "corrwork/output.hpp"
#include "corrwork/passivity.hpp"

namespace corrwork {

struct Figure1Row {
  int n = 0;
  double w_phi_ratio = 0.0;
  double w_sep_ratio = 0.0;
  double w_entropy_ratio = 0.0;
};

/// Qubits with beta E_1 = beta_E, n = 1..n_max. Every state involved is
/// X-shaped, so the dimension cap is lifted to 2^n_max.
std::vector<Figure1Row> figure1_rows(double beta_E, int n_max);
CsvTable figure1_table(const std::vector<Figure1Row>& rows);
std::string figure1_svg(const std::vector<Figure1Row>& rows, double beta_E);

enum class Family { Phi, Sep, Deg, Omega, Protocol };

/// Throws DomainError for an unknown name.
Family parse_family(std::string_view name);
std::string family_name(Family family);

struct FamilyParams {
  /// Global entropy for the omega family.
  std::optional<double> s_total;
  /// Temperature of the product state fed to the protocol; defaults to the spec's beta.
  std::optional<double> beta_prime;
  /// Protocol target bias as a fraction of z' = tanh(beta' E / 2).
  double target_ratio = 1.0;
};

struct BuiltState {
  DensityMatrix state;
  /// Inverse temperature of the marginals; empty when it is negative.
  std::optional<double> beta_local;
  /// S_total (omega) or target bias (protocol).
  std::optional<double> param;
  std::optional<OmegaParams> omega;
  /// Protocol only: residual of the inversion-sequence route to the same target.
  std::optional<double> residual;
};

/// Locally thermal state of the requested family. The protocol family
/// prepares U_alpha tau_{beta'}^{(x) n} U_alpha^dagger; all others are locally
/// thermal at the spec's beta.
BuiltState build_family_state(Family family, const SystemSpec& spec, const FamilyParams& params);

struct CellReport {
  std::string status = "ok";
  std::string message;
  std::optional<double> beta_local;
  std::optional<double> param;
  WorkReport work;
  std::optional<double> entropy;
  std::optional<double> bound_bath;
  std::optional<double> residual;
  std::optional<double> ppt_min_eigenvalue;
  std::optional<OmegaParams> omega;
};

/// Builds and evaluates one cell. Library errors are caught and recorded in
/// status ("infeasible", "unsupported", "domain", "capacity", "unreachable").
CellReport evaluate_cell(Family family, const SystemSpec& spec, const FamilyParams& params,
                         bool want_ppt);

struct SweepConfig {
  Family family = Family::Phi;
  int n_min = 2;
  int n_max = 8;
  int d = 2;
  double beta = 1.0;
  /// Local ladder; empty means (0, 1, ..., d-1).
  std::vector<double> energies;
  std::optional<double> s_total;
  std::optional<double> beta_prime;
  /// Protocol family: target biases as fractions of z'.
  std::vector<double> target_ratios{1.0, 0.5, 0.0, -0.5, -0.9};
  /// Half-half PPT minimum eigenvalue for n <= 8.
  bool ppt = false;
  std::size_t dim_cap = kDefaultDimCap;

  /// Throws DomainError when the range is empty or a value is not finite.
  void validate() const;
  std::vector<double> ladder() const;
};

inline constexpr int kPptMaxN = 8;

/// One row per (n, parameter) cell, ordered by n then parameter.
CsvTable run_sweep(const SweepConfig& config);
/// ergotropy / (n E_beta) against n, one series per parameter value.
std::string sweep_svg(const CsvTable& table);

}  // namespace corrwork
