#include "corrwork/passivity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace corrwork {

ThermalParams thermal_params(const SystemSpec& spec, double beta) {
  if (!(beta >= 0.0)) throw DomainError("inverse temperature must be nonnegative");
  ThermalParams t;
  t.beta_prime = beta;
  const auto e = spec.local_energies();
  t.populations.resize(e.size());
  double z = 0.0;
  for (std::size_t a = 0; a < e.size(); ++a) {
    // E_0 = 0, so every weight is in (0, 1]; no overflow for large beta.
    t.populations[a] = std::exp(-beta * e[a]);
    z += t.populations[a];
  }
  double mean = 0.0;
  for (std::size_t a = 0; a < e.size(); ++a) {
    t.populations[a] /= z;
    mean += t.populations[a] * e[a];
  }
  t.partition_function = z;
  t.mean_energy = mean;
  return t;
}

DensityMatrix thermal_state(const SystemSpec& spec, double beta) {
  const auto t = thermal_params(spec, beta);
  return DensityMatrix(HermitianMatrix::dense(
      Eigen::Map<const Eigen::VectorXd>(t.populations.data(),
                                        static_cast<Eigen::Index>(t.populations.size()))
          .cast<cplx>()
          .asDiagonal()));
}

double thermal_bias(double beta, double gap) { return std::tanh(0.5 * beta * gap); }

std::vector<std::size_t> passive_order(std::span<const double> hamiltonian) {
  std::vector<std::size_t> order(hamiltonian.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return hamiltonian[a] < hamiltonian[b];
  });
  return order;
}

double passive_energy(const Spectrum& spectrum, std::span<const double> hamiltonian) {
  if (spectrum.values.size() != hamiltonian.size())
    throw ShapeError("spectrum and Hamiltonian dimensions differ");
  std::vector<double> levels(hamiltonian.begin(), hamiltonian.end());
  std::sort(levels.begin(), levels.end());
  double e = 0.0;
  for (std::size_t k = 0; k < levels.size(); ++k) e += spectrum.values[k] * levels[k];
  return e;
}

DensityMatrix passive_state(const DensityMatrix& rho, std::span<const double> hamiltonian) {
  if (hamiltonian.size() != rho.dim()) throw ShapeError("Hamiltonian and state dimensions differ");
  const Spectrum s = eigenvalues(rho);
  const auto order = passive_order(hamiltonian);
  Eigen::VectorXd diag(static_cast<Eigen::Index>(rho.dim()));
  for (std::size_t k = 0; k < order.size(); ++k)
    diag[static_cast<Eigen::Index>(order[k])] = s.values[k];
  return DensityMatrix(HermitianMatrix::diagonal(std::move(diag)));
}

WorkReport ergotropy(const DensityMatrix& rho, std::span<const double> hamiltonian) {
  if (hamiltonian.size() != rho.dim()) throw ShapeError("Hamiltonian and state dimensions differ");
  const Spectrum s = eigenvalues(rho);
  if (s.min() < -kPsdTol)
    throw ValidityError("state has negative eigenvalue " + std::to_string(s.min()));
  WorkReport r;
  r.initial_energy = energy(rho, hamiltonian);
  r.passive_energy = passive_energy(s, hamiltonian);
  r.ergotropy = r.initial_energy - r.passive_energy;
  return r;
}

WorkReport ergotropy(const DensityMatrix& rho, const SystemSpec& spec) {
  const auto h = build_hamiltonian(spec);
  const Spectrum s = eigenvalues(rho);
  if (s.min() < -kPsdTol)
    throw ValidityError("state has negative eigenvalue " + std::to_string(s.min()));
  WorkReport r;
  r.initial_energy = energy(rho, h);
  r.passive_energy = passive_energy(s, h);
  r.ergotropy = r.initial_energy - r.passive_energy;
  r.bound_nEbeta = max_work_bound(spec);
  const double s_total = von_neumann_entropy(s);
  try {
    r.bound_entropy = bound_entropy_constrained(spec, s_total);
  } catch (const DomainError&) {
    // entropy outside the range reachable by product thermal states of this ladder
  }
  r.ratio_to_bound = *r.bound_nEbeta > 0.0 ? r.ergotropy / *r.bound_nEbeta : 0.0;
  return r;
}

bool is_passive(const DensityMatrix& rho, std::span<const double> hamiltonian) {
  if (hamiltonian.size() != rho.dim()) throw ShapeError("Hamiltonian and state dimensions differ");
  if (rho.matrix().max_off_diagonal() > 1e-10) return false;
  const Eigen::VectorXd diag = rho.diagonal_entries();
  const auto order = passive_order(hamiltonian);
  // Within a degenerate energy level the populations may come in any order;
  // across levels the smallest lower population must dominate the largest upper one.
  double lower_min = diag[static_cast<Eigen::Index>(order.front())];
  std::size_t k = 0;
  while (k < order.size()) {
    const double level = hamiltonian[order[k]];
    double group_min = diag[static_cast<Eigen::Index>(order[k])];
    double group_max = group_min;
    std::size_t j = k;
    while (j < order.size() && std::abs(hamiltonian[order[j]] - level) <= 1e-12 * std::max(1.0, std::abs(level))) {
      const double v = diag[static_cast<Eigen::Index>(order[j])];
      group_min = std::min(group_min, v);
      group_max = std::max(group_max, v);
      ++j;
    }
    if (k > 0 && group_max > lower_min + 1e-12) return false;
    lower_min = group_min;
    k = j;
  }
  return true;
}

ThermalParams beta_for_entropy(const SystemSpec& spec, double s, const EntropyInversionOptions& opt) {
  const double s_max = std::log(static_cast<double>(spec.d()));
  const auto e = spec.local_energies();
  const auto first_excited = std::find_if(e.begin(), e.end(), [](double x) { return x > 0.0; });
  const double unit = first_excited == e.end() ? 1.0 : *first_excited;
  const double beta_max = opt.beta_max_in_gap_units / unit;
  const double s_min = thermal_params(spec, beta_max).entropy();
  if (!std::isfinite(s) || s < 0.0 || s > s_max + opt.tolerance)
    throw DomainError("entropy per subsystem " + std::to_string(s) + " is outside [0, ln d = " +
                      std::to_string(s_max) + "]");
  if (s >= s_max - opt.tolerance) return thermal_params(spec, 0.0);
  if (s <= s_min + opt.tolerance) {
    if (s_min > opt.tolerance)
      throw DomainError("entropy per subsystem " + std::to_string(s) +
                        " is below the ground-space entropy " + std::to_string(s_min));
    return thermal_params(spec, beta_max);
  }

  double lo = 0.0;  // S(lo) > s
  double hi = beta_max;  // S(hi) < s
  for (int it = 0; it < opt.max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    auto t = thermal_params(spec, mid);
    const double residual = t.entropy() - s;
    if (std::abs(residual) <= opt.tolerance || mid == lo || mid == hi) return t;
    (residual > 0.0 ? lo : hi) = mid;
  }
  throw NumericalError("entropy inversion did not reach tolerance", opt.max_iterations);
}

double max_work_bound(const SystemSpec& spec) {
  return spec.n() * thermal_params(spec, spec.beta()).mean_energy;
}

double bound_entropy_constrained(const SystemSpec& spec, double s_total) {
  const double s_max = spec.n() * std::log(static_cast<double>(spec.d()));
  if (!std::isfinite(s_total) || s_total < 0.0 || s_total > s_max + 1e-12)
    throw DomainError("total entropy " + std::to_string(s_total) + " is outside [0, n ln d]");
  const auto final_state = beta_for_entropy(spec, std::min(s_total / spec.n(), std::log(double(spec.d()))));
  return max_work_bound(spec) - spec.n() * final_state.mean_energy;
}

double w_sep_formula(const SystemSpec& spec) {
  if (spec.n() < spec.d() - 1)
    throw DomainError("separable optimum needs n >= d - 1 (n = " + std::to_string(spec.n()) +
                      ", d = " + std::to_string(spec.d()) + ")");
  const auto t = thermal_params(spec, spec.beta());
  return max_work_bound(spec) - spec.gap() * (1.0 - 1.0 / t.partition_function);
}

}  // namespace corrwork
