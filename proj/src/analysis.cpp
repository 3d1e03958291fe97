#include "corrwork/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "corrwork/families.hpp"
#include "corrwork/passivity.hpp"

namespace corrwork {

Bipartition::Bipartition(std::vector<int> side_a, int n) : side_a_(std::move(side_a)), n_(n) {
  std::sort(side_a_.begin(), side_a_.end());
  side_a_.erase(std::unique(side_a_.begin(), side_a_.end()), side_a_.end());
  if (side_a_.empty()) throw DomainError("bipartition side A is empty");
  if (side_a_.front() < 1 || side_a_.back() > n_)
    throw DomainError("bipartition refers to a subsystem outside [1, n]");
  for (int k = 1; k <= n_; ++k)
    if (!in_a(k)) side_b_.push_back(k);
  if (side_b_.empty()) throw DomainError("bipartition side B is empty");
}

Bipartition Bipartition::half_half(int n) {
  std::vector<int> a;
  for (int k = 1; k <= n / 2; ++k) a.push_back(k);
  return {std::move(a), n};
}

std::vector<Bipartition> Bipartition::all(int n) {
  std::vector<Bipartition> out;
  if (n < 2) return out;
  const std::uint64_t rest = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask + 1 < rest; ++mask) {
    std::vector<int> a{1};
    for (int k = 2; k <= n; ++k)
      if (mask >> (k - 2) & 1U) a.push_back(k);
    out.emplace_back(std::move(a), n);
  }
  return out;
}

bool Bipartition::in_a(int subsystem) const {
  return std::binary_search(side_a_.begin(), side_a_.end(), subsystem);
}

HermitianMatrix partial_transpose(const DensityMatrix& rho, const SystemSpec& spec,
                                  const Bipartition& part) {
  if (rho.dim() != spec.dim() || part.n() != spec.n())
    throw ShapeError("state, system and bipartition sizes do not match");
  const std::size_t dim = spec.dim();
  const auto d = static_cast<std::size_t>(spec.d());

  // a_part[i]: contribution of the side-A digits of i to its linear index.
  std::vector<std::size_t> a_part(dim, 0);
  std::size_t place = 1;
  for (int k = spec.n(); k >= 1; --k) {
    if (part.in_a(k))
      for (std::size_t i = 0; i < dim; ++i) a_part[i] += ((i / place) % d) * place;
    place *= d;
  }
  const auto b_part = [&](std::size_t i) { return i - a_part[i]; };

  const auto& m = rho.matrix();
  if (m.is_x()) {
    const auto& anti = m.anti_entries();
    Eigen::VectorXcd out(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t j = dim - 1 - i;
      out[static_cast<Eigen::Index>(a_part[j] + b_part(i))] = anti[static_cast<Eigen::Index>(i)];
    }
    return HermitianMatrix::x_shaped(m.diagonal_entries(), std::move(out));
  }

  const auto& a = m.dense_entries();
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd out(n, n);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i)
      out(static_cast<Eigen::Index>(a_part[j] + b_part(i)),
          static_cast<Eigen::Index>(a_part[i] + b_part(j))) =
          a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return HermitianMatrix::dense(std::move(out));
}

EntanglementVerdict ppt_test(const DensityMatrix& rho, const SystemSpec& spec,
                             const Bipartition& part, std::optional<double> b8_lhs) {
  EntanglementVerdict v;
  v.min_pt_eigenvalue = eigenvalues(partial_transpose(rho, spec, part)).min();
  v.b8_lhs = b8_lhs;
  v.verdict = v.min_pt_eigenvalue < kNptThreshold ? EntanglementVerdict::Kind::Entangled
                                                  : EntanglementVerdict::Kind::PptUndecided;
  return v;
}

double b8_condition(const SystemSpec& spec, double beta_prime, double alpha) {
  if (spec.d() != 2) throw UnsupportedError("b8_condition is defined for qubits only");
  if (spec.n() % 2 != 0) throw DomainError("b8_condition needs an even number of qubits");
  const double x = beta_prime * spec.gap() * spec.n();
  return std::sin(2.0 * alpha) * (1.0 - std::exp(-x)) - 2.0 * std::exp(-0.5 * x);
}

double free_energy(const DensityMatrix& rho, std::span<const double> hamiltonian, double beta) {
  if (!(beta > 0.0)) throw DomainError("free energy needs a positive inverse temperature");
  return energy(rho, hamiltonian) - von_neumann_entropy(rho) / beta;
}

double bath_extractable_work(const SystemSpec& spec, double s_total) {
  if (!(spec.beta() > 0.0)) throw DomainError("bath bound needs a positive inverse temperature");
  const double s_max = spec.n() * thermal_params(spec, spec.beta()).entropy();
  if (!std::isfinite(s_total) || s_total < -1e-12 || s_total > s_max + 1e-12)
    throw DomainError("total entropy " + std::to_string(s_total) + " is outside [0, n S(tau_beta) = " +
                      std::to_string(s_max) + "]");
  return (s_max - s_total) / spec.beta();
}

double mutual_information_multipartite(const DensityMatrix& rho, const SystemSpec& spec) {
  double local = 0.0;
  for (int k = 1; k <= spec.n(); ++k) local += von_neumann_entropy(partial_trace_to(rho, spec, k));
  return local - von_neumann_entropy(rho);
}

std::uint64_t count_global_energies(int n, int d) {
  if (n < 0 || d < 1) throw DomainError("count_global_energies needs n >= 0 and d >= 1");
  std::uint64_t c = 1;
  for (int i = 1; i <= d - 1; ++i) c = c * static_cast<std::uint64_t>(n + i) / static_cast<std::uint64_t>(i);
  return c;
}

double deg_correction_qubit(const SystemSpec& spec) {
  if (spec.d() != 2) throw UnsupportedError("degenerate-subspace formula is defined for qubits only");
  const int n = spec.n();
  const double p = thermal_params(spec, spec.beta()).excited_population();
  double largest = 0.0;
  for (int k = 0; k <= n; ++k)
    largest = std::max(largest, binomial(n, k) * std::pow(p, k) * std::pow(1.0 - p, n - k));
  return (1.0 - largest) * spec.gap();
}

double w_deg_qubit_formula(const SystemSpec& spec) {
  return max_work_bound(spec) - deg_correction_qubit(spec);
}

double deg_passive_energy_bound(const SystemSpec& spec) {
  const int n = spec.n();
  const int d = spec.d();
  const auto e = spec.local_energies();
  struct Level {
    double energy;
    double degeneracy;
  };
  std::vector<Level> levels;
  std::vector<int> occupation(static_cast<std::size_t>(d), 0);
  // Enumerate occupation numbers k_0 + ... + k_{d-1} = n.
  std::function<void(int, int)> visit = [&](int level, int remaining) {
    if (level == d - 1) {
      occupation[static_cast<std::size_t>(level)] = remaining;
      double energy = 0.0;
      double log_multinomial = std::lgamma(n + 1.0);
      for (int a = 0; a < d; ++a) {
        energy += occupation[static_cast<std::size_t>(a)] * e[static_cast<std::size_t>(a)];
        log_multinomial -= std::lgamma(occupation[static_cast<std::size_t>(a)] + 1.0);
      }
      levels.push_back({energy, std::round(std::exp(log_multinomial))});
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      occupation[static_cast<std::size_t>(level)] = k;
      visit(level + 1, remaining - k);
    }
  };
  visit(0, n);
  std::sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) { return a.energy < b.energy; });
  const auto needed = static_cast<double>(count_global_energies(n, d));
  double seen = 0.0;
  for (const auto& level : levels) {
    seen += level.degeneracy;
    if (seen >= needed) return level.energy;
  }
  return levels.back().energy;
}

}  // namespace corrwork
