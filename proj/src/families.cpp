#include "corrwork/families.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "corrwork/passivity.hpp"

namespace corrwork {
namespace {

void require_qubits(const SystemSpec& spec, const char* what) {
  if (spec.d() != 2) throw UnsupportedError(std::string(what) + " is defined for qubits only");
}

void require_pair(const SystemSpec& spec, const char* what) {
  if (spec.n() < 2)
    throw DomainError(std::string(what) + " needs at least two subsystems to be locally thermal");
}

// Index of |a a ... a>.
std::size_t repeated_digit_index(const SystemSpec& spec, int a) {
  std::size_t repunit = 0;
  for (int k = 0; k < spec.n(); ++k) repunit = repunit * static_cast<std::size_t>(spec.d()) + 1;
  return static_cast<std::size_t>(a) * repunit;
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

DensityMatrix phi_formula_state(const SystemSpec& spec) {
  const auto t = thermal_params(spec, spec.beta());
  const auto dim = static_cast<Eigen::Index>(spec.dim());
  if (spec.d() == 2) {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
    Eigen::VectorXcd anti = Eigen::VectorXcd::Zero(dim);
    diag[0] = t.populations[0];
    diag[dim - 1] = t.populations[1];
    anti[0] = anti[dim - 1] = std::sqrt(t.populations[0] * t.populations[1]);
    return DensityMatrix(HermitianMatrix::x_shaped(std::move(diag), std::move(anti)));
  }
  if (spec.dim() > kDefaultDimCap) throw CapacityError("dense state exceeds the dimension cap");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  for (int a = 0; a < spec.d(); ++a)
    psi[static_cast<Eigen::Index>(repeated_digit_index(spec, a))] =
        std::sqrt(t.populations[static_cast<std::size_t>(a)]);
  return DensityMatrix::pure(psi);
}

DensityMatrix entangled_phi(const SystemSpec& spec) {
  require_pair(spec, "entangled_phi");
  return phi_formula_state(spec);
}

DensityMatrix rho_sep(const SystemSpec& spec) {
  require_pair(spec, "rho_sep");
  const auto t = thermal_params(spec, spec.beta());
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(spec.dim()));
  for (int a = 0; a < spec.d(); ++a)
    diag[static_cast<Eigen::Index>(repeated_digit_index(spec, a))] =
        t.populations[static_cast<std::size_t>(a)];
  return DensityMatrix(HermitianMatrix::diagonal(std::move(diag)));
}

DensityMatrix product_thermal(const SystemSpec& spec, double beta_prime) {
  const auto t = thermal_params(spec, beta_prime);
  std::vector<double> diag{1.0};
  diag.reserve(spec.dim());
  for (int k = 0; k < spec.n(); ++k) {
    std::vector<double> next;
    next.reserve(diag.size() * t.populations.size());
    for (double prefix : diag)
      for (double pa : t.populations) next.push_back(prefix * pa);
    diag = std::move(next);
  }
  return DensityMatrix(HermitianMatrix::diagonal(
      Eigen::Map<Eigen::VectorXd>(diag.data(), static_cast<Eigen::Index>(diag.size()))));
}

DensityMatrix separable_mixture(const SystemSpec& spec, double t) {
  return mix(t, rho_sep(spec), product_thermal(spec, spec.beta()));
}

DickeIndexSet dicke_indices(int n, int k) {
  if (n < 1 || n > 62) throw DomainError("Dicke index sets need 1 <= n <= 62");
  DickeIndexSet set{k, {}};
  if (k < 0 || k > n) return set;
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < dim; ++i)
    if (std::popcount(i) == k) set.indices.push_back(static_cast<std::size_t>(i));
  return set;
}

DensityMatrix rho_deg(const SystemSpec& spec) {
  require_qubits(spec, "rho_deg");
  if (spec.dim() > kDefaultDimCap) throw CapacityError("dense state exceeds the dimension cap");
  const double p = thermal_params(spec, spec.beta()).excited_population();
  const auto dim = static_cast<Eigen::Index>(spec.dim());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k <= spec.n(); ++k) {
    // weight C(n,k) p^k (1-p)^{n-k} spread over the C(n,k)^2 entries of |D_k><D_k|
    const double entry = std::pow(p, k) * std::pow(1.0 - p, spec.n() - k);
    const auto set = dicke_indices(spec.n(), k);
    for (std::size_t c : set.indices)
      for (std::size_t r : set.indices)
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = entry;
  }
  return DensityMatrix(HermitianMatrix::dense(std::move(m)));
}

double local_thermality_error(const DensityMatrix& rho, const SystemSpec& spec, double beta) {
  const auto tau = thermal_state(spec, beta);
  double worst = 0.0;
  for (int k = 1; k <= spec.n(); ++k) {
    const auto marginal = partial_trace_to(rho, spec, k);
    for (std::size_t r = 0; r < marginal.dim(); ++r)
      for (std::size_t c = 0; c < marginal.dim(); ++c)
        worst = std::max(worst, std::abs(marginal(r, c) - tau(r, c)));
  }
  return worst;
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  k = std::min(k, n - k);
  double s = 0.0;
  for (int i = 1; i <= k; ++i) s += std::log(static_cast<double>(n - k + i) / i);
  return s;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

int choose_D(int n, double s) {
  if (!(s >= 0.0)) throw DomainError("entropy must be nonnegative");
  for (int D = 0; D <= n / 2; ++D)
    if (log_binomial(n, D) >= s - 1e-12) return D;
  throw InfeasibleError("entropy " + std::to_string(s) + " exceeds ln C(n, n/2) = " +
                        std::to_string(log_binomial(n, n / 2)) + " for n = " + std::to_string(n));
}

double omega_gamma_max(int n, int D, double p) {
  double g = 1.0;
  if (D > 0) g = std::min(g, n * p / D);
  g = std::min(g, n * (1.0 - p) / (n - D));
  return g;
}

double omega_entropy(int n, int D, double p, double gamma) {
  const double eps = std::max(0.0, 1.0 - p - gamma * (n - D) / n);
  const double delta = std::max(0.0, p - gamma * D / n);
  return -xlogx(eps) - xlogx(delta) - xlogx(gamma) + gamma * log_binomial(n, D);
}

std::pair<DensityMatrix, OmegaParams> omega_state(const SystemSpec& spec, double s_total) {
  require_qubits(spec, "omega_state");
  require_pair(spec, "omega_state");
  const int n = spec.n();
  const double p = thermal_params(spec, spec.beta()).excited_population();
  const int D = choose_D(n, s_total);
  const double g_max = omega_gamma_max(n, D, p);
  const auto residual = [&](double g) { return omega_entropy(n, D, p, g) - s_total; };

  double gamma = 0.0;
  if (std::abs(residual(0.0)) > 1e-12) {
    constexpr double step = 1e-3;
    double f_lo = std::numeric_limits<double>::infinity();
    double f_hi = -f_lo;
    double prev_g = 0.0;
    double prev_r = residual(0.0);
    bool found = false;
    for (int k = 1; !found; ++k) {
      const double g = std::min(k * step, g_max);
      const double r = residual(g);
      f_lo = std::min({f_lo, prev_r + s_total, r + s_total});
      f_hi = std::max({f_hi, prev_r + s_total, r + s_total});
      if ((prev_r < 0.0) != (r < 0.0) || r == 0.0) {
        double lo = prev_g;
        double hi = g;
        const bool rising = prev_r < 0.0;
        for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
          const double mid = 0.5 * (lo + hi);
          ((residual(mid) < 0.0) == rising ? lo : hi) = mid;
        }
        gamma = 0.5 * (lo + hi);
        found = true;
      }
      if (g >= g_max) break;
      prev_g = g;
      prev_r = r;
    }
    if (!found)
      throw InfeasibleError("no gamma in [0, " + std::to_string(g_max) + "] gives entropy " +
                            std::to_string(s_total) + "; f ranges over [" + std::to_string(f_lo) +
                            ", " + std::to_string(f_hi) + "] for D = " + std::to_string(D));
  }

  OmegaParams params;
  params.D = D;
  params.gamma = gamma;
  params.delta = std::max(0.0, p - gamma * D / n);
  params.epsilon = std::max(0.0, 1.0 - p - gamma * (n - D) / n);

  const auto dim = static_cast<Eigen::Index>(spec.dim());
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
  diag[0] += params.epsilon;
  diag[dim - 1] += params.delta;
  const auto set = dicke_indices(n, D);
  const double share = gamma / static_cast<double>(set.indices.size());
  for (std::size_t i : set.indices) diag[static_cast<Eigen::Index>(i)] += share;
  return {DensityMatrix(HermitianMatrix::diagonal(std::move(diag))), params};
}

}  // namespace corrwork
