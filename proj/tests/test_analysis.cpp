#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "corrwork/analysis.hpp"
#include "corrwork/families.hpp"
#include "corrwork/passivity.hpp"
#include "corrwork/protocols.hpp"
#include "corrwork/random.hpp"
#include "oracles.hpp"

using namespace corrwork;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSTau = oracle::binary_entropy(oracle::excited_p(1.0));  // 0.582203...

double min_eig(const HermitianMatrix& m) { return oracle::eigenvalues(m.to_dense()).minCoeff(); }

// Enumerate digit multisets of size n over d symbols.
std::size_t count_multisets(int n, int d) {
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  std::size_t count = 0;
  while (true) {
    ++count;
    int k = n - 1;
    while (k >= 0 && digits[static_cast<std::size_t>(k)] == d - 1) --k;
    if (k < 0) break;
    const int v = digits[static_cast<std::size_t>(k)] + 1;
    for (int j = k; j < n; ++j) digits[static_cast<std::size_t>(j)] = v;
  }
  return count;
}

}  // namespace

TEST_CASE("bipartitions") {
  const Bipartition p({3, 1, 3}, 4);
  CHECK(p.side_a() == std::vector<int>{1, 3});
  CHECK(p.side_b() == std::vector<int>{2, 4});
  CHECK(p.in_a(3));
  CHECK_FALSE(p.in_a(2));
  CHECK_THROWS_AS(Bipartition({}, 3), DomainError);
  CHECK_THROWS_AS(Bipartition({1, 2, 3}, 3), DomainError);
  CHECK_THROWS_AS(Bipartition({0}, 3), DomainError);
  CHECK_THROWS_AS(Bipartition({4}, 3), DomainError);
  for (int n = 2; n <= 7; ++n) {
    const auto all = Bipartition::all(n);
    CHECK(all.size() == (std::size_t{1} << (n - 1)) - 1);
    for (const auto& b : all) CHECK(b.in_a(1));
  }
  CHECK(Bipartition::half_half(6).side_a() == std::vector<int>{1, 2, 3});
}

TEST_CASE("partial transpose matches the digit-swap oracle") {
  Rng rng(7);
  for (const auto& [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}}) {
    std::vector<double> ladder;
    for (int j = 0; j < d; ++j) ladder.push_back(0.9 * j + 0.1 * j * j);
    const SystemSpec spec(n, ladder, 1.0);
    const DensityMatrix state = random_density_matrix(spec.dim(), rng);
    const Eigen::MatrixXcd rho = state.matrix().to_dense();
    for (const auto& part : Bipartition::all(n)) {
      const auto pt = partial_transpose(state, spec, part).to_dense();
      const auto expect = oracle::partial_transpose(rho, n, d, part.side_a());
      CHECK((pt - expect).cwiseAbs().maxCoeff() < 1e-15);
    }
  }
}

TEST_CASE("partial transpose X layout agrees with dense") {
  for (int n = 2; n <= 6; ++n) {
    const auto spec = SystemSpec::qubits(n, 1.0);
    const auto x = prepare_locally_thermal(spec, 1.4, 0.2).state;
    REQUIRE(x.is_x());
    const DensityMatrix dense(HermitianMatrix::dense(x.matrix().to_dense()));
    for (const auto& part : Bipartition::all(n)) {
      const auto a = partial_transpose(x, spec, part);
      CHECK(a.is_x());
      CHECK((a.to_dense() - partial_transpose(dense, spec, part).to_dense()).cwiseAbs().maxCoeff() < 1e-15);
    }
  }
}

TEST_CASE("ppt examples") {
  const auto two = SystemSpec::qubits(2, 0.0);
  const auto bell = ppt_test(entangled_phi(two), two, Bipartition({1}, 2));
  CHECK(std::abs(bell.min_pt_eigenvalue + 0.5) < 1e-12);
  CHECK(bell.entangled());

  const auto spec = SystemSpec::qubits(4, 1.0);
  for (const auto& part : Bipartition::all(4)) {
    CHECK_FALSE(ppt_test(product_thermal(spec, 0.7), spec, part).entangled());
    CHECK(min_eig(partial_transpose(rho_sep(spec), spec, part)) >= 0.0);
    CHECK(ppt_test(entangled_phi(spec), spec, part).entangled());
  }
  CHECK_THROWS_AS(partial_transpose(product_thermal(SystemSpec::qubits(3, 1.0), 1.0), spec, Bipartition({1}, 4)),
                  ShapeError);
  const auto with_b8 = ppt_test(rho_sep(spec), spec, Bipartition::half_half(4), 0.25);
  REQUIRE(with_b8.b8_lhs.has_value());
  CHECK(*with_b8.b8_lhs == 0.25);
}

TEST_CASE("b8 condition") {
  const auto two = SystemSpec::qubits(2, 1.0);
  CHECK(std::abs(b8_condition(two, 1.0, kPi / 4) - ((1 - std::exp(-2.0)) - 2 * std::exp(-1.0))) < 1e-15);
  CHECK(std::abs(b8_condition(two, 1.0, kPi / 4) - 0.128906) < 1e-6);
  CHECK(std::abs(b8_condition(SystemSpec::qubits(4, 1.0), 0.7, 0.0) + 2 * std::exp(-0.7 * 2)) < 1e-15);
  double previous = -10.0;
  for (int n = 2; n <= 40; n += 2) {
    const double v = b8_condition(SystemSpec::qubits(n, 1.0, 1.0, std::size_t{1} << 40), 1.0, 0.3);
    CHECK(v > previous);
    previous = v;
  }
  CHECK(std::abs(previous - std::sin(0.6)) < 1e-8);
  CHECK_THROWS_AS(b8_condition(SystemSpec::qubits(3, 1.0), 1.0, 0.3), DomainError);
  CHECK_THROWS_AS(b8_condition(SystemSpec(2, {0.0, 1.0, 2.0}, 1.0), 1.0, 0.3), UnsupportedError);

  for (int n : {2, 4, 6})
    for (double bp : {0.5, 1.0, 2.0})
      for (int k = 0; k <= 8; ++k) {
        const double alpha = k * kPi / 16;
        const auto spec = SystemSpec::qubits(n, 1.0);
        if (b8_condition(spec, bp, alpha) <= 1e-9) continue;
        const auto state = apply_unitary(product_thermal(spec, bp), u_alpha(spec, alpha));
        const Eigen::MatrixXcd pt =
            oracle::partial_transpose(state.matrix().to_dense(), n, 2, Bipartition::half_half(n).side_a());
        CHECK(oracle::eigenvalues(pt).minCoeff() < -1e-10);
      }
}

TEST_CASE("free energy") {
  const auto spec = SystemSpec::qubits(3, 1.3);
  const auto h = build_hamiltonian(spec);
  const double z = 1 + std::exp(-1.3);
  CHECK(std::abs(free_energy(product_thermal(spec, 1.3), h, 1.3) + 3 * std::log(z) / 1.3) < 1e-12);

  Eigen::VectorXd ground = Eigen::VectorXd::Zero(8);
  ground(0) = 1.0;
  CHECK(std::abs(free_energy(DensityMatrix(HermitianMatrix::diagonal(ground)), h, 1.3)) < 1e-15);

  const auto two = SystemSpec::qubits(2, 1.0);
  CHECK(std::abs(free_energy(entangled_phi(two), build_hamiltonian(two), 1.0) - 2 * 0.268941) < 1e-5);
  CHECK_THROWS_AS(free_energy(product_thermal(spec, 1.0), h, 0.0), DomainError);
  CHECK_THROWS_AS(free_energy(product_thermal(spec, 1.0), h, -1.0), DomainError);
}

TEST_CASE("bath extractable work") {
  const auto two = SystemSpec::qubits(2, 1.0);
  CHECK(std::abs(bath_extractable_work(two, 2 * kSTau)) < 1e-15);
  CHECK(std::abs(bath_extractable_work(two, 0.0) - 2 * kSTau) < 1e-15);
  CHECK(std::abs(bath_extractable_work(two, 0.0) - 1.164406) < 1e-5);
  CHECK_THROWS_AS(bath_extractable_work(two, -0.1), DomainError);
  CHECK_THROWS_AS(bath_extractable_work(two, 2 * kSTau + 0.01), DomainError);

  // Identity against the free-energy difference on locally thermal states.
  for (int n = 2; n <= 6; ++n) {
    const auto spec = SystemSpec::qubits(n, 1.0);
    const auto h = build_hamiltonian(spec);
    const double f_tau = free_energy(product_thermal(spec, 1.0), h, 1.0);
    std::vector<DensityMatrix> states{entangled_phi(spec), rho_sep(spec), separable_mixture(spec, 0.4)};
    if (n >= 2) states.push_back(rho_deg(spec));
    for (const auto& rho : states) {
      const double s = von_neumann_entropy(rho);
      CHECK(std::abs(bath_extractable_work(spec, s) - (free_energy(rho, h, 1.0) - f_tau)) < 1e-9);
    }
  }

  for (int n : {2, 4, 8}) {
    const auto spec = SystemSpec::qubits(n, 1.0);
    for (int k = 1; k < 10; ++k) {
      const double s = n * kSTau * k / 10.0;
      CHECK(bath_extractable_work(spec, s) > bound_entropy_constrained(spec, s) + 1e-12);
    }
  }
}

TEST_CASE("multipartite mutual information") {
  const auto spec = SystemSpec::qubits(3, 1.0);
  CHECK(std::abs(mutual_information_multipartite(product_thermal(spec, 0.4), spec)) < 1e-10);
  const auto two = SystemSpec::qubits(2, 1.0);
  CHECK(std::abs(mutual_information_multipartite(entangled_phi(two), two) - 1.164406) < 1e-5);
  CHECK(std::abs(mutual_information_multipartite(rho_sep(spec), spec) - 1.164406) < 1e-5);
}

TEST_CASE("global energy count") {
  CHECK(count_global_energies(2, 2) == 3);
  CHECK(count_global_energies(3, 3) == 10);
  CHECK(count_global_energies(7, 1) == 1);
  for (int n = 1; n <= 6; ++n)
    for (int d = 1; d <= 4; ++d) CHECK(count_global_energies(n, d) == count_multisets(n, d));

  // Incommensurate ladder: distinct energies in the full product basis.
  for (int n = 1; n <= 5; ++n)
    for (int d = 2; d <= 4; ++d) {
      std::vector<double> ladder{0.0};
      for (int j = 1; j < d; ++j) ladder.push_back(std::sqrt(2.0 + j) + j);
      const auto h = build_hamiltonian(SystemSpec(n, ladder, 1.0));
      std::vector<double> e(h.begin(), h.end());
      std::sort(e.begin(), e.end());
      const auto distinct =
          std::unique(e.begin(), e.end(), [](double a, double b) { return std::abs(a - b) < 1e-9; }) - e.begin();
      CHECK(static_cast<std::uint64_t>(distinct) == count_global_energies(n, d));
    }
}

TEST_CASE("degenerate-subspace work") {
  CHECK(std::abs(w_deg_qubit_formula(SystemSpec::qubits(1, 1.0))) < 1e-15);
  const double p = oracle::excited_p(1.0);
  CHECK(std::abs(w_deg_qubit_formula(SystemSpec::qubits(2, 1.0)) - p * p) < 1e-15);
  CHECK(std::abs(w_deg_qubit_formula(SystemSpec::qubits(2, 1.0)) - 0.072329) < 1e-6);

  double previous = 0.0;
  for (int n = 1; n <= 14; ++n) {
    const auto spec = SystemSpec::qubits(n, 1.0);
    const double c = deg_correction_qubit(spec);
    CHECK(c < 1.0);
    CHECK(c >= previous);
    previous = c;
    if (n <= 10) CHECK(std::abs(ergotropy(rho_deg(spec), spec).ergotropy - w_deg_qubit_formula(spec)) < 1e-10);
  }
  CHECK_THROWS_AS(w_deg_qubit_formula(SystemSpec(2, {0.0, 1.0, 2.0}, 1.0)), UnsupportedError);
}

TEST_CASE("degenerate passive energy bound") {
  for (const auto& ladder : std::vector<std::vector<double>>{{0.0, 1.0}, {0.0, 1.0, 2.5}, {0.0, 0.7, 1.1, 2.0}})
    for (int n = 1; n <= 5; ++n) {
      const SystemSpec spec(n, ladder, 1.0);
      const auto h = build_hamiltonian(spec);
      std::vector<double> e(h.begin(), h.end());
      std::sort(e.begin(), e.end());
      const auto needed = count_global_energies(n, spec.d());
      CHECK(std::abs(deg_passive_energy_bound(spec) - e[needed - 1]) < 1e-12);
    }
  CHECK(deg_passive_energy_bound(SystemSpec::qubits(9, 1.0)) == doctest::Approx(1.0));
}
