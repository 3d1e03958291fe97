#include <doctest.h>

#include <cmath>

#include "corrwork/families.hpp"
#include "corrwork/passivity.hpp"
#include "corrwork/random.hpp"
#include "oracles.hpp"

using namespace corrwork;

TEST_CASE("thermal state") {
  const auto spec = SystemSpec::qubits(1, 1.0);
  const auto flat = thermal_state(spec, 0.0);
  CHECK(flat(0, 0).real() == doctest::Approx(0.5));
  CHECK(flat(1, 1).real() == doctest::Approx(0.5));
  const SystemSpec qutrit(1, {0.0, 1.0, 3.0}, 1.0);
  CHECK(thermal_state(qutrit, 0.0)(2, 2).real() == doctest::Approx(1.0 / 3));

  const auto tau = thermal_state(spec, 1.0);
  const double p = oracle::excited_p(1.0);
  CHECK(std::abs(tau(1, 1).real() - p) < 1e-15);
  CHECK(std::abs(tau(0, 0).real() - 0.731059) < 1e-6);
  CHECK(std::abs(tau(1, 1).real() - 0.268941) < 1e-6);
  CHECK(std::abs(thermal_bias(1.0, 1.0) - 0.462117) < 1e-6);
  CHECK(std::abs(thermal_params(spec, 1.0).bias() - std::tanh(0.5)) < 1e-15);

  const auto t = thermal_params(qutrit, 0.7);
  const double z = 1 + std::exp(-0.7) + std::exp(-2.1);
  CHECK(t.partition_function == doctest::Approx(z));
  CHECK(t.mean_energy == doctest::Approx((std::exp(-0.7) + 3 * std::exp(-2.1)) / z));
  double sum = 0.0;
  for (double x : t.populations) sum += x;
  CHECK(std::abs(sum - 1.0) < 1e-12);
}

TEST_CASE("passive state") {
  Eigen::VectorXd d(4);
  d << 0.1, 0.2, 0.3, 0.4;
  const std::vector<double> h{0, 1, 1, 2};
  const auto pas = passive_state(DensityMatrix(HermitianMatrix::diagonal(d)), h);
  CHECK(pas(0, 0).real() == doctest::Approx(0.4));
  CHECK(pas(1, 1).real() == doctest::Approx(0.3));
  CHECK(pas(2, 2).real() == doctest::Approx(0.2));
  CHECK(pas(3, 3).real() == doctest::Approx(0.1));

  const auto spec = SystemSpec::qubits(3, 1.0);
  const auto tau = product_thermal(spec, 1.0);
  const auto tau_pas = passive_state(tau, build_hamiltonian(spec));
  for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(tau_pas(i, i).real() - tau(i, i).real()) < 1e-15);

  const auto ground = passive_state(entangled_phi(spec), build_hamiltonian(spec));
  CHECK(ground(0, 0).real() == doctest::Approx(1.0));
  CHECK(std::abs(ground.matrix().trace() - ground(0, 0).real()) < 1e-12);
}

TEST_CASE("passive order is stable on ties") {
  const std::vector<double> h{2, 1, 0, 1, 1};
  CHECK(passive_order(h) == std::vector<std::size_t>{2, 1, 3, 4, 0});
}

TEST_CASE("ergotropy examples") {
  for (int n = 1; n <= 5; ++n) {
    const auto spec = SystemSpec::qubits(n, 1.0);
    CHECK(std::abs(ergotropy(product_thermal(spec, 1.0), spec).ergotropy) < 1e-10);
  }
  const auto four = SystemSpec::qubits(4, 1.0);
  CHECK(std::abs(ergotropy(entangled_phi(four), four).ergotropy - 4 * oracle::excited_p(1.0)) < 1e-12);
  CHECK(std::abs(ergotropy(entangled_phi(four), four).ergotropy - 1.075766) < 1e-5);

  // rho_deg at n = 2 against all 4! assignments of its eigenvalues.
  const auto two = SystemSpec::qubits(2, 1.0);
  const double p = oracle::excited_p(1.0);
  const std::vector<double> lam{(1 - p) * (1 - p), 2 * p * (1 - p), p * p, 0.0};
  const double initial = 2 * p;
  const double brute = initial - oracle::brute_force_passive_energy(lam, {0, 1, 1, 2});
  const double w = ergotropy(rho_deg(two), two).ergotropy;
  CHECK(std::abs(w - brute) < 1e-12);
  CHECK(std::abs(w - 0.072329) < 1e-6);
}

TEST_CASE("work report fields") {
  const auto spec = SystemSpec::qubits(3, 1.0);
  const auto r = ergotropy(rho_sep(spec), spec);
  CHECK(std::abs(r.ergotropy - (r.initial_energy - r.passive_energy)) < 1e-15);
  REQUIRE(r.bound_nEbeta);
  CHECK(*r.bound_nEbeta == doctest::Approx(3 * oracle::excited_p(1.0)));
  REQUIRE(r.ratio_to_bound);
  CHECK(*r.ratio_to_bound == doctest::Approx(2.0 / 3));
  REQUIRE(r.bound_entropy);
  CHECK(r.ergotropy <= *r.bound_entropy + 1e-9);
  const auto plain = ergotropy(rho_sep(spec), build_hamiltonian(spec));
  CHECK_FALSE(plain.bound_nEbeta);
  CHECK_THROWS_AS(ergotropy(rho_sep(spec), std::vector<double>{0, 1}), ShapeError);
}

TEST_CASE("ergotropy of diagonal states matches exhaustive permutation") {
  Rng rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t dim = 2; dim <= 8; ++dim)
    for (int sample = 0; sample < 5; ++sample) {
      std::vector<double> h{0.0};
      for (std::size_t a = 1; a < dim; ++a) h.push_back(h.back() + (sample % 2 ? std::floor(3 * u(rng)) : u(rng)));
      std::vector<double> pop(dim);
      double total = 0.0;
      for (auto& x : pop) total += x = u(rng);
      for (auto& x : pop) x /= total;
      Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(pop.data(), static_cast<Eigen::Index>(dim));
      double initial = 0.0;
      for (std::size_t i = 0; i < dim; ++i) initial += pop[i] * h[i];
      const double expected = initial - oracle::brute_force_passive_energy(pop, h);
      CHECK(std::abs(ergotropy(DensityMatrix(HermitianMatrix::diagonal(diag)), h).ergotropy - expected) < 1e-12);
    }
}

TEST_CASE("ergotropy agrees with a dense oracle on random states") {
  Rng rng(23);
  for (int n = 1; n <= 4; ++n) {
    const auto spec = SystemSpec::qubits(n, 1.0);
    const auto h = build_hamiltonian(spec);
    for (int sample = 0; sample < 5; ++sample) {
      const auto rho = random_density_matrix(spec.dim(), rng);
      const double w = ergotropy(rho, h).ergotropy;
      CHECK(std::abs(w - oracle::ergotropy(rho.matrix().to_dense(), h)) < 1e-12);
      CHECK(w >= -1e-10);
    }
  }
}

TEST_CASE("passive energy is unitarily invariant") {
  Rng rng(29);
  for (std::size_t dim : {2, 4, 8, 16}) {
    std::vector<double> h;
    for (std::size_t i = 0; i < dim; ++i) h.push_back(static_cast<double>(__builtin_popcountll(i)));
    const auto rho = random_density_matrix(dim, rng);
    const auto a = ergotropy(rho, h);
    const auto b = ergotropy(apply_unitary(rho, random_unitary(dim, rng)), h);
    CHECK(std::abs(a.passive_energy - b.passive_energy) < 1e-9);
  }
}

TEST_CASE("is_passive") {
  const auto spec = SystemSpec::qubits(2, 1.0);
  const auto h = build_hamiltonian(spec);
  CHECK(is_passive(product_thermal(spec, 1.0), h));
  Eigen::VectorXd inverted(2);
  inverted << 0.2, 0.8;
  CHECK_FALSE(is_passive(DensityMatrix(HermitianMatrix::diagonal(inverted)), std::vector<double>{0, 1}));
  for (int n = 2; n <= 5; ++n) {
    const auto s = SystemSpec::qubits(n, 1.0);
    CHECK_FALSE(is_passive(rho_sep(s), build_hamiltonian(s)));
  }
  CHECK_FALSE(is_passive(entangled_phi(spec), h));
  // Degenerate levels accept any internal order.
  Eigen::VectorXd deg(4);
  deg << 0.5, 0.1, 0.3, 0.1;
  CHECK(is_passive(DensityMatrix(HermitianMatrix::diagonal(deg)), h));
}

TEST_CASE("beta_for_entropy") {
  const auto spec = SystemSpec::qubits(1, 1.0);
  CHECK(beta_for_entropy(spec, std::log(2.0)).beta_prime == 0.0);
  const auto pure = beta_for_entropy(spec, 0.0);
  CHECK(pure.beta_prime == doctest::Approx(1e6));
  CHECK(pure.entropy() < 1e-12);

  const auto t = beta_for_entropy(spec, 0.291101);
  const double oracle_p = oracle::scan_p_for_entropy(0.291101);
  CHECK(std::abs(t.excited_population() - oracle_p) < 2e-6);
  CHECK(std::abs(t.excited_population() - 0.0852) < 5e-4);
  CHECK(std::abs(t.entropy() - 0.291101) <= 1e-12);

  const SystemSpec qutrit(1, {0.0, 0.5, 2.0}, 1.0);
  for (double s : {0.05, 0.4, 0.9, 1.05}) CHECK(std::abs(beta_for_entropy(qutrit, s).entropy() - s) <= 1e-12);
  CHECK(beta_for_entropy(qutrit, 0.0).beta_prime == doctest::Approx(2e6));

  CHECK_THROWS_AS(beta_for_entropy(spec, -0.1), DomainError);
  CHECK_THROWS_AS(beta_for_entropy(spec, 0.8), DomainError);
}

TEST_CASE("ground-space degeneracy bounds the reachable entropy") {
  const SystemSpec degenerate(1, {0.0, 0.0, 1.0}, 1.0);
  CHECK_THROWS_AS(beta_for_entropy(degenerate, 0.1), DomainError);
  CHECK(std::abs(beta_for_entropy(degenerate, 0.9).entropy() - 0.9) <= 1e-12);
}

TEST_CASE("entropy-constrained bound") {
  const auto spec = SystemSpec::qubits(2, 1.0);
  const double s_tau = oracle::binary_entropy(oracle::excited_p(1.0));
  CHECK(std::abs(bound_entropy_constrained(spec, 2 * s_tau)) < 1e-10);
  CHECK(std::abs(bound_entropy_constrained(spec, 0.0) - max_work_bound(spec)) < 1e-12);

  const double p_prime = oracle::scan_p_for_entropy(s_tau / 2);
  const double expected = 2 * (oracle::excited_p(1.0) - p_prime);
  CHECK(std::abs(bound_entropy_constrained(spec, s_tau) - expected) < 5e-6);
  CHECK(std::abs(bound_entropy_constrained(spec, 0.582203) - 0.3675) < 2e-3);

  CHECK_THROWS_AS(bound_entropy_constrained(spec, -1.0), DomainError);
  CHECK_THROWS_AS(bound_entropy_constrained(spec, 2 * std::log(2.0) + 0.01), DomainError);
  // Entropy above n S(tau_beta) leaves the bound negative: heating costs work.
  CHECK(bound_entropy_constrained(spec, 2 * std::log(2.0)) < 0.0);
}

TEST_CASE("separable formula") {
  for (double beta : {0.2, 1.0, 3.0})
    for (int n = 1; n <= 12; ++n) {
      const auto spec = SystemSpec::qubits(n, beta);
      const double ratio = w_sep_formula(spec) / max_work_bound(spec);
      CHECK(std::abs(ratio - (1.0 - 1.0 / n)) < 1e-12);
    }
  CHECK(std::abs(w_sep_formula(SystemSpec::qubits(1, 1.0))) < 1e-15);
  CHECK(std::abs(w_sep_formula(SystemSpec::qubits(4, 1.0)) - 3 * oracle::excited_p(1.0)) < 1e-12);
  CHECK(std::abs(w_sep_formula(SystemSpec::qubits(4, 1.0)) - 0.806824) < 1e-5);
  CHECK_THROWS_AS(w_sep_formula(SystemSpec(2, {0.0, 1.0, 2.0, 3.0}, 1.0)), DomainError);
}

TEST_CASE("rho_sep reaches the separable formula for qubits and qutrits") {
  for (int d : {2, 3})
    for (int n = std::max(2, d - 1); n <= (d == 2 ? 10 : 7); ++n) {
      std::vector<double> ladder{0.0, 1.0, 1.4};
      ladder.resize(static_cast<std::size_t>(d));
      const SystemSpec spec(n, ladder, 0.8);
      CHECK(std::abs(ergotropy(rho_sep(spec), spec).ergotropy - w_sep_formula(spec)) < 1e-10);
    }
}
