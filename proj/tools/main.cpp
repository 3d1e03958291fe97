// corrwork: command-line front-end.
//
// Exit codes: 0 success, 1 verification or numerical failure, 2 usage error
// (bad flags, invalid parameters, unwritable output), 3 infeasible request.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corrwork/analysis.hpp"
#include "corrwork/commands.hpp"
#include "corrwork/protocols.hpp"
#include "corrwork/verify.hpp"

namespace {

using namespace corrwork;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

struct Globals {
  double beta = 1.0;
  std::vector<double> ladder;
  int n = 2;
  std::optional<int> d;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "csv";
  std::size_t dim_cap = kDefaultDimCap;
};

SystemSpec make_spec(const Globals& g, int n) {
  std::vector<double> ladder = g.ladder;
  if (ladder.empty()) {
    for (int a = 0; a < g.d.value_or(2); ++a) ladder.push_back(a);
  } else if (g.d && *g.d != static_cast<int>(ladder.size())) {
    throw DomainError("--d " + std::to_string(*g.d) + " disagrees with a " + std::to_string(ladder.size()) +
                      "-level --energy-ladder");
  }
  return {n, ladder, g.beta, g.dim_cap};
}

std::string opt_text(const std::optional<double>& x) { return x ? format_real(*x) : "n/a"; }

// csv / svg / both; with --out, "both" writes <stem>.csv and <stem>.svg.
void emit(const Globals& g, const CsvTable& table, const std::string& svg) {
  const bool csv = g.format != "svg";
  const bool plot = g.format != "csv";
  if (g.out.empty()) {
    if (csv) std::cout << emit_csv(table);
    if (plot) std::cout << svg;
    return;
  }
  if (g.format == "both") {
    const std::filesystem::path base(g.out);
    auto stem = base;
    stem.replace_extension();
    write_text_file(stem.string() + ".csv", emit_csv(table));
    write_text_file(stem.string() + ".svg", svg);
    std::cerr << "wrote " << stem.string() << ".csv and " << stem.string() << ".svg\n";
  } else {
    write_text_file(g.out, csv ? emit_csv(table) : svg);
    std::cerr << "wrote " << g.out << '\n';
  }
}

// Target ratio that makes the protocol output locally thermal at --beta.
double ratio_for_local_beta(const SystemSpec& spec, double beta_prime) {
  const double z_prime = thermal_bias(beta_prime, spec.gap());
  return z_prime > 0.0 ? thermal_bias(spec.beta(), spec.gap()) / z_prime : 1.0;
}

int cmd_figure1(const Globals& g, int n_max) {
  const double gap = g.ladder.size() >= 2 ? g.ladder[1] : 1.0;
  const double beta_E = g.beta * gap;
  const auto rows = figure1_rows(beta_E, n_max);
  emit(g, figure1_table(rows), figure1_svg(rows, beta_E));
  return 0;
}

int cmd_ergotropy(const Globals& g, const std::string& family_text, const FamilyParams& given,
                  bool ratio_given) {
  const auto family = parse_family(family_text);
  const auto spec = make_spec(g, g.n);
  FamilyParams params = given;
  if (family == Family::Protocol && !ratio_given)
    params.target_ratio = ratio_for_local_beta(spec, params.beta_prime.value_or(spec.beta()));
  const auto built = build_family_state(family, spec, params);
  const auto h = build_hamiltonian(spec);
  const auto work = built.beta_local ? ergotropy(built.state, spec.with_beta(*built.beta_local))
                                     : ergotropy(built.state, h);
  const double entropy = von_neumann_entropy(built.state);

  std::cout << "family = " << family_name(family) << '\n'
            << "n = " << spec.n() << '\n'
            << "d = " << spec.d() << '\n'
            << "beta = " << opt_text(built.beta_local) << '\n'
            << "initial_energy = " << format_real(work.initial_energy) << '\n'
            << "passive_energy = " << format_real(work.passive_energy) << '\n'
            << "ergotropy = " << format_real(work.ergotropy) << '\n'
            << "bound_nEbeta = " << opt_text(work.bound_nEbeta) << '\n'
            << "bound_entropy = " << opt_text(work.bound_entropy) << '\n'
            << "ratio_to_bound = " << opt_text(work.ratio_to_bound) << '\n'
            << "entropy = " << format_real(entropy) << '\n';
  if (built.omega)
    std::cout << "omega_D = " << built.omega->D << '\n'
              << "omega_gamma = " << format_real(built.omega->gamma) << '\n'
              << "omega_epsilon = " << format_real(built.omega->epsilon) << '\n'
              << "omega_delta = " << format_real(built.omega->delta) << '\n';
  if (built.residual) std::cout << "inversion_residual = " << format_real(*built.residual) << '\n';

  if (!g.out.empty()) {
    CsvTable t{{"family", "n", "d", "beta", "initial_energy", "passive_energy", "ergotropy", "bound_nEbeta",
                "bound_entropy", "entropy"},
               {}};
    const auto cell = [](const std::optional<double>& x) -> CsvCell {
      if (x) return *x;
      return std::monostate{};
    };
    t.rows.push_back({family_name(family), std::int64_t{spec.n()}, std::int64_t{spec.d()}, cell(built.beta_local),
                      work.initial_energy, work.passive_energy, work.ergotropy, cell(work.bound_nEbeta),
                      cell(work.bound_entropy), entropy});
    write_text_file(g.out, emit_csv(t));
  }
  return 0;
}

int cmd_verify(const Globals& g, const std::string& suite) {
  const auto report = run_verify(suite, g.seed);
  std::cout << format_report(report);
  return report.passed() ? 0 : kExitFailure;
}

int cmd_sweep(const Globals& g, SweepConfig config, const std::string& family_text) {
  config.family = parse_family(family_text);
  config.beta = g.beta;
  config.dim_cap = g.dim_cap;
  config.energies = g.ladder;
  config.d = g.ladder.empty() ? g.d.value_or(2) : static_cast<int>(g.ladder.size());
  if (g.d && *g.d != config.d) throw DomainError("--d disagrees with --energy-ladder");
  const auto table = run_sweep(config);
  emit(g, table, sweep_svg(table));
  return 0;
}

int cmd_protocol(const Globals& g, std::optional<double> beta_prime_opt, std::optional<double> ratio) {
  const auto spec = make_spec(g, g.n);
  const double beta_prime = beta_prime_opt.value_or(2.0 * spec.beta());
  const double z_prime = thermal_bias(beta_prime, spec.gap());
  const double target = ratio ? *ratio * z_prime : thermal_bias(spec.beta(), spec.gap());

  std::cout << "n = " << spec.n() << '\n'
            << "beta_prime = " << format_real(beta_prime) << '\n'
            << "z_prime = " << format_real(z_prime) << '\n'
            << "target_bias = " << format_real(target) << '\n';

  const auto seq = inversion_sequence_to_bias(spec, beta_prime, target);
  std::ostringstream levels;
  for (std::size_t k = 0; k < seq.levels.size(); ++k) levels << (k ? " " : "") << seq.levels[k];
  std::cout << "inversion_levels = " << levels.str() << '\n'
            << "inversion_bias = " << format_real(seq.achieved_bias) << '\n'
            << "inversion_residual = " << format_real(seq.residual) << '\n';

  const auto rot = prepare_locally_thermal(spec, beta_prime, target);
  const double alpha = 0.5 * std::acos(std::clamp(target / z_prime, -1.0, 1.0));
  const double s_total = spec.n() * thermal_params(spec, beta_prime).entropy();
  const double w = ergotropy(rot.state, build_hamiltonian(spec)).ergotropy;
  std::cout << "alpha = " << format_real(alpha) << '\n'
            << "rotation_bias = " << format_real(rot.achieved_bias) << '\n'
            << "beta_local = " << format_real(rot.beta_local) << '\n'
            << "entropy = " << format_real(s_total) << '\n'
            << "ergotropy = " << format_real(w) << '\n';
  if (rot.beta_local >= 0.0 && std::isfinite(rot.beta_local))
    std::cout << "bound_entropy = "
              << format_real(bound_entropy_constrained(spec.with_beta(rot.beta_local), s_total)) << '\n';
  if (spec.n() % 2 == 0) {
    const double lhs = b8_condition(spec, beta_prime, alpha);
    std::cout << "witness_lhs = " << format_real(lhs) << '\n';
    if (spec.n() <= kPptMaxN)
      std::cout << "ppt_min_eigenvalue = "
                << format_real(ppt_test(rot.state, spec, Bipartition::half_half(spec.n())).min_pt_eigenvalue) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Work storage in locally thermal correlated states"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file; flags given on the command line win");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Globals g;
  app.add_option("--beta", g.beta, "inverse temperature in units of 1/E_1")->check(CLI::NonNegativeNumber);
  app.add_option("--energy-ladder", g.ladder, "local energies E_0=0 <= E_1 <= ...")->delimiter(',');
  app.add_option("--n", g.n, "number of subsystems")->check(CLI::PositiveNumber);
  app.add_option("--d", g.d, "local dimension (ladder 0, 1, ..., d-1)")->check(CLI::Range(2, 64));
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--out", g.out, "output path (stdout when absent)");
  app.add_option("--format", g.format, "csv, svg or both")->check(CLI::IsMember({"csv", "svg", "both"}));
  app.add_option("--dim-cap", g.dim_cap, "largest global dimension")->check(CLI::PositiveNumber);

  auto* figure1 = app.add_subcommand("figure1", "work ratios of the three qubit families against n");
  figure1->fallthrough();
  int n_max = 20;
  figure1->add_option("--n-max", n_max, "largest n")->check(CLI::Range(2, 24));

  auto* ergo = app.add_subcommand("ergotropy", "ergotropy and bounds for one state family");
  ergo->fallthrough();
  std::string family = "phi";
  FamilyParams params;
  ergo->add_option("--family", family, "phi, sep, deg, omega or protocol");
  ergo->add_option("--s-total", params.s_total, "global entropy (omega)");
  ergo->add_option("--beta-prime", params.beta_prime, "product-state temperature (protocol)");
  auto* ratio_opt = ergo->add_option("--target-ratio", params.target_ratio, "target bias / z' (protocol)");

  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->fallthrough();
  std::string suite = "all";
  verify->add_option("suite", suite, "all, passivity, protocols, entanglement or bounds")
      ->check(CLI::IsMember({"all", "passivity", "protocols", "entanglement", "bounds"}));

  auto* sweep = app.add_subcommand("sweep", "one family over a range of n");
  sweep->fallthrough();
  SweepConfig config;
  std::string sweep_family = "phi";
  sweep->add_option("--family", sweep_family, "phi, sep, deg, omega or protocol");
  sweep->add_option("--n-min", config.n_min, "first n");
  sweep->add_option("--n-max", config.n_max, "last n");
  sweep->add_option("--s-total", config.s_total, "global entropy (omega)");
  sweep->add_option("--beta-prime", config.beta_prime, "product-state temperature (protocol)");
  sweep->add_option("--targets", config.target_ratios, "target bias / z' grid (protocol)")->delimiter(',');
  sweep->add_flag("--ppt", config.ppt, "half-half partial-transpose minimum eigenvalue for n <= 8");

  auto* protocol = app.add_subcommand("protocol", "prepare a locally thermal state from tau_beta'");
  protocol->fallthrough();
  std::optional<double> beta_prime;
  std::optional<double> target_ratio;
  protocol->add_option("--beta-prime", beta_prime, "product-state temperature (default 2 beta)");
  protocol->add_option("--target-ratio", target_ratio, "target bias / z' instead of tanh(beta E / 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*figure1) return cmd_figure1(g, n_max);
    if (*ergo) return cmd_ergotropy(g, family, params, ratio_opt->count() > 0);
    if (*verify) return cmd_verify(g, suite);
    if (*sweep) return cmd_sweep(g, config, sweep_family);
    if (*protocol) return cmd_protocol(g, beta_prime, target_ratio);
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const UnreachableBiasError& e) {
    std::cerr << "unreachable: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
