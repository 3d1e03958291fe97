#include "corrwork/commands.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "corrwork/analysis.hpp"
#include "corrwork/protocols.hpp"

namespace corrwork {
namespace {

CsvCell opt_cell(const std::optional<double>& x) {
  if (x) return *x;
  return std::monostate{};
}

double ratio(double w, double bound) { return bound > 0.0 ? w / bound : 0.0; }

}  // namespace

std::vector<Figure1Row> figure1_rows(double beta_E, int n_max) {
  if (n_max < 2) throw DomainError("figure1 needs n_max >= 2");
  if (n_max > 24) throw CapacityError("figure1 is limited to n_max <= 24");
  if (!(beta_E > 0.0) || !std::isfinite(beta_E)) throw DomainError("figure1 needs a positive finite beta E");
  const std::size_t cap = std::max(kDefaultDimCap, std::size_t{1} << n_max);
  std::vector<Figure1Row> rows;
  for (int n = 1; n <= n_max; ++n) {
    const auto spec = SystemSpec::qubits(n, beta_E, 1.0, cap);
    const double bound = max_work_bound(spec);
    const auto phi = phi_formula_state(spec);
    const double s_local = thermal_params(spec, beta_E).entropy();
    rows.push_back({n, ratio(ergotropy(phi, build_hamiltonian(spec)).ergotropy, bound),
                    ratio(w_sep_formula(spec), bound),
                    ratio(bound_entropy_constrained(spec, s_local), bound)});
  }
  return rows;
}

CsvTable figure1_table(const std::vector<Figure1Row>& rows) {
  CsvTable t{{"n", "w_phi_ratio", "w_sep_ratio", "w_entropy_ratio"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({std::int64_t{r.n}, r.w_phi_ratio, r.w_sep_ratio, r.w_entropy_ratio});
  return t;
}

std::string figure1_svg(const std::vector<Figure1Row>& rows, double beta_E) {
  PlotSeries phi{"entangled phi", {}, {}}, sep{"separable", {}, {}}, ent{"entropy bound", {}, {}};
  for (const auto& r : rows) {
    for (auto* s : {&phi, &sep, &ent}) s->x.push_back(r.n);
    phi.y.push_back(r.w_phi_ratio);
    sep.y.push_back(r.w_sep_ratio);
    ent.y.push_back(r.w_entropy_ratio);
  }
  return svg_line_plot({phi, sep, ent},
                       {"W / (n E_beta), beta E = " + format_real(beta_E), "n", "W / (n E_beta)"});
}

Family parse_family(std::string_view name) {
  if (name == "phi") return Family::Phi;
  if (name == "sep") return Family::Sep;
  if (name == "deg") return Family::Deg;
  if (name == "omega") return Family::Omega;
  if (name == "protocol") return Family::Protocol;
  throw DomainError("unknown family '" + std::string(name) + "' (phi, sep, deg, omega, protocol)");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Phi: return "phi";
    case Family::Sep: return "sep";
    case Family::Deg: return "deg";
    case Family::Omega: return "omega";
    case Family::Protocol: return "protocol";
  }
  return "?";
}

BuiltState build_family_state(Family family, const SystemSpec& spec, const FamilyParams& params) {
  switch (family) {
    case Family::Phi: return {entangled_phi(spec), spec.beta(), {}, {}, {}};
    case Family::Sep: return {rho_sep(spec), spec.beta(), {}, {}, {}};
    case Family::Deg: return {rho_deg(spec), spec.beta(), {}, {}, {}};
    case Family::Omega: {
      if (!params.s_total) throw DomainError("the omega family needs a total entropy");
      auto [state, omega] = omega_state(spec, *params.s_total);
      return {std::move(state), spec.beta(), *params.s_total, omega, {}};
    }
    case Family::Protocol: {
      const double beta_prime = params.beta_prime.value_or(spec.beta());
      if (!(beta_prime >= 0.0)) throw DomainError("beta' must be nonnegative");
      const double target = params.target_ratio * thermal_bias(beta_prime, spec.gap());
      auto prepared = prepare_locally_thermal(spec, beta_prime, target);
      const auto inverted = inversion_sequence_to_bias(spec, beta_prime, target);
      std::optional<double> beta_local;
      if (prepared.beta_local >= 0.0 && std::isfinite(prepared.beta_local)) beta_local = prepared.beta_local;
      return {std::move(prepared.state), beta_local, target, {}, inverted.residual};
    }
  }
  throw DomainError("unknown family");
}

CellReport evaluate_cell(Family family, const SystemSpec& spec, const FamilyParams& params,
                         bool want_ppt) {
  CellReport cell;
  if (family == Family::Omega) cell.param = params.s_total;
  try {
    auto built = build_family_state(family, spec, params);
    cell.beta_local = built.beta_local;
    cell.param = built.param;
    cell.omega = built.omega;
    cell.residual = built.residual;
    const auto h = build_hamiltonian(spec);
    if (built.beta_local) {
      const auto local = spec.with_beta(*built.beta_local);
      cell.work = ergotropy(built.state, local);
      cell.entropy = von_neumann_entropy(built.state);
      if (*built.beta_local > 0.0) {
        try {
          cell.bound_bath = bath_extractable_work(local, *cell.entropy);
        } catch (const DomainError&) {
        }
      }
    } else {
      cell.work = ergotropy(built.state, h);
      cell.entropy = von_neumann_entropy(built.state);
    }
    if (want_ppt && spec.n() >= 2 && spec.n() <= kPptMaxN)
      cell.ppt_min_eigenvalue =
          ppt_test(built.state, spec, Bipartition::half_half(spec.n())).min_pt_eigenvalue;
  } catch (const InfeasibleError& e) {
    cell.status = "infeasible";
    cell.message = e.what();
  } catch (const UnsupportedError& e) {
    cell.status = "unsupported";
    cell.message = e.what();
  } catch (const UnreachableBiasError& e) {
    cell.status = "unreachable";
    cell.message = e.what();
  } catch (const CapacityError& e) {
    cell.status = "capacity";
    cell.message = e.what();
  } catch (const DomainError& e) {
    cell.status = "domain";
    cell.message = e.what();
  }
  return cell;
}

void SweepConfig::validate() const {
  if (n_min < 1 || n_max < n_min) throw DomainError("sweep n range is empty");
  if (d < 2) throw DomainError("sweep needs d >= 2");
  if (!std::isfinite(beta) || beta < 0.0) throw DomainError("sweep beta must be finite and nonnegative");
  if (!energies.empty() && static_cast<int>(energies.size()) != d)
    throw DomainError("energy ladder has " + std::to_string(energies.size()) + " levels, d = " +
                      std::to_string(d));
  for (double e : energies)
    if (!std::isfinite(e)) throw DomainError("energy ladder entries must be finite");
  if (s_total && !std::isfinite(*s_total)) throw DomainError("S_total must be finite");
  if (beta_prime && !std::isfinite(*beta_prime)) throw DomainError("beta' must be finite");
  for (double r : target_ratios)
    if (!std::isfinite(r)) throw DomainError("target ratios must be finite");
  if (family == Family::Protocol && target_ratios.empty()) throw DomainError("protocol sweep needs target ratios");
}

std::vector<double> SweepConfig::ladder() const {
  if (!energies.empty()) return energies;
  std::vector<double> e;
  for (int a = 0; a < d; ++a) e.push_back(a);
  return e;
}

CsvTable run_sweep(const SweepConfig& config) {
  config.validate();
  CsvTable t{{"family", "n", "d", "beta", "param", "status", "initial_energy", "passive_energy", "ergotropy",
              "bound_nEbeta", "bound_entropy", "bound_bath", "entropy", "residual", "ppt_min_eig"},
             {}};
  const auto name = family_name(config.family);
  std::vector<FamilyParams> grid;
  if (config.family == Family::Protocol) {
    for (double r : config.target_ratios) grid.push_back({config.s_total, config.beta_prime, r});
  } else {
    grid.push_back({config.s_total, config.beta_prime, 1.0});
  }
  for (int n = config.n_min; n <= config.n_max; ++n) {
    for (const auto& params : grid) {
      std::vector<CsvCell> row{name, std::int64_t{n}, std::int64_t{config.d}};
      CellReport cell;
      try {
        const SystemSpec spec(n, config.ladder(), config.beta, config.dim_cap);
        cell = evaluate_cell(config.family, spec, params, config.ppt);
      } catch (const CapacityError& e) {
        cell.status = "capacity";
      }
      if (config.family == Family::Protocol && !cell.param) cell.param = params.target_ratio;
      const bool ok = cell.status == "ok";
      row.push_back(ok ? opt_cell(cell.beta_local) : CsvCell{config.beta});
      row.push_back(opt_cell(cell.param));
      row.push_back(cell.status);
      if (ok) {
        row.push_back(cell.work.initial_energy);
        row.push_back(cell.work.passive_energy);
        row.push_back(cell.work.ergotropy);
        row.push_back(opt_cell(cell.work.bound_nEbeta));
        row.push_back(opt_cell(cell.work.bound_entropy));
        row.push_back(opt_cell(cell.bound_bath));
        row.push_back(opt_cell(cell.entropy));
        row.push_back(opt_cell(cell.residual));
        row.push_back(opt_cell(cell.ppt_min_eigenvalue));
      } else {
        row.resize(t.columns.size());
      }
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

std::string sweep_svg(const CsvTable& table) {
  const auto col = [&](std::string_view name) {
    const auto it = std::find(table.columns.begin(), table.columns.end(), name);
    if (it == table.columns.end()) throw ShapeError("sweep table lacks column " + std::string(name));
    return static_cast<std::size_t>(it - table.columns.begin());
  };
  const auto c_n = col("n"), c_param = col("param"), c_w = col("ergotropy"), c_b = col("bound_nEbeta");
  std::map<std::string, PlotSeries> by_param;
  std::vector<std::string> order;
  std::string family;
  for (const auto& row : table.rows) {
    if (family.empty()) family = std::get<std::string>(row[0]);
    const auto* w = std::get_if<double>(&row[c_w]);
    const auto* b = std::get_if<double>(&row[c_b]);
    if (!w) continue;
    const auto* p = std::get_if<double>(&row[c_param]);
    const std::string key = p ? "param " + format_real(*p) : family;
    if (!by_param.count(key)) {
      order.push_back(key);
      by_param[key].name = key;
    }
    auto& s = by_param[key];
    s.x.push_back(static_cast<double>(std::get<std::int64_t>(row[c_n])));
    s.y.push_back(b && *b > 0.0 ? *w / *b : *w);
  }
  std::vector<PlotSeries> series;
  for (const auto& k : order) series.push_back(by_param[k]);
  return svg_line_plot(series, {"sweep: " + family, "n", "W / (n E_beta)"});
}

}  // namespace corrwork
