#include "dicke3/cli/app.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dicke3/cli/config.hpp"
#include "dicke3/cli/figures.hpp"
#include "dicke3/cli/table.hpp"
#include "dicke3/cli/verify.hpp"
#include "dicke3/errors.hpp"
#include "dicke3/sweep.hpp"
#include "dicke3/variational.hpp"

namespace dicke3::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kVersion = "0.1.0";

/// Raw flag text; a flag only overrides the config when it was given.
struct Flags {
  std::string config_path;
  std::string write_config;

  std::string gauge, eta, omega, Omega, g, n, phi;
  std::string g_min, g_max, g_count, eta_min, eta_max, eta_count, x_min, x_max, x_count;
  std::string out_dir, format, tol, max_dim, dense_threshold, cell_budget, ed_budget, workers;
  std::string samples, seed;
  std::string target;
  bool json = false;

  std::map<std::string, CLI::Option*> given;

  bool has(const std::string& name) const {
    auto it = given.find(name);
    return it != given.end() && it->second->count() > 0;
  }
};

std::string flag_for(const std::string& field) {
  static const std::map<std::string, std::string> names{
      {"G", "--g"},
      {"N", "--n"},
      {"atoms", "--n"},
      {"eta", "--eta"},
      {"omega", "--omega"},
      {"Omega", "--Omega"},
      {"phi", "--phi"},
      {"gauge", "--gauge"},
      {"tol", "--tol"},
      {"format", "--format"},
      {"samples", "--samples"},
      {"seed", "--seed"},
      {"workers", "--workers"},
      {"cell_budget", "--cell-budget"},
      {"ed_budget", "--ed-budget"},
      {"max_dimension", "--max-dim"},
      {"dense_threshold", "--dense-threshold"},
      {"g_axis", "--g-min/--g-max/--g-count"},
      {"eta_axis", "--eta-min/--eta-max/--eta-count"},
      {"x_axis", "--x-min/--x-max/--x-count"},
      {"g_min", "--g-min"},
      {"g_max", "--g-max"},
      {"g_count", "--g-count"},
      {"eta_min", "--eta-min"},
      {"eta_max", "--eta-max"},
      {"eta_count", "--eta-count"},
      {"x_min", "--x-min"},
      {"x_max", "--x-max"},
      {"x_count", "--x-count"},
      {"figure", "<figure id>"},
      {"scope", "<scope>"},
      {"config", "--config"},
  };
  auto it = names.find(field);
  return it != names.end() ? it->second : field;
}

void add_model_flags(CLI::App* cmd, Flags& f) {
  f.given["gauge"] = cmd->add_option("--gauge", f.gauge, "coulomb | dipole | unified | nh-unified");
  f.given["eta"] = cmd->add_option("--eta", f.eta, "detuning ratio omega/Omega");
  f.given["omega"] = cmd->add_option("--omega", f.omega, "field frequency");
  f.given["Omega"] = cmd->add_option("--Omega", f.Omega, "atomic level splitting");
  f.given["g"] = cmd->add_option("--g", f.g, "dimensionless coupling G >= 0");
  f.given["phi"] = cmd->add_option("--phi", f.phi, "cavity-field phase (radians, or pi/6, pi/4, pi/3, pi/2)");
}

void add_budget_flags(CLI::App* cmd, Flags& f) {
  f.given["workers"] = cmd->add_option("--workers", f.workers, "worker threads (0 = hardware)");
  f.given["cell_budget"] = cmd->add_option("--cell-budget", f.cell_budget, "maximum sweep cells");
}

void add_axis_flags(CLI::App* cmd, Flags& f) {
  for (auto [name, target] : std::initializer_list<std::pair<const char*, std::string*>>{
           {"g-min", &f.g_min},   {"g-max", &f.g_max},   {"g-count", &f.g_count},
           {"eta-min", &f.eta_min}, {"eta-max", &f.eta_max}, {"eta-count", &f.eta_count},
           {"x-min", &f.x_min},   {"x-max", &f.x_max},   {"x-count", &f.x_count}}) {
    f.given[name] = cmd->add_option(std::string("--") + name, *target, "axis override");
  }
}

int parse_int(const std::string& text, const std::string& field) {
  const auto list = parse_int_list(text, field);
  if (list.size() != 1) throw ValidationError({field}, field + ": expected a single integer");
  if (list[0] < std::numeric_limits<int>::min() || list[0] > std::numeric_limits<int>::max())
    throw ValidationError({field}, field + ": out of range");
  return static_cast<int>(list[0]);
}

std::size_t parse_size(const std::string& text, const std::string& field) {
  const auto list = parse_int_list(text, field);
  if (list.size() != 1 || list[0] < 0) throw ValidationError({field}, field + ": expected a non-negative integer");
  return static_cast<std::size_t>(list[0]);
}

void apply_flags(RunConfig& cfg, const Flags& f, const std::string& subcommand) {
  if (f.has("gauge")) cfg.gauge = f.gauge;
  if (f.has("eta")) cfg.eta = parse_number(f.eta, "eta");
  if (f.has("omega")) cfg.omega = parse_number(f.omega, "omega");
  if (f.has("Omega")) cfg.Omega = parse_number(f.Omega, "Omega");
  if (f.has("g")) cfg.G = parse_number(f.g, "G");
  if (f.has("phi")) {
    (void)parse_angle(f.phi, "phi");
    cfg.phi = f.phi;
  }
  if (f.has("n")) {
    if (subcommand == "ed") {
      cfg.atom_counts = parse_int_list(f.n, "atoms");
    } else {
      cfg.N = parse_int(f.n, "N");
    }
  }
  auto bound = [&](const char* key, const char* field, const std::string& text, std::optional<double>& slot) {
    if (f.has(key)) slot = parse_number(text, field);
  };
  auto count = [&](const char* key, const char* field, const std::string& text, std::optional<int>& slot) {
    if (f.has(key)) slot = parse_int(text, field);
  };
  bound("g-min", "g_min", f.g_min, cfg.g_axis.min);
  bound("g-max", "g_max", f.g_max, cfg.g_axis.max);
  count("g-count", "g_count", f.g_count, cfg.g_axis.count);
  bound("eta-min", "eta_min", f.eta_min, cfg.eta_axis.min);
  bound("eta-max", "eta_max", f.eta_max, cfg.eta_axis.max);
  count("eta-count", "eta_count", f.eta_count, cfg.eta_axis.count);
  bound("x-min", "x_min", f.x_min, cfg.x_axis.min);
  bound("x-max", "x_max", f.x_max, cfg.x_axis.max);
  count("x-count", "x_count", f.x_count, cfg.x_axis.count);
  if (f.has("out")) cfg.out_dir = f.out_dir;
  if (f.has("format")) cfg.format = f.format;
  if (f.has("tol")) cfg.ed_tol = parse_number(f.tol, "tol");
  if (f.has("max_dim")) cfg.max_dimension = parse_size(f.max_dim, "max_dimension");
  if (f.has("dense_threshold")) cfg.dense_threshold = parse_size(f.dense_threshold, "dense_threshold");
  if (f.has("cell_budget")) cfg.cell_budget = parse_size(f.cell_budget, "cell_budget");
  if (f.has("ed_budget")) cfg.ed_budget = parse_size(f.ed_budget, "ed_budget");
  if (f.has("workers")) cfg.workers = static_cast<unsigned>(parse_size(f.workers, "workers"));
  if (f.has("samples")) cfg.samples = parse_int(f.samples, "samples");
  if (f.has("seed")) cfg.seed = static_cast<std::uint64_t>(parse_size(f.seed, "seed"));
  if (f.has("target")) cfg.target = f.target;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path.string());
  file << text;
  if (!file) throw std::runtime_error("failed writing " + path.string());
}

void require_format(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json")
    throw ValidationError({"format"}, "format: expected csv or json, got '" + cfg.format + "'");
}

std::string pretty(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

nlohmann::json solution_json(const VariationalSolution& s) {
  nlohmann::json j{{"phase", to_string(s.phase)},
                   {"gamma_c", s.gamma_c},
                   {"n_p", s.n_p},
                   {"energy", s.energy.real()},
                   {"delta_na", s.delta_na},
                   {"berry_per_atom", s.berry_per_atom},
                   {"stability", s.stability},
                   {"atom_energy", s.atom_energy}};
  if (s.unstable) {
    j["unstable"] = {{"phase", to_string(s.unstable->phase)},
                     {"gamma_c", s.unstable->gamma_c},
                     {"n_p", s.unstable->n_p},
                     {"energy", s.unstable->energy},
                     {"berry_per_atom", s.unstable->berry_per_atom},
                     {"stability", s.unstable->stability},
                     {"atom_energy", s.unstable->atom_energy}};
  }
  return j;
}

int cmd_point(const RunConfig& cfg, bool json, std::ostream& out) {
  const Gauge gauge = config_gauge(cfg);
  const ModelParams p = validate_params(raw_params(cfg));
  const VariationalSolution s = solve_ground_state(gauge, p);
  const double gc = critical_coupling(gauge, p);

  if (json) {
    nlohmann::json j{{"config", to_json(cfg)},
                     {"params",
                      {{"gauge", to_string(gauge)},
                       {"omega", p.omega()},
                       {"Omega", p.Omega()},
                       {"eta", p.eta()},
                       {"G", p.G()},
                       {"N", p.N()},
                       {"phi", p.phi()}}},
                     {"G_c", gc},
                     {"result", solution_json(s)}};
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  out << "gauge           " << to_string(gauge) << '\n'
      << "eta             " << pretty(p.eta()) << "  (omega=" << pretty(p.omega())
      << ", Omega=" << pretty(p.Omega()) << ")\n"
      << "G               " << pretty(p.G()) << '\n'
      << "N               " << p.N() << '\n'
      << "phi             " << pretty(p.phi()) << '\n'
      << "G_c             " << pretty(gc) << '\n'
      << "phase           " << to_string(s.phase) << '\n'
      << "gamma_c         " << pretty(s.gamma_c) << '\n'
      << "n_p             " << pretty(s.n_p) << '\n'
      << "energy          " << pretty(s.energy.real()) << '\n'
      << "delta_na        " << pretty(s.delta_na) << '\n'
      << "berry_per_atom  " << pretty(s.berry_per_atom) << '\n'
      << "stability       " << pretty(s.stability) << '\n'
      << "atom_energy     " << pretty(s.atom_energy) << '\n';
  if (s.unstable) {
    out << "unstable        " << to_string(s.unstable->phase) << ": gamma_c=" << pretty(s.unstable->gamma_c)
        << " n_p=" << pretty(s.unstable->n_p) << " energy=" << pretty(s.unstable->energy)
        << " stability=" << pretty(s.unstable->stability)
        << " atom_energy=" << pretty(s.unstable->atom_energy) << '\n';
  } else if (!is_hermitian(gauge)) {
    out << "unstable        none (G >= G_c)\n";
  }
  return kExitOk;
}

int cmd_figure(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg);
  if (cfg.target.empty()) {
    std::string valid;
    for (const auto& id : figure_ids()) valid += (valid.empty() ? "" : ", ") + id;
    throw ValidationError({"figure"}, "missing figure id; valid ids: " + valid);
  }
  const FigureOutput fig = build_figure(cfg.target, cfg);

  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  nlohmann::json panels = nlohmann::json::array();
  for (const auto& panel : fig.panels) {
    const std::string name = fig.id + "_" + panel.id + "." + cfg.format;
    std::ostringstream body;
    if (cfg.format == "csv") {
      write_csv(body, panel.table);
    } else {
      body << to_json(panel.table).dump() << '\n';
    }
    write_text_file(dir / name, body.str());
    panels.push_back({{"id", panel.id},
                      {"file", name},
                      {"description", panel.description},
                      {"columns", panel.table.columns},
                      {"rows", panel.table.rows.size()}});
    out << "wrote " << (dir / name).string() << '\n';
  }

  nlohmann::json sidecar{{"figure", fig.id},
                         {"version", kVersion},
                         {"generated_at", utc_timestamp()},
                         {"config", to_json(cfg)},
                         {"cells", fig.cells},
                         {"energy_unit", "Omega"},
                         {"panels", std::move(panels)},
                         {"annotations", fig.annotations}};
  const fs::path meta = dir / (fig.id + ".json");
  write_text_file(meta, sidecar.dump(2) + "\n");
  out << "wrote " << meta.string() << '\n';
  return kExitOk;
}

int cmd_ed(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg);
  const Gauge gauge = config_gauge(cfg);
  if (!is_hermitian(gauge))
    throw ValidationError({"gauge"}, "gauge: ed compares ground states and needs a Hermitian gauge");
  const ModelParams p = validate_params(raw_params(cfg));

  SweepSpec spec;
  spec.gauge = gauge;
  spec.eta = p.eta();
  spec.phi = p.phi();
  spec.coupling = p.G();
  spec.ed_tolerance = cfg.ed_tol;
  spec.ed_budget = cfg.ed_budget;
  if (!(cfg.ed_tol > 0.0)) throw ValidationError({"tol"}, "tol: must be > 0");
  const std::vector<long long> counts =
      cfg.atom_counts.empty() ? std::vector<long long>{cfg.N} : cfg.atom_counts;
  for (long long n : counts) {
    if (n < 1 || n > std::numeric_limits<int>::max())
      throw ValidationError({"atoms"}, "atoms: every N must be a positive integer");
    spec.atom_counts.push_back(static_cast<int>(n));
  }

  const auto rows = ed_compare(spec, cfg.ed_limits());

  Table table;
  table.columns = {"N",          "n_max_used",       "converged",          "e0_per_atom",
                   "eps_variational", "gap",          "n_p_ed",             "n_p_variational",
                   "delta_na_ed", "delta_na_variational", "cutoff_change", "tail_population",
                   "note"};
  int failed = 0;
  for (const auto& r : rows) {
    if (!r.ok) {
      ++failed;
      err << "warning: N=" << r.N << " " << r.note << '\n';
      table.add({static_cast<long long>(r.N), Cell{}, std::string("false"), Cell{}, r.eps_variational, Cell{},
                 Cell{}, r.n_p_variational, Cell{}, r.delta_na_variational, Cell{}, Cell{}, r.note});
      continue;
    }
    table.add({static_cast<long long>(r.N), static_cast<long long>(r.n_max_used),
               std::string(r.converged ? "true" : "false"), r.e0_per_atom, r.eps_variational, r.gap, r.n_p_ed,
               r.n_p_variational, r.delta_na_ed, r.delta_na_variational, r.cutoff_change, r.tail_population,
               r.note});
  }

  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  const std::string stem = "ed_" + std::string(to_string(gauge));
  std::ostringstream body;
  if (cfg.format == "csv") {
    write_csv(body, table);
  } else {
    body << to_json(table).dump() << '\n';
  }
  write_text_file(dir / (stem + "." + cfg.format), body.str());

  nlohmann::json meta_rows = nlohmann::json::array();
  for (const auto& r : rows)
    meta_rows.push_back({{"N", r.N}, {"ok", r.ok}, {"converged", r.converged}, {"n_max_used", r.n_max_used},
                         {"note", r.note}});
  const EdLimits limits = cfg.ed_limits();
  nlohmann::json sidecar{{"command", "ed"},
                         {"version", kVersion},
                         {"generated_at", utc_timestamp()},
                         {"config", to_json(cfg)},
                         {"limits",
                          {{"max_dimension", limits.max_dimension},
                           {"dense_threshold", limits.dense_threshold},
                           {"lanczos_basis", limits.lanczos_basis},
                           {"lanczos_restarts", limits.lanczos_restarts},
                           {"lanczos_tolerance", limits.lanczos_tolerance}}},
                         {"rows", std::move(meta_rows)}};
  const std::string meta_name = cfg.format == "json" ? stem + ".meta.json" : stem + ".json";
  write_text_file(dir / meta_name, sidecar.dump(2) + "\n");

  write_csv(out, table);
  if (failed == static_cast<int>(rows.size())) {
    err << "error: every ED row failed\n";
    return kExitEdFailed;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::string scope = cfg.target.empty() ? "all" : cfg.target;
  const VerifyReport report = run_verify(scope, cfg.samples, cfg.seed);
  print_report(out, report);
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"variational and exact-diagonalization study of N three-level atoms in a cavity", "dicke3"};
  app.set_version_flag("--version", kVersion);
  Flags f;
  f.given["config"] = app.add_option("--config", f.config_path, "INI run configuration");
  app.add_option("--write-config", f.write_config, "write the effective configuration to this file");

  CLI::App* point = app.add_subcommand("point", "variational ground state at one parameter point");
  add_model_flags(point, f);
  f.given["n"] = point->add_option("--n", f.n, "atom count N");
  point->add_flag("--json", f.json, "print a JSON record instead of the summary");

  CLI::App* figure = app.add_subcommand("figure", "write the data behind a figure (fig2 .. fig10)");
  f.given["target"] = figure->add_option("id", f.target, "figure id");
  f.given["n_figure"] = figure->add_option("--n", f.n, "atom count N");
  f.given["out"] = figure->add_option("--out", f.out_dir, "output directory");
  f.given["format"] = figure->add_option("--format", f.format, "csv | json");
  add_axis_flags(figure, f);
  add_budget_flags(figure, f);

  CLI::App* ed = app.add_subcommand("ed", "exact diagonalization against the variational result");
  add_model_flags(ed, f);
  f.given["n_ed"] = ed->add_option("--n", f.n, "comma-separated atom counts, e.g. 2,4,8");
  f.given["tol"] = ed->add_option("--tol", f.tol, "per-atom cutoff convergence tolerance");
  f.given["out_ed"] = ed->add_option("--out", f.out_dir, "output directory");
  f.given["format_ed"] = ed->add_option("--format", f.format, "csv | json");
  f.given["max_dim"] = ed->add_option("--max-dim", f.max_dim, "largest Hilbert-space dimension");
  f.given["dense_threshold"] = ed->add_option("--dense-threshold", f.dense_threshold, "dense solver up to this dimension");
  f.given["ed_budget"] = ed->add_option("--ed-budget", f.ed_budget, "maximum ED solves per table");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites on random samples");
  f.given["target_verify"] = verify->add_option("scope", f.target, "all | model | gauge-reduction | resonance | berry | offdiag | ep | extremum | stability | continuity | ed");
  f.given["samples"] = verify->add_option("--samples", f.samples, "samples per check");
  f.given["seed"] = verify->add_option("--seed", f.seed, "random seed");

  app.require_subcommand(0, 1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  // Options registered on several subcommands share one text slot; fold the
  // per-subcommand handles into the names apply_flags() looks up.
  for (auto [alias, name] : std::initializer_list<std::pair<const char*, const char*>>{
           {"n_figure", "n"}, {"n_ed", "n"}, {"out_ed", "out"}, {"format_ed", "format"},
           {"target_verify", "target"}}) {
    if (f.given[alias]->count() > 0) f.given[name] = f.given[alias];
  }
  for (CLI::App* sub : {point, ed}) {
    for (const char* name : {"gauge", "eta", "omega", "Omega", "g", "phi"}) {
      CLI::Option* opt = sub->get_option("--" + std::string(name));
      if (opt->count() > 0) f.given[name] = opt;
    }
  }

  std::string subcommand;
  for (CLI::App* sub : {point, figure, ed, verify})
    if (sub->parsed()) subcommand = sub->get_name();

  try {
    RunConfig cfg;
    if (!f.config_path.empty()) cfg = load_config_file(f.config_path);
    if (subcommand.empty()) subcommand = cfg.subcommand;
    if (subcommand.empty()) {
      err << "error: a subcommand is required (point, figure, ed, verify)\n" << app.help();
      return kExitValidation;
    }
    if (subcommand != cfg.subcommand) cfg.target.clear();
    apply_environment(cfg);
    apply_flags(cfg, f, subcommand);
    cfg.subcommand = subcommand;

    if (!f.write_config.empty()) {
      std::ofstream file(f.write_config);
      if (!file) throw std::runtime_error("cannot write " + f.write_config);
      write_config(file, cfg);
    }

    if (subcommand == "point") return cmd_point(cfg, f.json, out);
    if (subcommand == "figure") return cmd_figure(cfg, out);
    if (subcommand == "ed") return cmd_ed(cfg, out, err);
    if (subcommand == "verify") return cmd_verify(cfg, out);
    err << "error: unknown subcommand '" << subcommand << "' in config\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::string flags;
    for (const auto& field : e.fields()) flags += (flags.empty() ? "" : ", ") + flag_for(field);
    err << "error: invalid " << flags << ": " << e.what() << '\n';
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace dicke3::cli
