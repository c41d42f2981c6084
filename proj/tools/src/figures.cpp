#include "dicke3/cli/figures.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "dicke3/errors.hpp"
#include "dicke3/sweep.hpp"
#include "dicke3/variational.hpp"

namespace dicke3::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::array<double, 3> kDetunings{0.5, 1.0, 1.5};
constexpr std::array<double, 3> kPhases{kPi / 6, kPi / 4, kPi / 3};
constexpr std::array<const char*, 3> kPhaseNames{"pi/6", "pi/4", "pi/3"};

struct Observable {
  const char* column;
  const char* description;
  double (*get)(const SweepRecord&);
};

const std::array<Observable, 3> kGroundObservables{{
    {"eps_minus", "per-atom energy", [](const SweepRecord& r) { return r.energy; }},
    {"n_p", "photons per atom", [](const SweepRecord& r) { return r.n_p; }},
    {"delta_na", "population imbalance", [](const SweepRecord& r) { return r.delta_na; }},
}};

Axis axis_from(const AxisOverride& o, const char* name, double min, double max, int count) {
  try {
    return Axis::linear(o.min.value_or(min), o.max.value_or(max), o.count.value_or(count));
  } catch (const ValidationError& e) {
    throw ValidationError({std::string(name) + "_axis"}, std::string(name) + " axis: " + e.what());
  }
}

Axis curve_g_axis(const RunConfig& cfg) { return axis_from(cfg.g_axis, "g", 0.0, 2.0, 201); }
Axis diagram_g_axis(const RunConfig& cfg) { return axis_from(cfg.g_axis, "g", 0.0, 1.5, 201); }
Axis diagram_eta_axis(const RunConfig& cfg) { return axis_from(cfg.eta_axis, "eta", 0.2, 2.0, 201); }
Axis density_axis(const RunConfig& cfg) { return axis_from(cfg.x_axis, "x", 0.0, 2.0, 201); }

SweepSpec base_spec(const RunConfig& cfg, Gauge gauge) {
  if (cfg.N < 1 || cfg.N > std::numeric_limits<int>::max())
    throw ValidationError({"N"}, "N: atom count must be >= 1");
  SweepSpec s;
  s.gauge = gauge;
  s.atoms = static_cast<int>(cfg.N);
  s.workers = cfg.workers;
  s.cell_budget = cfg.cell_budget;
  return s;
}

/// Checks the combined plan against the budget before any sweep runs.
std::size_t plan(const std::vector<std::pair<const SweepSpec*, bool>>& jobs, std::size_t budget) {
  std::size_t total = 0;
  for (const auto& [spec, photon] : jobs) {
    const std::size_t n = planned_cells(*spec, photon);
    if (n > budget - total)
      throw BudgetError("figure needs more than " + std::to_string(budget) + " cells (cell budget)");
    total += n;
  }
  return total;
}

ModelParams params_at(int atoms, double eta, double phi) {
  RawParams raw;
  raw.eta = eta;
  raw.N = atoms;
  raw.phi = phi;
  return validate_params(raw);
}

void note_axis(FigureOutput& out, const char* name, const Axis& axis) {
  out.annotations["axes"][name] = {{"min", axis.min()}, {"max", axis.max()}, {"count", axis.size()}};
}

Cell optional_cell(bool present, double v) { return present ? Cell{v} : Cell{}; }

void hermitian_curves(FigureOutput& out, const RunConfig& cfg, Gauge gauge) {
  SweepSpec s = base_spec(cfg, gauge);
  s.detuning_axis = Axis::list({kDetunings.begin(), kDetunings.end()});
  s.coupling_axis = curve_g_axis(cfg);
  out.cells = plan({{&s, false}}, cfg.cell_budget);
  note_axis(out, "G", *s.coupling_axis);
  out.annotations["fixed"] = {{"gauge", to_string(gauge)}, {"eta", kDetunings}, {"phi", 0.0}, {"N", s.atoms}};

  const auto recs = coupling_sweep(s);
  const std::size_t nG = s.coupling_axis->size();
  out.annotations["G_c"] = nlohmann::json::array();
  for (std::size_t e = 0; e < kDetunings.size(); ++e) {
    const char letter = static_cast<char>('a' + e);
    out.annotations["G_c"].push_back({{"panel", std::string(1, letter)}, {"eta", kDetunings[e]},
                                      {"G_c", recs[e * nG].G_c}});
    for (std::size_t k = 0; k < kGroundObservables.size(); ++k) {
      const Observable& obs = kGroundObservables[k];
      Panel panel;
      panel.id = std::string(1, letter) + std::to_string(k + 1);
      panel.description = std::string(obs.description) + " vs G, " + std::string(to_string(gauge)) +
                          " gauge, eta=" + format_double(kDetunings[e]);
      panel.table.columns = {"eta", "G", obs.column, "phase"};
      for (std::size_t g = 0; g < nG; ++g) {
        const SweepRecord& r = recs[e * nG + g];
        panel.table.add({r.eta, r.G, obs.get(r), r.label});
      }
      out.panels.push_back(std::move(panel));
    }
  }
}

void unified_curves(FigureOutput& out, const RunConfig& cfg) {
  SweepSpec s = base_spec(cfg, Gauge::Unified);
  s.detuning_axis = Axis::list({kDetunings.begin(), kDetunings.end()});
  s.phase_axis = Axis::list({kPhases.begin(), kPhases.end()});
  s.coupling_axis = curve_g_axis(cfg);
  out.cells = plan({{&s, false}}, cfg.cell_budget);
  note_axis(out, "G", *s.coupling_axis);
  out.annotations["fixed"] = {{"gauge", "unified"}, {"eta", kDetunings}, {"phi", kPhases}, {"N", s.atoms}};

  const auto recs = coupling_sweep(s);
  const std::size_t nG = s.coupling_axis->size();
  const std::size_t nF = kPhases.size();
  out.annotations["G_c"] = nlohmann::json::array();
  for (std::size_t e = 0; e < kDetunings.size(); ++e)
    for (std::size_t f = 0; f < nF; ++f)
      out.annotations["G_c"].push_back({{"eta", kDetunings[e]},
                                        {"phi", kPhaseNames[f]},
                                        {"G_c", recs[(e * nF + f) * nG].G_c}});

  for (std::size_t k = 0; k < kGroundObservables.size(); ++k) {
    const Observable& obs = kGroundObservables[k];
    for (std::size_t e = 0; e < kDetunings.size(); ++e) {
      Panel panel;
      panel.id = std::string(1, static_cast<char>('a' + k)) + std::to_string(e + 1);
      panel.description = std::string(obs.description) + " vs G, unified gauge, eta=" +
                          format_double(kDetunings[e]) + ", phi in {pi/6, pi/4, pi/3}";
      panel.table.columns = {"eta", "phi", "G", obs.column, "phase"};
      for (std::size_t f = 0; f < nF; ++f)
        for (std::size_t g = 0; g < nG; ++g) {
          const SweepRecord& r = recs[(e * nF + f) * nG + g];
          panel.table.add({r.eta, r.phi, r.G, obs.get(r), r.label});
        }
      out.panels.push_back(std::move(panel));
    }
  }
}

struct DiagramJob {
  std::string letter;
  SweepSpec spec;
  std::string phi_name;
};

void diagrams(FigureOutput& out, const RunConfig& cfg, std::vector<DiagramJob> jobs) {
  std::vector<std::pair<const SweepSpec*, bool>> planned;
  for (auto& job : jobs) {
    job.spec.coupling_axis = diagram_g_axis(cfg);
    job.spec.detuning_axis = diagram_eta_axis(cfg);
    planned.emplace_back(&job.spec, false);
  }
  out.cells = plan(planned, cfg.cell_budget);
  note_axis(out, "G", *jobs.front().spec.coupling_axis);
  note_axis(out, "eta", *jobs.front().spec.detuning_axis);
  out.annotations["fixed"] = {{"N", jobs.front().spec.atoms}};

  out.annotations["G_c"] = nlohmann::json::array();
  for (const auto& job : jobs) {
    const bool nh = !is_hermitian(job.spec.gauge);
    const PhaseDiagram d = phase_diagram(job.spec);

    Panel cells;
    cells.id = job.letter + "_cells";
    cells.description = "phase label and photon number on the G-eta grid, " +
                        std::string(to_string(job.spec.gauge)) + " gauge, phi=" + job.phi_name;
    cells.table.columns = {"eta", "phi", "G", "phase", "n_p"};
    if (nh) cells.table.columns.push_back("n_p_unstable");
    for (const auto& r : d.cells) {
      std::vector<Cell> row{r.eta, r.phi, r.G, r.label, r.n_p};
      if (nh) row.push_back(optional_cell(r.has_unstable, r.unstable_n_p));
      cells.table.add(std::move(row));
    }

    Panel boundary;
    boundary.id = job.letter + "_boundary";
    boundary.description = "critical coupling G_c(eta), " + std::string(to_string(job.spec.gauge)) +
                           " gauge, phi=" + job.phi_name;
    boundary.table.columns = {"eta", "phi", "G_c"};
    for (const auto& b : d.boundary) boundary.table.add({b.eta, b.phi, b.G_c});

    nlohmann::json curve = nlohmann::json::array();
    for (const auto& b : d.boundary) curve.push_back({{"eta", b.eta}, {"G_c", b.G_c}});
    out.annotations["G_c"].push_back({{"panel", job.letter},
                                      {"gauge", to_string(job.spec.gauge)},
                                      {"phi", job.phi_name},
                                      {"boundary", std::move(curve)}});
    out.panels.push_back(std::move(cells));
    out.panels.push_back(std::move(boundary));
  }
}

void ep_curves(FigureOutput& out, const RunConfig& cfg, bool coupling_mode) {
  const std::array<double, 2> fixed = coupling_mode ? std::array<double, 2>{1.0, 2.0}
                                                    : std::array<double, 2>{0.5, 1.0};
  std::vector<SweepSpec> specs;
  for (double v : fixed) {
    SweepSpec s = base_spec(cfg, Gauge::NonHermitianUnified);
    s.eta = 1.0;
    s.phi = kPi / 3;
    if (coupling_mode) {
      s.coupling_axis = curve_g_axis(cfg);
      s.photon_density = v;
    } else {
      s.photon_density_axis = density_axis(cfg);
      s.coupling = v;
    }
    specs.push_back(std::move(s));
  }
  std::vector<std::pair<const SweepSpec*, bool>> planned;
  for (const auto& s : specs) planned.emplace_back(&s, !coupling_mode);
  out.cells = plan(planned, cfg.cell_budget);
  if (coupling_mode) {
    note_axis(out, "G", *specs.front().coupling_axis);
  } else {
    note_axis(out, "photon_density", *specs.front().photon_density_axis);
  }
  out.annotations["fixed"] = {{"gauge", "nh-unified"},
                              {"eta", 1.0},
                              {"phi", kPi / 3},
                              {coupling_mode ? "photon_density" : "G", fixed},
                              {"N", specs.front().atoms}};

  out.annotations[coupling_mode ? "G_ep" : "photon_density_ep"] = nlohmann::json::array();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const std::string letter(1, static_cast<char>('a' + i));
    const auto recs = ep_scan(specs[i]);
    const ModelParams p = params_at(specs[i].atoms, specs[i].eta, specs[i].phi);
    const double Phi = gauge_phase_factor(Gauge::NonHermitianUnified, p);
    if (coupling_mode) {
      const double gamma = std::sqrt(fixed[i] * p.N());
      out.annotations["G_ep"].push_back(
          {{"panel", letter}, {"photon_density", fixed[i]}, {"G_ep", exceptional_point(p, gamma)}});
    } else {
      const double G = fixed[i];
      out.annotations["photon_density_ep"].push_back(
          {{"panel", letter}, {"G", G}, {"photon_density_ep", 1.0 / (8.0 * G * G * Phi)}});
    }

    for (int part = 0; part < 2; ++part) {
      const bool re = part == 0;
      Panel panel;
      panel.id = letter + std::to_string(part + 1);
      panel.description = std::string(re ? "real" : "imaginary") + " part of eps_plus and eps_minus vs " +
                          (coupling_mode ? "G at gamma^2/N=" : "gamma^2/N at G=") + format_double(fixed[i]) +
                          ", eta=1, phi=pi/3";
      const std::string pre = re ? "re_" : "im_";
      panel.table.columns = coupling_mode
                                ? std::vector<std::string>{"eta", "phi", "photon_density", "G"}
                                : std::vector<std::string>{"eta", "phi", "G", "photon_density"};
      panel.table.columns.push_back(pre + "eps_plus");
      panel.table.columns.push_back(pre + "eps_minus");
      for (const auto& r : recs) {
        const double plus = re ? r.eps_plus.real() : r.eps_plus.imag();
        const double minus = re ? r.eps_minus.real() : r.eps_minus.imag();
        if (coupling_mode) {
          panel.table.add({r.eta, r.phi, r.photon_density, r.G, plus, minus});
        } else {
          panel.table.add({r.eta, r.phi, r.G, r.photon_density, plus, minus});
        }
      }
      out.panels.push_back(std::move(panel));
    }
  }
}

void unstable_curves(FigureOutput& out, const RunConfig& cfg) {
  SweepSpec s = base_spec(cfg, Gauge::NonHermitianUnified);
  s.eta = 1.0;
  s.phi = kPi / 3;
  s.coupling_axis = curve_g_axis(cfg);
  out.cells = plan({{&s, false}}, cfg.cell_budget);
  note_axis(out, "G", *s.coupling_axis);
  out.annotations["fixed"] = {{"gauge", "nh-unified"}, {"eta", 1.0}, {"phi", kPi / 3}, {"N", s.atoms}};
  const auto recs = coupling_sweep(s);

  const ModelParams p = params_at(s.atoms, s.eta, s.phi);
  const double eps_n_minus = energy(Gauge::NonHermitianUnified, p, 0.0, Branch::Minus).real();
  const double eps_n_plus = energy(Gauge::NonHermitianUnified, p, 0.0, Branch::Plus).real();
  out.annotations["G_c"] = {{{"eta", 1.0}, {"phi", "pi/3"}, {"G_c", critical_coupling(s.gauge, p)}}};

  Panel a{"a", "energies of N_-, N_+ and the unstable S_+ vs G, eta=1, phi=pi/3", {}};
  a.table.columns = {"eta", "phi", "G", "eps_N_minus", "eps_N_plus", "eps_S_plus"};
  Panel b{"b", "photons per atom of N_+- and the unstable S_+ vs G, eta=1, phi=pi/3", {}};
  b.table.columns = {"eta", "phi", "G", "n_p_N", "n_p_S_plus"};
  Panel c{"c", "atom energy eps_a = eps - omega n_p vs G, eta=1, phi=pi/3", {}};
  c.table.columns = {"eta", "phi", "G", "eps_a_N_minus", "eps_a_N_plus", "eps_a_S_plus"};
  for (const auto& r : recs) {
    a.table.add({r.eta, r.phi, r.G, eps_n_minus, eps_n_plus, optional_cell(r.has_unstable, r.unstable_energy)});
    b.table.add({r.eta, r.phi, r.G, 0.0, optional_cell(r.has_unstable, r.unstable_n_p)});
    c.table.add({r.eta, r.phi, r.G, eps_n_minus, eps_n_plus,
                 optional_cell(r.has_unstable, r.unstable_atom_energy)});
  }
  out.panels.push_back(std::move(a));
  out.panels.push_back(std::move(b));
  out.panels.push_back(std::move(c));
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig2", "fig3", "fig4", "fig5", "fig6",
                                            "fig7", "fig8", "fig9", "fig10"};
  return ids;
}

FigureOutput build_figure(const std::string& id, const RunConfig& cfg) {
  FigureOutput out;
  out.id = id;
  out.annotations = nlohmann::json::object();
  if (id == "fig2") {
    hermitian_curves(out, cfg, Gauge::Coulomb);
  } else if (id == "fig3") {
    hermitian_curves(out, cfg, Gauge::Dipole);
  } else if (id == "fig4") {
    diagrams(out, cfg, {{"a", base_spec(cfg, Gauge::Coulomb), "0"}, {"b", base_spec(cfg, Gauge::Dipole), "0"}});
  } else if (id == "fig5") {
    unified_curves(out, cfg);
  } else if (id == "fig6") {
    std::vector<DiagramJob> jobs;
    for (std::size_t f = 0; f < kPhases.size(); ++f) {
      SweepSpec s = base_spec(cfg, Gauge::Unified);
      s.phi = kPhases[f];
      jobs.push_back({std::string(1, static_cast<char>('a' + f)), s, kPhaseNames[f]});
    }
    diagrams(out, cfg, std::move(jobs));
  } else if (id == "fig7") {
    ep_curves(out, cfg, true);
  } else if (id == "fig8") {
    ep_curves(out, cfg, false);
  } else if (id == "fig9") {
    unstable_curves(out, cfg);
  } else if (id == "fig10") {
    SweepSpec s = base_spec(cfg, Gauge::NonHermitianUnified);
    s.phi = kPi / 3;
    diagrams(out, cfg, {{"a", s, "pi/3"}});
  } else {
    std::string valid;
    for (const auto& f : figure_ids()) valid += (valid.empty() ? "" : ", ") + f;
    throw ValidationError({"figure"}, "unknown figure id '" + id + "'; valid ids: " + valid);
  }
  return out;
}

}  // namespace dicke3::cli
