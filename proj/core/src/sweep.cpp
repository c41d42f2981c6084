#include "dicke3/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "dicke3/ed_oracle.hpp"
#include "dicke3/errors.hpp"
#include "dicke3/variational.hpp"

namespace dicke3 {

Axis Axis::linear(double min, double max, int count) {
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max))
    throw ValidationError({"axis"}, "axis requires finite min < max");
  if (count < 2) throw ValidationError({"axis"}, "axis requires at least 2 points");
  std::vector<double> v(static_cast<std::size_t>(count));
  const double step = (max - min) / (count - 1);
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = min + step * i;
  v.back() = max;
  return Axis(std::move(v));
}

Axis Axis::list(std::vector<double> values) {
  if (values.size() < 2) throw ValidationError({"axis"}, "axis requires at least 2 points");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) throw ValidationError({"axis"}, "axis values must be finite");
    if (i > 0 && !(values[i - 1] < values[i]))
      throw ValidationError({"axis"}, "axis values must be strictly increasing");
  }
  return Axis(std::move(values));
}

namespace {

unsigned resolve_workers(unsigned requested, std::size_t cells) {
  unsigned w = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(cells, 1)));
}

/// Runs fn(i) for i in [0, count) on `workers` threads; results land at
/// index i, so the output order never depends on scheduling.
template <typename T, typename Fn>
std::vector<T> run_cells(std::size_t count, unsigned workers, Fn fn) {
  std::vector<T> out(count);
  workers = resolve_workers(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<double> axis_or_fixed(const std::optional<Axis>& axis, double fixed) {
  return axis ? axis->values() : std::vector<double>{fixed};
}

ModelParams cell_params(int atoms, double eta, double phi, double G) {
  RawParams raw;
  raw.eta = eta;
  raw.G = G;
  raw.N = atoms;
  raw.phi = phi;
  return validate_params(raw);
}

SweepRecord ground_record(Gauge gauge, const ModelParams& p) {
  const VariationalSolution sol = solve_ground_state(gauge, p);
  SweepRecord r;
  r.gauge = gauge;
  r.eta = p.eta();
  r.phi = p.phi();
  r.G = p.G();
  r.N = p.N();
  r.n_p = sol.n_p;
  r.energy = sol.energy.real();
  r.delta_na = sol.delta_na;
  r.berry = sol.berry_per_atom;
  r.G_c = critical_coupling(gauge, p);
  r.stability = sol.stability;
  r.atom_energy = sol.atom_energy;
  if (sol.phase == Phase::SP) {
    r.label = "SP";
  } else if (sol.unstable) {
    r.label = "NP_co";
  } else {
    r.label = "NP";
  }
  if (sol.unstable) {
    r.has_unstable = true;
    r.unstable_n_p = sol.unstable->n_p;
    r.unstable_energy = sol.unstable->energy;
    r.unstable_atom_energy = sol.unstable->atom_energy;
    r.unstable_stability = sol.unstable->stability;
  }
  return r;
}

void check_budget(std::size_t cells, std::size_t budget) {
  if (cells > budget)
    throw BudgetError("sweep needs " + std::to_string(cells) + " cells, budget is " + std::to_string(budget));
}

std::size_t checked_product(std::initializer_list<std::size_t> sizes) {
  std::size_t total = 1;
  for (std::size_t s : sizes) {
    if (s != 0 && total > std::numeric_limits<std::size_t>::max() / s)
      return std::numeric_limits<std::size_t>::max();
    total *= s;
  }
  return total;
}

}  // namespace

std::size_t planned_cells(const SweepSpec& spec, bool photon_axis) {
  const std::size_t etas = spec.detuning_axis ? spec.detuning_axis->size() : 1;
  const std::size_t phis = spec.phase_axis ? spec.phase_axis->size() : 1;
  std::size_t inner = 1;
  if (photon_axis) {
    inner = spec.photon_density_axis ? spec.photon_density_axis->size() : 1;
  } else {
    inner = spec.coupling_axis ? spec.coupling_axis->size() : 1;
  }
  const std::size_t cells = checked_product({etas, phis, inner});
  check_budget(cells, spec.cell_budget);
  return cells;
}

std::vector<SweepRecord> coupling_sweep(const SweepSpec& spec) {
  if (!spec.coupling_axis) throw ValidationError({"coupling_axis"}, "coupling_sweep requires a coupling axis");
  const std::size_t cells = planned_cells(spec, false);
  const auto etas = axis_or_fixed(spec.detuning_axis, spec.eta);
  const auto phis = axis_or_fixed(spec.phase_axis, spec.phi);
  const auto& Gs = spec.coupling_axis->values();
  // Reject bad inputs before starting the pool.
  for (double eta : etas) (void)cell_params(spec.atoms, eta, phis.front(), Gs.front());

  return run_cells<SweepRecord>(cells, spec.workers, [&](std::size_t i) {
    const std::size_t g = i % Gs.size();
    const std::size_t f = (i / Gs.size()) % phis.size();
    const std::size_t e = i / (Gs.size() * phis.size());
    SweepRecord r = ground_record(spec.gauge, cell_params(spec.atoms, etas[e], phis[f], Gs[g]));
    r.index = i;
    return r;
  });
}

PhaseDiagram phase_diagram(const SweepSpec& spec) {
  if (!spec.coupling_axis || !spec.detuning_axis)
    throw ValidationError({"coupling_axis", "detuning_axis"}, "phase_diagram requires coupling and detuning axes");
  SweepSpec flat = spec;
  flat.phase_axis.reset();

  PhaseDiagram out;
  out.cells = coupling_sweep(flat);
  for (double eta : spec.detuning_axis->values()) {
    const ModelParams p = cell_params(spec.atoms, eta, spec.phi, 0.0);
    out.boundary.push_back({p.eta(), p.phi(), critical_coupling(spec.gauge, p)});
  }
  return out;
}

std::vector<SweepRecord> ep_scan(const SweepSpec& spec) {
  const bool by_coupling = spec.coupling_axis.has_value();
  const bool by_density = spec.photon_density_axis.has_value();
  if (by_coupling == by_density)
    throw ValidationError({"coupling_axis", "photon_density_axis"},
                          "ep_scan needs exactly one of a coupling axis or a photon-density axis");
  if (by_density && spec.photon_density_axis->min() < 0.0)
    throw ValidationError({"photon_density_axis"}, "photon density must be >= 0");
  if (by_coupling && !(spec.photon_density >= 0.0))
    throw ValidationError({"photon_density"}, "photon density must be >= 0");

  const std::size_t cells = planned_cells(spec, by_density);
  const auto etas = axis_or_fixed(spec.detuning_axis, spec.eta);
  const auto phis = axis_or_fixed(spec.phase_axis, spec.phi);
  const auto inner = by_coupling ? spec.coupling_axis->values() : spec.photon_density_axis->values();
  for (double eta : etas) (void)cell_params(spec.atoms, eta, phis.front(), by_coupling ? inner.front() : spec.coupling);

  return run_cells<SweepRecord>(cells, spec.workers, [&](std::size_t i) {
    const std::size_t k = i % inner.size();
    const std::size_t f = (i / inner.size()) % phis.size();
    const std::size_t e = i / (inner.size() * phis.size());
    const double G = by_coupling ? inner[k] : spec.coupling;
    const double x = by_coupling ? spec.photon_density : inner[k];
    const ModelParams p = cell_params(spec.atoms, etas[e], phis[f], G);
    const double gamma = std::sqrt(x * p.N());

    SweepRecord r = ground_record(spec.gauge, p);
    r.index = i;
    r.photon_density = x;
    r.eps_plus = energy(spec.gauge, p, gamma, Branch::Plus);
    r.eps_minus = energy(spec.gauge, p, gamma, Branch::Minus);
    r.G_ep = gamma > 0.0 ? exceptional_point(p, gamma) : std::numeric_limits<double>::infinity();
    return r;
  });
}

std::vector<EdCompareRow> ed_compare(const SweepSpec& spec, const EdLimits& limits) {
  if (!is_hermitian(spec.gauge))
    throw ContractError("ed_compare: the non-Hermitian gauge has no ground state to compare");
  if (spec.atom_counts.empty()) throw ValidationError({"atom_counts"}, "ed_compare needs at least one N");
  check_budget(spec.atom_counts.size(), spec.ed_budget);
  for (int N : spec.atom_counts) (void)cell_params(N, spec.eta, spec.phi, spec.coupling);

  return run_cells<EdCompareRow>(spec.atom_counts.size(), std::max(1u, spec.ed_workers), [&](std::size_t i) {
    EdCompareRow row;
    row.N = spec.atom_counts[i];
    const ModelParams p = cell_params(row.N, spec.eta, spec.phi, spec.coupling);
    const VariationalSolution var = solve_ground_state(spec.gauge, p);
    row.eps_variational = var.energy.real();
    row.n_p_variational = var.n_p;
    row.delta_na_variational = var.delta_na;
    try {
      const EDResult ed = cutoff_converge(spec.gauge, p, spec.ed_tolerance, limits);
      row.ok = true;
      row.converged = ed.converged;
      row.n_max_used = ed.n_max_used;
      row.e0_per_atom = ed.ground_energy_per_atom;
      row.gap = row.eps_variational - row.e0_per_atom;
      row.n_p_ed = ed.n_p_ed;
      row.delta_na_ed = ed.delta_na_ed;
      row.cutoff_change = ed.cutoff_change;
      row.tail_population = ed.tail_population;
    } catch (const ResourceError& e) {
      row.note = std::string("unconverged: ") + e.what();
    } catch (const NumericError& e) {
      row.note = std::string("unconverged: ") + e.what();
    }
    return row;
  });
}

}  // namespace dicke3
