#pragma once

// Grid scans behind the observable-vs-coupling curves, G-eta phase diagrams,
// exceptional-point scans and variational-vs-ED tables.
//
// Cells are independent; they run on a bounded worker pool and are returned
// in cell-index order, so a given SweepSpec always yields the same records.
// Cell order is detuning-major, then phase, then coupling (or photon density).

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dicke3/model.hpp"
#include "dicke3/operators.hpp"

namespace dicke3 {

class Axis {
 public:
  /// `count` evenly spaced points from min to max inclusive. Requires
  /// count >= 2 and min < max (ValidationError).
  static Axis linear(double min, double max, int count);
  /// Explicit strictly increasing values, at least two.
  static Axis list(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double min() const noexcept { return values_.front(); }
  double max() const noexcept { return values_.back(); }

 private:
  explicit Axis(std::vector<double> values) : values_(std::move(values)) {}
  std::vector<double> values_;
};

struct SweepSpec {
  Gauge gauge = Gauge::Coulomb;
  int atoms = 1;
  /// Fixed values, used when the matching axis is absent.
  double eta = 1.0;
  double phi = 0.0;
  double coupling = 0.0;
  /// gamma^2 / N for exceptional-point scans.
  double photon_density = 1.0;

  std::optional<Axis> coupling_axis;
  std::optional<Axis> detuning_axis;
  std::optional<Axis> phase_axis;
  std::optional<Axis> photon_density_axis;

  /// Atom counts for ed_compare.
  std::vector<int> atom_counts;
  double ed_tolerance = 1e-8;

  std::size_t cell_budget = 1'000'000;
  std::size_t ed_budget = 64;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  unsigned ed_workers = 1;
};

struct SweepRecord {
  std::size_t index = 0;
  Gauge gauge = Gauge::Coulomb;
  double eta = 0.0;
  double phi = 0.0;
  double G = 0.0;
  int N = 1;
  /// "NP", "SP", or "NP_co" (normal phase coexisting with the unstable
  /// superradiant extremum of the non-Hermitian model).
  std::string label;
  double n_p = 0.0;
  double energy = 0.0;
  double delta_na = 0.0;
  double berry = 0.0;
  double G_c = 0.0;
  double stability = 0.0;
  double atom_energy = 0.0;

  bool has_unstable = false;
  double unstable_n_p = 0.0;
  double unstable_energy = 0.0;
  double unstable_atom_energy = 0.0;
  double unstable_stability = 0.0;

  /// Exceptional-point scans only.
  double photon_density = 0.0;
  std::complex<double> eps_plus{0.0, 0.0};
  std::complex<double> eps_minus{0.0, 0.0};
  double G_ep = 0.0;
};

struct BoundaryPoint {
  double eta = 0.0;
  double phi = 0.0;
  double G_c = 0.0;
};

struct PhaseDiagram {
  std::vector<SweepRecord> cells;
  std::vector<BoundaryPoint> boundary;
};

/// Number of cells the spec describes for a given scan kind; throws
/// BudgetError when it exceeds spec.cell_budget.
std::size_t planned_cells(const SweepSpec& spec, bool photon_axis);

/// Ground state per (eta, phi, G) cell. Requires a coupling axis.
std::vector<SweepRecord> coupling_sweep(const SweepSpec& spec);

/// Requires coupling and detuning axes; phi is fixed. Also emits G_c(eta).
PhaseDiagram phase_diagram(const SweepSpec& spec);

/// Re/Im of both energy branches along a coupling axis (fixed gamma^2/N) or
/// a photon-density axis (fixed G). Exactly one of the two axes must be set.
std::vector<SweepRecord> ep_scan(const SweepSpec& spec);

struct EdCompareRow {
  int N = 0;
  /// False when the ED solve failed; `note` says why.
  bool ok = false;
  bool converged = false;
  std::string note;
  int n_max_used = 0;
  double e0_per_atom = 0.0;
  double eps_variational = 0.0;
  /// eps_variational - E0/N (non-negative by the variational principle).
  double gap = 0.0;
  double n_p_ed = 0.0;
  double n_p_variational = 0.0;
  double delta_na_ed = 0.0;
  double delta_na_variational = 0.0;
  double cutoff_change = 0.0;
  double tail_population = 0.0;
};

/// One row per entry of spec.atom_counts. Resource or solver failures are
/// recorded on the row instead of aborting the table.
std::vector<EdCompareRow> ed_compare(const SweepSpec& spec, const EdLimits& limits = {});

}  // namespace dicke3
