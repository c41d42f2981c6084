#pragma once

// Figure reproduction: each figure id expands to a set of sweeps and is split
// into one table per panel. Axis ranges default to G in [0, 2] for curves,
// G in [0, 1.5] x eta in [0.2, 2] for phase diagrams and gamma^2/N in [0, 2]
// for the photon-density scan, 201 points per axis; RunConfig overrides them.

#include <string>
#include <vector>

#include <json.hpp>

#include "dicke3/cli/config.hpp"
#include "dicke3/cli/table.hpp"

namespace dicke3::cli {

struct Panel {
  /// e.g. "a1", "b_cells", "a_boundary"
  std::string id;
  std::string description;
  Table table;
};

struct FigureOutput {
  std::string id;
  std::vector<Panel> panels;
  /// G_c / G_ep annotations and fixed parameters per panel family.
  nlohmann::json annotations;
  /// Total sweep cells evaluated.
  std::size_t cells = 0;
};

/// fig2 .. fig10
const std::vector<std::string>& figure_ids();

/// Throws ValidationError for an unknown id and BudgetError when the planned
/// cells exceed cfg.cell_budget (before any cell is evaluated).
FigureOutput build_figure(const std::string& id, const RunConfig& cfg);

}  // namespace dicke3::cli
