#pragma once

// Effective run configuration for the dicke3 tool. Values come from built-in
// defaults, then an optional INI file, then DICKE3_* environment variables
// (resource limits only), then command-line flags.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dicke3/model.hpp"
#include "dicke3/operators.hpp"

namespace dicke3::cli {

struct AxisOverride {
  std::optional<double> min;
  std::optional<double> max;
  std::optional<int> count;

  bool operator==(const AxisOverride&) const = default;
};

struct RunConfig {
  std::string subcommand;
  /// figure id for `figure`, scope for `verify`.
  std::string target;

  std::string gauge = "coulomb";
  std::optional<double> eta;
  std::optional<double> omega;
  std::optional<double> Omega;
  double G = 0.0;
  long long N = 1;
  /// Kept as text so literals such as "pi/3" survive a round trip.
  std::string phi = "0";

  AxisOverride g_axis;
  AxisOverride eta_axis;
  AxisOverride x_axis;

  std::string out_dir = ".";
  std::string format = "csv";

  std::vector<long long> atom_counts;
  double ed_tol = 1e-8;
  std::size_t max_dimension = EdLimits{}.max_dimension;
  std::size_t dense_threshold = EdLimits{}.dense_threshold;

  std::size_t cell_budget = 1'000'000;
  std::size_t ed_budget = 64;
  unsigned workers = 0;

  int samples = 200;
  std::uint64_t seed = 20240601;

  bool operator==(const RunConfig&) const = default;

  EdLimits ed_limits() const;
};

/// Radians, or one of the exact literals pi, pi/2, pi/3, pi/4, pi/6 (an
/// optional leading '-' and integer multiplier such as "2pi/3" are allowed).
/// Throws ValidationError naming `field`.
double parse_angle(const std::string& text, const std::string& field = "phi");

/// Full-string double parse. Throws ValidationError naming `field`.
double parse_number(const std::string& text, const std::string& field);

/// "2,4,8" -> {2, 4, 8}. Throws ValidationError naming `field`.
std::vector<long long> parse_int_list(const std::string& text, const std::string& field);

RawParams raw_params(const RunConfig& cfg);
Gauge config_gauge(const RunConfig& cfg);

void write_config(std::ostream& out, const RunConfig& cfg);
RunConfig read_config(std::istream& in);
RunConfig load_config_file(const std::string& path);

/// Applies DICKE3_ED_MAX_DIM, DICKE3_ED_DENSE_THRESHOLD, DICKE3_CELL_BUDGET,
/// DICKE3_ED_BUDGET and DICKE3_WORKERS when set and parseable.
void apply_environment(RunConfig& cfg);

nlohmann::json to_json(const RunConfig& cfg);

/// %.17g
std::string format_double(double v);

}  // namespace dicke3::cli
