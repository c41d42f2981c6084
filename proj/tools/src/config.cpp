#include "dicke3/cli/config.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "dicke3/errors.hpp"

namespace dicke3::cli {

namespace pt = boost::property_tree;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long long parse_integer(const std::string& text, const std::string& field) {
  const std::string t = trim(text);
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE)
    throw ValidationError({field}, field + ": expected an integer, got '" + text + "'");
  return v;
}

std::size_t parse_count(const std::string& text, const std::string& field) {
  const long long v = parse_integer(text, field);
  if (v < 0) throw ValidationError({field}, field + ": must be >= 0");
  return static_cast<std::size_t>(v);
}

std::string join(const std::vector<long long>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

void put_axis(pt::ptree& tree, const std::string& prefix, const AxisOverride& axis) {
  if (axis.min) tree.put("axes." + prefix + "_min", format_double(*axis.min));
  if (axis.max) tree.put("axes." + prefix + "_max", format_double(*axis.max));
  if (axis.count) tree.put("axes." + prefix + "_count", std::to_string(*axis.count));
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_number(const std::string& text, const std::string& field) {
  const std::string t = trim(text);
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v))
    throw ValidationError({field}, field + ": expected a finite number, got '" + text + "'");
  return v;
}

double parse_angle(const std::string& text, const std::string& field) {
  std::string t = trim(text);
  for (auto& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  const auto at = t.find("pi");
  if (at == std::string::npos) return parse_number(text, field);

  std::string head = t.substr(0, at);
  const std::string tail = t.substr(at + 2);
  double sign = 1.0;
  if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
    sign = head[0] == '-' ? -1.0 : 1.0;
    head.erase(0, 1);
  }
  if (!head.empty() && head.back() == '*') head.pop_back();
  double multiplier = 1.0;
  if (!head.empty()) multiplier = static_cast<double>(parse_integer(head, field));
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail[0] != '/') throw ValidationError({field}, field + ": cannot parse angle '" + text + "'");
    divisor = static_cast<double>(parse_integer(tail.substr(1), field));
    if (divisor == 0.0) throw ValidationError({field}, field + ": division by zero in '" + text + "'");
  }
  return sign * (multiplier * std::numbers::pi) / divisor;
}

std::vector<long long> parse_int_list(const std::string& text, const std::string& field) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_integer(item, field));
  if (out.empty()) throw ValidationError({field}, field + ": expected a comma-separated list of integers");
  return out;
}

EdLimits RunConfig::ed_limits() const {
  EdLimits limits = EdLimits::from_environment();
  limits.max_dimension = max_dimension;
  limits.dense_threshold = dense_threshold;
  return limits;
}

RawParams raw_params(const RunConfig& cfg) {
  RawParams raw;
  raw.eta = cfg.eta;
  raw.omega = cfg.omega;
  // resonance unless the detuning is given some other way
  if (!cfg.eta && !cfg.omega) raw.eta = 1.0;
  raw.Omega = cfg.Omega;
  raw.G = cfg.G;
  raw.N = cfg.N;
  raw.phi = parse_angle(cfg.phi, "phi");
  return raw;
}

Gauge config_gauge(const RunConfig& cfg) {
  const auto g = parse_gauge(cfg.gauge);
  if (!g)
    throw ValidationError({"gauge"}, "gauge: unknown gauge '" + cfg.gauge +
                                         "' (expected coulomb, dipole, unified, nh-unified)");
  return *g;
}

void write_config(std::ostream& out, const RunConfig& cfg) {
  pt::ptree tree;
  tree.put("run.subcommand", cfg.subcommand);
  tree.put("run.target", cfg.target);
  tree.put("model.gauge", cfg.gauge);
  if (cfg.eta) tree.put("model.eta", format_double(*cfg.eta));
  if (cfg.omega) tree.put("model.omega", format_double(*cfg.omega));
  if (cfg.Omega) tree.put("model.Omega", format_double(*cfg.Omega));
  tree.put("model.G", format_double(cfg.G));
  tree.put("model.N", std::to_string(cfg.N));
  tree.put("model.phi", cfg.phi);
  put_axis(tree, "g", cfg.g_axis);
  put_axis(tree, "eta", cfg.eta_axis);
  put_axis(tree, "x", cfg.x_axis);
  tree.put("output.dir", cfg.out_dir);
  tree.put("output.format", cfg.format);
  if (!cfg.atom_counts.empty()) tree.put("ed.atoms", join(cfg.atom_counts));
  tree.put("ed.tol", format_double(cfg.ed_tol));
  tree.put("ed.max_dimension", std::to_string(cfg.max_dimension));
  tree.put("ed.dense_threshold", std::to_string(cfg.dense_threshold));
  tree.put("sweep.cell_budget", std::to_string(cfg.cell_budget));
  tree.put("sweep.ed_budget", std::to_string(cfg.ed_budget));
  tree.put("sweep.workers", std::to_string(cfg.workers));
  tree.put("verify.samples", std::to_string(cfg.samples));
  tree.put("verify.seed", std::to_string(cfg.seed));
  pt::write_ini(out, tree);
}

RunConfig read_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ValidationError({"config"}, std::string("config: ") + e.what());
  }

  RunConfig cfg;
  std::set<std::string> seen;
  auto get = [&](const std::string& key) -> std::optional<std::string> {
    seen.insert(key);
    if (auto v = tree.get_optional<std::string>(pt::ptree::path_type(key, '.'))) return trim(*v);
    return std::nullopt;
  };
  auto axis = [&](const std::string& prefix, AxisOverride& a) {
    if (auto v = get("axes." + prefix + "_min")) a.min = parse_number(*v, prefix + "_min");
    if (auto v = get("axes." + prefix + "_max")) a.max = parse_number(*v, prefix + "_max");
    if (auto v = get("axes." + prefix + "_count"))
      a.count = static_cast<int>(parse_integer(*v, prefix + "_count"));
  };

  if (auto v = get("run.subcommand")) cfg.subcommand = *v;
  if (auto v = get("run.target")) cfg.target = *v;
  if (auto v = get("model.gauge")) cfg.gauge = *v;
  if (auto v = get("model.eta")) cfg.eta = parse_number(*v, "eta");
  if (auto v = get("model.omega")) cfg.omega = parse_number(*v, "omega");
  if (auto v = get("model.Omega")) cfg.Omega = parse_number(*v, "Omega");
  if (auto v = get("model.G")) cfg.G = parse_number(*v, "G");
  if (auto v = get("model.N")) cfg.N = parse_integer(*v, "N");
  if (auto v = get("model.phi")) {
    (void)parse_angle(*v, "phi");
    cfg.phi = *v;
  }
  axis("g", cfg.g_axis);
  axis("eta", cfg.eta_axis);
  axis("x", cfg.x_axis);
  if (auto v = get("output.dir")) cfg.out_dir = *v;
  if (auto v = get("output.format")) cfg.format = *v;
  if (auto v = get("ed.atoms")) cfg.atom_counts = parse_int_list(*v, "atoms");
  if (auto v = get("ed.tol")) cfg.ed_tol = parse_number(*v, "tol");
  if (auto v = get("ed.max_dimension")) cfg.max_dimension = parse_count(*v, "max_dimension");
  if (auto v = get("ed.dense_threshold")) cfg.dense_threshold = parse_count(*v, "dense_threshold");
  if (auto v = get("sweep.cell_budget")) cfg.cell_budget = parse_count(*v, "cell_budget");
  if (auto v = get("sweep.ed_budget")) cfg.ed_budget = parse_count(*v, "ed_budget");
  if (auto v = get("sweep.workers")) cfg.workers = static_cast<unsigned>(parse_count(*v, "workers"));
  if (auto v = get("verify.samples")) cfg.samples = static_cast<int>(parse_integer(*v, "samples"));
  if (auto v = get("verify.seed")) cfg.seed = static_cast<std::uint64_t>(parse_count(*v, "seed"));

  for (const auto& [section, entries] : tree) {
    for (const auto& [key, value] : entries) {
      (void)value;
      const std::string full = section + "." + key;
      if (!seen.count(full)) throw ValidationError({"config"}, "config: unknown key '" + full + "'");
    }
    if (entries.empty() && !tree.get<std::string>(section).empty())
      throw ValidationError({"config"}, "config: key '" + section + "' outside a section");
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError({"config"}, "config: cannot open '" + path + "'");
  return read_config(in);
}

void apply_environment(RunConfig& cfg) {
  auto env = [](const char* name) -> std::optional<std::size_t> {
    const char* text = std::getenv(name);
    if (text == nullptr || *text == '\0') return std::nullopt;
    char* end = nullptr;
    const long long v = std::strtoll(text, &end, 10);
    if (end == text || *end != '\0' || v <= 0) return std::nullopt;
    return static_cast<std::size_t>(v);
  };
  if (auto v = env("DICKE3_ED_MAX_DIM")) cfg.max_dimension = *v;
  if (auto v = env("DICKE3_ED_DENSE_THRESHOLD")) cfg.dense_threshold = *v;
  if (auto v = env("DICKE3_CELL_BUDGET")) cfg.cell_budget = *v;
  if (auto v = env("DICKE3_ED_BUDGET")) cfg.ed_budget = *v;
  if (auto v = env("DICKE3_WORKERS")) cfg.workers = static_cast<unsigned>(*v);
}

nlohmann::json to_json(const RunConfig& cfg) {
  auto axis = [](const AxisOverride& a) {
    nlohmann::json j = nlohmann::json::object();
    if (a.min) j["min"] = *a.min;
    if (a.max) j["max"] = *a.max;
    if (a.count) j["count"] = *a.count;
    return j;
  };
  nlohmann::json j;
  j["subcommand"] = cfg.subcommand;
  j["target"] = cfg.target;
  j["model"] = {{"gauge", cfg.gauge}, {"G", cfg.G}, {"N", cfg.N}, {"phi", cfg.phi}};
  if (cfg.eta) j["model"]["eta"] = *cfg.eta;
  if (cfg.omega) j["model"]["omega"] = *cfg.omega;
  if (cfg.Omega) j["model"]["Omega"] = *cfg.Omega;
  j["axes"] = {{"g", axis(cfg.g_axis)}, {"eta", axis(cfg.eta_axis)}, {"x", axis(cfg.x_axis)}};
  j["output"] = {{"dir", cfg.out_dir}, {"format", cfg.format}};
  j["ed"] = {{"atoms", cfg.atom_counts},
             {"tol", cfg.ed_tol},
             {"max_dimension", cfg.max_dimension},
             {"dense_threshold", cfg.dense_threshold}};
  j["sweep"] = {{"cell_budget", cfg.cell_budget}, {"ed_budget", cfg.ed_budget}, {"workers", cfg.workers}};
  j["verify"] = {{"samples", cfg.samples}, {"seed", cfg.seed}};
  return j;
}

}  // namespace dicke3::cli
