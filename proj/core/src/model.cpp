#include "dicke3/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "dicke3/errors.hpp"

namespace dicke3 {

namespace {

constexpr double kEtaConsistencyTol = 1e-12;

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view to_string(Gauge gauge) noexcept {
  switch (gauge) {
    case Gauge::Coulomb:
      return "coulomb";
    case Gauge::Dipole:
      return "dipole";
    case Gauge::Unified:
      return "unified";
    case Gauge::NonHermitianUnified:
      return "nh-unified";
  }
  return "unknown";
}

std::optional<Gauge> parse_gauge(std::string_view text) noexcept {
  const std::string key = lower(text);
  if (key == "coulomb") return Gauge::Coulomb;
  if (key == "dipole") return Gauge::Dipole;
  if (key == "unified") return Gauge::Unified;
  if (key == "nh-unified" || key == "nonhermitian" || key == "non-hermitian" ||
      key == "non-hermitian-unified" || key == "nonhermitianunified")
    return Gauge::NonHermitianUnified;
  return std::nullopt;
}

double reduce_phase(double phi) {
  if (!std::isfinite(phi)) throw DomainError("phase must be finite");
  constexpr double pi = std::numbers::pi;
  double r = std::fmod(phi, pi);
  if (r < 0.0) r += pi;
  if (r >= pi) r = 0.0;  // -tiny + pi rounds up to pi
  return r;
}

double phase_factor(double eta, double phi) {
  if (!std::isfinite(eta) || !std::isfinite(phi))
    throw DomainError("phase_factor: non-finite input");
  if (eta <= 0.0) throw DomainError("phase_factor: eta must be positive");
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return c * c + eta * eta * s * s;
}

double gauge_phase_factor(Gauge gauge, const ModelParams& p) {
  switch (gauge) {
    case Gauge::Coulomb:
      return 1.0;
    case Gauge::Dipole:
      return p.eta() * p.eta();
    case Gauge::Unified:
    case Gauge::NonHermitianUnified:
      return phase_factor(p.eta(), p.phi());
  }
  return 1.0;
}

ModelParams::ModelParams(double omega, double Omega, double G, int N, double phi) noexcept
    : omega_(omega), Omega_(Omega), eta_(omega / Omega), G_(G), N_(N), phi_(phi) {}

ModelParams ModelParams::with_coupling(double G) const {
  RawParams r = raw();
  r.G = G;
  return validate_params(r);
}

RawParams ModelParams::raw() const noexcept {
  RawParams r;
  r.omega = omega_;
  r.Omega = Omega_;
  r.G = G_;
  r.N = N_;
  r.phi = phi_;
  return r;
}

ModelParams validate_params(const RawParams& raw) {
  std::vector<std::string> bad;
  std::ostringstream why;
  auto reject = [&](const char* field, const std::string& reason) {
    bad.emplace_back(field);
    why << (bad.size() > 1 ? "; " : "") << field << ": " << reason;
  };
  auto check_frequency = [&](const char* field, const std::optional<double>& v) {
    if (v && (!std::isfinite(*v) || *v <= 0.0)) reject(field, "must be finite and > 0");
  };

  check_frequency("omega", raw.omega);
  check_frequency("Omega", raw.Omega);
  check_frequency("eta", raw.eta);
  if (!std::isfinite(raw.G) || raw.G < 0.0) reject("G", "coupling must be finite and >= 0");
  if (raw.N < 1) reject("N", "atom count must be >= 1");
  if (raw.N > std::numeric_limits<int>::max()) reject("N", "atom count too large");
  if (!std::isfinite(raw.phi)) reject("phi", "phase must be finite");

  double omega = 0.0;
  double Omega = 0.0;
  if (bad.empty()) {
    if (raw.omega && raw.Omega) {
      omega = *raw.omega;
      Omega = *raw.Omega;
      if (raw.eta) {
        const double implied = omega / Omega;
        if (std::abs(*raw.eta - implied) > kEtaConsistencyTol * std::max(1.0, implied))
          reject("eta", "inconsistent with omega/Omega");
      }
    } else if (raw.eta) {
      if (raw.omega) {
        omega = *raw.omega;
        Omega = omega / *raw.eta;
      } else {
        Omega = raw.Omega.value_or(1.0);
        omega = *raw.eta * Omega;
      }
    } else if (raw.omega) {
      omega = *raw.omega;
      Omega = 1.0;
    } else {
      reject("eta", "either eta or omega must be given");
    }
  }

  if (!bad.empty()) throw ValidationError(std::move(bad), "invalid parameters: " + why.str());
  return ModelParams(omega, Omega, raw.G, static_cast<int>(raw.N), reduce_phase(raw.phi));
}

}  // namespace dicke3
