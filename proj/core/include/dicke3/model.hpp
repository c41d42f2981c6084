#pragma once

// Gauges, validated model parameters and the phase-structure function shared
// by the variational solver, the exact-diagonalization oracle and the sweeps.
//
// Energies are measured in units of the atomic splitting Omega. Nothing in the
// library forces Omega = 1, but every reported energy scales with it.

#include <optional>
#include <string>
#include <string_view>

namespace dicke3 {

enum class Gauge { Coulomb, Dipole, Unified, NonHermitianUnified };

std::string_view to_string(Gauge gauge) noexcept;

/// Accepts "coulomb", "dipole", "unified" and "nh-unified" (also
/// "nonhermitian", "non-hermitian-unified"). Case-insensitive.
std::optional<Gauge> parse_gauge(std::string_view text) noexcept;

constexpr bool is_hermitian(Gauge gauge) noexcept {
  return gauge != Gauge::NonHermitianUnified;
}

/// Unvalidated inputs as they arrive from a CLI or a config file. The
/// detuning ratio may be given directly, through (omega, Omega), or both.
struct RawParams {
  std::optional<double> omega;
  std::optional<double> Omega;
  std::optional<double> eta;
  double G = 0.0;
  long long N = 1;
  double phi = 0.0;
};

class ModelParams;

/// Normalizes raw inputs. Throws ValidationError listing every offending
/// field: N < 1, G < 0, non-positive or non-finite frequencies, or an eta
/// that disagrees with omega/Omega by more than 1e-12.
ModelParams validate_params(const RawParams& raw);

/// Immutable, validated parameter set. Only `validate_params` creates one.
class ModelParams {
 public:
  double omega() const noexcept { return omega_; }
  double Omega() const noexcept { return Omega_; }
  double eta() const noexcept { return eta_; }
  double G() const noexcept { return G_; }
  int N() const noexcept { return N_; }
  /// Cavity-field phase reduced to [0, pi).
  double phi() const noexcept { return phi_; }

  /// Same parameters with a different coupling (revalidated).
  ModelParams with_coupling(double G) const;

  RawParams raw() const noexcept;

 private:
  friend ModelParams validate_params(const RawParams& raw);
  ModelParams(double omega, double Omega, double G, int N, double phi) noexcept;

  double omega_;
  double Omega_;
  double eta_;
  double G_;
  int N_;
  double phi_;
};

/// The collective spin of N three-level atoms is s = N, not N/2.
struct SpinConvention {
  int s;
  int dimension() const noexcept { return 2 * s + 1; }
};

constexpr SpinConvention spin_convention(int atoms) noexcept { return SpinConvention{atoms}; }

/// Phi(eta, phi) = cos^2 phi + eta^2 sin^2 phi. Throws DomainError on
/// non-finite input or eta <= 0.
double phase_factor(double eta, double phi);

/// The factor multiplying 8 G^2 gamma^2 / N inside each gauge's square root:
/// 1 for Coulomb, eta^2 for dipole, Phi(eta, phi) for both unified forms.
double gauge_phase_factor(Gauge gauge, const ModelParams& p);

/// Reduces an angle to [0, pi). Phi only depends on cos^2 and sin^2.
double reduce_phase(double phi);

}  // namespace dicke3
