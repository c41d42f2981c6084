#pragma once

// Spin-coherent-state variational treatment. The trial state is a boson
// coherent state of amplitude gamma times the rotated extremal spin state
// |-u> (minus branch) or |+u>, giving per-atom energies
//
//   eps_pm(gamma) = omega gamma^2/N  pm  Omega sqrt(1 + s 8 G^2 gamma^2 Phi_g / N)
//
// with s = +1 for the Hermitian gauges and s = -1 for the non-Hermitian
// unified Hamiltonian. Phi_g is gauge_phase_factor().

#include <complex>
#include <optional>
#include <string_view>

#include "dicke3/model.hpp"

namespace dicke3 {

enum class Branch { Minus, Plus };

enum class Phase { NP, SP, UnstableSP };

std::string_view to_string(Phase phase) noexcept;

/// Curvature threshold used to classify extrema.
inline constexpr double kStabilityTolerance = 1e-12;

/// Per-atom semiclassical energy. Hermitian gauges always return a zero
/// imaginary part. For NonHermitianUnified the imaginary part is exactly zero
/// below the exceptional point; beyond it the branches form a conjugate pair
/// with the minus branch carrying the negative imaginary part.
/// Throws DomainError for negative or non-finite gamma.
std::complex<double> energy(Gauge gauge, const ModelParams& p, double gamma, Branch branch);

/// d eps / d gamma. Same domain rules as second_derivative().
double first_derivative(Gauge gauge, const ModelParams& p, double gamma, Branch branch);

/// d^2 eps / d gamma^2, evaluated analytically. For the non-Hermitian gauge
/// the landscape must be real at gamma (below the exceptional point),
/// otherwise DomainError.
double second_derivative(Gauge gauge, const ModelParams& p, double gamma, Branch branch);

/// Coupling at which the gamma = 0 curvature of the relevant branch changes
/// sign: (1/2) sqrt(eta / Phi_g). For NonHermitianUnified this bounds the
/// stable zero-photon spin-up state rather than a phase transition.
double critical_coupling(Gauge gauge, const ModelParams& p);

/// Closed-form nonzero extremum. Hermitian gauges: minus branch, present for
/// G > G_c. NonHermitianUnified: plus branch, present for 0 < G < G_c.
std::optional<double> superradiant_gamma(Gauge gauge, const ModelParams& p);

/// Plus-branch extremum of the non-Hermitian landscape (phase UnstableSP).
struct UnstableExtremum {
  Phase phase = Phase::UnstableSP;
  double gamma_c = 0.0;
  double n_p = 0.0;
  double energy = 0.0;
  double berry_per_atom = 0.0;
  double stability = 0.0;
  double atom_energy = 0.0;
};

struct VariationalSolution {
  Phase phase = Phase::NP;
  double gamma_c = 0.0;
  /// Photons per atom, gamma_c^2 / N.
  double n_p = 0.0;
  /// Per-atom energy. Real for every state this solver reports.
  std::complex<double> energy{0.0, 0.0};
  /// Per-atom population imbalance <S_z>/N.
  double delta_na = -1.0;
  /// Per-atom geometric phase, 2 pi n_p.
  double berry_per_atom = 0.0;
  /// Curvature d^2 eps/d gamma^2 at the extremum.
  double stability = 0.0;
  /// eps - omega n_p: the atomic part of the energy.
  double atom_energy = -1.0;
  /// NonHermitianUnified only: the unstable plus-branch extremum, when it
  /// exists. Its phase is UnstableSP.
  std::optional<UnstableExtremum> unstable;
};

/// Variational ground state. Hermitian gauges: NP for G <= G_c (the
/// boundary point is labeled NP), SP above. NonHermitianUnified: always the
/// spin-down zero-photon NP, plus the unstable plus-branch extremum when it
/// exists.
VariationalSolution solve_ground_state(Gauge gauge, const ModelParams& p);

enum class RotationSign { Positive, Negative };

/// Magnitudes of the off-diagonal coefficients left after rotating the
/// coherent-state-averaged spin Hamiltonian, evaluated at the analytic
/// solution of B = C = 0.
struct OffDiagResidual {
  double abs_B = 0.0;
  double abs_C = 0.0;
  /// Rotation angle (hyperbolic angle for the non-Hermitian gauge).
  double theta = 0.0;
  /// Rotation phase.
  double chi = 0.0;
  /// Coefficient of S_z after the rotation. With the positive sign this is
  /// Omega sqrt(1 + s 8 G^2 gamma^2 Phi_g / N).
  double A = 0.0;
};

/// Solves the gauge's B = C = 0 conditions for (theta, chi) and evaluates the
/// B, C and A coefficient formulas at that solution. The Coulomb and dipole
/// solutions sit at the field phase the gauge fixes (0 and pi/2); the unified
/// solutions use the model phase. `sign` selects cos(theta) > 0 or < 0 for
/// the Hermitian gauges (positive puts eps_- on the lower branch); the
/// non-Hermitian solution has cosh(theta) >= 1 and ignores it.
/// Throws DomainError for negative gamma, or for the non-Hermitian gauge at
/// or beyond the exceptional point.
OffDiagResidual offdiag_residuals(Gauge gauge, const ModelParams& p, double gamma,
                                  RotationSign sign = RotationSign::Positive);

/// Coupling at which the non-Hermitian energy branches coalesce for a given
/// field amplitude: sqrt(N) / (2 sqrt(2) gamma sqrt(Phi)). Throws DomainError
/// for gamma <= 0.
double exceptional_point(const ModelParams& p, double gamma);

}  // namespace dicke3
