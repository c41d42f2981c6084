#pragma once

// Exact diagonalization on the collective-spin (x) truncated-Fock space. This
// is the independent check of the variational closed forms: the trial family
// is a subset of the Hilbert space, so E0/N can never exceed eps_-.

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dicke3/hamiltonian.hpp"
#include "dicke3/model.hpp"
#include "dicke3/operators.hpp"

namespace dicke3 {

struct GroundState {
  double energy = 0.0;
  Eigen::VectorXd vector;
  /// "dense" or "lanczos"
  std::string method;
  int iterations = 0;
  /// ||H x - E x||
  double residual = 0.0;
};

/// Lowest eigenpair. Dense self-adjoint decomposition up to
/// limits.dense_threshold, restarted Lanczos with full reorthogonalization
/// above. Throws ContractError for the non-Hermitian gauge.
GroundState ground_state(const Hamiltonian& h, const EdLimits& limits = {});

/// Dense overload. Throws ContractError unless h is symmetric to 1e-10.
GroundState ground_state(const Eigen::MatrixXd& h);

/// Lowest eigenpair of a real symmetric sparse matrix by Lanczos.
/// Throws NumericError when the residual target is not reached.
GroundState lanczos_ground_state(const RealSparse& h, const EdLimits& limits = {});

/// Every eigenvalue, sorted by real part then imaginary part.
/// Throws NumericError (with dimension and norm) if the solver fails, and
/// ResourceError above limits.dense_threshold.
std::vector<std::complex<double>> complex_spectrum(const Eigen::MatrixXcd& h);
std::vector<std::complex<double>> complex_spectrum(const Hamiltonian& h, const EdLimits& limits = {});

struct EdObservables {
  /// <a^dag a> / N
  double n_p = 0.0;
  /// <S_z> / N
  double delta_na = 0.0;
};

/// Throws ContractError when the vector length does not match the basis or
/// its norm deviates from 1 by more than 1e-8.
EdObservables ed_observables(const Eigen::VectorXd& state, int atoms, int n_max);

/// Weight on the top `levels` Fock states.
double tail_population(const Eigen::VectorXd& state, int atoms, int n_max, int levels = 5);

struct EDResult {
  Gauge gauge = Gauge::Coulomb;
  int atoms = 0;
  int n_max_used = 0;
  double ground_energy_per_atom = 0.0;
  double n_p_ed = 0.0;
  double delta_na_ed = 0.0;
  double tail_population = 0.0;
  /// |E0(n_max) - E0(2 n_max)| / N from the last doubling (0 when not run).
  double cutoff_change = 0.0;
  bool converged = false;
  std::string method;
  /// Non-Hermitian path only.
  std::vector<std::complex<double>> spectrum;
};

/// Ground state at a fixed cutoff (Hermitian gauges).
EDResult solve_at_cutoff(Gauge gauge, const ModelParams& p, int n_max, const EdLimits& limits = {});

/// Full complex spectrum at a fixed cutoff (any gauge).
EDResult spectrum_at_cutoff(Gauge gauge, const ModelParams& p, int n_max, const EdLimits& limits = {});

/// Starting cutoff ceil(4 N max(n_p, 1)) + 20 from the variational photon
/// number.
int initial_cutoff(Gauge gauge, const ModelParams& p);

/// Doubles n_max from initial_cutoff() until the per-atom ground energy
/// moves by less than target_tol across a doubling and the tail population
/// is below 1e-10. Returns the result at the accepted cutoff. Throws
/// ResourceError (carrying the best tolerance reached) when the next
/// doubling would exceed the dimension limit, DomainError for
/// target_tol <= 0, ContractError for the non-Hermitian gauge.
EDResult cutoff_converge(Gauge gauge, const ModelParams& p, double target_tol,
                         const EdLimits& limits = {});

inline constexpr double kTailThreshold = 1e-10;

}  // namespace dicke3
