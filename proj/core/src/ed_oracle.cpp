#include "dicke3/ed_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dicke3/errors.hpp"
#include "dicke3/variational.hpp"

namespace dicke3 {

namespace {

void require_basis(const Eigen::VectorXd& state, int atoms, int n_max) {
  const auto expected = static_cast<Eigen::Index>(hilbert_dimension(atoms, n_max));
  if (state.size() != expected)
    throw ContractError("state length " + std::to_string(state.size()) +
                        " does not match (2N+1)(n_max+1) = " + std::to_string(expected));
}

}  // namespace

EdObservables ed_observables(const Eigen::VectorXd& state, int atoms, int n_max) {
  require_basis(state, atoms, n_max);
  const double norm = state.squaredNorm();
  if (std::abs(norm - 1.0) > 1e-8)
    throw ContractError("ed_observables: state is not normalized (|psi|^2 = " + std::to_string(norm) + ")");

  const int spin_dim = 2 * atoms + 1;
  double photons = 0.0;
  double sz = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    for (int m = -atoms; m <= atoms; ++m) {
      const double w = state(static_cast<Eigen::Index>(n) * spin_dim + (m + atoms));
      photons += n * w * w;
      sz += m * w * w;
    }
  }
  return {photons / atoms, sz / atoms};
}

double tail_population(const Eigen::VectorXd& state, int atoms, int n_max, int levels) {
  require_basis(state, atoms, n_max);
  const int spin_dim = 2 * atoms + 1;
  const int first = std::max(0, n_max - levels + 1);
  const Eigen::Index start = static_cast<Eigen::Index>(first) * spin_dim;
  return state.tail(state.size() - start).squaredNorm();
}

EDResult solve_at_cutoff(Gauge gauge, const ModelParams& p, int n_max, const EdLimits& limits) {
  if (!is_hermitian(gauge))
    throw ContractError("solve_at_cutoff: the non-Hermitian gauge has no ground state; use spectrum_at_cutoff");
  const Hamiltonian h = build_hamiltonian(gauge, p, n_max, limits);
  const GroundState gs = ground_state(h, limits);
  const EdObservables obs = ed_observables(gs.vector, p.N(), n_max);

  EDResult r;
  r.gauge = gauge;
  r.atoms = p.N();
  r.n_max_used = n_max;
  r.ground_energy_per_atom = gs.energy / p.N();
  r.n_p_ed = obs.n_p;
  r.delta_na_ed = obs.delta_na;
  r.tail_population = tail_population(gs.vector, p.N(), n_max);
  r.method = gs.method;
  return r;
}

EDResult spectrum_at_cutoff(Gauge gauge, const ModelParams& p, int n_max, const EdLimits& limits) {
  const Hamiltonian h = build_hamiltonian(gauge, p, n_max, limits);
  EDResult r;
  r.gauge = gauge;
  r.atoms = p.N();
  r.n_max_used = n_max;
  r.spectrum = complex_spectrum(h, limits);
  r.ground_energy_per_atom = std::numeric_limits<double>::quiet_NaN();
  r.method = "dense-general";
  return r;
}

int initial_cutoff(Gauge gauge, const ModelParams& p) {
  const double n_p = solve_ground_state(gauge, p).n_p;
  return static_cast<int>(std::ceil(4.0 * p.N() * std::max(n_p, 1.0))) + 20;
}

EDResult cutoff_converge(Gauge gauge, const ModelParams& p, double target_tol, const EdLimits& limits) {
  if (!(target_tol > 0.0)) throw DomainError("cutoff_converge: target_tol must be > 0");
  if (!is_hermitian(gauge))
    throw ContractError("cutoff_converge: the non-Hermitian gauge has no ground state to converge");

  int n_max = initial_cutoff(gauge, p);
  if (hilbert_dimension(p.N(), n_max) > limits.max_dimension)
    throw ResourceError("initial cutoff n_max=" + std::to_string(n_max) + " for N=" + std::to_string(p.N()) +
                        " already exceeds the dimension limit");

  EDResult current = solve_at_cutoff(gauge, p, n_max, limits);
  double best = std::numeric_limits<double>::infinity();
  for (;;) {
    const int doubled = 2 * n_max;
    if (hilbert_dimension(p.N(), doubled) > limits.max_dimension) {
      std::ostringstream msg;
      msg << "cutoff doubling to n_max=" << doubled << " exceeds the dimension limit "
          << limits.max_dimension << "; best per-atom change reached " << best;
      throw ResourceError(msg.str(), std::isfinite(best) ? best : -1.0);
    }
    const EDResult next = solve_at_cutoff(gauge, p, doubled, limits);
    const double change = std::abs(current.ground_energy_per_atom - next.ground_energy_per_atom);
    best = std::min(best, change);
    current.cutoff_change = change;
    if (change < target_tol && current.tail_population < kTailThreshold) {
      current.converged = true;
      return current;
    }
    n_max = doubled;
    current = next;
  }
}

}  // namespace dicke3
