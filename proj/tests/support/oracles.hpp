#pragma once

// Test-side reference computations. Nothing here calls the library's
// variational or Hamiltonian code: energies are re-derived in long double,
// extrema are found numerically and the full Hamiltonian is assembled from
// Kronecker products of independently built operators.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "dicke3/model.hpp"

namespace oracle {

using LD = long double;
inline constexpr LD kPi = std::numbers::pi_v<long double>;

inline LD phase_factor(LD eta, LD phi) {
  const LD c = std::cos(phi), s = std::sin(phi);
  return c * c + eta * eta * s * s;
}

/// Factor under the square root: 1, eta^2 or Phi.
inline LD gauge_factor(dicke3::Gauge g, const dicke3::ModelParams& p) {
  switch (g) {
    case dicke3::Gauge::Coulomb:
      return 1.0L;
    case dicke3::Gauge::Dipole:
      return static_cast<LD>(p.eta()) * p.eta();
    default:
      return phase_factor(p.eta(), p.phi());
  }
}

inline LD sigma(dicke3::Gauge g) { return g == dicke3::Gauge::NonHermitianUnified ? -1.0L : 1.0L; }

inline LD coupling_k(dicke3::Gauge g, const dicke3::ModelParams& p) {
  const LD G = p.G();
  return sigma(g) * 8.0L * G * G * gauge_factor(g, p) / p.N();
}

/// Real per-atom energy; branch = -1 (eps_-) or +1 (eps_+). Non-Hermitian
/// callers must stay below the exceptional point.
inline LD energy(dicke3::Gauge g, const dicke3::ModelParams& p, LD gamma, int branch) {
  const LD omega = p.omega(), Omega = p.Omega();
  return omega * gamma * gamma / p.N() + branch * Omega * std::sqrt(1.0L + coupling_k(g, p) * gamma * gamma);
}

/// d eps / d gamma written out by hand.
inline LD denergy(dicke3::Gauge g, const dicke3::ModelParams& p, LD gamma, int branch) {
  const LD k = coupling_k(g, p);
  return 2.0L * p.omega() * gamma / p.N() + branch * p.Omega() * k * gamma / std::sqrt(1.0L + k * gamma * gamma);
}

/// Golden-section search for the minimum of f on [lo, hi] (1e-12 relative
/// width), then bisection on the sign of df around it. Golden-section alone
/// only resolves the minimizer to about sqrt(machine epsilon).
inline LD minimize(const std::function<LD(LD)>& f, const std::function<LD(LD)>& df, LD lo, LD hi) {
  const LD r = (std::sqrt(5.0L) - 1.0L) / 2.0L;
  LD a = lo, b = hi;
  LD c = b - r * (b - a), d = a + r * (b - a);
  LD fc = f(c), fd = f(d);
  while (b - a > 1e-12L * std::max<LD>(1.0L, hi)) {
    if (fc < fd) {
      b = d, d = c, fd = fc;
      c = b - r * (b - a), fc = f(c);
    } else {
      a = c, c = d, fc = fd;
      d = a + r * (b - a), fd = f(d);
    }
  }
  LD x = 0.5L * (a + b);
  LD left = std::max(lo, x - 1e-6L * std::max<LD>(1.0L, x));
  LD right = std::min(hi, x + 1e-6L * std::max<LD>(1.0L, x));
  if (!(df(left) < 0 && df(right) > 0)) return x;
  for (int i = 0; i < 300; ++i) {
    const LD mid = 0.5L * (left + right);
    if (mid <= left || mid >= right) break;
    (df(mid) < 0 ? left : right) = mid;
  }
  return 0.5L * (left + right);
}

/// Minimizer of eps_- over gamma in [0, 10 sqrt(N) max(1, G)].
inline LD minimized_gamma(dicke3::Gauge g, const dicke3::ModelParams& p) {
  const LD hi = 10.0L * std::sqrt(static_cast<LD>(p.N())) * std::max<LD>(1.0L, p.G());
  return minimize([&](LD x) { return energy(g, p, x, -1); }, [&](LD x) { return denergy(g, p, x, -1); }, 0.0L, hi);
}

/// Bisection for the largest x in [lo, hi] with pred(x) true, assuming pred
/// is true at lo and false at hi.
inline LD bisect(const std::function<bool(LD)>& pred, LD lo, LD hi) {
  for (int i = 0; i < 400; ++i) {
    const LD mid = 0.5L * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (pred(mid) ? lo : hi) = mid;
  }
  return 0.5L * (lo + hi);
}

/// Coupling at which the zero-photon point stops being a minimum of eps_-:
/// the sign of d eps_-/d gamma just above gamma = 0 flips.
inline LD critical_coupling_by_bisection(dicke3::Gauge g, const dicke3::ModelParams& p) {
  auto stable = [&](LD G) { return denergy(g, p.with_coupling(static_cast<double>(G)), 1e-6L, -1) > 0; };
  LD hi = 1.0L;
  while (stable(hi)) hi *= 2.0L;
  return bisect(stable, 0.0L, hi);
}

/// Coupling at which 1 - 8 G^2 x Phi changes sign.
inline LD ep_by_radicand_scan(LD x, LD Phi) {
  auto real = [&](LD G) { return 1.0L - 8.0L * G * G * x * Phi > 0; };
  LD hi = 1.0L;
  while (real(hi)) hi *= 2.0L;
  return bisect(real, 0.0L, hi);
}

/// Spin-s matrices with m ascending, S_+ from the ladder formula.
struct Spin {
  Eigen::MatrixXd Sz, Sp, Sm;
};

inline Spin spin(int s) {
  const int d = 2 * s + 1;
  Spin out{Eigen::MatrixXd::Zero(d, d), Eigen::MatrixXd::Zero(d, d), Eigen::MatrixXd::Zero(d, d)};
  for (int i = 0; i < d; ++i) {
    const double m = -s + i;
    out.Sz(i, i) = m;
    if (i + 1 < d) out.Sp(i + 1, i) = std::sqrt((s - m) * (s + m + 1.0));
  }
  out.Sm = out.Sp.transpose();
  return out;
}

inline Eigen::MatrixXd annihilation(int n_max) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

/// Dense Hamiltonian from Kronecker products (boson (x) spin).
inline Eigen::MatrixXcd kron_hamiltonian(dicke3::Gauge g, const dicke3::ModelParams& p, int n_max) {
  using Eigen::kroneckerProduct;
  const int N = p.N();
  const Spin S = spin(N);
  const Eigen::MatrixXd a = annihilation(n_max);
  const Eigen::MatrixXd ad = a.transpose();
  const Eigen::MatrixXd Ib = Eigen::MatrixXd::Identity(n_max + 1, n_max + 1);
  const Eigen::MatrixXd Is = Eigen::MatrixXd::Identity(2 * N + 1, 2 * N + 1);

  const double cC = p.G() * p.Omega() / std::sqrt(2.0 * N);
  const double cD = p.G() * p.omega() / std::sqrt(2.0 * N);
  Eigen::MatrixXd free = p.omega() * Eigen::MatrixXd(kroneckerProduct(ad * a, Is)) +
                         p.Omega() * Eigen::MatrixXd(kroneckerProduct(Ib, S.Sz));
  Eigen::MatrixXd coulomb = cC * Eigen::MatrixXd(kroneckerProduct(Eigen::MatrixXd(a + ad), Eigen::MatrixXd(S.Sp + S.Sm)));
  Eigen::MatrixXd dipole = cD * Eigen::MatrixXd(kroneckerProduct(Eigen::MatrixXd(a - ad), Eigen::MatrixXd(S.Sp - S.Sm)));

  Eigen::MatrixXcd h = free.cast<std::complex<double>>();
  switch (g) {
    case dicke3::Gauge::Coulomb:
      h += coulomb.cast<std::complex<double>>();
      break;
    case dicke3::Gauge::Dipole:
      h += dipole.cast<std::complex<double>>();
      break;
    case dicke3::Gauge::Unified:
      h += (coulomb + dipole).cast<std::complex<double>>();
      break;
    case dicke3::Gauge::NonHermitianUnified:
      h += std::complex<double>(0.0, 1.0) * (coulomb + dipole).cast<std::complex<double>>();
      break;
  }
  return h;
}

/// Fixed-seed sampler for property tests.
class Sampler {
 public:
  explicit Sampler(unsigned long long seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  dicke3::ModelParams params(double G, int max_atoms = 100, double eta_lo = 0.2, double eta_hi = 3.0) {
    dicke3::RawParams raw;
    raw.eta = uniform(eta_lo, eta_hi);
    raw.G = G;
    raw.N = integer(1, max_atoms);
    raw.phi = uniform(0.0, std::numbers::pi);
    return dicke3::validate_params(raw);
  }

 private:
  std::mt19937_64 rng_;
};

inline dicke3::ModelParams make(double eta, double G, int N = 1, double phi = 0.0) {
  dicke3::RawParams raw;
  raw.eta = eta;
  raw.G = G;
  raw.N = N;
  raw.phi = phi;
  return dicke3::validate_params(raw);
}

}  // namespace oracle
