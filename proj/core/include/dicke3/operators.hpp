#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace dicke3 {

/// Resource knobs for exact diagonalization. Every field can be overridden
/// from the environment (see from_environment()).
struct EdLimits {
  /// Largest Hilbert-space dimension (2N+1)(n_max+1) we agree to build.
  std::size_t max_dimension = 200'000;
  /// Dense eigensolvers up to this dimension, Lanczos above it.
  std::size_t dense_threshold = 1000;
  /// Lanczos basis size before an explicit restart.
  int lanczos_basis = 300;
  int lanczos_restarts = 40;
  /// Relative residual ||H x - E x|| / max(1, |E|) accepted by Lanczos.
  double lanczos_tolerance = 1e-11;

  /// Defaults overridden by DICKE3_ED_MAX_DIM, DICKE3_ED_DENSE_THRESHOLD,
  /// DICKE3_LANCZOS_BASIS. Unparseable values are ignored.
  static EdLimits from_environment();
};

/// Collective spin-s matrices in the |s, m> basis, m = -s..s ascending.
struct SpinOperatorSet {
  double s = 0.0;
  Eigen::MatrixXd Sz;
  Eigen::MatrixXd Splus;
  Eigen::MatrixXd Sminus;

  Eigen::Index dimension() const noexcept { return Sz.rows(); }
};

/// Truncated single-mode boson operators on Fock states 0..n_max.
struct BosonOperatorSet {
  int n_max = 0;
  Eigen::MatrixXd a;
  Eigen::MatrixXd adag;
  Eigen::MatrixXd number;
};

/// S_+ |s,m> = sqrt(s(s+1) - m(m+1)) |s,m+1>. `s` must be a non-negative
/// half-integer (DomainError). Throws ResourceError when 2s+1 exceeds
/// limits.max_dimension.
SpinOperatorSet spin_matrices(double s, const EdLimits& limits = {});

/// Throws DomainError for n_max < 1.
BosonOperatorSet boson_matrices(int n_max, const EdLimits& limits = {});

/// <s, m+1| S_+ |s, m>.
double spin_raise_element(double s, double m) noexcept;

}  // namespace dicke3
