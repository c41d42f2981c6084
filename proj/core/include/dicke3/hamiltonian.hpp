#pragma once

// Full quantum Hamiltonian on Fock(0..n_max) (x) spin-N, basis index
// n (2N+1) + (m + N):
//
//   H = omega a^dag a + Omega S_z
//     + c_C (a + a^dag)(S_+ + S_-)      c_C = G Omega / sqrt(2N)
//     + c_D (a - a^dag)(S_+ - S_-)      c_D = G omega / sqrt(2N)
//
// Coulomb keeps only the c_C term, dipole only the c_D term, unified both.
// The non-Hermitian unified form multiplies the whole coupling by i.

#include <complex>
#include <cstddef>
#include <variant>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "dicke3/model.hpp"
#include "dicke3/operators.hpp"

namespace dicke3 {

using RealSparse = Eigen::SparseMatrix<double>;
using ComplexSparse = Eigen::SparseMatrix<std::complex<double>>;

class Hamiltonian {
 public:
  Hamiltonian(Gauge gauge, int atoms, int n_max, RealSparse matrix);
  Hamiltonian(Gauge gauge, int atoms, int n_max, ComplexSparse matrix);

  Gauge gauge() const noexcept { return gauge_; }
  int atoms() const noexcept { return atoms_; }
  int n_max() const noexcept { return n_max_; }
  Eigen::Index dimension() const noexcept;

  /// True when stored as a real symmetric matrix (Hermitian gauges).
  bool is_real_symmetric() const noexcept { return std::holds_alternative<RealSparse>(matrix_); }

  /// Throws ContractError when the matrix is complex.
  const RealSparse& real() const;
  /// Complex view; real matrices are converted.
  ComplexSparse as_complex() const;
  Eigen::MatrixXcd dense() const;

  Eigen::Index index(int photons, int m) const noexcept {
    return static_cast<Eigen::Index>(photons) * (2 * atoms_ + 1) + (m + atoms_);
  }

 private:
  Gauge gauge_;
  int atoms_;
  int n_max_;
  std::variant<RealSparse, ComplexSparse> matrix_;
};

/// (2N+1)(n_max+1), computed without overflow.
std::size_t hilbert_dimension(int atoms, int n_max) noexcept;

/// Throws DomainError for n_max < 1 and ResourceError when the dimension
/// exceeds limits.max_dimension. The check runs before any allocation.
Hamiltonian build_hamiltonian(Gauge gauge, const ModelParams& p, int n_max,
                              const EdLimits& limits = {});

/// Diagonal of Pi = exp(i pi (a^dag a + S_z + N)): (-1)^(n + m + N).
Eigen::VectorXd parity_diagonal(int atoms, int n_max);

/// max |(H Pi - Pi H)_ij|.
double parity_commutator_norm(const Hamiltonian& h);

/// max |H_ij - conj(H_ji)|.
double hermiticity_defect(const Hamiltonian& h);

}  // namespace dicke3
