#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "dicke3/ed_oracle.hpp"
#include "dicke3/errors.hpp"

namespace dicke3 {

namespace {

constexpr double kSymmetryTolerance = 1e-10;

GroundState dense_lowest(const Eigen::MatrixXd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "dense symmetric eigensolver failed (dimension " << h.rows() << ", norm " << h.norm() << ")";
    throw NumericError(msg.str());
  }
  GroundState gs;
  gs.energy = solver.eigenvalues()(0);
  gs.vector = solver.eigenvectors().col(0);
  gs.method = "dense";
  gs.residual = (h * gs.vector - gs.energy * gs.vector).norm();
  return gs;
}

}  // namespace

GroundState ground_state(const Eigen::MatrixXd& h) {
  if (h.rows() != h.cols() || h.rows() == 0) throw ContractError("ground_state: matrix must be square and non-empty");
  const double defect = (h - h.transpose()).cwiseAbs().maxCoeff();
  if (defect > kSymmetryTolerance)
    throw ContractError("ground_state: matrix is not Hermitian (max |H - H^T| = " +
                        std::to_string(defect) + "); use complex_spectrum for non-Hermitian input");
  return dense_lowest(h);
}

GroundState ground_state(const Hamiltonian& h, const EdLimits& limits) {
  if (!h.is_real_symmetric())
    throw ContractError(
        "ground_state: the non-Hermitian Hamiltonian has no variational ground state; use "
        "complex_spectrum");
  if (static_cast<std::size_t>(h.dimension()) <= limits.dense_threshold)
    return dense_lowest(Eigen::MatrixXd(h.real()));
  return lanczos_ground_state(h.real(), limits);
}

GroundState lanczos_ground_state(const RealSparse& h, const EdLimits& limits) {
  const Eigen::Index n = h.rows();
  if (n == 0 || n != h.cols()) throw ContractError("lanczos: matrix must be square and non-empty");
  if (n <= 2) return dense_lowest(Eigen::MatrixXd(h));

  const Eigen::Index basis = std::min<Eigen::Index>(std::max(limits.lanczos_basis, 4), n);
  const double tol = limits.lanczos_tolerance;

  // Fixed seed: identical inputs give identical output.
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  Eigen::VectorXd x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = uniform(rng);
  x.normalize();

  Eigen::MatrixXd V(n, basis);
  Eigen::VectorXd alpha(basis);
  Eigen::VectorXd beta(basis);
  Eigen::VectorXd w(n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;

  GroundState gs;
  gs.method = "lanczos";
  double best_residual = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart <= limits.lanczos_restarts; ++restart) {
    V.col(0) = x;
    Eigen::Index k = 0;
    double theta = 0.0;
    Eigen::VectorXd y;

    for (Eigen::Index j = 0; j < basis; ++j) {
      w.noalias() = h * V.col(j);
      const double a = V.col(j).dot(w);
      w -= a * V.col(j);
      if (j > 0) w -= beta(j - 1) * V.col(j - 1);
      for (int pass = 0; pass < 2; ++pass) {
        const Eigen::VectorXd overlap = V.leftCols(j + 1).transpose() * w;
        w.noalias() -= V.leftCols(j + 1) * overlap;
      }
      const double b = w.norm();
      alpha(j) = a;
      beta(j) = b;
      k = j + 1;
      ++gs.iterations;

      tri.computeFromTridiagonal(alpha.head(k), beta.head(k - 1), Eigen::ComputeEigenvectors);
      theta = tri.eigenvalues()(0);
      y = tri.eigenvectors().col(0);
      const double estimate = std::abs(b * y(k - 1));
      if (estimate <= 0.1 * tol * std::max(1.0, std::abs(theta)) || b < 1e-14) break;
      if (j + 1 < basis) V.col(j + 1) = w / b;
    }

    x = V.leftCols(k) * y;
    x.normalize();
    const Eigen::VectorXd hx = h * x;
    const double rayleigh = x.dot(hx);
    const double residual = (hx - rayleigh * x).norm();
    if (residual < best_residual) {
      best_residual = residual;
      gs.energy = rayleigh;
      gs.vector = x;
      gs.residual = residual;
    }
    if (residual <= tol * std::max(1.0, std::abs(rayleigh))) return gs;
  }

  std::ostringstream msg;
  msg << "Lanczos did not converge (dimension " << n << ", residual " << best_residual << ", "
      << gs.iterations << " iterations)";
  throw NumericError(msg.str());
}

std::vector<std::complex<double>> complex_spectrum(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols() || h.rows() == 0) throw ContractError("complex_spectrum: matrix must be square and non-empty");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(h, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "complex eigensolver failed (dimension " << h.rows() << ", Frobenius norm " << h.norm()
        << ", max |H - H^dag| " << (h - h.adjoint()).cwiseAbs().maxCoeff() << ")";
    throw NumericError(msg.str());
  }
  std::vector<std::complex<double>> values(solver.eigenvalues().begin(), solver.eigenvalues().end());
  std::sort(values.begin(), values.end(), [](const auto& l, const auto& r) {
    if (l.real() != r.real()) return l.real() < r.real();
    return l.imag() < r.imag();
  });
  return values;
}

std::vector<std::complex<double>> complex_spectrum(const Hamiltonian& h, const EdLimits& limits) {
  if (static_cast<std::size_t>(h.dimension()) > limits.dense_threshold)
    throw ResourceError("complex_spectrum needs a dense matrix; dimension " +
                        std::to_string(h.dimension()) + " exceeds the dense threshold");
  return complex_spectrum(h.dense());
}

}  // namespace dicke3
