#include "dicke3/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "dicke3/errors.hpp"

namespace dicke3 {

Hamiltonian::Hamiltonian(Gauge gauge, int atoms, int n_max, RealSparse matrix)
    : gauge_(gauge), atoms_(atoms), n_max_(n_max), matrix_(std::move(matrix)) {}

Hamiltonian::Hamiltonian(Gauge gauge, int atoms, int n_max, ComplexSparse matrix)
    : gauge_(gauge), atoms_(atoms), n_max_(n_max), matrix_(std::move(matrix)) {}

Eigen::Index Hamiltonian::dimension() const noexcept {
  return std::visit([](const auto& m) { return m.rows(); }, matrix_);
}

const RealSparse& Hamiltonian::real() const {
  if (const auto* m = std::get_if<RealSparse>(&matrix_)) return *m;
  throw ContractError("Hamiltonian is complex; use as_complex() or complex_spectrum()");
}

ComplexSparse Hamiltonian::as_complex() const {
  if (const auto* m = std::get_if<ComplexSparse>(&matrix_)) return *m;
  return std::get<RealSparse>(matrix_).cast<std::complex<double>>();
}

Eigen::MatrixXcd Hamiltonian::dense() const { return Eigen::MatrixXcd(as_complex()); }

std::size_t hilbert_dimension(int atoms, int n_max) noexcept {
  if (atoms < 0 || n_max < 0) return 0;
  const auto spin = static_cast<unsigned long long>(2LL * atoms + 1);
  const auto fock = static_cast<unsigned long long>(n_max) + 1;
  if (fock != 0 && spin > std::numeric_limits<std::size_t>::max() / fock)
    return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(spin * fock);
}

namespace {

template <typename Scalar>
Eigen::SparseMatrix<Scalar> assemble(const ModelParams& p, int n_max, Scalar c_sum,
                                     Scalar c_diff) {
  // Expanding the two couplings:
  //   a S_+ and a^dag S_- carry c_C + c_D, a S_- and a^dag S_+ carry c_C - c_D.
  const int N = p.N();
  const double s = N;
  const int spin_dim = 2 * N + 1;
  const Eigen::Index dim = static_cast<Eigen::Index>(spin_dim) * (n_max + 1);

  std::vector<Eigen::Triplet<Scalar>> triplets;
  triplets.reserve(static_cast<std::size_t>(dim) * 5);
  auto idx = [spin_dim, N](int n, int m) {
    return static_cast<Eigen::Index>(n) * spin_dim + (m + N);
  };

  for (int n = 0; n <= n_max; ++n) {
    for (int m = -N; m <= N; ++m) {
      const Eigen::Index col = idx(n, m);
      triplets.emplace_back(col, col, Scalar(p.omega() * n + p.Omega() * m));

      const double up = m < N ? spin_raise_element(s, m) : 0.0;     // <m+1|S_+|m>
      const double down = m > -N ? spin_raise_element(s, m - 1) : 0.0;  // <m-1|S_-|m>
      const double lower = std::sqrt(static_cast<double>(n));          // <n-1|a|n>
      const double raise = std::sqrt(static_cast<double>(n + 1));      // <n+1|a^dag|n>

      if (c_sum != Scalar(0)) {
        if (n > 0 && m < N) triplets.emplace_back(idx(n - 1, m + 1), col, c_sum * lower * up);
        if (n < n_max && m > -N)
          triplets.emplace_back(idx(n + 1, m - 1), col, c_sum * raise * down);
      }
      if (c_diff != Scalar(0)) {
        if (n > 0 && m > -N) triplets.emplace_back(idx(n - 1, m - 1), col, c_diff * lower * down);
        if (n < n_max && m < N) triplets.emplace_back(idx(n + 1, m + 1), col, c_diff * raise * up);
      }
    }
  }

  Eigen::SparseMatrix<Scalar> h(dim, dim);
  h.setFromTriplets(triplets.begin(), triplets.end());
  h.makeCompressed();
  return h;
}

}  // namespace

Hamiltonian build_hamiltonian(Gauge gauge, const ModelParams& p, int n_max, const EdLimits& limits) {
  if (n_max < 1) throw DomainError("Fock cutoff n_max must be >= 1");
  const std::size_t dim = hilbert_dimension(p.N(), n_max);
  if (dim > limits.max_dimension)
    throw ResourceError("Hilbert dimension " + std::to_string(dim) + " for N=" +
                        std::to_string(p.N()) + ", n_max=" + std::to_string(n_max) +
                        " exceeds the configured limit " + std::to_string(limits.max_dimension));

  const double scale = p.G() / std::sqrt(2.0 * p.N());
  double c_c = 0.0;
  double c_d = 0.0;
  switch (gauge) {
    case Gauge::Coulomb:
      c_c = scale * p.Omega();
      break;
    case Gauge::Dipole:
      c_d = scale * p.omega();
      break;
    case Gauge::Unified:
    case Gauge::NonHermitianUnified:
      c_c = scale * p.Omega();
      c_d = scale * p.omega();
      break;
  }

  if (is_hermitian(gauge))
    return Hamiltonian(gauge, p.N(), n_max, assemble<double>(p, n_max, c_c + c_d, c_c - c_d));

  using cplx = std::complex<double>;
  const cplx i{0.0, 1.0};
  return Hamiltonian(gauge, p.N(), n_max,
                     assemble<cplx>(p, n_max, i * (c_c + c_d), i * (c_c - c_d)));
}

Eigen::VectorXd parity_diagonal(int atoms, int n_max) {
  const int spin_dim = 2 * atoms + 1;
  Eigen::VectorXd d(static_cast<Eigen::Index>(spin_dim) * (n_max + 1));
  for (int n = 0; n <= n_max; ++n)
    for (int m = -atoms; m <= atoms; ++m)
      d(static_cast<Eigen::Index>(n) * spin_dim + (m + atoms)) = ((n + m + atoms) % 2 == 0) ? 1.0 : -1.0;
  return d;
}

double parity_commutator_norm(const Hamiltonian& h) {
  const Eigen::VectorXd pi = parity_diagonal(h.atoms(), h.n_max());
  const ComplexSparse m = h.as_complex();
  double worst = 0.0;
  for (Eigen::Index k = 0; k < m.outerSize(); ++k)
    for (ComplexSparse::InnerIterator it(m, k); it; ++it)
      worst = std::max(worst, std::abs(it.value() * (pi(it.col()) - pi(it.row()))));
  return worst;
}

double hermiticity_defect(const Hamiltonian& h) {
  const ComplexSparse m = h.as_complex();
  const ComplexSparse diff = m - ComplexSparse(m.adjoint());
  double worst = 0.0;
  for (Eigen::Index k = 0; k < diff.outerSize(); ++k)
    for (ComplexSparse::InnerIterator it(diff, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
  return worst;
}

}  // namespace dicke3
