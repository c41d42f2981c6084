#include "dicke3/operators.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "dicke3/errors.hpp"

namespace dicke3 {

namespace {

template <typename T>
void override_from_env(const char* name, T& field) {
  const char* text = std::getenv(name);
  if (text == nullptr || *text == '\0') return;
  char* end = nullptr;
  const long long v = std::strtoll(text, &end, 10);
  if (end == text || *end != '\0' || v <= 0) return;
  field = static_cast<T>(v);
}

}  // namespace

EdLimits EdLimits::from_environment() {
  EdLimits limits;
  override_from_env("DICKE3_ED_MAX_DIM", limits.max_dimension);
  override_from_env("DICKE3_ED_DENSE_THRESHOLD", limits.dense_threshold);
  override_from_env("DICKE3_LANCZOS_BASIS", limits.lanczos_basis);
  return limits;
}

double spin_raise_element(double s, double m) noexcept {
  return std::sqrt(s * (s + 1.0) - m * (m + 1.0));
}

SpinOperatorSet spin_matrices(double s, const EdLimits& limits) {
  const double two_s = 2.0 * s;
  if (!std::isfinite(s) || s < 0.0 || two_s != std::floor(two_s))
    throw DomainError("spin value must be a non-negative multiple of 1/2");
  const double dim_d = two_s + 1.0;
  if (dim_d > static_cast<double>(limits.max_dimension))
    throw ResourceError("spin dimension " + std::to_string(static_cast<long long>(dim_d)) +
                        " exceeds the configured limit");

  const auto dim = static_cast<Eigen::Index>(dim_d);
  SpinOperatorSet ops;
  ops.s = s;
  ops.Sz = Eigen::MatrixXd::Zero(dim, dim);
  ops.Splus = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double m = -s + static_cast<double>(i);
    ops.Sz(i, i) = m;
    if (i + 1 < dim) ops.Splus(i + 1, i) = spin_raise_element(s, m);
  }
  ops.Sminus = ops.Splus.transpose();
  return ops;
}

BosonOperatorSet boson_matrices(int n_max, const EdLimits& limits) {
  if (n_max < 1) throw DomainError("Fock cutoff n_max must be >= 1");
  if (static_cast<std::size_t>(n_max) + 1 > limits.max_dimension)
    throw ResourceError("Fock dimension exceeds the configured limit");

  const Eigen::Index dim = n_max + 1;
  BosonOperatorSet ops;
  ops.n_max = n_max;
  ops.a = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index n = 1; n < dim; ++n) ops.a(n - 1, n) = std::sqrt(static_cast<double>(n));
  ops.adag = ops.a.transpose();
  ops.number = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index n = 0; n < dim; ++n) ops.number(n, n) = static_cast<double>(n);
  return ops;
}

}  // namespace dicke3
