#include "dicke3/variational.hpp"

#include <cmath>
#include <numbers>

#include "dicke3/errors.hpp"

namespace dicke3 {

namespace {

using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};

void require_amplitude(double gamma) {
  if (!std::isfinite(gamma) || gamma < 0.0)
    throw DomainError("field amplitude gamma must be finite and >= 0");
}

/// +1 for the Hermitian gauges, -1 where the coupling carries a factor i.
double coupling_sign(Gauge gauge) { return is_hermitian(gauge) ? 1.0 : -1.0; }

double branch_sign(Branch branch) { return branch == Branch::Minus ? -1.0 : 1.0; }

/// 1 + s 8 G^2 gamma^2 Phi_g / N
double radicand(Gauge gauge, const ModelParams& p, double gamma) {
  const double phi_g = gauge_phase_factor(gauge, p);
  const double G = p.G();
  return 1.0 + coupling_sign(gauge) * 8.0 * G * G * gamma * gamma * phi_g / p.N();
}

/// Square root of the radicand with a domain check for the derivatives.
double real_root_for_derivative(Gauge gauge, const ModelParams& p, double gamma) {
  const double r2 = radicand(gauge, p, gamma);
  if (r2 <= 0.0)
    throw DomainError(
        "energy landscape is complex at this amplitude (at or beyond the exceptional "
        "point); curvature is undefined");
  return std::sqrt(r2);
}

}  // namespace

std::string_view to_string(Phase phase) noexcept {
  switch (phase) {
    case Phase::NP:
      return "NP";
    case Phase::SP:
      return "SP";
    case Phase::UnstableSP:
      return "UnstableSP";
  }
  return "unknown";
}

cplx energy(Gauge gauge, const ModelParams& p, double gamma, Branch branch) {
  require_amplitude(gamma);
  const double field = p.omega() * gamma * gamma / p.N();
  const double r2 = radicand(gauge, p, gamma);
  const double sgn = branch_sign(branch);
  if (r2 >= 0.0) return {field + sgn * p.Omega() * std::sqrt(r2), 0.0};
  // principal root of a negative radicand: i sqrt(-r2)
  return {field, sgn * p.Omega() * std::sqrt(-r2)};
}

double first_derivative(Gauge gauge, const ModelParams& p, double gamma, Branch branch) {
  require_amplitude(gamma);
  const double R = real_root_for_derivative(gauge, p, gamma);
  const double G = p.G();
  const double k = coupling_sign(gauge) * 8.0 * G * G * gauge_phase_factor(gauge, p) / p.N();
  return 2.0 * p.omega() * gamma / p.N() + branch_sign(branch) * p.Omega() * k * gamma / R;
}

double second_derivative(Gauge gauge, const ModelParams& p, double gamma, Branch branch) {
  require_amplitude(gamma);
  const double R = real_root_for_derivative(gauge, p, gamma);
  const double G = p.G();
  const double k = coupling_sign(gauge) * 8.0 * G * G * gauge_phase_factor(gauge, p) / p.N();
  return 2.0 * p.omega() / p.N() + branch_sign(branch) * p.Omega() * k / (R * R * R);
}

double critical_coupling(Gauge gauge, const ModelParams& p) {
  const double eta = p.eta();
  switch (gauge) {
    case Gauge::Coulomb:
      return 0.5 * std::sqrt(eta);
    case Gauge::Dipole:
      return 0.5 * std::sqrt(1.0 / eta);
    case Gauge::Unified:
    case Gauge::NonHermitianUnified:
      return 0.5 * std::sqrt(eta / phase_factor(eta, p.phi()));
  }
  return 0.5;
}

std::optional<double> superradiant_gamma(Gauge gauge, const ModelParams& p) {
  const double G = p.G();
  if (G <= 0.0) return std::nullopt;
  const double eta = p.eta();
  const double sqrtN = std::sqrt(static_cast<double>(p.N()));
  const double G2 = G * G;

  switch (gauge) {
    case Gauge::Coulomb: {
      const double q = 4.0 * G2 / eta;
      const double rad = q * q - 1.0;
      if (rad <= 0.0) return std::nullopt;
      return sqrtN * std::sqrt(rad) / (2.0 * std::numbers::sqrt2 * G);
    }
    case Gauge::Dipole: {
      const double rad = 16.0 * G2 - 1.0 / (G2 * eta * eta);
      if (rad <= 0.0) return std::nullopt;
      return sqrtN / (2.0 * std::numbers::sqrt2) * std::sqrt(rad);
    }
    case Gauge::Unified: {
      const double Phi = phase_factor(eta, p.phi());
      const double rad = 2.0 * G2 * Phi / (eta * eta) - 1.0 / (8.0 * G2 * Phi);
      if (rad <= 0.0) return std::nullopt;
      return sqrtN * std::sqrt(rad);
    }
    case Gauge::NonHermitianUnified: {
      const double Phi = phase_factor(eta, p.phi());
      const double n_p = (1.0 - 16.0 * G2 * G2 * Phi * Phi / (eta * eta)) / (8.0 * G2 * Phi);
      if (n_p <= 0.0) return std::nullopt;
      return std::sqrt(n_p * p.N());
    }
  }
  return std::nullopt;
}

VariationalSolution solve_ground_state(Gauge gauge, const ModelParams& p) {
  VariationalSolution out;
  out.phase = Phase::NP;
  out.energy = {-p.Omega(), 0.0};
  out.delta_na = -1.0;
  out.atom_energy = -p.Omega();
  out.stability = second_derivative(gauge, p, 0.0, Branch::Minus);

  if (!is_hermitian(gauge)) {
    // The spin-down zero-photon state is stable for every G; only the
    // plus branch has a nonzero extremum, and it is a maximum.
    if (const auto gc = superradiant_gamma(gauge, p)) {
      UnstableExtremum u;
      u.gamma_c = *gc;
      u.n_p = (*gc) * (*gc) / p.N();
      const double G = p.G();
      const double Phi = gauge_phase_factor(gauge, p);
      const double root = std::sqrt(1.0 - 8.0 * G * G * u.n_p * Phi);
      u.energy = p.omega() * u.n_p + p.Omega() * root;
      u.atom_energy = u.energy - p.omega() * u.n_p;
      u.berry_per_atom = 2.0 * std::numbers::pi * u.n_p;
      u.stability = second_derivative(gauge, p, *gc, Branch::Plus);
      out.unstable = u;
    }
    return out;
  }

  // Reduced gamma = 0 curvature, N kappa / (2 Omega) = eta - 4 G^2 Phi_g.
  // Within tolerance of zero the point is the boundary and stays NP.
  const double G = p.G();
  const double Phi = gauge_phase_factor(gauge, p);
  const double reduced_curvature = p.eta() - 4.0 * G * G * Phi;
  if (reduced_curvature >= -kStabilityTolerance) return out;

  const auto gc = superradiant_gamma(gauge, p);
  if (!gc) return out;

  out.phase = Phase::SP;
  out.gamma_c = *gc;
  out.n_p = (*gc) * (*gc) / p.N();
  const double root = std::sqrt(1.0 + 8.0 * G * G * out.n_p * Phi);
  out.energy = {p.omega() * out.n_p - p.Omega() * root, 0.0};
  out.delta_na = -1.0 / root;
  out.atom_energy = -p.Omega() * root;
  out.berry_per_atom = 2.0 * std::numbers::pi * out.n_p;
  out.stability = second_derivative(gauge, p, *gc, Branch::Minus);
  return out;
}

OffDiagResidual offdiag_residuals(Gauge gauge, const ModelParams& p, double gamma,
                                  RotationSign sign) {
  require_amplitude(gamma);
  const double Omega = p.Omega();
  const double omega = p.omega();
  const double eta = p.eta();
  const double G = p.G();
  // sqrt(2) G gamma / sqrt(N), the amplitude in front of every coupling term
  const double g = std::numbers::sqrt2 * G * gamma / std::sqrt(static_cast<double>(p.N()));
  const double s = sign == RotationSign::Positive ? 1.0 : -1.0;

  OffDiagResidual out;
  cplx B;
  cplx C;

  switch (gauge) {
    case Gauge::Coulomb: {
      // field phase and rotation phase both 0
      const double phi = 0.0;
      const double cos_t = s / std::sqrt(1.0 + 8.0 * G * G * gamma * gamma / p.N());
      const double sin_t = -2.0 * g * cos_t;
      const double c2 = 0.5 * (1.0 + cos_t);  // cos^2(theta/2)
      const double s2 = 0.5 * (1.0 - cos_t);  // sin^2(theta/2)
      const cplx e_m = std::exp(-I * phi);
      const cplx e_p = std::exp(I * phi);
      B = Omega * e_m / 2.0 * sin_t + g * Omega * std::cos(phi) * (c2 - e_m * e_m * s2);
      C = Omega * e_p / 2.0 * sin_t + g * Omega * std::cos(phi) * (c2 - e_p * e_p * s2);
      out.A = Omega * cos_t - 2.0 * g * Omega * std::cos(phi) * std::cos(phi) * sin_t;
      out.theta = std::atan2(sin_t, cos_t);
      out.chi = phi;
      break;
    }
    case Gauge::Dipole: {
      const double phi = std::numbers::pi / 2.0;
      const double cos_t = s / std::sqrt(1.0 + 8.0 * G * G * gamma * gamma * eta * eta / p.N());
      const double sin_t = 2.0 * g * eta * cos_t;
      const double c2 = 0.5 * (1.0 + cos_t);
      const double s2 = 0.5 * (1.0 - cos_t);
      const cplx e_m = std::exp(-I * phi);
      const cplx e_p = std::exp(I * phi);
      B = Omega * e_m / 2.0 * sin_t + I * g * omega * std::sin(phi) * (c2 + e_m * e_m * s2);
      C = Omega * e_p / 2.0 * sin_t - I * g * omega * std::sin(phi) * (e_p * e_p * s2 + c2);
      out.A = Omega * cos_t + 2.0 * g * omega * std::sin(phi) * std::sin(phi) * sin_t;
      out.theta = std::atan2(sin_t, cos_t);
      out.chi = phi;
      break;
    }
    case Gauge::Unified: {
      const double phi = p.phi();
      const double Phi = phase_factor(eta, phi);
      const double root_Phi = std::sqrt(Phi);
      const double cos_chi = std::cos(phi) / root_Phi;
      const double sin_chi = -eta * std::sin(phi) / root_Phi;
      const double cos_t = s / std::sqrt(1.0 + 8.0 * G * G * gamma * gamma * Phi / p.N());
      const double sin_t = -2.0 * g * root_Phi * cos_t;
      const double c2 = 0.5 * (1.0 + cos_t);
      const double s2 = 0.5 * (1.0 - cos_t);
      const cplx e_m{cos_chi, -sin_chi};  // e^{-i chi}
      const cplx e_p{cos_chi, sin_chi};
      B = g * (Omega * std::cos(phi) * (c2 - e_m * e_m * s2) +
               I * omega * std::sin(phi) * (c2 + e_m * e_m * s2)) +
          0.5 * Omega * sin_t * e_m;
      C = g * (Omega * std::cos(phi) * (c2 - e_p * e_p * s2) -
               I * omega * std::sin(phi) * (e_p * e_p * s2 + c2)) +
          0.5 * Omega * sin_t * e_p;
      out.A = Omega * cos_t +
              2.0 * g * sin_t * (omega * std::sin(phi) * sin_chi - Omega * std::cos(phi) * cos_chi);
      out.theta = std::atan2(sin_t, cos_t);
      out.chi = std::atan2(sin_chi, cos_chi);
      break;
    }
    case Gauge::NonHermitianUnified: {
      const double phi = p.phi();
      const double Phi = phase_factor(eta, phi);
      const double root_Phi = std::sqrt(Phi);
      const double tanh_t = 2.0 * g * root_Phi;
      if (!(tanh_t < 1.0))
        throw DomainError(
            "similarity transformation does not exist at or beyond the exceptional point");
      const double theta = std::atanh(tanh_t);
      const double cos_chi = eta * std::sin(phi) / root_Phi;
      const double sin_chi = -std::cos(phi) / root_Phi;
      const double ch2 = std::cosh(theta / 2.0) * std::cosh(theta / 2.0);
      const double sh2 = std::sinh(theta / 2.0) * std::sinh(theta / 2.0);
      const double sinh_t = std::sinh(theta);
      const cplx e_m{cos_chi, -sin_chi};
      const cplx e_p{cos_chi, sin_chi};
      B = g * (I * Omega * std::cos(phi) * (ch2 - e_p * e_p * sh2) -
               omega * std::sin(phi) * (ch2 + e_p * e_p * sh2)) +
          0.5 * Omega * e_p * sinh_t;
      C = g * (I * Omega * std::cos(phi) * (ch2 - e_m * e_m * sh2) +
               omega * std::sin(phi) * (ch2 + e_m * e_m * sh2)) -
          0.5 * Omega * e_m * sinh_t;
      out.A = Omega * std::cosh(theta) +
              2.0 * g * (Omega * std::cos(phi) * sin_chi - omega * std::sin(phi) * cos_chi) * sinh_t;
      out.theta = theta;
      out.chi = std::atan2(sin_chi, cos_chi);
      break;
    }
  }

  out.abs_B = std::abs(B);
  out.abs_C = std::abs(C);
  return out;
}

double exceptional_point(const ModelParams& p, double gamma) {
  if (!std::isfinite(gamma) || gamma <= 0.0)
    throw DomainError("exceptional point requires gamma > 0 (no EP at zero field)");
  const double Phi = phase_factor(p.eta(), p.phi());
  return std::sqrt(static_cast<double>(p.N())) / (2.0 * std::numbers::sqrt2 * gamma * std::sqrt(Phi));
}

}  // namespace dicke3
