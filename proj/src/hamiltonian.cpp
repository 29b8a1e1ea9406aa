#include "curvebody/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curvebody {

namespace {

constexpr double kZeroTol = 1e-12;
constexpr double kEqualRadiiTol = 1e-9;

// Radial kinetic factor (1 +/- r^2)^2 / (8 m R^2) and its r-derivative.
double kin(double r, const SystemParams& p) {
  const double w = p.space == Space::sphere ? 1.0 + r * r : 1.0 - r * r;
  return w * w / (8.0 * p.m() * p.R * p.R);
}

double dkin(double r, const SystemParams& p) {
  const double sign = p.space == Space::sphere ? 1.0 : -1.0;
  const double w = p.space == Space::sphere ? 1.0 + r * r : 1.0 - r * r;
  return sign * r * w / (2.0 * p.m() * p.R * p.R);
}

void validate_radius(double r, const SystemParams& p) {
  if (p.space == Space::sphere) {
    if (r <= 0.0) throw std::invalid_argument("sphere chart needs r > 0");
  } else {
    if (r <= 0.0 || r >= 1.0) throw std::invalid_argument("hyperbolic chart needs 0 < r < 1");
  }
}

}  // namespace

ReducedCase classify_reduced(const ReducedState& s, const SystemParams& p) {
  if (p.space == Space::sphere) {
    if (s.mu < 0.0 || s.nu < 0.0)
      throw std::invalid_argument("sphere block radii mu, nu must be nonnegative");
    const bool mu_zero = s.mu < kZeroTol;
    const bool nu_zero = s.nu < kZeroTol;
    if (mu_zero && nu_zero) {
      if (std::abs(s.p_phi) > kZeroTol)
        throw std::invalid_argument("p_phi must vanish when both block radii are zero");
      return ReducedCase::geodesic;
    }
    if (mu_zero || nu_zero) {
      if (std::abs(s.p_phi) > kZeroTol)
        throw std::invalid_argument("p_phi must vanish when one block radius is zero");
      return ReducedCase::radial;
    }
    if (std::abs(s.mu - s.nu) < kEqualRadiiTol)
      throw std::invalid_argument(
          "equal block radii are not covered by this chart; use the orbit variables");
    if (std::abs(s.p_phi) > std::min(s.mu, s.nu) + kZeroTol)
      throw std::invalid_argument("|p_phi| must not exceed min(mu, nu)");
    return ReducedCase::generic;
  }
  // Hyperbolic: the chart works for any mu as long as the second invariant is
  // nonzero; nu = 0 belongs to the orbit variables except for the fully
  // degenerate geodesic stratum.
  if (std::abs(s.nu) >= kZeroTol) return ReducedCase::generic;
  if (std::abs(s.mu) < kZeroTol && std::abs(s.p_phi) < kZeroTol) return ReducedCase::geodesic;
  throw std::invalid_argument(
      "vanishing second invariant is not covered by this chart; use the orbit variables");
}

namespace internal {

double reduced_energy(const ReducedState& s, const SystemParams& p, ReducedCase c) {
  const double K = kin(s.r, p);
  const double U = p.potential().value(s.r);
  switch (c) {
    case ReducedCase::geodesic:
      return K * s.p_r * s.p_r + U;
    case ReducedCase::radial: {
      const double c2 = s.mu * s.mu + s.nu * s.nu;  // exactly one is nonzero
      return K * (s.p_r * s.p_r + c2 / (s.r * s.r)) + U;
    }
    case ReducedCase::generic:
      break;
  }
  const double u2 = s.p_phi * s.p_phi;
  if (p.space == Space::sphere) {
    const Coeffs cf = coeff_s_unchecked(s.r, p);
    const double S = s.mu * s.mu + s.nu * s.nu - 2.0 * u2;
    const double Q = std::sqrt(std::max(s.mu * s.mu - u2, 0.0) *
                               std::max(s.nu * s.nu - u2, 0.0));
    return K * s.p_r * s.p_r + 4.0 * u2 / p.a() +
           0.5 * cf.A * (S + 2.0 * Q * std::cos(s.phi)) +
           0.5 * cf.C * (S - 2.0 * Q * std::cos(s.phi)) -
           2.0 * cf.B * Q * std::sin(s.phi) + U;
  }
  const Coeffs cf = coeff_h_unchecked(s.r, p);
  const double M = 0.5 * s.mu + 2.0 * u2;
  const double h = 0.25 * s.mu + u2;
  const double W = std::sqrt(h * h + 0.25 * s.nu * s.nu);
  return K * s.p_r * s.p_r + 4.0 * u2 / p.a() +
         0.5 * cf.A * (M + 2.0 * W * std::cosh(s.phi)) -
         0.5 * cf.C * (M - 2.0 * W * std::cosh(s.phi)) -
         2.0 * cf.B * W * std::sinh(s.phi) + U;
}

ReducedGradient reduced_gradient(const ReducedState& s, const SystemParams& p, ReducedCase c) {
  ReducedGradient g;
  const double K = kin(s.r, p);
  const double dK = dkin(s.r, p);
  const double dU = p.potential().derivative(s.r);
  switch (c) {
    case ReducedCase::geodesic:
      g.d_r = dK * s.p_r * s.p_r + dU;
      g.d_p_r = 2.0 * K * s.p_r;
      return g;
    case ReducedCase::radial: {
      const double c2 = s.mu * s.mu + s.nu * s.nu;
      const double r2 = s.r * s.r;
      g.d_r = dK * (s.p_r * s.p_r + c2 / r2) - 2.0 * K * c2 / (r2 * s.r) + dU;
      g.d_p_r = 2.0 * K * s.p_r;
      return g;
    }
    case ReducedCase::generic:
      break;
  }
  const double u = s.p_phi, u2 = u * u;
  g.d_p_r = 2.0 * K * s.p_r;
  if (p.space == Space::sphere) {
    const Coeffs cf = coeff_s_unchecked(s.r, p);
    const double S = s.mu * s.mu + s.nu * s.nu - 2.0 * u2;
    const double Q = std::sqrt(std::max(s.mu * s.mu - u2, 0.0) *
                               std::max(s.nu * s.nu - u2, 0.0));
    const double cphi = std::cos(s.phi), sphi = std::sin(s.phi);
    g.d_r = dK * s.p_r * s.p_r + 0.5 * cf.dA * (S + 2.0 * Q * cphi) +
            0.5 * cf.dC * (S - 2.0 * Q * cphi) - 2.0 * cf.dB * Q * sphi + dU;
    g.d_phi = (cf.C - cf.A) * Q * sphi - 2.0 * cf.B * Q * cphi;
    const double dQ = Q > 0.0 ? -u * S / Q : 0.0;
    g.d_p_phi = 8.0 * u / p.a() - 2.0 * u * (cf.A + cf.C) + (cf.A - cf.C) * dQ * cphi -
                2.0 * cf.B * dQ * sphi;
    return g;
  }
  const Coeffs cf = coeff_h_unchecked(s.r, p);
  const double M = 0.5 * s.mu + 2.0 * u2;
  const double h = 0.25 * s.mu + u2;
  const double W = std::sqrt(h * h + 0.25 * s.nu * s.nu);
  const double cphi = std::cosh(s.phi), sphi = std::sinh(s.phi);
  g.d_r = dK * s.p_r * s.p_r + 0.5 * cf.dA * (M + 2.0 * W * cphi) -
          0.5 * cf.dC * (M - 2.0 * W * cphi) - 2.0 * cf.dB * W * sphi + dU;
  g.d_phi = (cf.A + cf.C) * W * sphi - 2.0 * cf.B * W * cphi;
  const double dW = 2.0 * u * h / W;  // W >= |nu|/2 > 0 here
  g.d_p_phi = 8.0 * u / p.a() + 2.0 * u * (cf.A - cf.C) + (cf.A + cf.C) * dW * cphi -
              2.0 * cf.B * dW * sphi;
  return g;
}

double orbit_energy(const OrbitState& s, const SystemParams& p) {
  const double K = kin(s.r, p);
  const double U = p.potential().value(s.r);
  const double cross = p.space == Space::sphere ? -1.0 : 1.0;
  const Coeffs cf = p.space == Space::sphere ? coeff_s_unchecked(s.r, p)
                                             : coeff_h_unchecked(s.r, p);
  return K * s.p_r * s.p_r + s.p4 * s.p4 / p.a() + 0.5 * cf.A * s.p3 * s.p3 +
         0.5 * cf.C * s.p5 * s.p5 + cross * cf.B * s.p3 * s.p5 + U;
}

OrbitGradient orbit_gradient(const OrbitState& s, const SystemParams& p) {
  OrbitGradient g;
  const double K = kin(s.r, p);
  const double dK = dkin(s.r, p);
  const double dU = p.potential().derivative(s.r);
  const double cross = p.space == Space::sphere ? -1.0 : 1.0;
  const Coeffs cf = p.space == Space::sphere ? coeff_s_unchecked(s.r, p)
                                             : coeff_h_unchecked(s.r, p);
  g.d_r = dK * s.p_r * s.p_r + 0.5 * cf.dA * s.p3 * s.p3 + 0.5 * cf.dC * s.p5 * s.p5 +
          cross * cf.dB * s.p3 * s.p5 + dU;
  g.d_p_r = 2.0 * K * s.p_r;
  g.d_p3 = cf.A * s.p3 + cross * cf.B * s.p5;
  g.d_p4 = 2.0 * s.p4 / p.a();
  g.d_p5 = cf.C * s.p5 + cross * cf.B * s.p3;
  return g;
}

}  // namespace internal

double hamiltonian(const ReducedState& s, const SystemParams& p) {
  const ReducedCase c = classify_reduced(s, p);
  validate_radius(s.r, p);
  return internal::reduced_energy(s, p, c);
}

ReducedGradient hamiltonian_gradient(const ReducedState& s, const SystemParams& p) {
  const ReducedCase c = classify_reduced(s, p);
  validate_radius(s.r, p);
  return internal::reduced_gradient(s, p, c);
}

double hamiltonian(const OrbitState& s, const SystemParams& p) {
  validate_radius(s.r, p);
  return internal::orbit_energy(s, p);
}

OrbitGradient hamiltonian_gradient(const OrbitState& s, const SystemParams& p) {
  validate_radius(s.r, p);
  return internal::orbit_gradient(s, p);
}

double orbit_casimir(const OrbitState& s, const SystemParams& p) {
  if (p.space == Space::sphere) return s.p3 * s.p3 + s.p4 * s.p4 + s.p5 * s.p5;
  return s.p3 * s.p3 - s.p4 * s.p4 - s.p5 * s.p5;
}

}  // namespace curvebody
