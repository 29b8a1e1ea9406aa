#include "curvebody/coeffs.hpp"

#include <cmath>
#include <stdexcept>

namespace curvebody {

namespace {

double checked_mass(double m) {
  if (m <= 0.0) throw std::invalid_argument("masses must be positive");
  return m;
}

double checked_radius(double R) {
  if (R <= 0.0) throw std::invalid_argument("curvature radius must be positive");
  return R;
}

}  // namespace

SystemParams::SystemParams(double m1_in, double m2_in, double R_in, Space space_in,
                           PotentialSpec potential_in)
    : m1(checked_mass(m1_in)),
      m2(checked_mass(m2_in)),
      R(checked_radius(R_in)),
      space(space_in),
      m_(m1_in * m2_in / (m1_in + m2_in)),
      a_(2.0 * R_in * R_in * (m1_in + m2_in)),
      potential_(potential_in, R_in) {}

// Both coefficient triples share the same skeleton
//   A = (T1 + T2 cos + T3 sin) / R^2,   C = (T1 - T2 cos - T3 sin) / R^2,
//   B = (T3 cos - T2 sin) / R^2
// with circular functions of zeta = 2 (m1-m2)/(m1+m2) atan(r) on the sphere
// and hyperbolic ones of zeta = 2 (m1-m2)/(m1+m2) atanh(r) in the hyperbolic
// case (where T1, T3 change their r-profile and the sign of the sinh terms in
// A and C flips).

Coeffs coeff_s(double r, const SystemParams& p) {
  if (p.space != Space::sphere)
    throw std::invalid_argument("coeff_s needs sphere parameters");
  if (r <= 0.0) throw std::invalid_argument("coeff_s needs r > 0");
  return internal::coeff_s_unchecked(r, p);
}

Coeffs coeff_h(double r, const SystemParams& p) {
  if (p.space != Space::hyperbolic)
    throw std::invalid_argument("coeff_h needs hyperbolic parameters");
  if (r <= 0.0 || r >= 1.0) throw std::invalid_argument("coeff_h needs 0 < r < 1");
  return internal::coeff_h_unchecked(r, p);
}

namespace internal {

Coeffs coeff_s_unchecked(double r, const SystemParams& p) {
  const double m = p.m();
  const double kappa = (p.m1 - p.m2) / (p.m1 + p.m2);
  const double k3 = (p.m1 - p.m2) / (4.0 * p.m1 * p.m2);
  const double inv_r = 1.0 / r, inv_r2 = inv_r * inv_r, inv_r3 = inv_r2 * inv_r;
  const double R2 = p.R * p.R;

  const double t1 = (r * r + 2.0 + inv_r2) / (8.0 * m);
  const double t2 = (inv_r2 - r * r) / (8.0 * m);
  const double t3 = k3 * (r + inv_r);
  const double dt1 = (r - inv_r3) / (4.0 * m);
  const double dt2 = -(r + inv_r3) / (4.0 * m);
  const double dt3 = k3 * (1.0 - inv_r2);

  const double zeta = 2.0 * kappa * std::atan(r);
  const double dzeta = 2.0 * kappa / (1.0 + r * r);
  const double c = std::cos(zeta), s = std::sin(zeta);

  Coeffs out;
  out.A = (t1 + t2 * c + t3 * s) / R2;
  out.C = (t1 - t2 * c - t3 * s) / R2;
  out.B = (t3 * c - t2 * s) / R2;
  out.dA = (dt1 + dt2 * c - t2 * dzeta * s + dt3 * s + t3 * dzeta * c) / R2;
  out.dC = (dt1 - dt2 * c + t2 * dzeta * s - dt3 * s - t3 * dzeta * c) / R2;
  out.dB = (dt3 * c - t3 * dzeta * s - dt2 * s - t2 * dzeta * c) / R2;
  return out;
}

Coeffs coeff_h_unchecked(double r, const SystemParams& p) {
  const double m = p.m();
  const double kappa = (p.m1 - p.m2) / (p.m1 + p.m2);
  const double k3 = (p.m1 - p.m2) / (4.0 * p.m1 * p.m2);
  const double inv_r = 1.0 / r, inv_r2 = inv_r * inv_r, inv_r3 = inv_r2 * inv_r;
  const double R2 = p.R * p.R;

  const double s1 = (inv_r2 - 2.0 + r * r) / (8.0 * m);
  const double s2 = (inv_r2 - r * r) / (8.0 * m);
  const double s3 = k3 * (inv_r - r);
  const double ds1 = (r - inv_r3) / (4.0 * m);
  const double ds2 = -(r + inv_r3) / (4.0 * m);
  const double ds3 = k3 * (-inv_r2 - 1.0);

  const double zeta = 2.0 * kappa * std::atanh(r);
  const double dzeta = 2.0 * kappa / (1.0 - r * r);
  const double ch = std::cosh(zeta), sh = std::sinh(zeta);

  Coeffs out;
  out.A = (s1 + s2 * ch - s3 * sh) / R2;
  out.C = (s1 - s2 * ch + s3 * sh) / R2;
  out.B = (s3 * ch - s2 * sh) / R2;
  out.dA = (ds1 + ds2 * ch + s2 * dzeta * sh - ds3 * sh - s3 * dzeta * ch) / R2;
  out.dC = (ds1 - ds2 * ch - s2 * dzeta * sh + ds3 * sh + s3 * dzeta * ch) / R2;
  out.dB = (ds3 * ch + s3 * dzeta * sh - ds2 * sh - s2 * dzeta * ch) / R2;
  return out;
}

}  // namespace internal

}  // namespace curvebody
