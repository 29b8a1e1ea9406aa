#pragma once

#include <vector>

namespace curvebody {

// A point of the dual space in whichever coordinate set the caller chose
// (p1..p6, or u1,u2,u3,v1,v2,v3 for the split form).
struct DualPoint {
  std::vector<double> coordinates;
};

// Coadjoint-orbit chart for the spherical reduction, in split (u,v)
// coordinates: u1 = -v1 = u, the remaining components lie on circles of radii
// sqrt(mu^2 - u^2) and sqrt(nu^2 - u^2) with phases psi, chi.  Requires
// mu != nu (the section is transversal to the orbit only then) and
// |u| <= min(mu, nu).
DualPoint orbit_chart_s3(double mu, double nu, double u, double psi, double chi);

// Coadjoint-orbit chart for the hyperbolic reduction, in momentum coordinates
// p1..p6 with p1 = 0.  The radii u > 0, v solve u^2 - v^2 = mu + p4^2,
// u v = nu (the positive-u branch is continuous in all arguments).  The image
// satisfies I1 = mu, I2 = nu.  Requires nu != 0; the nu = 0 stratum is a
// different orbit type handled by the reduced dynamics directly.
DualPoint orbit_chart_h3(double mu, double nu, double p4, double psi, double chi);

// Invariants of the hyperbolic momentum algebra on p1..p6 points.
double hyperbolic_i1(const DualPoint& p);
double hyperbolic_i2(const DualPoint& p);

// Inverse chart angles recovered from a p1..p6 point produced by
// orbit_chart_h3 (valid wherever the arctan arguments stay on the principal
// branch).
double hyperbolic_psi(const DualPoint& p);
double hyperbolic_chi(const DualPoint& p);

}  // namespace curvebody
