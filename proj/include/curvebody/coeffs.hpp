#pragma once

#include "curvebody/potential.hpp"

namespace curvebody {

enum class Space { sphere, hyperbolic };

// Masses, curvature radius and potential, with the two derived constants the
// formulas use everywhere: the reduced mass m = m1 m2 / (m1 + m2) and
// a = 2 R^2 (m1 + m2).
struct SystemParams {
  SystemParams(double m1, double m2, double R, Space space, PotentialSpec potential);

  double m1, m2, R;
  Space space;

  double m() const { return m_; }
  double a() const { return a_; }
  const Potential& potential() const { return potential_; }

 private:
  double m_, a_;
  Potential potential_;
};

// The three radial kinetic coefficients together with their r-derivatives
// (the integrator needs dH/dr in closed form; see the test suite for the
// finite-difference and alternate-parametrization cross-checks).
struct Coeffs {
  double A = 0.0, B = 0.0, C = 0.0;
  double dA = 0.0, dB = 0.0, dC = 0.0;
};

Coeffs coeff_s(double r, const SystemParams& params);  // sphere, r > 0
Coeffs coeff_h(double r, const SystemParams& params);  // hyperbolic, 0 < r < 1

namespace internal {

// Same formulas without the domain guards.  The implicit solver's iterates
// can wander transiently outside the chart; the expressions extend smoothly
// (or go NaN, which the solver treats as non-convergence), so evaluation must
// not throw.
Coeffs coeff_s_unchecked(double r, const SystemParams& params);
Coeffs coeff_h_unchecked(double r, const SystemParams& params);

}  // namespace internal

}  // namespace curvebody
