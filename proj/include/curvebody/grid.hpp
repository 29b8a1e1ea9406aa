#pragma once

#include <vector>

#include "curvebody/levels.hpp"
#include "curvebody/potential.hpp"

namespace curvebody {

// One radial eigenproblem: case coefficients, a potential, and the
// background parameters.
struct RadialProblem {
  CaseCoefficients coeffs;
  PotentialSpec potential;
  double m = 1.0;
  double R = 1.0;
};

// Finite-difference eigensolve of the radial problem, independent of every
// closed-form series.  The substitution theta = 2 arctan(r) compactifies the
// half-line to (0, pi); multiplying the eigenfunction by sin(theta) turns
// the weighted operator into a plain second-derivative problem
//
//   -mu g'' + (Q(theta) - mu) g = E g,   mu = 1/(2 m R^2),
//   Q = (a cot^2(theta/2) + b + c tan^2(theta/2))/(m R^2) + U(tan(theta/2)),
//
// with Dirichlet truncation on a uniform grid.  The oscillator potential
// walls the problem off at r = 1, so its domain ends at theta = pi/2.
// Eigenvalues are computed at n_points and 2*n_points and Richardson
// extrapolated; if the refinement still moves a requested level by more than
// a relative 1e-5 the solve is declared non-convergent and throws
// std::runtime_error.
SpectrumResult grid_eigensolve(const RadialProblem& problem, int count, int n_points);

// Independent problems solved in a batch.  With `parallel` set the loop runs
// across threads (each solve owns its matrix); the serial path is the
// reference and the parallel one must reproduce it bitwise.
std::vector<SpectrumResult> grid_eigensolve_batch(const std::vector<RadialProblem>& problems,
                                                  int count, int n_points, bool parallel);

}  // namespace curvebody
