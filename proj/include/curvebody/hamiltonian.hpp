#pragma once

#include "curvebody/coeffs.hpp"

namespace curvebody {

// Phase-space point of the two-degree-of-freedom reduced charts.  mu and nu
// are the conserved chart parameters -- the two block radii on the sphere,
// the two quadratic invariants in the hyperbolic case -- and ride along
// unchanged under the flow.
struct ReducedState {
  double r = 0.0, p_r = 0.0;
  double phi = 0.0, p_phi = 0.0;
  double mu = 0.0, nu = 0.0;
};

// Point of the mixed canonical / Lie-Poisson chart used on the degenerate
// strata: equal block radii on the sphere, vanishing second invariant in the
// hyperbolic case.  (r, p_r) is a canonical pair, (p3, p4, p5) carries the
// three-dimensional bracket of the stratum.
struct OrbitState {
  double r = 0.0, p_r = 0.0;
  double p3 = 0.0, p4 = 0.0, p5 = 0.0;
};

enum class ReducedCase {
  generic,   // both chart parameters in play (sphere: 0 < mu != nu)
  radial,    // sphere, exactly one block radius zero: 1-DOF motion with a
             // centrifugal term from the surviving parameter
  geodesic,  // both parameters zero: free radial motion in the potential
};

// Decides which display applies and validates the chart domain.  Throws
// std::invalid_argument for strata the reduced chart cannot represent:
// equal nonzero block radii on the sphere and a vanishing second invariant
// with anything else nonzero in the hyperbolic case (both belong to the
// orbit-variable chart), negative sphere radii, |p_phi| beyond min(mu, nu),
// and r outside the coordinate interval.
ReducedCase classify_reduced(const ReducedState& s, const SystemParams& params);

double hamiltonian(const ReducedState& s, const SystemParams& params);
double hamiltonian(const OrbitState& s, const SystemParams& params);

struct ReducedGradient {
  double d_r = 0.0, d_p_r = 0.0, d_phi = 0.0, d_p_phi = 0.0;
};
struct OrbitGradient {
  double d_r = 0.0, d_p_r = 0.0, d_p3 = 0.0, d_p4 = 0.0, d_p5 = 0.0;
};

// Closed-form partial derivatives of the matching Hamiltonian (the implicit
// integrator wants smooth exact gradients; the test suite checks them against
// central finite differences).
ReducedGradient hamiltonian_gradient(const ReducedState& s, const SystemParams& params);
OrbitGradient hamiltonian_gradient(const OrbitState& s, const SystemParams& params);

// The conserved quadratic of the orbit chart: p3^2 + p4^2 + p5^2 on the
// sphere, p3^2 - p4^2 - p5^2 in the hyperbolic case.
double orbit_casimir(const OrbitState& s, const SystemParams& params);

namespace internal {

// Unvalidated evaluators shared with the integrator.  Square roots are
// clamped at zero so transient excursions past |p_phi| = min(mu, nu) during
// the implicit solve yield finite values instead of NaN.
double reduced_energy(const ReducedState& s, const SystemParams& params, ReducedCase c);
ReducedGradient reduced_gradient(const ReducedState& s, const SystemParams& params,
                                 ReducedCase c);
double orbit_energy(const OrbitState& s, const SystemParams& params);
OrbitGradient orbit_gradient(const OrbitState& s, const SystemParams& params);

}  // namespace internal

}  // namespace curvebody
