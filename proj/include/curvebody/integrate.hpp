#pragma once

#include <functional>
#include <string>
#include <vector>

#include "curvebody/hamiltonian.hpp"

namespace curvebody {

// Thresholds the trajectory loop watches.  All in chart coordinates.  The
// singularity slack and the inversion radius are deliberately generous: past
// them the implicit solve starts straddling a coordinate singularity and
// either diverges or silently reflects, so we stop (or switch charts) while
// the steps are still tame.
inline constexpr double kCollisionRadius = 1e-8;      // r below this: halt
inline constexpr double kChartSingularitySlack = 1e-5;  // min(mu,nu)-|p_phi| below this: halt
inline constexpr double kHyperbolicBoundary = 1.0 - 1e-6;  // r above this: halt
inline constexpr double kInversionEnterRadius = 50.0;  // sphere: switch to q = 1/r
// Exit mirrors the entry radius.  The implicit midpoint rule conserves a
// step-size-dependent shadow energy that differs between the two charts; by
// switching back at the same radius the offset taken on entry is returned on
// exit instead of accumulating.  Strict inequalities plus the motion
// direction give the hysteresis: right after a switch the trajectory is
// moving away from the threshold it just crossed.
inline constexpr double kInversionExitQ = 1.0 / kInversionEnterRadius;

struct IntegrationOptions {
  double dt = 1e-3;
  double t_end = 1.0;   // rounded to the nearest whole number of steps
  int sample_every = 1;  // keep every k-th step in the sample list
  bool allow_inversion = true;  // sphere only: large-r coordinate switch
};

struct Event {
  double t = 0.0;
  std::string kind;  // collision | boundary | chart_singularity | newton_failure |
                     // inversion_enter | inversion_exit | antipodal_crossing
  double value = 0.0;  // the coordinate that tripped the check
};

struct ReducedSample {
  double t = 0.0;
  ReducedState state;
  double energy = 0.0;
};

struct OrbitSample {
  double t = 0.0;
  OrbitState state;
  double energy = 0.0;
  double casimir = 0.0;
};

struct ReducedTrajectory {
  std::vector<ReducedSample> samples;
  std::vector<Event> events;
  ReducedState final_state;
  double final_time = 0.0;
  long steps = 0;
  bool halted = false;        // true when an event stopped the run early
  std::string halt_reason;    // matches the kind of the halting event
};

struct OrbitTrajectory {
  std::vector<OrbitSample> samples;
  std::vector<Event> events;
  OrbitState final_state;
  double final_time = 0.0;
  long steps = 0;
  bool halted = false;
  std::string halt_reason;
};

// One implicit-midpoint step.  Newton iteration with a finite-difference
// Jacobian runs until the componentwise residual drops below
// 1e-13 * max(1, |y_i|), plus one extra correction so the accepted solve
// error is round-off rather than tolerance sized (at most 50 iterations);
// non-convergence throws std::runtime_error.  dt may be negative: the method
// is symmetric, so a negative step is the exact inverse of the positive one
// (used by the reversibility checks).
ReducedState flow_step(const ReducedState& s, const SystemParams& params, double dt);
OrbitState flow_step(const OrbitState& s, const SystemParams& params, double dt);

using ReducedObserver = std::function<void(double t, const ReducedState&)>;
using OrbitObserver = std::function<void(double t, const OrbitState&)>;

// Fixed-step trajectory loop.  Samples are recorded every sample_every steps
// (always including the initial and final points); the observer, when given,
// is called after every accepted step.  Chart events halt the run and are
// recorded rather than thrown.  On the sphere, r > kInversionEnterRadius
// switches integration to the coordinates q = 1/r, p_q = -r^2 p_r until q
// recovers past kInversionExitQ; a pass through q = 0 (the antipodal
// configuration) is logged, and is only attempted for potentials symmetric
// under r -> -r -- otherwise the run halts at the boundary.
ReducedTrajectory integrate(const ReducedState& s, const SystemParams& params,
                            const IntegrationOptions& opt,
                            const ReducedObserver& observer = {});
OrbitTrajectory integrate(const OrbitState& s, const SystemParams& params,
                          const IntegrationOptions& opt, const OrbitObserver& observer = {});

// Independent trajectories from a batch of initial conditions.  The parallel
// path distributes trajectories across OpenMP threads (thread_count() of
// them); the serial path is the reference implementation the tests compare
// against.  Results are identical bit for bit because trajectories share no
// state.
std::vector<ReducedTrajectory> run_ensemble(const std::vector<ReducedState>& initial,
                                            const SystemParams& params,
                                            const IntegrationOptions& opt,
                                            bool parallel = true);
std::vector<OrbitTrajectory> run_ensemble(const std::vector<OrbitState>& initial,
                                          const SystemParams& params,
                                          const IntegrationOptions& opt, bool parallel = true);

}  // namespace curvebody
