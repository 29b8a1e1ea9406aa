#pragma once

#include <vector>

#include "curvebody/integrate.hpp"

namespace curvebody {

// Section plane through the reduced phase space: either the angle phi
// (understood mod 2 pi) or its momentum pinned to a constant.
enum class SectionVariable { phi, p_phi };

struct SectionSpec {
  SectionVariable variable = SectionVariable::phi;
  double value = 0.0;
  // +1: keep crossings with the section function increasing, -1: decreasing,
  // 0: both directions.
  int direction = 0;
};

struct SectionPoint {
  double t = 0.0;
  double r = 0.0;
  double p_r = 0.0;
};

// Crossing points of the sampled trajectory with the section, linearly
// interpolated between neighbouring samples.  Angle sections are evaluated on
// the wrapped difference to (-pi, pi], and sample pairs whose wrapped values
// jump by more than pi are skipped as winding artifacts, so the trajectory
// must be sampled densely relative to its crossing rate.  A trajectory that
// rides inside the section plane itself (a 1-DOF stratum, or a fixed point)
// yields its samples directly, deduplicated, rather than interpolated
// crossings.
std::vector<SectionPoint> poincare_section(const ReducedTrajectory& trajectory,
                                           const SectionSpec& section);

}  // namespace curvebody
