#include "curvebody/poincare.hpp"

#include <cmath>

namespace curvebody {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGrazeTol = 1e-12;

double wrap_to_pi(double x) {
  double w = std::fmod(x + kPi, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  return w - kPi;
}

double section_value(const ReducedSample& s, const SectionSpec& spec) {
  if (spec.variable == SectionVariable::phi) return wrap_to_pi(s.state.phi - spec.value);
  return s.state.p_phi - spec.value;
}

}  // namespace

std::vector<SectionPoint> poincare_section(const ReducedTrajectory& trajectory,
                                           const SectionSpec& spec) {
  std::vector<SectionPoint> out;
  const auto& samples = trajectory.samples;
  if (samples.empty()) return out;

  const auto emit = [&](double t, double r, double p_r) {
    if (!out.empty() && std::abs(out.back().r - r) < kGrazeTol &&
        std::abs(out.back().p_r - p_r) < kGrazeTol)
      return;
    out.push_back(SectionPoint{t, r, p_r});
  };

  double prev = section_value(samples.front(), spec);
  if (std::abs(prev) <= kGrazeTol)
    emit(samples.front().t, samples.front().state.r, samples.front().state.p_r);

  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double cur = section_value(samples[i], spec);
    if (std::abs(cur) <= kGrazeTol) {
      // Grazing contact: the trajectory lives in the section plane here, so
      // the sample itself is the section point.
      emit(samples[i].t, samples[i].state.r, samples[i].state.p_r);
      prev = cur;
      continue;
    }
    if (std::abs(prev) > kGrazeTol && prev * cur < 0.0 &&
        (spec.variable != SectionVariable::phi || std::abs(cur - prev) < kPi)) {
      const int dir = cur > prev ? 1 : -1;
      if (spec.direction == 0 || spec.direction == dir) {
        const double w = prev / (prev - cur);  // fraction of the interval
        const auto& a = samples[i - 1];
        const auto& b = samples[i];
        emit(a.t + w * (b.t - a.t), a.state.r + w * (b.state.r - a.state.r),
             a.state.p_r + w * (b.state.p_r - a.state.p_r));
      }
    }
    prev = cur;
  }
  return out;
}

}  // namespace curvebody
