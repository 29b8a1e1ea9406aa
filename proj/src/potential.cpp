#include "curvebody/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curvebody {

PotentialSpec PotentialSpec::zero() { return PotentialSpec{}; }

PotentialSpec PotentialSpec::coulomb(double gamma) {
  PotentialSpec s;
  s.kind = Kind::coulomb;
  s.gamma = gamma;
  return s;
}

PotentialSpec PotentialSpec::oscillator(double omega) {
  PotentialSpec s;
  s.kind = Kind::oscillator;
  s.omega = omega;
  return s;
}

PotentialSpec PotentialSpec::inv_square_plus_square(double alpha, double beta) {
  if (alpha < 0.0 || beta < 0.0)
    throw std::invalid_argument("inv_square_plus_square needs alpha, beta >= 0");
  PotentialSpec s;
  s.kind = Kind::inv_square_plus_square;
  s.alpha = alpha;
  s.beta = beta;
  return s;
}

PotentialSpec PotentialSpec::tabulated(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("tabulated potential needs at least two samples");
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (!(samples[i].first > samples[i - 1].first))
      throw std::invalid_argument("tabulated potential samples must be strictly increasing in r");
  PotentialSpec s;
  s.kind = Kind::tabulated;
  s.samples = std::move(samples);
  return s;
}

Potential::Potential(const PotentialSpec& spec, double R) : spec_(spec), R_(R) {
  if (R <= 0.0) throw std::invalid_argument("curvature radius must be positive");
  if (spec_.kind != PotentialSpec::Kind::tabulated) return;

  // Fritsch-Carlson monotone slopes: secant average, zeroed across local
  // extrema, clamped into the circle of radius 3 around the secant.
  const auto& s = spec_.samples;
  const std::size_t n = s.size();
  std::vector<double> h(n - 1), delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = s[i + 1].first - s[i].first;
    delta[i] = (s[i + 1].second - s[i].second) / h[i];
  }
  slopes_.assign(n, 0.0);
  slopes_[0] = delta[0];
  slopes_[n - 1] = delta[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0)
      slopes_[i] = 0.0;
    else
      slopes_[i] = 0.5 * (delta[i - 1] + delta[i]);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (delta[i] == 0.0) {
      slopes_[i] = slopes_[i + 1] = 0.0;
      continue;
    }
    const double a = slopes_[i] / delta[i];
    const double b = slopes_[i + 1] / delta[i];
    const double norm = a * a + b * b;
    if (norm > 9.0) {
      const double tau = 3.0 / std::sqrt(norm);
      slopes_[i] = tau * a * delta[i];
      slopes_[i + 1] = tau * b * delta[i];
    }
  }
}

double Potential::value(double r) const {
  switch (spec_.kind) {
    case PotentialSpec::Kind::zero:
      return 0.0;
    case PotentialSpec::Kind::coulomb:
      return spec_.gamma / (2.0 * R_) * (r - 1.0 / r);
    case PotentialSpec::Kind::oscillator: {
      const double w = 1.0 - r * r;
      return 2.0 * spec_.omega * spec_.omega * R_ * R_ * r * r / (w * w);
    }
    case PotentialSpec::Kind::inv_square_plus_square:
      return spec_.alpha / (r * r) + spec_.beta * r * r;
    case PotentialSpec::Kind::tabulated:
      break;
  }
  const auto& s = spec_.samples;
  if (r <= s.front().first)
    return s.front().second + slopes_.front() * (r - s.front().first);
  if (r >= s.back().first)
    return s.back().second + slopes_.back() * (r - s.back().first);
  const auto it = std::upper_bound(
      s.begin(), s.end(), r,
      [](double x, const std::pair<double, double>& p) { return x < p.first; });
  const std::size_t i = static_cast<std::size_t>(it - s.begin()) - 1;
  const double h = s[i + 1].first - s[i].first;
  const double t = (r - s[i].first) / h;
  const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
  const double h10 = t * (1.0 - t) * (1.0 - t);
  const double h01 = t * t * (3.0 - 2.0 * t);
  const double h11 = t * t * (t - 1.0);
  return h00 * s[i].second + h10 * h * slopes_[i] + h01 * s[i + 1].second +
         h11 * h * slopes_[i + 1];
}

double Potential::derivative(double r) const {
  switch (spec_.kind) {
    case PotentialSpec::Kind::zero:
      return 0.0;
    case PotentialSpec::Kind::coulomb:
      return spec_.gamma / (2.0 * R_) * (1.0 + 1.0 / (r * r));
    case PotentialSpec::Kind::oscillator: {
      const double w = 1.0 - r * r;
      return 4.0 * spec_.omega * spec_.omega * R_ * R_ * r * (1.0 + r * r) / (w * w * w);
    }
    case PotentialSpec::Kind::inv_square_plus_square:
      return -2.0 * spec_.alpha / (r * r * r) + 2.0 * spec_.beta * r;
    case PotentialSpec::Kind::tabulated:
      break;
  }
  const auto& s = spec_.samples;
  if (r <= s.front().first) return slopes_.front();
  if (r >= s.back().first) return slopes_.back();
  const auto it = std::upper_bound(
      s.begin(), s.end(), r,
      [](double x, const std::pair<double, double>& p) { return x < p.first; });
  const std::size_t i = static_cast<std::size_t>(it - s.begin()) - 1;
  const double h = s[i + 1].first - s[i].first;
  const double t = (r - s[i].first) / h;
  const double d00 = 6.0 * t * (t - 1.0) / h;
  const double d10 = (1.0 - t) * (1.0 - 3.0 * t);
  const double d01 = -d00;
  const double d11 = t * (3.0 * t - 2.0);
  return d00 * s[i].second + d10 * slopes_[i] + d01 * s[i + 1].second +
         d11 * slopes_[i + 1];
}

}  // namespace curvebody
