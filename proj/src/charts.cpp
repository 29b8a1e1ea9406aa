#include "curvebody/charts.hpp"

#include <cmath>
#include <stdexcept>

namespace curvebody {

namespace {

void require_p6(const DualPoint& p) {
  if (p.coordinates.size() != 6)
    throw std::invalid_argument("expected a point with the six momentum coordinates");
}

}  // namespace

DualPoint orbit_chart_s3(double mu, double nu, double u, double psi, double chi) {
  if (mu < 0.0 || nu < 0.0)
    throw std::invalid_argument("orbit radii mu, nu must be nonnegative");
  if (mu == nu)
    throw std::invalid_argument(
        "orbit chart requires mu != nu: the u-section is transversal to the orbit "
        "only when the two radii differ");
  if (std::abs(u) > std::min(mu, nu))
    throw std::invalid_argument("|u| must not exceed min(mu, nu)");
  const double ru = std::sqrt(mu * mu - u * u);
  const double rv = std::sqrt(nu * nu - u * u);
  return DualPoint{{u, ru * std::sin(psi), ru * std::cos(psi),
                    -u, rv * std::sin(chi), rv * std::cos(chi)}};
}

DualPoint orbit_chart_h3(double mu, double nu, double p4, double psi, double chi) {
  if (nu == 0.0)
    throw std::invalid_argument(
        "orbit chart requires nu != 0; the nu = 0 stratum is a different orbit type");
  const double m = mu + p4 * p4;
  const double s = std::sqrt(m * m + 4.0 * nu * nu);
  const double u = std::sqrt(0.5 * (m + s));
  const double v = nu / u;
  const double ch = std::cosh(psi), sh = std::sinh(psi);
  const double cc = std::cos(chi), sc = std::sin(chi);
  const double p2 = u * ch * cc + v * sh * sc;
  const double p3 = v * sh * cc - u * ch * sc;
  const double p5 = v * ch * cc - u * sh * sc;
  const double p6 = -u * sh * cc - v * ch * sc;
  return DualPoint{{0.0, p2, p3, p4, p5, p6}};
}

double hyperbolic_i1(const DualPoint& p) {
  require_p6(p);
  const auto& x = p.coordinates;
  return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - x[3] * x[3] - x[4] * x[4] - x[5] * x[5];
}

double hyperbolic_i2(const DualPoint& p) {
  require_p6(p);
  const auto& x = p.coordinates;
  return x[0] * x[3] + x[1] * x[4] + x[2] * x[5];
}

double hyperbolic_psi(const DualPoint& p) {
  require_p6(p);
  const auto& x = p.coordinates;
  const double p2 = x[1], p3 = x[2], p5 = x[4], p6 = x[5];
  const double num = (p2 - p6) * (p2 - p6) + (p5 + p3) * (p5 + p3);
  const double den = (p2 + p6) * (p2 + p6) + (p5 - p3) * (p5 - p3);
  return 0.25 * std::log(num / den);
}

double hyperbolic_chi(const DualPoint& p) {
  require_p6(p);
  const auto& x = p.coordinates;
  const double p2 = x[1], p3 = x[2], p5 = x[4], p6 = x[5];
  return 0.5 * (std::atan((p5 - p3) / (p2 + p6)) - std::atan((p5 + p3) / (p2 - p6)));
}

}  // namespace curvebody
