#include "curvebody/levels.hpp"

#include <cmath>
#include <stdexcept>

namespace curvebody {

namespace {

void check_background(double m, double R, int count) {
  if (!(m > 0.0) || !(R > 0.0))
    throw std::invalid_argument("mass and radius must be positive");
  if (count < 1) throw std::invalid_argument("count must be at least 1");
}

void check_exact_case(const CaseCoefficients& c) {
  if (c.a != c.c)
    throw std::invalid_argument(
        "the exact potential series need a = c (cases 1, 2, 7, 8)");
}

}  // namespace

SpectrumResult levels_general(double eta, double nu, double m, double R, int count) {
  check_background(m, R, count);
  if (eta < 0.0 || nu < 0.0)
    throw std::invalid_argument("eta and nu must be nonnegative");

  SpectrumResult out;
  out.method = "closed_form";
  if (eta == 0.0 || nu == 0.0)
    out.note = "zero coupling taken as the formal limit of the confining family";

  const double mu = 1.0 / (2.0 * m * R * R);
  const double p = std::sqrt(1.0 / 16.0 + eta / mu);
  const double q = std::sqrt(1.0 / 16.0 + nu / mu);
  for (int k = 0; k < count; ++k) {
    const double e =
        mu * (k * (k + 1.0) - 5.0 / 8.0 + (2.0 * k + 1.0) * (p + q) + 2.0 * p * q);
    out.levels.push_back(Level{k, e});
  }
  return out;
}

SpectrumResult levels_coulomb_twobody(const CaseCoefficients& coeffs, double gamma,
                                      double m, double R, int count) {
  check_background(m, R, count);
  check_exact_case(coeffs);

  SpectrumResult out;
  out.method = "closed_form";
  const double s = std::sqrt(1.0 + 32.0 * coeffs.c);
  for (int k = 1; k <= count; ++k) {
    const double e =
        (0.5 * (k * k - k + 1.0) - 0.75 + 2.0 * coeffs.c + coeffs.b +
         0.25 * (2.0 * k - 1.0) * s) /
            (m * R * R) -
        2.0 * m * gamma * gamma / ((s + 2.0 * k - 1.0) * (s + 2.0 * k - 1.0));
    out.levels.push_back(Level{k, e});
  }
  return out;
}

SpectrumResult levels_oscillator_twobody(const CaseCoefficients& coeffs, double omega,
                                         double m, double R, int count) {
  check_background(m, R, count);
  check_exact_case(coeffs);
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");

  SpectrumResult out;
  out.method = "closed_form";
  const double s = std::sqrt(1.0 + 32.0 * coeffs.c);
  const double stretch = std::sqrt(1.0 + 1.0 / (4.0 * omega * omega * R * R * R * R * m));
  for (int k = 0; k < count; ++k) {
    const double w = 4.0 * k + 2.0 + s;
    const double e = (w * w - 16.0 * coeffs.c + 8.0 * coeffs.b - 3.0) / (8.0 * m * R * R) +
                     0.5 * omega / std::sqrt(m) * w * stretch;
    out.levels.push_back(Level{k, e});
  }
  return out;
}

SpectrumResult levels_onebody(OneBodyPotential kind, int l, double coupling, double m,
                              double R, int count) {
  check_background(m, R, count);
  if (l < 0) throw std::invalid_argument("angular momentum l must be nonnegative");

  SpectrumResult out;
  out.method = "closed_form";
  if (kind == OneBodyPotential::coulomb) {
    const double gamma = coupling;
    for (int k = 1; k <= count; ++k) {
      const double n = k + l;
      const double e = -1.0 / (2.0 * m * R * R) + n * n / (2.0 * m * R * R) -
                       m * gamma * gamma / (2.0 * n * n);
      out.levels.push_back(Level{k, e});
    }
  } else {
    const double omega = coupling;
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
    const double stretch =
        std::sqrt(1.0 + 1.0 / (4.0 * omega * omega * R * R * R * R * m));
    for (int k = 0; k < count; ++k) {
      const double n = 2.0 * k + l + 1.5;
      const double e = -(0.75 - n * n) / (2.0 * m * R * R) +
                       omega * n / std::sqrt(m) * stretch;
      out.levels.push_back(Level{k, e});
    }
  }
  return out;
}

}  // namespace curvebody
