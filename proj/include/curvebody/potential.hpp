#pragma once

#include <utility>
#include <vector>

namespace curvebody {

// Central-potential menu.  The curved Coulomb and oscillator analogs depend
// on the curvature radius, so evaluation happens through Potential, which
// binds R.
struct PotentialSpec {
  enum class Kind { zero, coulomb, oscillator, inv_square_plus_square, tabulated };

  Kind kind = Kind::zero;
  double gamma = 0.0;  // coulomb strength
  double omega = 0.0;  // oscillator frequency
  double alpha = 0.0, beta = 0.0;              // alpha/r^2 + beta r^2, both >= 0
  std::vector<std::pair<double, double>> samples;  // (r, U), r strictly increasing

  static PotentialSpec zero();
  static PotentialSpec coulomb(double gamma);
  static PotentialSpec oscillator(double omega);
  static PotentialSpec inv_square_plus_square(double alpha, double beta);
  static PotentialSpec tabulated(std::vector<std::pair<double, double>> samples);
};

// Evaluates U(r) and U'(r).  Tabulated data is interpolated with a monotone
// cubic (Fritsch-Carlson slopes), linearly extended outside the table so the
// integrator never sees a derivative jump at the ends.
class Potential {
 public:
  Potential(const PotentialSpec& spec, double R);

  double value(double r) const;
  double derivative(double r) const;

  const PotentialSpec& spec() const { return spec_; }

  // Whether U(-r) = U(r) holds identically; the large-radius coordinate
  // switch on the sphere only carries a trajectory through the antipodal
  // configuration when it does.
  bool even_in_r() const {
    return spec_.kind == PotentialSpec::Kind::zero ||
           spec_.kind == PotentialSpec::Kind::oscillator ||
           spec_.kind == PotentialSpec::Kind::inv_square_plus_square;
  }

 private:
  PotentialSpec spec_;
  double R_;
  std::vector<double> slopes_;  // tabulated only
};

}  // namespace curvebody
