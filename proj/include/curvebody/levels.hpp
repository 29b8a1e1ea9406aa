#pragma once

#include <string>
#include <vector>

#include "curvebody/speccase.hpp"

namespace curvebody {

struct Level {
  int k = 0;
  double energy = 0.0;
};

// Ordered spectrum slice.  `method` records how it was obtained
// ("closed_form" or "grid(N)"); `note` carries non-fatal caveats such as a
// coupling taken as a formal limit.
struct SpectrumResult {
  std::vector<Level> levels;
  std::string method;
  std::string note;
};

// Energy series of the radial problem with potential eta/r^2 + nu*r^2 (the
// confining family that stays exactly solvable on the curved background).
// Levels are indexed from k = 0; eta = 0 or nu = 0 is accepted as a formal
// limit of the confining family and flagged in the note.  Negative couplings
// throw.
SpectrumResult levels_general(double eta, double nu, double m, double R, int count);

// Exact two-body series for the Coulomb-type potential, valid for the a = c
// cases (1, 2, 7, 8).  Levels are indexed from k = 1: the series' k = 0 slot
// is singular (the denominator sqrt(1+32c) + 2k - 1 vanishes at c = 0), and
// the grid solver confirms the first bound state sits at k = 1.
SpectrumResult levels_coulomb_twobody(const CaseCoefficients& coeffs, double gamma,
                                      double m, double R, int count);

// Exact two-body series for the oscillator-type potential, a = c cases only,
// indexed from k = 0.  Requires omega > 0: the weak-coupling limit is
// singular (the wall at r = 1 survives), so omega = 0 is not a member of the
// family.
SpectrumResult levels_oscillator_twobody(const CaseCoefficients& coeffs, double omega,
                                         double m, double R, int count);

enum class OneBodyPotential { coulomb, oscillator };

// One-particle series on the same background: Coulomb indexed from k = 1,
// oscillator from k = 0, with angular momentum l >= 0.  `coupling` is gamma
// or omega respectively.
SpectrumResult levels_onebody(OneBodyPotential kind, int l, double coupling, double m,
                              double R, int count);

}  // namespace curvebody
