#pragma once

#include "curvebody/operators.hpp"

namespace curvebody {

// Coefficient triple (a, b, c) of the scalar radial problem
//
//   -(1+r^2)^3/(8 m R^2 r^2) d/dr( r^2/(1+r^2) f' )
//       + [ (a/r^2 + b + c r^2)/(m R^2) + U(r) ] f  =  E f
//
// for one of the eight invariant-subspace series, at spin label ell.  The
// exactly solvable potentials need a = c, which holds in cases 1, 2, 7, 8.
struct CaseCoefficients {
  int case_id = 1;
  SpinLabel ell;
  double a = 0.0, b = 0.0, c = 0.0;
  // Cases 3..8 exist only when the two particle masses coincide.
  bool equal_masses_required = false;
};

// Valid labels: cases 1-2 take integer ell >= 0, cases 3-6 half-integer
// ell >= 1/2, cases 7-8 integer ell >= 1.  Throws std::invalid_argument for
// anything else.
CaseCoefficients case_coefficients(int case_id, SpinLabel ell);

}  // namespace curvebody
