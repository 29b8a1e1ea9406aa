#pragma once

#include <string>
#include <vector>

#include "curvebody/poly.hpp"

namespace curvebody {

// Structure constants c^k_{ij} of a real Lie algebra, stored densely
// (dim <= 6 throughout, so dim^3 doubles are nothing).  The sign convention
// is [x_i, x_j] = sum_k c^k_{ij} x_k with the epsilon-orientation of the
// rotation generators; Killing-field brackets would flip every sign, and the
// tables below are stated in the algebra convention, not the field one.
struct LieAlgebraSpec {
  std::string name;
  int dim = 0;
  std::vector<std::string> coordinate_names;
  std::vector<double> structure;  // index ((i * dim) + j) * dim + k

  double c(int i, int j, int k) const { return structure[(i * dim + j) * dim + k]; }
  // Records [x_i, x_j] ⊇ value * x_k together with the antisymmetric partner.
  void set_bracket(int i, int j, int k, double value);

  double antisymmetry_residual() const;
  double jacobi_residual() const;
};

// Momentum coordinates p1..p6: rotations (p1,p2,p3), the complementary
// generators (p4,p5,p6).
LieAlgebraSpec so4_p();
LieAlgebraSpec so13_p();
// so*(4) split into two commuting three-vectors u, v (coordinates u1,u2,u3,v1,v2,v3).
LieAlgebraSpec so4_uv();
// Degenerate-orbit algebras in the surviving coordinates (p3,p4,p5).
LieAlgebraSpec so3_orbit();
LieAlgebraSpec so12_orbit();

// Lie-Poisson bracket [f,g](x) = sum c^k_{ij} x_k df/dx_i dg/dx_j, exact in
// coefficients.  Throws if the polynomials are not over alg's coordinates.
PolyFunction lie_poisson_bracket(const PolyFunction& f, const PolyFunction& g,
                                 const LieAlgebraSpec& alg);

enum class InvariantTable { spherical, hyperbolic };

struct TableCheck {
  std::string relation;
  double residual = 0.0;
  bool pass = false;
};

struct TableReport {
  std::string algebra;
  std::string which;
  std::vector<TableCheck> relations;
  bool pass = false;
};

// Verifies the six bracket relations for the rotation-invariant quadratics
//   P0 = p4, P1 = p5^2 + p6^2, P2 = p2^2 + p3^2, P3 = -p3 p5 + p2 p6
// against the chosen table.  The relations involving [P1,P3] and [P2,P3]
// close only on the p1 = 0 level set where the reduced charts live (off it
// they pick up corrections proportional to p1 * (p2 p5 + p3 p6)), so each
// bracket-minus-rhs difference is reduced by substituting p1 = 0 before the
// residual is taken; the first four rows hold identically either way.
TableReport verify_invariant_table(const LieAlgebraSpec& alg, InvariantTable which,
                                   double tol = 1e-13);

struct CasimirCheck {
  std::string coordinate;
  double residual = 0.0;
};

struct CasimirReport {
  std::string algebra;
  std::vector<CasimirCheck> brackets;
  double max_residual = 0.0;
  bool pass = false;
};

// Brackets a candidate invariant with every coordinate function; passes when
// all six (or dim) results vanish identically.
CasimirReport casimir_check(const LieAlgebraSpec& alg, const PolyFunction& c,
                            double tol = 1e-13);

}  // namespace curvebody
