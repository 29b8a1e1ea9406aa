#pragma once

#include <vector>

#include "curvebody/cmatrix.hpp"

namespace curvebody {

// Spin labels are stored doubled (two_ell = 2*ell) so half-integer values
// stay exact integers.
struct SpinLabel {
  int two_ell = 0;
};

// A pair of su(2) factors.  Both labels must be simultaneously integer or
// half-integer, i.e. two_ell parities must agree.
struct IrrepPair {
  SpinLabel ell1, ell2;
};

bool parity_matches(const IrrepPair& pair);

// Ladder matrices on the (two_ell+1)-dimensional carrier space with basis
// ordered n = -ell..+ell:
//   T0 psi_n = n psi_n
//   T+ psi_n = -sqrt((ell-n)(ell+n+1)) psi_{n+1}
//   T- psi_n = -sqrt((ell+n)(ell-n+1)) psi_{n-1}
struct SpinMatrices {
  CMatrix t0, tp, tm;
};

SpinMatrices spin_matrices(SpinLabel ell);

// The two commuting su(2) copies lifted to the tensor product (lexicographic
// basis, first factor major), plus the four invariant operators built from
// them.  Immutable after construction.
struct OperatorSet {
  IrrepPair pair;
  std::size_t dim = 0;
  CMatrix t0, tp, tm;
  CMatrix w0, wp, wm;
  CMatrix d0, d1, d2, d3;
};

OperatorSet build_operator_set(const IrrepPair& pair);

// chi_j = psi_j (x) phi_{-j}; the zero-weight vectors killed by T0 + W0.
struct InvariantBasisVector {
  int two_j = 0;
  std::vector<cdouble> coefficients;
};

std::vector<InvariantBasisVector> invariant_subspace(const IrrepPair& pair);

// B^dagger * A * B for an orthonormal set of columns B spanning a subspace.
CMatrix restrict_to(const CMatrix& a, const CMatrix& basis_columns);

// Columns = the chi vectors of invariant_subspace, in ascending j order.
CMatrix invariant_basis_matrix(const IrrepPair& pair);

}  // namespace curvebody
