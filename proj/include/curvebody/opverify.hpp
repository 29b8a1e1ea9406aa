#pragma once

#include <string>
#include <vector>

#include "curvebody/operators.hpp"

namespace curvebody {

// One commutator identity, reported as the max-abs entry of (LHS - RHS).
struct RelationCheck {
  std::string id;
  double residual = 0.0;
  bool pass = false;
};

struct CommutatorReport {
  IrrepPair pair;
  std::vector<RelationCheck> relations;
  bool pass = false;
};

// Checks the six closed commutator relations among D0..D3:
//   [D0,D1] = -2 D3        [D0,D2] = 2 D3       [D0,D3] = D1 - D2
//   [D1,D2] = -2 {D0,D3}   [D1,D3] = -{D0,D1}   [D2,D3] = {D0,D2}
// evaluated on the zero-weight subspace, the natural carrier of these
// operators.  (The first four also close on the full product space; the last
// two only do after the restriction.)  All residuals must fall below `tol`
// for the report to pass.
CommutatorReport verify_commutators(const OperatorSet& set, double tol = 1e-12);

// Same relation set evaluated with D3 deliberately negated; every relation
// breaks, the first reported one being "[D0,D1]+2D3".  Drives the CLI fault
// injection hook.
CommutatorReport verify_commutators_corrupted(const OperatorSet& set,
                                              double tol = 1e-12);

struct SeriesCheck {
  int series = 0;  // 1..8
  double residual = 0.0;
  bool pass = false;
};

struct SeriesReport {
  IrrepPair pair;
  std::vector<SeriesCheck> checks;  // only the applicable series
  bool any_applicable = false;
  bool pass = false;  // all applicable checks pass (vacuously true if none)
};

// Applies D0^2, D1, D2 (and D3 where an image is predicted) to the known
// common-eigenvector combinations of chi_j and measures the residuals.
SeriesReport verify_eigen_series(const OperatorSet& set, double tol = 1e-12);
SeriesReport verify_eigen_series(const IrrepPair& pair, double tol = 1e-12);

// A simultaneous eigenspace of D1, D2 and D0^2 on the zero-weight subspace,
// expressed in chi coordinates (orthonormal columns).
struct CommonEigenspace {
  double eig_d1 = 0.0, eig_d2 = 0.0, eig_d0sq = 0.0;
  CMatrix basis;
};

// Exhaustive search: eigendecomposition of D1 restricted to the zero-weight
// subspace, then each candidate eigenspace is split under D2 and D0^2 and
// filtered down to vectors genuinely invariant (kernel of the off-eigenspace
// leak).  cluster_tol groups nearly equal eigenvalues.
std::vector<CommonEigenspace> common_eigenvectors_bruteforce(
    const OperatorSet& set, double cluster_tol = 1e-9);

}  // namespace curvebody
