#include "curvebody/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace curvebody {

bool parity_matches(const IrrepPair& pair) {
  return ((pair.ell1.two_ell ^ pair.ell2.two_ell) & 1) == 0;
}

SpinMatrices spin_matrices(SpinLabel ell) {
  if (ell.two_ell < 0) throw std::invalid_argument("negative spin label");
  const int L = ell.two_ell;          // 2*ell
  const std::size_t dim = static_cast<std::size_t>(L) + 1;
  SpinMatrices m{CMatrix(dim, dim), CMatrix(dim, dim), CMatrix(dim, dim)};
  for (int k = 0; k <= L; ++k) {
    const int twon = -L + 2 * k;      // 2*n for basis slot k
    m.t0(k, k) = 0.5 * twon;
    if (k + 1 <= L) {
      // (ell-n)(ell+n+1) computed from doubled integers: exact products.
      const double prod = 0.25 * (L - twon) * (L + twon + 2);
      m.tp(k + 1, k) = -std::sqrt(prod);
    }
    if (k - 1 >= 0) {
      const double prod = 0.25 * (L + twon) * (L - twon + 2);
      m.tm(k - 1, k) = -std::sqrt(prod);
    }
  }
  return m;
}

OperatorSet build_operator_set(const IrrepPair& pair) {
  if (pair.ell1.two_ell < 0 || pair.ell2.two_ell < 0)
    throw std::invalid_argument("negative spin label");
  if (!parity_matches(pair))
    throw std::invalid_argument(
        "pair (" + std::to_string(pair.ell1.two_ell) + "/2, " +
        std::to_string(pair.ell2.two_ell) +
        "/2) mixes integer and half-integer labels");

  const SpinMatrices a = spin_matrices(pair.ell1);
  const SpinMatrices b = spin_matrices(pair.ell2);
  const CMatrix id1 = CMatrix::identity(a.t0.rows());
  const CMatrix id2 = CMatrix::identity(b.t0.rows());

  OperatorSet set;
  set.pair = pair;
  set.dim = id1.rows() * id2.rows();
  set.t0 = kron(a.t0, id2);
  set.tp = kron(a.tp, id2);
  set.tm = kron(a.tm, id2);
  set.w0 = kron(id1, b.t0);
  set.wp = kron(id1, b.tp);
  set.wm = kron(id1, b.tm);

  const cdouble i(0.0, 1.0);
  // The sign of d0 is fixed by demanding [D0,D1] = -2 D3 below; the opposite
  // choice flips that relation.
  set.d0 = -i * (set.t0 - set.w0);
  const CMatrix ladder =
      anticommutator(set.tp, set.tm) + anticommutator(set.wp, set.wm);
  const CMatrix cross_pm = set.tp * set.wm;
  const CMatrix cross_mp = set.tm * set.wp;
  set.d1 = cdouble(-0.5) * ladder - cross_pm - cross_mp;
  set.d2 = cdouble(-0.5) * ladder + cross_pm + cross_mp;
  set.d3 = i * (cross_mp - cross_pm);
  return set;
}

std::vector<InvariantBasisVector> invariant_subspace(const IrrepPair& pair) {
  if (!parity_matches(pair))
    throw std::invalid_argument(
        "invariant subspace needs labels of equal parity");
  const int L1 = pair.ell1.two_ell;
  const int L2 = pair.ell2.two_ell;
  const int Lmin = std::min(L1, L2);
  const std::size_t dim2 = static_cast<std::size_t>(L2) + 1;

  std::vector<InvariantBasisVector> out;
  out.reserve(static_cast<std::size_t>(Lmin) + 1);
  for (int twoj = -Lmin; twoj <= Lmin; twoj += 2) {
    InvariantBasisVector v;
    v.two_j = twoj;
    v.coefficients.assign(static_cast<std::size_t>(L1 + 1) * (L2 + 1), 0.0);
    const std::size_t k1 = static_cast<std::size_t>((twoj + L1) / 2);
    const std::size_t k2 = static_cast<std::size_t>((-twoj + L2) / 2);
    v.coefficients[k1 * dim2 + k2] = 1.0;
    out.push_back(std::move(v));
  }
  return out;
}

CMatrix restrict_to(const CMatrix& a, const CMatrix& basis_columns) {
  return basis_columns.dagger() * a * basis_columns;
}

CMatrix invariant_basis_matrix(const IrrepPair& pair) {
  const auto chis = invariant_subspace(pair);
  const std::size_t dim = chis.empty() ? 0 : chis.front().coefficients.size();
  CMatrix basis(dim, chis.size());
  for (std::size_t c = 0; c < chis.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r)
      basis(r, c) = chis[c].coefficients[r];
  return basis;
}

}  // namespace curvebody
