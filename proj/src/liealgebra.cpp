#include "curvebody/liealgebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace curvebody {

namespace {

LieAlgebraSpec make_spec(std::string name, std::vector<std::string> coords) {
  LieAlgebraSpec a;
  a.name = std::move(name);
  a.dim = static_cast<int>(coords.size());
  a.coordinate_names = std::move(coords);
  a.structure.assign(static_cast<std::size_t>(a.dim) * a.dim * a.dim, 0.0);
  return a;
}

// Even permutations of (0,1,2); odd ones follow by antisymmetry.
constexpr int kEps[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

}  // namespace

void LieAlgebraSpec::set_bracket(int i, int j, int k, double value) {
  structure[(i * dim + j) * dim + k] = value;
  structure[(j * dim + i) * dim + k] = -value;
}

double LieAlgebraSpec::antisymmetry_residual() const {
  double m = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) m = std::max(m, std::abs(c(i, j, k) + c(j, i, k)));
  return m;
}

double LieAlgebraSpec::jacobi_residual() const {
  double m = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l) {
          double sum = 0.0;
          for (int mm = 0; mm < dim; ++mm)
            sum += c(i, j, mm) * c(mm, k, l) + c(j, k, mm) * c(mm, i, l) +
                   c(k, i, mm) * c(mm, j, l);
          m = std::max(m, std::abs(sum));
        }
  return m;
}

LieAlgebraSpec so4_p() {
  auto a = make_spec("so*(4)", {"p1", "p2", "p3", "p4", "p5", "p6"});
  for (const auto& t : kEps) {
    const int i = t[0], j = t[1], k = t[2];
    a.set_bracket(i, j, k, 1.0);          // rotations among themselves
    a.set_bracket(3 + i, 3 + j, k, 1.0);  // complementary pair closes on rotations
    a.set_bracket(i, 3 + j, 3 + k, 1.0);  // rotations act on the complement
    a.set_bracket(3 + i, j, 3 + k, 1.0);
  }
  return a;
}

LieAlgebraSpec so13_p() {
  auto a = make_spec("so*(1,3)", {"p1", "p2", "p3", "p4", "p5", "p6"});
  for (const auto& t : kEps) {
    const int i = t[0], j = t[1], k = t[2];
    a.set_bracket(i, j, k, 1.0);
    a.set_bracket(3 + i, 3 + j, k, -1.0);  // boosts close on rotations with a sign
    a.set_bracket(i, 3 + j, 3 + k, 1.0);
    a.set_bracket(3 + i, j, 3 + k, 1.0);
  }
  return a;
}

LieAlgebraSpec so4_uv() {
  auto a = make_spec("so*(4) (u,v)", {"u1", "u2", "u3", "v1", "v2", "v3"});
  for (const auto& t : kEps) {
    const int i = t[0], j = t[1], k = t[2];
    a.set_bracket(i, j, k, 1.0);
    a.set_bracket(3 + i, 3 + j, 3 + k, 1.0);  // the two blocks commute
  }
  return a;
}

LieAlgebraSpec so3_orbit() {
  auto a = make_spec("so*(3)", {"p3", "p4", "p5"});
  a.set_bracket(0, 1, 2, 1.0);
  a.set_bracket(1, 2, 0, 1.0);
  a.set_bracket(2, 0, 1, 1.0);
  return a;
}

LieAlgebraSpec so12_orbit() {
  auto a = make_spec("so*(1,2)", {"p3", "p4", "p5"});
  a.set_bracket(0, 1, 2, 1.0);
  a.set_bracket(1, 2, 0, -1.0);
  a.set_bracket(2, 0, 1, 1.0);
  return a;
}

PolyFunction lie_poisson_bracket(const PolyFunction& f, const PolyFunction& g,
                                 const LieAlgebraSpec& alg) {
  if (f.nvars() != alg.dim || g.nvars() != alg.dim)
    throw std::invalid_argument("polynomial variables do not match the algebra dimension");
  std::vector<PolyFunction> df, dg;
  df.reserve(alg.dim);
  dg.reserve(alg.dim);
  for (int i = 0; i < alg.dim; ++i) {
    df.push_back(f.partial(i));
    dg.push_back(g.partial(i));
  }
  PolyFunction out(alg.dim);
  for (int i = 0; i < alg.dim; ++i) {
    if (df[i].is_zero()) continue;
    for (int j = 0; j < alg.dim; ++j) {
      if (dg[j].is_zero()) continue;
      PolyFunction prod(0);
      bool have_prod = false;
      for (int k = 0; k < alg.dim; ++k) {
        const double cijk = alg.c(i, j, k);
        if (cijk == 0.0) continue;
        if (!have_prod) {
          prod = df[i] * dg[j];
          have_prod = true;
        }
        out += cijk * (prod * PolyFunction::variable(alg.dim, k));
      }
    }
  }
  return out;
}

TableReport verify_invariant_table(const LieAlgebraSpec& alg, InvariantTable which,
                                   double tol) {
  if (alg.dim != 6)
    throw std::invalid_argument("invariant table needs the six momentum coordinates");
  const int n = 6;
  auto x = [&](int i) { return PolyFunction::variable(n, i); };
  const PolyFunction P0 = x(3);
  const PolyFunction P1 = x(4) * x(4) + x(5) * x(5);
  const PolyFunction P2 = x(1) * x(1) + x(2) * x(2);
  const PolyFunction P3 = x(1) * x(5) - x(2) * x(4);

  const bool sph = which == InvariantTable::spherical;
  struct Row {
    int a, b;
    PolyFunction rhs;
    std::string id;
  };
  std::vector<Row> rows;
  rows.push_back({0, 1, sph ? -2.0 * P3 : 2.0 * P3, sph ? "[P0,P1]+2P3" : "[P0,P1]-2P3"});
  rows.push_back({0, 2, 2.0 * P3, "[P0,P2]-2P3"});
  rows.push_back({0, 3, sph ? P1 - P2 : P1 + P2, sph ? "[P0,P3]-P1+P2" : "[P0,P3]-P1-P2"});
  rows.push_back({1, 2, -4.0 * (P0 * P3), "[P1,P2]+4P0P3"});
  rows.push_back({1, 3, -2.0 * (P0 * P1), "[P1,P3]+2P0P1"});
  rows.push_back({2, 3, 2.0 * (P0 * P2), "[P2,P3]-2P0P2"});

  const PolyFunction* P[4] = {&P0, &P1, &P2, &P3};
  TableReport report;
  report.algebra = alg.name;
  report.which = sph ? "spherical" : "hyperbolic";
  report.pass = true;
  for (const auto& row : rows) {
    PolyFunction diff = lie_poisson_bracket(*P[row.a], *P[row.b], alg) - row.rhs;
    // The invariants live on the reduced level set p1 = 0; see the header.
    diff = diff.substitute_zero(0);
    const double res = diff.max_abs_coeff();
    const bool ok = res < tol;
    report.relations.push_back({row.id, res, ok});
    report.pass = report.pass && ok;
  }
  return report;
}

CasimirReport casimir_check(const LieAlgebraSpec& alg, const PolyFunction& c, double tol) {
  if (c.nvars() != alg.dim)
    throw std::invalid_argument("polynomial variables do not match the algebra dimension");
  CasimirReport report;
  report.algebra = alg.name;
  for (int i = 0; i < alg.dim; ++i) {
    const double res =
        lie_poisson_bracket(c, PolyFunction::variable(alg.dim, i), alg).max_abs_coeff();
    report.brackets.push_back({alg.coordinate_names[i], res});
    report.max_residual = std::max(report.max_residual, res);
  }
  report.pass = report.max_residual < tol;
  return report;
}

}  // namespace curvebody
