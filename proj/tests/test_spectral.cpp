#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "curvebody/grid.hpp"
#include "curvebody/levels.hpp"
#include "curvebody/potential.hpp"
#include "curvebody/speccase.hpp"

#include "support.hpp"

using namespace curvebody;

TEST_CASE("coefficient table reproduces the worked values") {
  auto c10 = case_coefficients(1, SpinLabel{0});
  CHECK(c10.a == 0.0);
  CHECK(c10.b == 0.0);
  CHECK(c10.c == 0.0);
  CHECK_FALSE(c10.equal_masses_required);

  auto c12 = case_coefficients(1, SpinLabel{4});
  CHECK(c12.a == 0.75);
  CHECK(c12.b == 1.5);
  CHECK(c12.c == 0.75);

  auto c21 = case_coefficients(2, SpinLabel{2});
  CHECK(c21.a == 0.25);
  CHECK(c21.b == 0.5);
  CHECK(c21.c == 0.25);
  CHECK_FALSE(c21.equal_masses_required);

  auto c3h = case_coefficients(3, SpinLabel{1});
  CHECK(c3h.a == 0.0);
  CHECK(c3h.b == 0.375);
  CHECK(c3h.c == 0.25);
  CHECK(c3h.equal_masses_required);

  auto c5h = case_coefficients(5, SpinLabel{1});
  CHECK(c5h.a == 0.25);
  CHECK(c5h.b == 0.375);
  CHECK(c5h.c == 0.0);

  auto c71 = case_coefficients(7, SpinLabel{2});
  CHECK(c71.a == 0.25);
  CHECK(c71.b == 1.0);
  CHECK(c71.c == 0.25);

  auto c82 = case_coefficients(8, SpinLabel{4});
  CHECK(c82.a == 0.75);
  CHECK(c82.b == 2.0);
  CHECK(c82.c == 0.75);

  // 3 and 4 carry the same radial coefficients, as do 5 and 6; the pairs
  // differ only by which block gets the heavier centrifugal weight, with b
  // shared across all four.
  for (int two_ell : {1, 3, 5, 7}) {
    auto a3 = case_coefficients(3, SpinLabel{two_ell});
    auto a4 = case_coefficients(4, SpinLabel{two_ell});
    auto a5 = case_coefficients(5, SpinLabel{two_ell});
    auto a6 = case_coefficients(6, SpinLabel{two_ell});
    CHECK(a3.a == a4.a);
    CHECK(a3.b == a4.b);
    CHECK(a3.c == a4.c);
    CHECK(a5.a == a6.a);
    CHECK(a5.c == a6.c);
    CHECK(a3.a == a5.c);
    CHECK(a3.c == a5.a);
    CHECK(a3.b == a5.b);
    CHECK(a3.a < a3.c);
  }

  // The symmetric cases keep both centrifugal weights equal.
  for (int two_ell : {0, 2, 4, 6, 8}) {
    for (int id : {1, 2}) {
      auto cc = case_coefficients(id, SpinLabel{two_ell});
      CHECK(cc.a == cc.c);
    }
    if (two_ell >= 2) {
      for (int id : {7, 8}) {
        auto cc = case_coefficients(id, SpinLabel{two_ell});
        CHECK(cc.a == cc.c);
      }
    }
  }

  for (int id = 1; id <= 8; ++id) {
    const int two_ell = (id <= 2) ? 2 : (id <= 6 ? 1 : 2);
    CHECK(case_coefficients(id, SpinLabel{two_ell}).equal_masses_required == (id >= 3));
  }

  CHECK_THROWS_WITH(case_coefficients(1, SpinLabel{3}), "cases 1 and 2 take integer ell");
  CHECK_THROWS_WITH(case_coefficients(4, SpinLabel{2}),
                    "cases 3 through 6 take half-integer ell");
  CHECK_THROWS_WITH(case_coefficients(7, SpinLabel{0}),
                    "cases 7 and 8 take integer ell >= 1");
  CHECK_THROWS_WITH(case_coefficients(7, SpinLabel{3}),
                    "cases 7 and 8 take integer ell >= 1");
  CHECK_THROWS_WITH(case_coefficients(0, SpinLabel{0}), "case_id must be in 1..8");
  CHECK_THROWS_WITH(case_coefficients(9, SpinLabel{0}), "case_id must be in 1..8");
  CHECK_THROWS_WITH(case_coefficients(2, SpinLabel{-2}), "ell must be nonnegative");
}

TEST_CASE("uniform-coupling series: free limit, symmetry, grid agreement") {
  // Both couplings zero leaves the pure curvature band k(k+2)/(2 m R^2),
  // flagged as a formal limit in the note.
  auto free6 = levels_general(0.0, 0.0, 1.0, 1.0, 6);
  REQUIRE(free6.levels.size() == 6);
  CHECK(!free6.note.empty());
  CHECK(free6.method == "closed_form");
  for (const auto& lv : free6.levels)
    CHECK(lv.energy == doctest::Approx(0.5 * lv.k * (lv.k + 2.0)).epsilon(1e-14));

  auto generic = levels_general(0.7, 1.9, 1.1, 0.8, 5);
  CHECK(generic.note.empty());

  // The two couplings enter symmetrically.
  auto swapped = levels_general(1.9, 0.7, 1.1, 0.8, 5);
  for (int i = 0; i < 5; ++i)
    CHECK(generic.levels[i].energy == swapped.levels[i].energy);

  for (std::size_t i = 1; i < generic.levels.size(); ++i)
    CHECK(generic.levels[i].energy > generic.levels[i - 1].energy);

  CHECK_THROWS_AS(levels_general(-0.1, 1.0, 1.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(levels_general(1.0, -2.0, 1.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(levels_general(1.0, 1.0, 0.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(levels_general(1.0, 1.0, 1.0, -1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(levels_general(1.0, 1.0, 1.0, 1.0, 0), std::invalid_argument);

  // Independent oracle: discretize the same radial operator and compare.
  {
    RadialProblem pr{case_coefficients(1, SpinLabel{0}),
                     PotentialSpec::inv_square_plus_square(1.0, 2.0), 1.0, 1.0};
    auto grid = grid_eigensolve(pr, 3, 4000);
    auto series = levels_general(1.0, 2.0, 1.0, 1.0, 3);
    for (int k = 0; k < 3; ++k)
      CHECK(grid.levels[k].energy ==
            doctest::Approx(series.levels[k].energy).epsilon(1e-6));
  }

  // Nonzero case coefficients just shift the couplings: a/(m R^2) and
  // c/(m R^2) fold into the 1/r^2 and r^2 weights while b becomes a flat
  // offset.  The grid assembles the coefficients and the potential through
  // separate terms, so this crosses both entry points at once.
  {
    const double m = 1.3, R = 0.9, alpha = 0.6, beta = 1.1;
    auto coeffs = case_coefficients(1, SpinLabel{4});
    RadialProblem pr{coeffs, PotentialSpec::inv_square_plus_square(alpha, beta), m, R};
    auto grid = grid_eigensolve(pr, 4, 4000);
    const double mr2 = m * R * R;
    auto folded =
        levels_general(coeffs.a / mr2 + alpha, coeffs.c / mr2 + beta, m, R, 4);
    for (int k = 0; k < 4; ++k)
      CHECK(grid.levels[k].energy ==
            doctest::Approx(folded.levels[k].energy + coeffs.b / mr2).epsilon(1e-6));
  }
}

TEST_CASE("coulomb series: s-wave reduction, one-body degeneracy, grid check") {
  // With all coefficients zero the series collapses to
  // (k^2 - 1)/(2 m R^2) - m gamma^2 / (2 k^2).
  for (int trial = 0; trial < 20; ++trial) {
    const double m = testsupport::uniform(0.4, 2.5);
    const double R = testsupport::uniform(0.5, 1.8);
    const double gamma = testsupport::uniform(0.1, 2.0);
    auto sp = levels_coulomb_twobody(case_coefficients(1, SpinLabel{0}), gamma, m, R, 6);
    REQUIRE(sp.levels.size() == 6);
    CHECK(sp.levels.front().k == 1);
    for (const auto& lv : sp.levels) {
      const double want = (lv.k * lv.k - 1.0) / (2.0 * m * R * R) -
                          m * gamma * gamma / (2.0 * lv.k * lv.k);
      CHECK(lv.energy == doctest::Approx(want).epsilon(1e-13));
    }
  }

  // Unit background: the lowest level is pure binding energy.
  auto ground =
      levels_coulomb_twobody(case_coefficients(1, SpinLabel{0}), 1.0, 1.0, 1.0, 1);
  CHECK(ground.levels[0].energy == doctest::Approx(-0.5).epsilon(1e-14));

  // Case 1 at spin ell reproduces a single particle with orbital momentum
  // l = ell in the same field: the internal label costs no energy here.
  for (int l = 0; l <= 3; ++l) {
    const double m = 2.3, R = 1.4, gamma = 0.75;
    auto two =
        levels_coulomb_twobody(case_coefficients(1, SpinLabel{2 * l}), gamma, m, R, 4);
    auto one = levels_onebody(OneBodyPotential::coulomb, l, gamma, m, R, 4);
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(two.levels[i].energy - one.levels[i].energy) < 1e-12);
  }

  // Grid oracle on a case with nonzero coefficients, away from unit
  // mass and radius.
  {
    const double m = 1.7, R = 0.8, gamma = 0.9;
    auto coeffs = case_coefficients(7, SpinLabel{2});
    RadialProblem pr{coeffs, PotentialSpec::coulomb(gamma), m, R};
    auto grid = grid_eigensolve(pr, 2, 4000);
    auto series = levels_coulomb_twobody(coeffs, gamma, m, R, 2);
    for (int i = 0; i < 2; ++i)
      CHECK(grid.levels[i].energy ==
            doctest::Approx(series.levels[i].energy).epsilon(1e-6));
  }

  // The closed form needs both centrifugal weights equal; the lopsided
  // cases have no such series.
  CHECK_THROWS_WITH(
      levels_coulomb_twobody(case_coefficients(3, SpinLabel{1}), 1.0, 1.0, 1.0, 3),
      "the exact potential series need a = c (cases 1, 2, 7, 8)");

  auto longer =
      levels_coulomb_twobody(case_coefficients(2, SpinLabel{2}), 0.8, 1.0, 1.0, 10);
  for (std::size_t i = 1; i < longer.levels.size(); ++i)
    CHECK(longer.levels[i].energy > longer.levels[i - 1].energy);
}

TEST_CASE("oscillator series: pinned ground level, degeneracy, stiff-wall limit") {
  // omega = m = R = 1, no spin: E_0 = 3/4 + 3 sqrt(5)/4.
  auto base =
      levels_oscillator_twobody(case_coefficients(1, SpinLabel{0}), 1.0, 1.0, 1.0, 3);
  CHECK(base.levels[0].k == 0);
  CHECK(base.levels[0].energy ==
        doctest::Approx(0.75 + 0.75 * std::sqrt(5.0)).epsilon(1e-14));

  // Same one-body degeneracy as in the coulomb family.
  for (int l = 0; l <= 2; ++l) {
    const double m = 1.6, R = 1.2, omega = 0.85;
    auto two =
        levels_oscillator_twobody(case_coefficients(1, SpinLabel{2 * l}), omega, m, R, 5);
    auto one = levels_onebody(OneBodyPotential::oscillator, l, omega, m, R, 5);
    for (int i = 0; i < 5; ++i)
      CHECK(std::abs(two.levels[i].energy - one.levels[i].energy) < 1e-12);
  }

  // The quadratic potential blows up at the equator for every omega > 0,
  // so switching the coupling off is singular: the weak-coupling energies
  // approach the hard-wall spectrum on the inner hemisphere, not the free
  // one.  The omega term tends to w/(4 m R^2) with w = 4k + 2 + s.
  {
    const double m = 1.4, R = 0.7;
    auto coeffs = case_coefficients(1, SpinLabel{2});
    auto sp = levels_oscillator_twobody(coeffs, 1e-8, m, R, 4);
    const double s = std::sqrt(1.0 + 32.0 * coeffs.c);
    for (const auto& lv : sp.levels) {
      const double w = 4.0 * lv.k + 2.0 + s;
      const double wall =
          (w * w + 2.0 * w - 16.0 * coeffs.c + 8.0 * coeffs.b - 3.0) /
          (8.0 * m * R * R);
      CHECK(lv.energy == doctest::Approx(wall).epsilon(1e-9));
    }
  }

  CHECK_THROWS_WITH(
      levels_oscillator_twobody(case_coefficients(1, SpinLabel{0}), 0.0, 1.0, 1.0, 2),
      "omega must be positive");
  CHECK_THROWS_AS(
      levels_oscillator_twobody(case_coefficients(1, SpinLabel{0}), -0.3, 1.0, 1.0, 2),
      std::invalid_argument);
  CHECK_THROWS_AS(
      levels_oscillator_twobody(case_coefficients(5, SpinLabel{1}), 1.0, 1.0, 1.0, 2),
      std::invalid_argument);

  // Grid oracle away from unit mass and radius; this is what pins the
  // sqrt(1 + 1/(4 omega^2 R^4 m)) factor, which degenerates to a pure
  // frequency rescale at m = R = 1.
  {
    const double m = 1.7, R = 0.8, omega = 0.6;
    auto coeffs = case_coefficients(1, SpinLabel{4});
    RadialProblem pr{coeffs, PotentialSpec::oscillator(omega), m, R};
    auto grid = grid_eigensolve(pr, 2, 8000);
    auto series = levels_oscillator_twobody(coeffs, omega, m, R, 2);
    for (int i = 0; i < 2; ++i)
      CHECK(grid.levels[i].energy ==
            doctest::Approx(series.levels[i].energy).epsilon(1e-6));
  }

  auto longer =
      levels_oscillator_twobody(case_coefficients(8, SpinLabel{4}), 0.5, 1.0, 1.0, 8);
  for (std::size_t i = 1; i < longer.levels.size(); ++i)
    CHECK(longer.levels[i].energy > longer.levels[i - 1].energy);
}

TEST_CASE("single-particle spectra") {
  // Unit coulomb background, s-wave: the lowest level sits at -1/2.
  auto c = levels_onebody(OneBodyPotential::coulomb, 0, 1.0, 1.0, 1.0, 3);
  CHECK(c.levels.front().k == 1);
  CHECK(c.levels.front().energy == doctest::Approx(-0.5).epsilon(1e-14));

  // Switching the field off leaves the curvature band ((k+l)^2 - 1) over
  // 2 m R^2.
  const double m = 1.9, R = 0.6;
  auto free_l2 = levels_onebody(OneBodyPotential::coulomb, 2, 0.0, m, R, 4);
  for (const auto& lv : free_l2.levels) {
    const double n = lv.k + 2.0;
    CHECK(lv.energy ==
          doctest::Approx((n * n - 1.0) / (2.0 * m * R * R)).epsilon(1e-13));
  }

  // Oscillator ground state coincides with the two-body value at zero spin.
  auto o = levels_onebody(OneBodyPotential::oscillator, 0, 1.0, 1.0, 1.0, 1);
  CHECK(o.levels.front().k == 0);
  CHECK(o.levels.front().energy ==
        doctest::Approx(0.75 + 0.75 * std::sqrt(5.0)).epsilon(1e-14));

  CHECK_THROWS_WITH(levels_onebody(OneBodyPotential::coulomb, -1, 1.0, 1.0, 1.0, 2),
                    "angular momentum l must be nonnegative");
  CHECK_THROWS_AS(levels_onebody(OneBodyPotential::oscillator, 0, 0.0, 1.0, 1.0, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(levels_onebody(OneBodyPotential::coulomb, 0, 1.0, -1.0, 1.0, 2),
                  std::invalid_argument);

  for (auto kind : {OneBodyPotential::coulomb, OneBodyPotential::oscillator}) {
    auto sp = levels_onebody(kind, 1, 0.9, 1.3, 1.1, 8);
    for (std::size_t i = 1; i < sp.levels.size(); ++i)
      CHECK(sp.levels[i].energy > sp.levels[i - 1].energy);
  }
}

TEST_CASE("grid eigensolver: free spectrum, convergence, guard rails") {
  RadialProblem free_pr{case_coefficients(1, SpinLabel{0}), PotentialSpec::zero(), 1.0,
                        1.0};

  auto sp = grid_eigensolve(free_pr, 6, 3000);
  REQUIRE(sp.levels.size() == 6);
  CHECK(sp.method == "grid(3000)");
  for (int k = 0; k < 6; ++k) {
    CHECK(sp.levels[k].k == k);
    CHECK(sp.levels[k].energy == doctest::Approx(0.5 * k * (k + 2.0)).epsilon(1e-6));
  }

  // The reported values gain better than two orders when the grid doubles:
  // the leading h^2 error is extrapolated away, so roughly h^4 remains
  // until eigenvalue-bisection noise takes over around 1e-9.
  const double e1024 = std::abs(grid_eigensolve(free_pr, 3, 1024).levels[2].energy - 4.0);
  const double e2048 = std::abs(grid_eigensolve(free_pr, 3, 2048).levels[2].energy - 4.0);
  CHECK(e1024 < 1e-7);
  CHECK((e2048 < e1024 / 4.0 || e2048 < 2e-9));

  // Unit coulomb ground level.
  {
    RadialProblem pr{case_coefficients(1, SpinLabel{0}), PotentialSpec::coulomb(1.0), 1.0,
                     1.0};
    auto g = grid_eigensolve(pr, 1, 3000);
    CHECK(g.levels[0].energy == doctest::Approx(-0.5).epsilon(1e-6));
  }

  // Levels come out strictly ordered.
  {
    RadialProblem pr{case_coefficients(4, SpinLabel{3}),
                     PotentialSpec::inv_square_plus_square(0.8, 1.4), 1.1, 0.9};
    auto g = grid_eigensolve(pr, 5, 2000);
    for (std::size_t i = 1; i < g.levels.size(); ++i)
      CHECK(g.levels[i].energy > g.levels[i - 1].energy);
  }

  // A grid too coarse for the requested accuracy refuses instead of
  // returning junk.
  CHECK_THROWS_WITH(grid_eigensolve(free_pr, 3, 64),
                    "grid eigensolve did not converge under refinement; increase n_points");

  CHECK_THROWS_WITH(grid_eigensolve(free_pr, 10, 100),
                    "n_points is too small for the requested level count");
  CHECK_THROWS_AS(grid_eigensolve(free_pr, 0, 1000), std::invalid_argument);
  RadialProblem bad = free_pr;
  bad.m = 0.0;
  CHECK_THROWS_AS(grid_eigensolve(bad, 2, 1000), std::invalid_argument);
  bad = free_pr;
  bad.m = 1.0;
  bad.R = -1.0;
  CHECK_THROWS_AS(grid_eigensolve(bad, 2, 1000), std::invalid_argument);
}

TEST_CASE("batched eigensolves match the serial reference exactly") {
  std::vector<RadialProblem> problems = {
      {case_coefficients(1, SpinLabel{0}), PotentialSpec::zero(), 1.0, 1.0},
      {case_coefficients(1, SpinLabel{2}), PotentialSpec::coulomb(1.0), 1.0, 1.0},
      {case_coefficients(3, SpinLabel{1}), PotentialSpec::inv_square_plus_square(0.5, 1.0),
       1.2, 0.9},
      {case_coefficients(7, SpinLabel{2}), PotentialSpec::coulomb(0.4), 0.8, 1.1},
      {case_coefficients(2, SpinLabel{4}), PotentialSpec::oscillator(0.7), 1.0, 1.0},
      {case_coefficients(6, SpinLabel{3}), PotentialSpec::inv_square_plus_square(1.5, 2.0),
       1.0, 1.0},
  };
  auto serial = grid_eigensolve_batch(problems, 3, 1200, false);
  auto parallel = grid_eigensolve_batch(problems, 3, 1200, true);
  REQUIRE(serial.size() == problems.size());
  REQUIRE(parallel.size() == problems.size());
  for (std::size_t i = 0; i < problems.size(); ++i) {
    CHECK(serial[i].method == parallel[i].method);
    REQUIRE(serial[i].levels.size() == 3);
    REQUIRE(parallel[i].levels.size() == 3);
    for (int k = 0; k < 3; ++k) {
      CHECK(serial[i].levels[k].k == k);
      CHECK(serial[i].levels[k].energy == parallel[i].levels[k].energy);
    }
  }

  // A failure inside the pool surfaces as the same exception the serial
  // path raises.
  CHECK_THROWS_AS(grid_eigensolve_batch(problems, 3, 64, true), std::runtime_error);
  CHECK_THROWS_AS(grid_eigensolve_batch(problems, 3, 64, false), std::runtime_error);
}

CURVEBODY_TEST_MAIN
