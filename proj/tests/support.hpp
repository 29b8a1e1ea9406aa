#pragma once

// Shared helpers for the test binaries: a seedable RNG (override with
// --seed=N on the command line), finite-difference oracles, a bracketing
// root finder and composite Gauss-Legendre quadrature.  These stay in test
// code on purpose: they are the independent cross-checks for the analytic
// formulas in the library.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

inline std::uint64_t g_seed = 987654321ull;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(g_seed);
  return engine;
}

inline double uniform(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng());
}

// Central finite difference d f / d x_i.
inline double fd_partial(const std::function<double(const std::vector<double>&)>& f,
                         std::vector<double> x, std::size_t i, double h) {
  x[i] += h;
  const double fp = f(x);
  x[i] -= 2.0 * h;
  const double fm = f(x);
  return (fp - fm) / (2.0 * h);
}

inline std::vector<double> fd_gradient(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x, double h) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = fd_partial(f, x, i, h);
  return g;
}

// Lie-Poisson bracket evaluated purely by finite differences:
//   [f,g](p) = sum_{ijk} c^k_{ij} p_k  df/dp_i  dg/dp_j
// with c supplied as a callback.  Used to cross-check both the polynomial
// bracket engine and chart angle functions.
inline double fd_lie_poisson(
    const std::function<double(std::size_t, std::size_t, std::size_t)>& c,
    const std::function<double(const std::vector<double>&)>& f,
    const std::function<double(const std::vector<double>&)>& g,
    const std::vector<double>& p, double h) {
  const std::size_t n = p.size();
  std::vector<double> df(n), dg(n);
  for (std::size_t i = 0; i < n; ++i) {
    df[i] = fd_partial(f, p, i, h);
    dg[i] = fd_partial(g, p, i, h);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (df[i] == 0.0 || dg[j] == 0.0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const double ck = c(i, j, k);
        if (ck != 0.0) sum += ck * p[k] * df[i] * dg[j];
      }
    }
  return sum;
}

// Brent-style bisection/secant hybrid; f(a) and f(b) must bracket a root.
inline double find_root(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-14, int max_iter = 200) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) throw std::invalid_argument("find_root: no bracket");
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (a + b);
    // secant proposal, clipped into the bracket
    double cand = b - fb * (b - a) / (fb - fa);
    if (!(cand > std::min(a, b) && cand < std::max(a, b))) cand = mid;
    const double fc = f(cand);
    if (fc == 0.0 || std::abs(b - a) < tol * (1.0 + std::abs(cand)))
      return cand;
    if (fa * fc < 0.0) {
      b = cand;
      fb = fc;
    } else {
      a = cand;
      fa = fc;
    }
  }
  return 0.5 * (a + b);
}

// Composite 16-point Gauss-Legendre quadrature on [a,b].
inline double integrate(const std::function<double(double)>& f, double a,
                        double b, int panels = 64) {
  static const double xs[8] = {
      0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
      0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
      0.9445750230732326, 0.9894009349916499};
  static const double ws[8] = {
      0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
      0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
      0.0622535239386479, 0.0271524594117541};
  double total = 0.0;
  const double dx = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * dx;
    const double half = 0.5 * dx;
    double s = 0.0;
    for (int k = 0; k < 8; ++k)
      s += ws[k] * (f(mid + half * xs[k]) + f(mid - half * xs[k]));
    total += s * half;
  }
  return total;
}

// Pulls --seed=N out of argv (consuming it) before doctest parses the rest.
inline void apply_seed_flag(int& argc, char** argv) {
  int out = 1;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--seed=", 0) == 0) {
      g_seed = std::stoull(arg.substr(7));
      rng().seed(g_seed);
    } else {
      argv[out++] = argv[i];
    }
  }
  argc = out;
}

}  // namespace testsupport

#define CURVEBODY_TEST_MAIN                         \
  int main(int argc, char** argv) {                 \
    testsupport::apply_seed_flag(argc, argv);       \
    doctest::Context context(argc, argv);           \
    return context.run();                           \
  }
