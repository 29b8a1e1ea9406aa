#include "curvebody/grid.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvebody/threads.hpp"

extern "C" {
void dstebz_(const char* range, const char* order, const int* n, const double* vl,
             const double* vu, const int* il, const int* iu, const double* abstol,
             const double* d, const double* e, int* m, int* nsplit, double* w,
             int* iblock, int* isplit, double* work, int* iwork, int* info);
}

namespace curvebody {

namespace {

// Lowest `count` eigenvalues of the symmetrized problem on an n-point grid.
std::vector<double> lowest_eigenvalues(const RadialProblem& pr, int count, int n,
                                       double theta_max) {
  const double mu = 1.0 / (2.0 * pr.m * pr.R * pr.R);
  const Potential pot(pr.potential, pr.R);
  const double h = theta_max / (n + 1);
  const double inv_h2 = 1.0 / (h * h);

  std::vector<double> diag(n), off(n > 1 ? n - 1 : 0, -mu * inv_h2);
  for (int i = 1; i <= n; ++i) {
    const double theta = i * h;
    const double r = std::tan(0.5 * theta);
    const double centrifugal =
        (pr.coeffs.a / (r * r) + pr.coeffs.b + pr.coeffs.c * r * r) /
        (pr.m * pr.R * pr.R);
    diag[i - 1] = 2.0 * mu * inv_h2 + centrifugal + pot.value(r) - mu;
  }

  const char range = 'I', order = 'E';
  const double vl = 0.0, vu = 0.0, abstol = 0.0;
  const int il = 1, iu = count;
  int found = 0, nsplit = 0, info = 0;
  std::vector<double> w(n), work(4 * n);
  std::vector<int> iblock(n), isplit(n), iwork(3 * n);
  dstebz_(&range, &order, &n, &vl, &vu, &il, &iu, &abstol, diag.data(), off.data(),
          &found, &nsplit, w.data(), iblock.data(), isplit.data(), work.data(),
          iwork.data(), &info);
  if (info != 0 || found < count)
    throw std::runtime_error("eigenvalue bisection failed on the grid problem");
  w.resize(count);
  return w;
}

}  // namespace

SpectrumResult grid_eigensolve(const RadialProblem& problem, int count, int n_points) {
  if (!(problem.m > 0.0) || !(problem.R > 0.0))
    throw std::invalid_argument("mass and radius must be positive");
  if (count < 1) throw std::invalid_argument("count must be at least 1");
  if (n_points < 16 * count)
    throw std::invalid_argument("n_points is too small for the requested level count");

  const bool walled = problem.potential.kind == PotentialSpec::Kind::oscillator;
  const double theta_max = walled ? M_PI / 2.0 : M_PI;

  const auto coarse = lowest_eigenvalues(problem, count, n_points, theta_max);
  const auto fine = lowest_eigenvalues(problem, count, 2 * n_points, theta_max);

  SpectrumResult out;
  out.method = "grid(" + std::to_string(n_points) + ")";
  for (int k = 0; k < count; ++k) {
    // Second-order scheme: Richardson extrapolation across the two grids.
    const double lam = (4.0 * fine[k] - coarse[k]) / 3.0;
    if (std::abs(fine[k] - coarse[k]) > 1e-5 * std::max(1.0, std::abs(lam)))
      throw std::runtime_error(
          "grid eigensolve did not converge under refinement; increase n_points");
    out.levels.push_back(Level{k, lam});
  }
  return out;
}

std::vector<SpectrumResult> grid_eigensolve_batch(
    const std::vector<RadialProblem>& problems, int count, int n_points, bool parallel) {
  std::vector<SpectrumResult> out(problems.size());
#ifdef CURVEBODY_HAVE_OPENMP
  if (parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (long i = 0; i < static_cast<long>(problems.size()); ++i) {
      try {
        out[i] = grid_eigensolve(problems[i], count, n_points);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < problems.size(); ++i)
    out[i] = grid_eigensolve(problems[i], count, n_points);
  return out;
}

}  // namespace curvebody
