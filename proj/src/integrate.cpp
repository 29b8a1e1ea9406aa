#include "curvebody/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "curvebody/liealgebra.hpp"
#include "curvebody/threads.hpp"

namespace curvebody {

namespace {

constexpr int kNewtonMax = 50;
constexpr double kNewtonTol = 1e-13;
constexpr int kMaxDim = 5;

using Vec = std::array<double, kMaxDim>;

bool solve_linear(int n, double A[kMaxDim][kMaxDim], double* b) {
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int row = col + 1; row < n; ++row)
      if (std::abs(A[row][col]) > std::abs(A[piv][col])) piv = row;
    if (!(std::abs(A[piv][col]) > 0.0)) return false;
    if (piv != col) {
      for (int k = 0; k < n; ++k) std::swap(A[piv][k], A[col][k]);
      std::swap(b[piv], b[col]);
    }
    for (int row = col + 1; row < n; ++row) {
      const double f = A[row][col] / A[col][col];
      for (int k = col; k < n; ++k) A[row][k] -= f * A[col][k];
      b[row] -= f * b[col];
    }
  }
  for (int row = n - 1; row >= 0; --row) {
    double s = b[row];
    for (int k = row + 1; k < n; ++k) s -= A[row][k] * b[k];
    b[row] = s / A[row][row];
    if (!std::isfinite(b[row])) return false;
  }
  return true;
}

// One implicit-midpoint step y1 = y0 + dt f((y0 + y1)/2), solved for the
// midpoint by Newton with a forward-difference Jacobian.  Converged when
// every residual component is below kNewtonTol * max(1, |y0_i|), after which
// one more correction is applied so the accepted residual sits at round-off
// rather than at the tolerance.
template <typename Rhs>
bool midpoint_step(int n, const Rhs& rhs, const Vec& y0, double dt, Vec& y1) {
  Vec z{}, f{}, g{}, zp{}, fp{};
  rhs(y0, f);
  for (int i = 0; i < n; ++i) z[i] = y0[i] + 0.5 * dt * f[i];
  bool polished = false;
  for (int iter = 0; iter <= kNewtonMax; ++iter) {
    rhs(z, f);
    double worst = 0.0;
    bool finite = true;
    for (int i = 0; i < n; ++i) {
      g[i] = z[i] - y0[i] - 0.5 * dt * f[i];
      if (!std::isfinite(g[i])) finite = false;
      worst = std::max(worst, std::abs(g[i]) / std::max(1.0, std::abs(y0[i])));
    }
    if (!finite) return false;
    if (worst < kNewtonTol) {
      // Accepting the first sub-tolerance iterate leaves a solve error of
      // order kNewtonTol with a systematic sign; at small dt the predictor
      // alone can pass the test, and that bias then accumulates linearly in
      // the energy.  One extra correction pushes it to round-off.
      if (polished) {
        for (int i = 0; i < n; ++i) y1[i] = 2.0 * z[i] - y0[i];
        return true;
      }
      polished = true;
    }
    if (iter == kNewtonMax) break;
    double J[kMaxDim][kMaxDim];
    for (int j = 0; j < n; ++j) {
      const double h = 1e-8 * std::max(1.0, std::abs(z[j]));
      zp = z;
      zp[j] += h;
      rhs(zp, fp);
      for (int i = 0; i < n; ++i) {
        const double dfij = (fp[i] - f[i]) / h;
        if (!std::isfinite(dfij)) return false;
        J[i][j] = (i == j ? 1.0 : 0.0) - 0.5 * dt * dfij;
      }
    }
    if (!solve_linear(n, J, g.data())) return false;
    for (int i = 0; i < n; ++i) z[i] -= g[i];
  }
  return false;
}

const LieAlgebraSpec& orbit_algebra(Space space) {
  static const LieAlgebraSpec sphere = so3_orbit();
  static const LieAlgebraSpec hyperbolic = so12_orbit();
  return space == Space::sphere ? sphere : hyperbolic;
}

// Hamiltonian vector field in the primary chart.  Reduced states pack as
// (r, p_r, phi, p_phi), orbit states as (r, p_r, p3, p4, p5); the latter mix
// the canonical (r, p_r) pair with x_i' = sum c^k_ij x_k dH/dx_j.
void reduced_rhs(const Vec& y, Vec& f, const SystemParams& p, ReducedCase c, double mu,
                 double nu) {
  const ReducedState s{y[0], y[1], y[2], y[3], mu, nu};
  const ReducedGradient g = internal::reduced_gradient(s, p, c);
  f[0] = g.d_p_r;
  f[1] = -g.d_r;
  f[2] = g.d_p_phi;
  f[3] = -g.d_phi;
}

void orbit_rhs(const Vec& y, Vec& f, const SystemParams& p, const LieAlgebraSpec& alg) {
  const OrbitState s{y[0], y[1], y[2], y[3], y[4]};
  const OrbitGradient g = internal::orbit_gradient(s, p);
  f[0] = g.d_p_r;
  f[1] = -g.d_r;
  const double grad[3] = {g.d_p3, g.d_p4, g.d_p5};
  for (int i = 0; i < 3; ++i) {
    double acc = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) acc += alg.c(i, j, k) * y[2 + k] * grad[j];
    f[2 + i] = acc;
  }
}

// Large-radius chart on the sphere: q = 1/r, p_q = -r^2 p_r.  The radial
// kinetic term transforms to (q^2+1)^2/(8 m R^2) p_q^2, which is evaluated
// directly -- composing the primary-chart gradient with the chain rule
// cancels catastrophically near q = 0.  The rest of the Hamiltonian does not
// involve p_r, so its r-gradient is read off at p_r = 0.
double inv_kin(double q, const SystemParams& p) {
  const double w = q * q + 1.0;
  return w * w / (8.0 * p.m() * p.R * p.R);
}

double inv_dkin(double q, const SystemParams& p) {
  return q * (q * q + 1.0) / (2.0 * p.m() * p.R * p.R);
}

void inverted_reduced_rhs(const Vec& y, Vec& f, const SystemParams& p, ReducedCase c,
                          double mu, double nu) {
  const double q = y[0], pq = y[1];
  const ReducedState rest{1.0 / q, 0.0, y[2], y[3], mu, nu};
  const ReducedGradient g = internal::reduced_gradient(rest, p, c);
  f[0] = 2.0 * inv_kin(q, p) * pq;
  f[1] = -inv_dkin(q, p) * pq * pq + g.d_r / (q * q);
  f[2] = g.d_p_phi;
  f[3] = -g.d_phi;
}

void inverted_orbit_rhs(const Vec& y, Vec& f, const SystemParams& p,
                        const LieAlgebraSpec& alg) {
  const double q = y[0], pq = y[1];
  const OrbitState rest{1.0 / q, 0.0, y[2], y[3], y[4]};
  const OrbitGradient g = internal::orbit_gradient(rest, p);
  f[0] = 2.0 * inv_kin(q, p) * pq;
  f[1] = -inv_dkin(q, p) * pq * pq + g.d_r / (q * q);
  const double grad[3] = {g.d_p3, g.d_p4, g.d_p5};
  for (int i = 0; i < 3; ++i) {
    double acc = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) acc += alg.c(i, j, k) * y[2 + k] * grad[j];
    f[2 + i] = acc;
  }
}

void check_options(const IntegrationOptions& opt) {
  if (!(opt.dt > 0.0) || !std::isfinite(opt.dt))
    throw std::invalid_argument("integration needs dt > 0");
  if (!(opt.t_end >= 0.0) || !std::isfinite(opt.t_end))
    throw std::invalid_argument("integration needs t_end >= 0");
  if (opt.sample_every < 1) throw std::invalid_argument("sample_every must be >= 1");
}

}  // namespace

ReducedState flow_step(const ReducedState& s, const SystemParams& p, double dt) {
  if (dt == 0.0 || !std::isfinite(dt)) throw std::invalid_argument("flow_step needs dt != 0");
  const ReducedCase c = classify_reduced(s, p);
  (void)hamiltonian(s, p);  // chart-domain validation
  const Vec y0 = {s.r, s.p_r, s.phi, s.p_phi, 0.0};
  Vec y1{};
  const auto rhs = [&](const Vec& y, Vec& f) { reduced_rhs(y, f, p, c, s.mu, s.nu); };
  if (!midpoint_step(4, rhs, y0, dt, y1))
    throw std::runtime_error("implicit midpoint iteration did not converge");
  return ReducedState{y1[0], y1[1], y1[2], y1[3], s.mu, s.nu};
}

OrbitState flow_step(const OrbitState& s, const SystemParams& p, double dt) {
  if (dt == 0.0 || !std::isfinite(dt)) throw std::invalid_argument("flow_step needs dt != 0");
  (void)hamiltonian(s, p);
  const LieAlgebraSpec& alg = orbit_algebra(p.space);
  const Vec y0 = {s.r, s.p_r, s.p3, s.p4, s.p5};
  Vec y1{};
  const auto rhs = [&](const Vec& y, Vec& f) { orbit_rhs(y, f, p, alg); };
  if (!midpoint_step(5, rhs, y0, dt, y1))
    throw std::runtime_error("implicit midpoint iteration did not converge");
  return OrbitState{y1[0], y1[1], y1[2], y1[3], y1[4]};
}

ReducedTrajectory integrate(const ReducedState& s0, const SystemParams& p,
                            const IntegrationOptions& opt, const ReducedObserver& observer) {
  check_options(opt);
  const ReducedCase c = classify_reduced(s0, p);
  const double e0 = hamiltonian(s0, p);

  ReducedTrajectory tr;
  const long n_steps = std::llround(opt.t_end / opt.dt);
  bool inverted = false;
  Vec y = {s0.r, s0.p_r, s0.phi, s0.p_phi, 0.0};
  double t = 0.0;

  const auto physical = [&]() -> ReducedState {
    if (!inverted) return ReducedState{y[0], y[1], y[2], y[3], s0.mu, s0.nu};
    const double q = y[0];
    return ReducedState{1.0 / q, -q * q * y[1], y[2], y[3], s0.mu, s0.nu};
  };
  const auto energy = [&](const ReducedState& s) -> double {
    if (!inverted) return internal::reduced_energy(s, p, c);
    const double q = y[0];
    const ReducedState rest{s.r, 0.0, s.phi, s.p_phi, s.mu, s.nu};
    return inv_kin(q, p) * y[1] * y[1] + internal::reduced_energy(rest, p, c);
  };
  const auto record = [&](const ReducedState& s) {
    if (!tr.samples.empty() && tr.samples.back().t == t) return;
    tr.samples.push_back(ReducedSample{t, s, energy(s)});
  };
  const auto halt = [&](const char* kind, double value, const ReducedState& s) {
    tr.events.push_back(Event{t, kind, value});
    tr.halted = true;
    tr.halt_reason = kind;
    record(s);
  };

  // Returns true when the run must stop; also performs chart switches.
  const auto handle_events = [&](const ReducedState& s) -> bool {
    if (!inverted) {
      if (s.r < kCollisionRadius) {
        halt("collision", s.r, s);
        return true;
      }
      if (p.space == Space::hyperbolic && s.r > kHyperbolicBoundary) {
        halt("boundary", s.r, s);
        return true;
      }
      if (p.space == Space::sphere && c == ReducedCase::generic &&
          std::min(s.mu, s.nu) - std::abs(s.p_phi) < kChartSingularitySlack) {
        halt("chart_singularity", s.p_phi, s);
        return true;
      }
      if (p.space == Space::sphere && s.r > kInversionEnterRadius) {
        if (opt.allow_inversion) {
          tr.events.push_back(Event{t, "inversion_enter", s.r});
          y = {1.0 / s.r, -s.r * s.r * s.p_r, s.phi, s.p_phi, 0.0};
          inverted = true;
        } else {
          halt("boundary", s.r, s);
          return true;
        }
      }
      return false;
    }
    double q = y[0];
    if (q <= 0.0) {
      if (!p.potential().even_in_r()) {
        halt("boundary", q, s);
        return true;
      }
      // Passing the antipodal configuration: r -> -r composed with the
      // parity (p_r, phi, p_phi) -> -(p_r, phi, p_phi) is an exact symmetry
      // of the even-potential Hamiltonians, so fold back to q > 0.
      y = {-y[0], -y[1], -y[2], -y[3], 0.0};
      tr.events.push_back(Event{t, "antipodal_crossing", q});
      q = y[0];
    } else if (q < 1e-6 && !p.potential().even_in_r()) {
      halt("boundary", q, s);
      return true;
    }
    if (q > kInversionExitQ) {
      inverted = false;
      y = {1.0 / q, -q * q * y[1], y[2], y[3], 0.0};
      tr.events.push_back(Event{t, "inversion_exit", y[0]});
    }
    return false;
  };

  tr.samples.push_back(ReducedSample{0.0, s0, e0});
  bool stopped = handle_events(s0);
  const auto rhs = [&](const Vec& yy, Vec& ff) {
    if (inverted)
      inverted_reduced_rhs(yy, ff, p, c, s0.mu, s0.nu);
    else
      reduced_rhs(yy, ff, p, c, s0.mu, s0.nu);
  };
  for (long step = 1; step <= n_steps && !stopped; ++step) {
    Vec y1{};
    if (!midpoint_step(4, rhs, y, opt.dt, y1)) {
      halt("newton_failure", y[0], physical());
      break;
    }
    y = y1;
    t = step * opt.dt;
    ++tr.steps;
    ReducedState s = physical();
    if (observer) observer(t, s);
    stopped = handle_events(s);
    s = physical();  // chart switches may have rewritten y
    if (!stopped && step % opt.sample_every == 0) record(s);
  }
  tr.final_state = physical();
  tr.final_time = t;
  record(tr.final_state);
  return tr;
}

OrbitTrajectory integrate(const OrbitState& s0, const SystemParams& p,
                          const IntegrationOptions& opt, const OrbitObserver& observer) {
  check_options(opt);
  const double e0 = hamiltonian(s0, p);
  const LieAlgebraSpec& alg = orbit_algebra(p.space);

  OrbitTrajectory tr;
  const long n_steps = std::llround(opt.t_end / opt.dt);
  bool inverted = false;
  Vec y = {s0.r, s0.p_r, s0.p3, s0.p4, s0.p5};
  double t = 0.0;

  const auto physical = [&]() -> OrbitState {
    if (!inverted) return OrbitState{y[0], y[1], y[2], y[3], y[4]};
    const double q = y[0];
    return OrbitState{1.0 / q, -q * q * y[1], y[2], y[3], y[4]};
  };
  const auto energy = [&](const OrbitState& s) -> double {
    if (!inverted) return internal::orbit_energy(s, p);
    const double q = y[0];
    const OrbitState rest{s.r, 0.0, s.p3, s.p4, s.p5};
    return inv_kin(q, p) * y[1] * y[1] + internal::orbit_energy(rest, p);
  };
  const auto record = [&](const OrbitState& s) {
    if (!tr.samples.empty() && tr.samples.back().t == t) return;
    tr.samples.push_back(OrbitSample{t, s, energy(s), orbit_casimir(s, p)});
  };
  const auto halt = [&](const char* kind, double value, const OrbitState& s) {
    tr.events.push_back(Event{t, kind, value});
    tr.halted = true;
    tr.halt_reason = kind;
    record(s);
  };
  const auto handle_events = [&](const OrbitState& s) -> bool {
    if (!inverted) {
      if (s.r < kCollisionRadius) {
        halt("collision", s.r, s);
        return true;
      }
      if (p.space == Space::hyperbolic && s.r > kHyperbolicBoundary) {
        halt("boundary", s.r, s);
        return true;
      }
      if (p.space == Space::sphere && s.r > kInversionEnterRadius) {
        if (opt.allow_inversion) {
          tr.events.push_back(Event{t, "inversion_enter", s.r});
          y = {1.0 / s.r, -s.r * s.r * s.p_r, s.p3, s.p4, s.p5};
          inverted = true;
        } else {
          halt("boundary", s.r, s);
          return true;
        }
      }
      return false;
    }
    double q = y[0];
    if (q <= 0.0) {
      if (!p.potential().even_in_r()) {
        halt("boundary", q, s);
        return true;
      }
      // r -> -r composed with (p_r, p4, p5) -> -(p_r, p4, p5) is both a
      // bracket automorphism and a symmetry of the even-potential orbit
      // Hamiltonians; fold back to q > 0.
      y = {-y[0], -y[1], y[2], -y[3], -y[4]};
      tr.events.push_back(Event{t, "antipodal_crossing", q});
      q = y[0];
    } else if (q < 1e-6 && !p.potential().even_in_r()) {
      halt("boundary", q, s);
      return true;
    }
    if (q > kInversionExitQ) {
      inverted = false;
      y = {1.0 / q, -q * q * y[1], y[2], y[3], y[4]};
      tr.events.push_back(Event{t, "inversion_exit", y[0]});
    }
    return false;
  };

  tr.samples.push_back(OrbitSample{0.0, s0, e0, orbit_casimir(s0, p)});
  bool stopped = handle_events(s0);
  const auto rhs = [&](const Vec& yy, Vec& ff) {
    if (inverted)
      inverted_orbit_rhs(yy, ff, p, alg);
    else
      orbit_rhs(yy, ff, p, alg);
  };
  for (long step = 1; step <= n_steps && !stopped; ++step) {
    Vec y1{};
    if (!midpoint_step(5, rhs, y, opt.dt, y1)) {
      halt("newton_failure", y[0], physical());
      break;
    }
    y = y1;
    t = step * opt.dt;
    ++tr.steps;
    OrbitState s = physical();
    if (observer) observer(t, s);
    stopped = handle_events(s);
    s = physical();
    if (!stopped && step % opt.sample_every == 0) record(s);
  }
  tr.final_state = physical();
  tr.final_time = t;
  record(tr.final_state);
  return tr;
}

std::vector<ReducedTrajectory> run_ensemble(const std::vector<ReducedState>& initial,
                                            const SystemParams& p,
                                            const IntegrationOptions& opt, bool parallel) {
  std::vector<ReducedTrajectory> out(initial.size());
#ifdef CURVEBODY_HAVE_OPENMP
  if (parallel) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(initial.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = integrate(initial[i], p, opt);
    return out;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < initial.size(); ++i) out[i] = integrate(initial[i], p, opt);
  return out;
}

std::vector<OrbitTrajectory> run_ensemble(const std::vector<OrbitState>& initial,
                                          const SystemParams& p, const IntegrationOptions& opt,
                                          bool parallel) {
  std::vector<OrbitTrajectory> out(initial.size());
#ifdef CURVEBODY_HAVE_OPENMP
  if (parallel) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(initial.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = integrate(initial[i], p, opt);
    return out;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < initial.size(); ++i) out[i] = integrate(initial[i], p, opt);
  return out;
}

}  // namespace curvebody
