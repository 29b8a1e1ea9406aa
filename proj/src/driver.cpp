#include "curvebody/driver.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "curvebody/csvio.hpp"
#include "curvebody/grid.hpp"
#include "curvebody/integrate.hpp"
#include "curvebody/levels.hpp"
#include "curvebody/liealgebra.hpp"
#include "curvebody/opverify.hpp"
#include "curvebody/poincare.hpp"
#include "curvebody/speccase.hpp"

namespace curvebody {

namespace {

using nlohmann::json;

PotentialSpec potential_from_config(const RunConfig& config) {
  const std::string kind = config.get_string("potential.kind");
  if (kind == "zero") return PotentialSpec::zero();
  if (kind == "coulomb") return PotentialSpec::coulomb(config.get_double("potential.gamma"));
  if (kind == "oscillator")
    return PotentialSpec::oscillator(config.get_double("potential.omega"));
  if (kind == "inv_square_plus_square")
    return PotentialSpec::inv_square_plus_square(config.get_double("potential.alpha"),
                                                 config.get_double("potential.beta"));
  if (kind == "tabulated") {
    // potential.samples = r1:u1; r2:u2; ...
    std::vector<std::pair<double, double>> samples;
    std::istringstream in(config.get_string("potential.samples"));
    std::string item;
    while (std::getline(in, item, ';')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("potential.samples entries look like `r:value`");
      try {
        samples.emplace_back(std::stod(item.substr(0, colon)),
                             std::stod(item.substr(colon + 1)));
      } catch (const std::exception&) {
        throw std::invalid_argument("potential.samples entry `" + item +
                                    "` is not a pair of numbers");
      }
    }
    return PotentialSpec::tabulated(std::move(samples));
  }
  throw std::invalid_argument(
      "potential.kind must be zero, coulomb, oscillator, inv_square_plus_square or "
      "tabulated");
}

Space space_from_config(const RunConfig& config) {
  const std::string space = config.get_string("space");
  if (space == "sphere") return Space::sphere;
  if (space == "hyperbolic") return Space::hyperbolic;
  throw std::invalid_argument("space must be `sphere` or `hyperbolic`");
}

// Geodesic distance between the bodies in the chart radius: the radial
// coordinate is the half-angle (half-distance) tangent, so the arclength is
// 2 R atan r on the sphere and 2 R atanh r in the hyperbolic case.  The
// sphere fold |r| covers the antipodal continuation, where the inverted
// chart hands back negative values.
double separation(Space space, double R, double r) {
  if (space == Space::sphere) return 2.0 * R * std::atan(std::abs(r));
  return 2.0 * R * std::atanh(r);
}

std::filesystem::path resolve_out(const CliOptions& options, const RunConfig& config,
                                  const std::string& key, const std::string& fallback) {
  std::filesystem::create_directories(options.out_dir);
  return std::filesystem::path(options.out_dir) / config.get_string_or(key, fallback);
}

void write_events_csv(const std::filesystem::path& path, const std::vector<Event>& events) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << "t,kind,value\n";
  for (const auto& e : events)
    out << format_g17(e.t) << ',' << e.kind << ',' << format_g17(e.value) << '\n';
}

// Mean spacing of the p_r +to- sign changes, linearly interpolated between
// samples.  Only meaningful when the samples are dense relative to the
// radial oscillation; the caller prints it with the crossing count so a
// too-coarse stride is visible.
struct PeriodEstimate {
  double period = 0.0;
  int crossings = 0;
};

PeriodEstimate radial_period(const std::vector<double>& t, const std::vector<double>& p_r) {
  std::vector<double> hits;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (p_r[i - 1] > 0.0 && p_r[i] <= 0.0) {
      const double f = p_r[i - 1] / (p_r[i - 1] - p_r[i]);
      hits.push_back(t[i - 1] + f * (t[i] - t[i - 1]));
    }
  }
  PeriodEstimate est;
  est.crossings = static_cast<int>(hits.size());
  if (hits.size() >= 2) est.period = (hits.back() - hits.front()) / (hits.size() - 1.0);
  return est;
}

double relative_drift(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  const double base = values.front();
  const double scale = std::max(1.0, std::abs(base));
  double worst = 0.0;
  for (double v : values) worst = std::max(worst, std::abs(v - base) / scale);
  return worst;
}

void print_run_summary(std::ostream& out, long steps, double final_time,
                       const std::vector<Event>& events, bool halted,
                       const std::string& halt_reason) {
  out << "steps = " << steps << ", final time = " << format_g17(final_time) << "\n";
  if (halted) out << "halted early: " << halt_reason << "\n";
  if (events.empty()) {
    out << "events: none\n";
  } else {
    out << "events:";
    for (const auto& e : events) out << ' ' << e.kind << '@' << format_g17(e.t);
    out << "\n";
  }
}

struct ReducedRunSetup {
  SystemParams params;
  ReducedState state;
  IntegrationOptions opt;
};

const std::vector<std::string> kReducedRunKeys = {
    "space",         "chart",           "m1",
    "m2",            "R",               "potential.kind",
    "potential.gamma", "potential.omega", "potential.alpha",
    "potential.beta", "potential.samples", "state.r",
    "state.p_r",     "state.phi",       "state.p_phi",
    "state.mu",      "state.nu",        "state.p3",
    "state.p4",      "state.p5",        "dt",
    "t_end",         "sample_every",    "allow_inversion",
};

IntegrationOptions integration_options(const RunConfig& config) {
  IntegrationOptions opt;
  opt.dt = config.get_double_or("dt", 1e-3);
  opt.t_end = config.get_double("t_end");
  opt.sample_every = config.get_int_or("sample_every", 1);
  opt.allow_inversion = config.get_bool_or("allow_inversion", true);
  return opt;
}

ReducedRunSetup reduced_setup(const RunConfig& config) {
  SystemParams params(config.get_double("m1"), config.get_double("m2"),
                      config.get_double("R"), space_from_config(config),
                      potential_from_config(config));
  ReducedState state;
  state.r = config.get_double("state.r");
  state.p_r = config.get_double("state.p_r");
  state.phi = config.get_double_or("state.phi", 0.0);
  state.p_phi = config.get_double_or("state.p_phi", 0.0);
  state.mu = config.get_double_or("state.mu", 0.0);
  state.nu = config.get_double_or("state.nu", 0.0);
  try {
    (void)hamiltonian(state, params);
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    if (msg.find("orbit variables") != std::string::npos)
      msg += " -- set chart = orbit and give state.p3/p4/p5";
    throw std::invalid_argument(msg);
  }
  return ReducedRunSetup{params, state, integration_options(config)};
}

}  // namespace

int cmd_algebra_verify(int max_two_ell, bool corrupt_d3, std::ostream& out) {
  if (max_two_ell < 0)
    throw std::invalid_argument("max_two_ell must be nonnegative");

  bool all_pass = true;
  long checked = 0;
  std::vector<std::string> failed;
  auto record = [&](bool pass, const std::string& name) {
    ++checked;
    if (pass) return;
    all_pass = false;
    if (std::find(failed.begin(), failed.end(), name) == failed.end())
      failed.push_back(name);
  };

  for (int a = 0; a <= max_two_ell; ++a) {
    for (int b = 0; b <= max_two_ell; ++b) {
      if ((a % 2) != (b % 2)) continue;  // labels must share parity
      const auto set = build_operator_set(IrrepPair{SpinLabel{a}, SpinLabel{b}});
      const auto commutators =
          corrupt_d3 ? verify_commutators_corrupted(set) : verify_commutators(set);
      for (const auto& rel : commutators.relations) {
        out << json{{"check", "commutator"},
                    {"two_ell", {a, b}},
                    {"relation", rel.id},
                    {"residual", rel.residual},
                    {"pass", rel.pass}}
                   .dump()
            << "\n";
        record(rel.pass, rel.id);
      }
      if (corrupt_d3) continue;  // the fault hook only targets the commutators
      const auto series = verify_eigen_series(set);
      for (const auto& chk : series.checks) {
        out << json{{"check", "eigen_series"},
                    {"two_ell", {a, b}},
                    {"series", chk.series},
                    {"residual", chk.residual},
                    {"pass", chk.pass}}
                   .dump()
            << "\n";
        record(chk.pass, "eigen series " + std::to_string(chk.series));
      }
    }
  }

  if (!corrupt_d3) {
    const std::pair<LieAlgebraSpec, InvariantTable> tables[] = {
        {so4_p(), InvariantTable::spherical},
        {so13_p(), InvariantTable::hyperbolic},
    };
    for (const auto& [alg, which] : tables) {
      const auto report = verify_invariant_table(alg, which);
      for (const auto& rel : report.relations) {
        out << json{{"check", "bracket_table"},
                    {"algebra", report.algebra},
                    {"table", report.which},
                    {"relation", rel.relation},
                    {"residual", rel.residual},
                    {"pass", rel.pass}}
                   .dump()
            << "\n";
        record(rel.pass, rel.relation);
      }
    }
  }

  out << json{{"check", "summary"},
              {"relations_checked", checked},
              {"failed", failed},
              {"pass", all_pass}}
             .dump()
      << "\n";
  return all_pass ? 0 : 1;
}

int cmd_spectrum(const RunConfig& config, const CliOptions& options, std::ostream& out) {
  config.require_known({"case", "two_ell", "m", "R", "count", "method", "grid.n_points",
                        "output.levels", "potential.kind", "potential.gamma",
                        "potential.omega", "potential.alpha", "potential.beta",
                        "potential.samples"});

  const auto coeffs =
      case_coefficients(config.get_int("case"), SpinLabel{config.get_int("two_ell")});
  const double m = config.get_double_or("m", 1.0);
  const double R = config.get_double_or("R", 1.0);
  const int count = config.get_int_or("count", 5);
  const std::string method = config.get_string_or("method", "both");
  if (method != "closed_form" && method != "grid" && method != "both")
    throw std::invalid_argument("method must be closed_form, grid or both");
  const PotentialSpec potential = potential_from_config(config);

  const bool want_closed = method != "grid";
  const bool want_grid = method != "closed_form";

  SpectrumResult closed;
  if (want_closed) {
    const double mr2 = m * R * R;
    switch (potential.kind) {
      case PotentialSpec::Kind::zero:
        closed = levels_general(coeffs.a / mr2, coeffs.c / mr2, m, R, count);
        for (auto& lv : closed.levels) lv.energy += coeffs.b / mr2;
        break;
      case PotentialSpec::Kind::inv_square_plus_square:
        // The case coefficients fold into the confining couplings; b is a
        // flat shift.
        closed = levels_general(coeffs.a / mr2 + config.get_double("potential.alpha"),
                                coeffs.c / mr2 + config.get_double("potential.beta"), m,
                                R, count);
        for (auto& lv : closed.levels) lv.energy += coeffs.b / mr2;
        break;
      case PotentialSpec::Kind::coulomb:
        closed = levels_coulomb_twobody(coeffs, config.get_double("potential.gamma"), m,
                                        R, count);
        break;
      case PotentialSpec::Kind::oscillator:
        closed = levels_oscillator_twobody(coeffs, config.get_double("potential.omega"),
                                           m, R, count);
        break;
      case PotentialSpec::Kind::tabulated:
        throw std::invalid_argument(
            "tabulated potentials have no closed-form series; set method = grid");
    }
  }

  SpectrumResult grid;
  if (want_grid) {
    grid = grid_eigensolve(RadialProblem{coeffs, potential, m, R}, count,
                           config.get_int_or("grid.n_points", 4000));
  }

  CsvTable table;
  if (want_closed && want_grid) {
    table.header = {"k", "closed_form", "grid", "abs_diff"};
    for (int i = 0; i < count; ++i)
      table.rows.push_back(
          {static_cast<double>(closed.levels[i].k), closed.levels[i].energy,
           grid.levels[i].energy,
           std::abs(closed.levels[i].energy - grid.levels[i].energy)});
  } else if (want_closed) {
    table.header = {"k", "closed_form"};
    for (const auto& lv : closed.levels)
      table.rows.push_back({static_cast<double>(lv.k), lv.energy});
  } else {
    table.header = {"k", "grid"};
    for (const auto& lv : grid.levels)
      table.rows.push_back({static_cast<double>(lv.k), lv.energy});
  }

  const bool as_json = options.format == "json";
  const auto path = resolve_out(options, config, "output.levels",
                                as_json ? "levels.json" : "levels.csv");
  if (as_json) {
    json doc{{"case", coeffs.case_id},
             {"two_ell", coeffs.ell.two_ell},
             {"m", m},
             {"R", R},
             {"potential", config.get_string("potential.kind")},
             {"method", method}};
    if (want_closed && !closed.note.empty()) doc["note"] = closed.note;
    if (want_grid) doc["grid_method"] = grid.method;
    json levels = json::array();
    for (const auto& row : table.rows) {
      json entry;
      for (std::size_t i = 0; i < table.header.size(); ++i)
        entry[table.header[i]] = row[i];
      levels.push_back(entry);
    }
    doc["levels"] = levels;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for writing: " + path.string());
    file << doc.dump(2) << "\n";
  } else {
    write_csv(path.string(), table);
  }

  for (const auto& row : table.rows) {
    out << "k = " << static_cast<int>(row[0]);
    for (std::size_t i = 1; i < table.header.size(); ++i)
      out << "  " << table.header[i] << " = " << format_g17(row[i]);
    out << "\n";
  }
  if (want_closed && !closed.note.empty()) out << "note: " << closed.note << "\n";
  out << "wrote " << path.string() << "\n";
  return 0;
}

int cmd_simulate(const RunConfig& config, const CliOptions& options, std::ostream& out) {
  auto allowed = kReducedRunKeys;
  allowed.push_back("output.trajectory");
  allowed.push_back("output.events");
  config.require_known(allowed);

  const std::string chart = config.get_string_or("chart", "reduced");
  const auto trajectory_path =
      resolve_out(options, config, "output.trajectory", "trajectory.csv");
  const auto events_path = resolve_out(options, config, "output.events", "events.csv");

  if (chart == "reduced") {
    auto setup = reduced_setup(config);
    const auto traj = integrate(setup.state, setup.params, setup.opt);

    CsvTable table;
    table.header = {"t", "r", "p_r", "phi", "p_phi", "energy", "separation"};
    std::vector<double> times, momenta, energies;
    for (const auto& s : traj.samples) {
      table.rows.push_back({s.t, s.state.r, s.state.p_r, s.state.phi, s.state.p_phi,
                            s.energy,
                            separation(setup.params.space, setup.params.R, s.state.r)});
      times.push_back(s.t);
      momenta.push_back(s.state.p_r);
      energies.push_back(s.energy);
    }
    write_csv(trajectory_path.string(), table);
    write_events_csv(events_path, traj.events);

    print_run_summary(out, traj.steps, traj.final_time, traj.events, traj.halted,
                      traj.halt_reason);
    out << "energy drift (rel) = " << format_g17(relative_drift(energies)) << "\n";
    out << "casimir drift = 0 (mu, nu are chart parameters)\n";
    const auto period = radial_period(times, momenta);
    if (period.crossings >= 2)
      out << "radial period ~ " << format_g17(period.period) << " over "
          << period.crossings << " crossings\n";
    out << "wrote " << trajectory_path.string() << " (" << traj.samples.size()
        << " samples), " << events_path.string() << " (" << traj.events.size()
        << " events)\n";
    return 0;
  }

  if (chart != "orbit")
    throw std::invalid_argument("chart must be `reduced` or `orbit`");

  SystemParams params(config.get_double("m1"), config.get_double("m2"),
                      config.get_double("R"), space_from_config(config),
                      potential_from_config(config));
  OrbitState state;
  state.r = config.get_double("state.r");
  state.p_r = config.get_double("state.p_r");
  state.p3 = config.get_double_or("state.p3", 0.0);
  state.p4 = config.get_double_or("state.p4", 0.0);
  state.p5 = config.get_double_or("state.p5", 0.0);
  (void)hamiltonian(state, params);  // fail on a bad chart domain before running

  const auto traj = integrate(state, params, integration_options(config));

  CsvTable table;
  table.header = {"t", "r", "p_r", "p3", "p4", "p5", "energy", "casimir", "separation"};
  std::vector<double> energies, casimirs;
  for (const auto& s : traj.samples) {
    table.rows.push_back({s.t, s.state.r, s.state.p_r, s.state.p3, s.state.p4,
                          s.state.p5, s.energy, s.casimir,
                          separation(params.space, params.R, s.state.r)});
    energies.push_back(s.energy);
    casimirs.push_back(s.casimir);
  }
  write_csv(trajectory_path.string(), table);
  write_events_csv(events_path, traj.events);

  print_run_summary(out, traj.steps, traj.final_time, traj.events, traj.halted,
                    traj.halt_reason);
  out << "energy drift (rel) = " << format_g17(relative_drift(energies)) << "\n";
  out << "casimir drift (rel) = " << format_g17(relative_drift(casimirs)) << "\n";
  out << "wrote " << trajectory_path.string() << " (" << traj.samples.size()
      << " samples), " << events_path.string() << " (" << traj.events.size()
      << " events)\n";
  return 0;
}

int cmd_poincare(const RunConfig& config, const CliOptions& options, std::ostream& out) {
  auto allowed = kReducedRunKeys;
  allowed.push_back("section.variable");
  allowed.push_back("section.value");
  allowed.push_back("section.direction");
  allowed.push_back("output.section");
  config.require_known(allowed);

  if (config.get_string_or("chart", "reduced") != "reduced")
    throw std::invalid_argument("sections are defined on the reduced chart");

  SectionSpec section;
  const std::string variable = config.get_string_or("section.variable", "phi");
  if (variable == "phi") {
    section.variable = SectionVariable::phi;
  } else if (variable == "p_phi") {
    section.variable = SectionVariable::p_phi;
  } else {
    throw std::invalid_argument("section.variable must be `phi` or `p_phi`");
  }
  section.value = config.get_double_or("section.value", 0.0);
  section.direction = config.get_int_or("section.direction", 0);
  if (section.direction < -1 || section.direction > 1)
    throw std::invalid_argument("section.direction must be -1, 0 or 1");

  auto setup = reduced_setup(config);
  const auto traj = integrate(setup.state, setup.params, setup.opt);
  const auto points = poincare_section(traj, section);

  CsvTable table;
  table.header = {"t", "r", "p_r"};
  for (const auto& p : points) table.rows.push_back({p.t, p.r, p.p_r});
  const auto path = resolve_out(options, config, "output.section", "section.csv");
  write_csv(path.string(), table);

  print_run_summary(out, traj.steps, traj.final_time, traj.events, traj.halted,
                    traj.halt_reason);
  out << "section points = " << points.size() << "\n";
  out << "wrote " << path.string() << "\n";
  return 0;
}

}  // namespace curvebody
