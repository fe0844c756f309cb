#include "nhsw/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nhsw/analytic.hpp"
#include "nhsw/errors.hpp"
#include "nhsw/io.hpp"
#include "nhsw/model.hpp"
#include "nhsw/pressure.hpp"
#include "nhsw/scenario.hpp"
#include "nhsw/solver.hpp"
#include "nhsw/verify.hpp"

namespace nhsw {

namespace {

std::string fmt(double v, int prec = 3) {
  std::ostringstream ss;
  ss << std::setprecision(prec) << v;
  return ss.str();
}

void report_line(bool ok, const std::string& text, int& rc) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << text << "\n";
  if (!ok) rc = 3;
}

// ---------------------------------------------------------------------------
// analytic: reference-solution tables
// ---------------------------------------------------------------------------

struct SolitonOpts {
  double H0 = 1.0, l = 2.0, d = 1.0, g = 9.81, t = 0.0;
  int n = 500;
  std::string out;
};

int run_analytic_soliton(const SolitonOpts& o) {
  SolitonParams sp{o.H0, o.l, o.d};
  sp.validate();
  SolitonSolution sol(sp, o.g, o.t);
  Grid1D grid(sol.x_left(), sol.domain_length() / o.n, o.n, BcMode::periodic);
  State s = State::zero(grid);
  for (int i = 0; i < o.n; ++i) {
    const auto smp = soliton_state(grid.center(i), o.t, sp, o.g);
    const auto k = static_cast<std::size_t>(i);
    s.H[k] = smp.H;
    s.hu[k] = smp.H * smp.u;
    s.hw[k] = smp.H * smp.w;
    s.pnh[k] = smp.pnh;
  }
  ensure_directory(o.out);
  PhysParams p;
  p.g = o.g;
  write_state_csv(o.out + "/fields.csv", grid, s, Bathymetry::flat(0.0), p);
  Json meta{{"command", "analytic soliton"}, {"H0", o.H0}, {"l", o.l},
            {"d", o.d},  {"g", o.g},         {"t", o.t},   {"n", o.n},
            {"celerity", sp.celerity(o.g)},  {"amplitude", sp.amplitude(o.g)},
            {"x_left", grid.x_left()},       {"dx", grid.dx()}};
  write_json(o.out + "/meta.json", meta);
  std::cout << "wrote " << o.out << "/fields.csv (" << o.n << " cells)\n";
  return 0;
}

struct ThackerOpts {
  double H0 = 1.0, b1 = 0.0, b2 = 0.5, f0 = 1.0, F0 = 0.0;
  double g = 9.81, t = 0.0, t_span = -1.0, traj_dt = 1e-4;
  int n = 400;
  std::string out;
};

int run_analytic_thacker(const ThackerOpts& o) {
  ThackerParams tp;
  tp.H0 = o.H0;
  tp.b1 = o.b1;
  tp.b2 = o.b2;
  tp.f0 = o.f0;
  tp.F0 = o.F0;
  if (!(tp.b2 > 0.0)) throw ConfigError("--b2 must be positive");
  if (!(tp.H0 > 0.0)) throw ConfigError("--H0 must be positive");
  const double period = 2.0 * M_PI / std::sqrt(tp.b2 * o.g);
  const double span = o.t_span > 0.0 ? o.t_span : std::max(period, o.t);
  const ThackerTrajectory traj = integrate_f(tp, span, o.traj_dt, o.g);
  if (o.t < traj.t_begin() || o.t > traj.t_end())
    throw ConfigError("--t outside the integrated trajectory span");

  const double radius = std::sqrt(2.0 * tp.H0 / tp.b2);
  const double f_amp = std::fabs(tp.F0) + std::fabs(tp.f0) / std::sqrt(tp.b2 * o.g);
  const double length = 2.6 * (radius + f_amp);
  Grid1D grid(-0.5 * length, length / o.n, o.n, BcMode::extrapolate);

  const auto nn = static_cast<std::size_t>(o.n);
  Field H(nn), u(nn), w(nn), pnh(nn), zb(nn), sforce(nn);
  for (int i = 0; i < o.n; ++i) {
    const auto a = thacker_depth_averaged(grid.center(i), o.t, tp, traj, o.g);
    const auto k = static_cast<std::size_t>(i);
    H[k] = a.H;
    u[k] = a.u;
    w[k] = a.w;
    pnh[k] = a.pnh;
    zb[k] = a.zb;
    sforce[k] = a.s;
  }
  ensure_directory(o.out);
  {
    const Field x = grid.centers();
    write_csv(o.out + "/fields.csv", {"x", "H", "u", "w", "pnh", "zb", "s"},
              {&x, &H, &u, &w, &pnh, &zb, &sforce});
  }
  {
    const auto& tt = traj.times();
    const auto& ff = traj.f_samples();
    const auto& FF = traj.F_samples();
    const std::size_t stride = std::max<std::size_t>(1, tt.size() / 4000);
    Field tcol, fcol, Fcol;
    for (std::size_t k = 0; k < tt.size(); k += stride) {
      tcol.push_back(tt[k]);
      fcol.push_back(ff[k]);
      Fcol.push_back(FF[k]);
    }
    if ((tt.size() - 1) % stride != 0) {
      tcol.push_back(tt.back());
      fcol.push_back(ff.back());
      Fcol.push_back(FF.back());
    }
    write_csv(o.out + "/trajectory.csv", {"t", "f", "F"},
              {&tcol, &fcol, &Fcol});
  }
  Json meta{{"command", "analytic thacker"},
            {"H0", tp.H0}, {"b1", tp.b1},   {"b2", tp.b2}, {"f0", tp.f0},
            {"F0", tp.F0}, {"g", o.g},      {"t", o.t},    {"n", o.n},
            {"traj_dt", o.traj_dt},         {"t_span", span},
            {"period", period},             {"x_left", grid.x_left()},
            {"dx", grid.dx()}};
  write_json(o.out + "/meta.json", meta);
  std::cout << "wrote " << o.out << "/fields.csv and trajectory.csv\n";
  return 0;
}

struct StationaryOpts {
  std::string preset = "bump";
  StationarySpec spec;
  double g = 9.81;
  double tol = 1e-6;
  std::string out;
};

StationarySpec preset_spec(const std::string& preset) {
  StationarySpec s;
  s.L = 10.0;
  s.n = 2000;
  s.substeps = 8;
  s.a = 5.0;
  s.H_exit = 1.0;
  if (preset == "bump") {
    s.Q0 = 1.8;
    s.b = 3.4;
    s.c = 1.5;
  } else if (preset == "dip") {
    s.Q0 = 1.0;
    s.b = 1.5;
    s.c = -0.25;
  } else {
    throw ConfigError("unknown preset `" + preset + "` (bump or dip)");
  }
  return s;
}

double bernoulli_variation(const StationarySolution& sol) {
  double lo = 0.0, hi = 0.0, mean = 0.0;
  for (std::size_t k = 0; k < sol.H.size(); ++k) {
    const double phi = 0.5 * (sol.u[k] * sol.u[k] + sol.w[k] * sol.w[k]) +
                       sol.g * (sol.zb[k] + sol.H[k]) + sol.pnh[k];
    if (k == 0) lo = hi = phi;
    lo = std::min(lo, phi);
    hi = std::max(hi, phi);
    mean += phi;
  }
  mean /= static_cast<double>(sol.H.size());
  return (hi - lo) / std::max(std::fabs(mean), 1e-300);
}

void write_stationary_tables(const StationarySolution& sol,
                             const std::string& out) {
  ensure_directory(out);
  const Field x = sol.grid.centers();
  write_csv(out + "/fields.csv", {"x", "H", "u", "w", "pnh", "zb"},
            {&x, &sol.H, &sol.u, &sol.w, &sol.pnh, &sol.zb});
  const Field lambda = lambda_coefficient(sol.H, sol.bathymetry(), sol.grid);
  write_regime_csv(out + "/regime.csv", sol.grid, lambda,
                   classify_regime(lambda));
}

Json stationary_report(const StationarySolution& sol,
                       const StationaryResiduals& res, double bern) {
  const double min_H = *std::min_element(sol.H.begin(), sol.H.end());
  return Json{{"Q0", sol.spec.Q0},
              {"H_exit", sol.spec.H_exit},
              {"a", sol.spec.a},
              {"b", sol.spec.b},
              {"c", sol.spec.c},
              {"L", sol.spec.L},
              {"n", sol.spec.n},
              {"substeps", sol.spec.substeps},
              {"g", sol.g},
              {"min_depth", min_H},
              {"residual_discharge", res.discharge},
              {"residual_depth", res.depth},
              {"residual_vertical_velocity", res.vertical_velocity},
              {"residual_pressure", res.pressure},
              {"residual_max", res.max()},
              {"energy_flux_variation", bern}};
}

int run_analytic_stationary(const StationaryOpts& o) {
  const StationarySolution sol = generate_stationary(o.spec, o.g);
  write_stationary_tables(sol, o.out);
  Json meta = stationary_report(sol, stationary_ode_residual(sol),
                                bernoulli_variation(sol));
  meta["command"] = "analytic stationary";
  meta["preset"] = o.preset;
  write_json(o.out + "/meta.json", meta);
  std::cout << "wrote " << o.out << "/fields.csv and regime.csv\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify: residual convergence and steady-state checks
// ---------------------------------------------------------------------------

struct VerifyOpts {
  std::vector<int> ns{128, 256, 512};
  std::string variant;
  std::string expect;  // converge | inconsistent | (empty: by variant)
  double dt_stencil = 0.0;
  double g = 9.81;
  std::string out;
};

void write_levels_csv(const std::string& path, const ConvergenceReport& rep) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open `" + path + "` for writing");
  f << "n,equation,max_norm,l2_norm\n";
  for (std::size_t k = 0; k < rep.ns.size(); ++k) {
    const ResidualReport& lv = rep.levels[k];
    for (std::size_t e = 0; e < lv.equations.size(); ++e)
      f << rep.ns[k] << ',' << lv.equations[e] << ','
        << format_double(lv.norms[e].max_norm) << ','
        << format_double(lv.norms[e].l2_norm) << '\n';
    f << rep.ns[k] << ",energy,"
      << format_double(rep.energy_levels[k].max_norm) << ','
      << format_double(rep.energy_levels[k].l2_norm) << '\n';
  }
}

int verify_convergent(const AnalyticSolution& sol, ModelVariant variant,
                      const VerifyOpts& o, const PhysParams& p) {
  const double lo = 1.7, hi = 2.3;
  const ConvergenceReport rep =
      convergence_study(sol, variant, o.ns, p, o.dt_stencil);
  int rc = 0;
  const std::string tag = sol.name() + "/" + variant_name(variant);
  for (std::size_t e = 0; e < rep.equations.size(); ++e) {
    const double finest = e + 1 == rep.equations.size()
                              ? rep.energy_levels.back().max_norm
                              : rep.levels.back().norms[e].max_norm;
    if (rep.saturated[e]) {
      report_line(true, tag + " " + rep.equations[e] +
                            ": saturated at rounding (max " +
                            fmt(finest, 2) + ")",
                  rc);
      continue;
    }
    const double ord = rep.fitted_order[e];
    report_line(ord >= lo && ord <= hi,
                tag + " " + rep.equations[e] + ": order " + fmt(ord) +
                    " in [" + fmt(lo, 2) + ", " + fmt(hi, 2) + "]",
                rc);
  }
  if (!o.out.empty()) {
    ensure_directory(o.out);
    Json report{{"solution", sol.name()},
                {"variant", variant_name(variant)},
                {"mode", "converge"},
                {"ns", rep.ns},
                {"order_band", {lo, hi}},
                {"pass", rc == 0}};
    Json orders = Json::object();
    Json saturated = Json::object();
    for (std::size_t e = 0; e < rep.equations.size(); ++e) {
      orders[rep.equations[e]] = rep.fitted_order[e];
      saturated[rep.equations[e]] = static_cast<bool>(rep.saturated[e]);
    }
    report["fitted_order"] = orders;
    report["saturated"] = saturated;
    Json levels = Json::array();
    for (std::size_t k = 0; k < rep.ns.size(); ++k) {
      Json lv{{"n", rep.ns[k]}};
      for (std::size_t e = 0; e < rep.levels[k].equations.size(); ++e)
        lv[rep.levels[k].equations[e]] =
            Json{{"max", rep.levels[k].norms[e].max_norm},
                 {"l2", rep.levels[k].norms[e].l2_norm}};
      lv["energy"] = Json{{"max", rep.energy_levels[k].max_norm},
                          {"l2", rep.energy_levels[k].l2_norm}};
      levels.push_back(lv);
    }
    report["levels"] = levels;
    write_json(o.out + "/report.json", report);
    write_levels_csv(o.out + "/levels.csv", rep);
  }
  return rc;
}

int verify_inconsistent(const AnalyticSolution& sol, ModelVariant variant,
                        const VerifyOpts& o, const PhysParams& p) {
  const double ratio_min = 10.0;
  const ModelVariant reference =
      sol.has_forcing() ? ModelVariant::nh_forcing : ModelVariant::nh;
  const int n = o.ns.back();
  const ResidualReport got = pde_residual(sol, variant, n, o.dt_stencil, p);
  const ResidualReport ref = pde_residual(sol, reference, n, o.dt_stencil, p);
  const double ratio = got.worst_max() / std::max(ref.worst_max(), 1e-300);
  int rc = 0;
  report_line(ratio > ratio_min,
              sol.name() + "/" + std::string(variant_name(variant)) + " vs " +
                  variant_name(reference) + " at n=" + std::to_string(n) +
                  ": residual ratio " + fmt(ratio) + " > " + fmt(ratio_min, 2),
              rc);
  if (!o.out.empty()) {
    ensure_directory(o.out);
    Json norms = Json::object();
    for (std::size_t e = 0; e < got.equations.size(); ++e)
      norms[got.equations[e]] = got.norms[e].max_norm;
    Json ref_norms = Json::object();
    for (std::size_t e = 0; e < ref.equations.size(); ++e)
      ref_norms[ref.equations[e]] = ref.norms[e].max_norm;
    write_json(o.out + "/report.json",
               Json{{"solution", sol.name()},
                    {"variant", variant_name(variant)},
                    {"reference_variant", variant_name(reference)},
                    {"mode", "inconsistent"},
                    {"n", n},
                    {"max_norms", norms},
                    {"reference_max_norms", ref_norms},
                    {"ratio", ratio},
                    {"ratio_min", ratio_min},
                    {"pass", rc == 0}});
  }
  return rc;
}

int run_verify_sampler(const AnalyticSolution& sol, const VerifyOpts& o) {
  if (o.ns.size() < 2) throw ConfigError("--ns needs at least two grid sizes");
  for (int n : o.ns)
    if (n < 8) throw ConfigError("--ns entries must be at least 8");
  const ModelVariant variant = variant_from_name(o.variant);
  std::string expect = o.expect;
  if (expect.empty())
    expect = (variant == ModelVariant::gn || variant == ModelVariant::sv)
                 ? "inconsistent"
                 : "converge";
  PhysParams p;
  p.g = o.g;
  if (expect == "converge") return verify_convergent(sol, variant, o, p);
  if (expect == "inconsistent") return verify_inconsistent(sol, variant, o, p);
  throw ConfigError("--expect must be `converge` or `inconsistent`");
}

int run_verify_stationary(const StationaryOpts& o) {
  const StationarySolution sol = generate_stationary(o.spec, o.g);
  const StationaryResiduals res = stationary_ode_residual(sol);
  const double bern = bernoulli_variation(sol);
  const double min_H = *std::min_element(sol.H.begin(), sol.H.end());
  int rc = 0;
  const std::string tag = "stationary/" + o.preset;
  report_line(res.max() <= o.tol,
              tag + ": ODE residual " + fmt(res.max()) + " <= " + fmt(o.tol), rc);
  report_line(bern <= o.tol,
              tag + ": energy-flux variation " + fmt(bern) + " <= " + fmt(o.tol),
              rc);
  report_line(min_H > 0.0, tag + ": min depth " + fmt(min_H) + " > 0", rc);
  if (!o.out.empty()) {
    write_stationary_tables(sol, o.out);
    Json report = stationary_report(sol, res, bern);
    report["preset"] = o.preset;
    report["tol"] = o.tol;
    report["pass"] = rc == 0;
    write_json(o.out + "/report.json", report);
  }
  return rc;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateOpts {
  std::string config;
  std::string out;
};

int run_simulate(const SimulateOpts& o) {
  const Scenario sc = build_scenario(parse_config_file(o.config));
  const RunResult r = run_scenario(sc, o.out);
  const double mass_drift =
      r.mass.empty() ? 0.0
                     : (r.mass.back() - r.mass.front()) /
                           std::max(std::fabs(r.mass.front()), 1e-300);
  const EnergyBudget eb = energy_budget(r);
  std::cout << "scenario=" << sc.name << " steps=" << r.steps
            << " t=" << fmt(r.times.back(), 6)
            << " mass_drift=" << fmt(mass_drift, 3)
            << " energy_drift=" << fmt(eb.drift_rel, 3)
            << " min_depth=" << fmt(r.min_depth, 3) << "\n";
  if (!o.out.empty()) std::cout << "wrote run directory " << o.out << "\n";
  return 0;
}

void attach_stationary_opts(CLI::App* cmd, StationaryOpts& o) {
  cmd->add_option("--preset", o.preset,
                  "named case: bump (supercritical ridge) or dip");
  cmd->add_option("--Q0", o.spec.Q0, "discharge");
  cmd->add_option("--H-exit", o.spec.H_exit, "depth at the outflow end");
  cmd->add_option("--a", o.spec.a, "profile center");
  cmd->add_option("--b", o.spec.b, "profile width parameter");
  cmd->add_option("--c", o.spec.c, "profile amplitude");
  cmd->add_option("--L", o.spec.L, "domain length");
  cmd->add_option("--n", o.spec.n, "output samples");
  cmd->add_option("--substeps", o.spec.substeps, "integration substeps per cell");
  cmd->add_option("--g", o.g, "gravity");
}

/// Re-resolve the preset baseline, then re-apply explicit overrides.
void finalize_stationary_opts(CLI::App* cmd, StationaryOpts& o) {
  StationarySpec base = preset_spec(o.preset);
  if (!cmd->count("--Q0")) o.spec.Q0 = base.Q0;
  if (!cmd->count("--H-exit")) o.spec.H_exit = base.H_exit;
  if (!cmd->count("--a")) o.spec.a = base.a;
  if (!cmd->count("--b")) o.spec.b = base.b;
  if (!cmd->count("--c")) o.spec.c = base.c;
  if (!cmd->count("--L")) o.spec.L = base.L;
  if (!cmd->count("--n")) o.spec.n = base.n;
  if (!cmd->count("--substeps")) o.spec.substeps = base.substeps;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "Depth-averaged free-surface flow: reference solutions, residual "
      "verification, and a prediction-correction solver"};
  app.require_subcommand(1);
  int rc = 0;

  // --- analytic ----------------------------------------------------------
  auto* analytic =
      app.add_subcommand("analytic", "Write reference-solution tables");
  analytic->require_subcommand(1);

  SolitonOpts so;
  auto* a_sol = analytic->add_subcommand("soliton", "travelling solitary wave");
  a_sol->add_option("--H0", so.H0, "rest depth");
  a_sol->add_option("--l", so.l, "length scale (> H0)");
  a_sol->add_option("--d", so.d, "mass-flux depth scale");
  a_sol->add_option("--g", so.g, "gravity");
  a_sol->add_option("--t", so.t, "evaluation time");
  a_sol->add_option("--n", so.n, "cells");
  a_sol->add_option("--out", so.out, "output directory")->required();
  a_sol->callback([&] { rc = run_analytic_soliton(so); });

  ThackerOpts to;
  auto* a_tha = analytic->add_subcommand("thacker", "oscillating parabolic basin");
  a_tha->add_option("--H0", to.H0, "center depth at rest");
  a_tha->add_option("--b1", to.b1, "bowl offset");
  a_tha->add_option("--b2", to.b2, "bowl curvature (> 0)");
  a_tha->add_option("--f0", to.f0, "initial velocity amplitude");
  a_tha->add_option("--F0", to.F0, "initial displacement");
  a_tha->add_option("--g", to.g, "gravity");
  a_tha->add_option("--t", to.t, "evaluation time");
  a_tha->add_option("--t-span", to.t_span, "trajectory span (default: one period)");
  a_tha->add_option("--traj-dt", to.traj_dt, "trajectory integrator step");
  a_tha->add_option("--n", to.n, "cells");
  a_tha->add_option("--out", to.out, "output directory")->required();
  a_tha->callback([&] { rc = run_analytic_thacker(to); });

  StationaryOpts sto;
  auto* a_sta = analytic->add_subcommand("stationary", "steady flow over a ridge");
  attach_stationary_opts(a_sta, sto);
  a_sta->add_option("--out", sto.out, "output directory")->required();
  a_sta->callback([&] {
    finalize_stationary_opts(a_sta, sto);
    rc = run_analytic_stationary(sto);
  });

  // --- verify ------------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify", "Check residual convergence and steady-state identities");
  verify->require_subcommand(1);

  VerifyOpts vso;
  vso.variant = "nh";
  SolitonOpts vso_params;
  double vso_t = 0.5;
  auto* v_sol = verify->add_subcommand("soliton", "solitary-wave residuals");
  v_sol->add_option("--ns", vso.ns, "grid sizes (comma separated)")
      ->delimiter(',');
  v_sol->add_option("--variant", vso.variant,
                    "model variant: nh, nh+forcing, gn, sv, ns");
  v_sol->add_option("--expect", vso.expect, "converge or inconsistent");
  v_sol->add_option("--dt-stencil", vso.dt_stencil,
                    "time-difference step (default: dx)");
  v_sol->add_option("--H0", vso_params.H0, "rest depth");
  v_sol->add_option("--l", vso_params.l, "length scale");
  v_sol->add_option("--d", vso_params.d, "mass-flux depth scale");
  v_sol->add_option("--g", vso.g, "gravity");
  v_sol->add_option("--t", vso_t, "evaluation time");
  v_sol->add_option("--out", vso.out, "report directory");
  v_sol->callback([&] {
    SolitonParams sp{vso_params.H0, vso_params.l, vso_params.d};
    SolitonSolution sol(sp, vso.g, vso_t);
    rc = run_verify_sampler(sol, vso);
  });

  VerifyOpts vto;
  vto.variant = "nh+forcing";
  ThackerOpts vto_params;
  double vto_t = 0.45;
  auto* v_tha = verify->add_subcommand("thacker", "basin residuals");
  v_tha->add_option("--ns", vto.ns, "grid sizes (comma separated)")
      ->delimiter(',');
  v_tha->add_option("--variant", vto.variant,
                    "model variant: nh, nh+forcing, gn, sv, ns");
  v_tha->add_option("--expect", vto.expect, "converge or inconsistent");
  v_tha->add_option("--dt-stencil", vto.dt_stencil,
                    "time-difference step (default: dx)");
  v_tha->add_option("--H0", vto_params.H0, "center depth at rest");
  v_tha->add_option("--b1", vto_params.b1, "bowl offset");
  v_tha->add_option("--b2", vto_params.b2, "bowl curvature (> 0)");
  v_tha->add_option("--f0", vto_params.f0, "initial velocity amplitude");
  v_tha->add_option("--F0", vto_params.F0, "initial displacement");
  v_tha->add_option("--traj-dt", vto_params.traj_dt, "trajectory step");
  v_tha->add_option("--g", vto.g, "gravity");
  v_tha->add_option("--t", vto_t, "evaluation time");
  v_tha->add_option("--out", vto.out, "report directory");
  v_tha->callback([&] {
    ThackerParams tp;
    tp.H0 = vto_params.H0;
    tp.b1 = vto_params.b1;
    tp.b2 = vto_params.b2;
    tp.f0 = vto_params.f0;
    tp.F0 = vto_params.F0;
    ThackerSolution sol(tp, vto.g, vto_t, vto_params.traj_dt);
    rc = run_verify_sampler(sol, vto);
  });

  StationaryOpts vsto;
  auto* v_sta = verify->add_subcommand("stationary", "steady-flow identities");
  attach_stationary_opts(v_sta, vsto);
  v_sta->add_option("--tol", vsto.tol, "residual tolerance");
  v_sta->add_option("--out", vsto.out, "report directory");
  v_sta->callback([&] {
    finalize_stationary_opts(v_sta, vsto);
    rc = run_verify_stationary(vsto);
  });

  // --- simulate ----------------------------------------------------------
  SimulateOpts sim;
  auto* s_cmd = app.add_subcommand("simulate", "Run a scenario from a config file");
  s_cmd->add_option("--config", sim.config, "key = value scenario file")
      ->required();
  s_cmd->add_option("--out", sim.out, "run directory (omit to skip writing)");
  s_cmd->callback([&] { rc = run_simulate(sim); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace nhsw
