#include "nhsw/verify.hpp"

#include <algorithm>
#include <cmath>

#include "nhsw/errors.hpp"

namespace nhsw {

const char* variant_name(ModelVariant v) {
  switch (v) {
    case ModelVariant::nh: return "nh";
    case ModelVariant::nh_forcing: return "nh+forcing";
    case ModelVariant::gn: return "gn";
    case ModelVariant::sv: return "sv";
    case ModelVariant::ns: return "ns";
  }
  return "?";
}

ModelVariant variant_from_name(const std::string& name) {
  if (name == "nh") return ModelVariant::nh;
  if (name == "nh+forcing" || name == "nh_forcing" || name == "nh-forcing")
    return ModelVariant::nh_forcing;
  if (name == "gn") return ModelVariant::gn;
  if (name == "sv") return ModelVariant::sv;
  if (name == "ns") return ModelVariant::ns;
  throw ConfigError("unknown model variant `" + name + "`");
}

// ---------------------------------------------------------------------------
// Samplers
// ---------------------------------------------------------------------------

SolitonSolution::SolitonSolution(const SolitonParams& sp, double g,
                                 double eval_time)
    : sp_(sp), g_(g), t_eval_(eval_time), bathy_(Bathymetry::flat(0.0)) {
  sp_.validate();
  length_ = 20.0 * sp_.l;
  x_left_ = sp_.celerity(g_) * t_eval_ - 0.5 * length_;
}

AnalyticSolution::Sample SolitonSolution::sample(double x, double t) const {
  const SolitonSample s = soliton_state(x, t, sp_, g_);
  return {s.H, s.u, s.w, s.pnh, 0.0};
}

ThackerSolution::ThackerSolution(const ThackerParams& tp, double g,
                                 double eval_time, double traj_dt)
    : tp_(tp), g_(g), t_eval_(eval_time),
      traj_(integrate_f(tp, eval_time + 1.0, traj_dt, g)),
      bathy_(Bathymetry::parabolic(tp.b1, tp.b2)) {
  if (!(tp_.b2 > 0.0))
    throw ContractViolation("ThackerSolution: b2 must be positive");
  const double radius = std::sqrt(2.0 * tp_.H0 / tp_.b2);
  const double f_amp =
      std::fabs(tp_.F0) + std::fabs(tp_.f0) / std::sqrt(tp_.b2 * g_);
  length_ = 2.6 * (radius + f_amp);
  x_left_ = -0.5 * length_;
}

AnalyticSolution::Sample ThackerSolution::sample(double x, double t) const {
  const ThackerAveraged a = thacker_depth_averaged(x, t, tp_, traj_, g_);
  return {a.H, a.u, a.w, a.pnh, a.s};
}

// ---------------------------------------------------------------------------
// Residuals
// ---------------------------------------------------------------------------

namespace {

struct TimeLevel {
  Field H, u, w, pnh, s;
};

TimeLevel sample_level(const AnalyticSolution& sol, const Grid1D& g, double t) {
  const auto n = static_cast<std::size_t>(g.n());
  TimeLevel lv{Field(n), Field(n), Field(n), Field(n), Field(n)};
  for (int i = 0; i < g.n(); ++i) {
    const auto smp = sol.sample(g.center(i), t);
    const auto k = static_cast<std::size_t>(i);
    lv.H[k] = smp.H;
    lv.u[k] = smp.u;
    lv.w[k] = smp.w;
    lv.pnh[k] = smp.pnh;
    lv.s[k] = smp.forcing_w;
  }
  return lv;
}

/// Cells wet at all three stencil times, eroded by two cells so every value a
/// residual stencil touches sits strictly inside the wet region.
std::vector<bool> interior_mask(const std::vector<const TimeLevel*>& levels,
                                const Grid1D& g, double h_min) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<bool> wet(n, true);
  for (const TimeLevel* lv : levels)
    for (std::size_t i = 0; i < n; ++i)
      if (lv->H[i] < h_min) wet[i] = false;
  std::vector<bool> inc(n, true);
  const bool periodic = g.bc() == BcMode::periodic;
  const auto sn = static_cast<std::ptrdiff_t>(n);
  for (std::ptrdiff_t i = 0; i < sn; ++i) {
    for (std::ptrdiff_t d = -2; d <= 2; ++d) {
      std::ptrdiff_t j = i + d;
      if (periodic)
        j = (j % sn + sn) % sn;
      else if (j < 0 || j >= sn)
        continue;
      if (!wet[static_cast<std::size_t>(j)]) inc[static_cast<std::size_t>(i)] = false;
    }
  }
  return inc;
}

Norms masked_norms(const Field& r, const std::vector<bool>& inc, double dx) {
  Norms n;
  double sq = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!inc[i]) continue;
    ++n.cells;
    n.max_norm = std::max(n.max_norm, std::fabs(r[i]));
    sq += r[i] * r[i] * dx;
  }
  n.l2_norm = std::sqrt(sq);
  return n;
}

}  // namespace

double ResidualReport::worst_max() const {
  double m = 0.0;
  for (const Norms& n : norms) m = std::max(m, n.max_norm);
  return m;
}

ResidualReport pde_residual(const AnalyticSolution& sol, ModelVariant variant,
                            int n, double dt_stencil, const PhysParams& p) {
  Grid1D g(sol.x_left(), sol.domain_length() / n, n, sol.bc_mode());
  const double dx = g.dx();
  const double dt = dt_stencil > 0.0 ? dt_stencil : dx;
  const double t0 = sol.eval_time();

  const TimeLevel lm = sample_level(sol, g, t0 - dt);
  const TimeLevel l0 = sample_level(sol, g, t0);
  const TimeLevel lp = sample_level(sol, g, t0 + dt);
  const std::vector<bool> inc = interior_mask({&lm, &l0, &lp}, g, p.h_min);

  const Field zb_slope = sol.bathy().slopes(g);
  const Field zb_val = sol.bathy().values(g);
  const auto nn = static_cast<std::size_t>(n);

  const bool with_forcing =
      variant == ModelVariant::nh_forcing ||
      ((variant == ModelVariant::gn || variant == ModelVariant::ns) &&
       sol.has_forcing());

  // Pressure entering the momentum flux: the dispersive-model variant swaps
  // in its own pressure, which equals (4/3) pnh for states whose vertical
  // momentum balance holds.
  const double pfac = variant == ModelVariant::gn ? 4.0 / 3.0 : 1.0;

  ResidualReport rep;
  rep.variant = variant;
  rep.n = n;
  rep.dt_stencil = dt;

  Field hu0(nn), flux2(nn), huw(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    hu0[i] = l0.H[i] * l0.u[i];
    const double pr = variant == ModelVariant::sv ? 0.0 : pfac * l0.pnh[i];
    flux2[i] = l0.H[i] * l0.u[i] * l0.u[i] + 0.5 * p.g * l0.H[i] * l0.H[i] +
               l0.H[i] * pr;
    huw[i] = l0.H[i] * l0.u[i] * l0.w[i];
  }
  const Field d_hu = ddx(hu0, g);
  const Field d_flux2 = ddx(flux2, g);

  Field r_mass(nn), r_momx(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    r_mass[i] = (lp.H[i] - lm.H[i]) / (2.0 * dt) + d_hu[i];
    const double pr = variant == ModelVariant::sv ? 0.0 : pfac * l0.pnh[i];
    r_momx[i] = (lp.H[i] * lp.u[i] - lm.H[i] * lm.u[i]) / (2.0 * dt) +
                d_flux2[i] + (p.g * l0.H[i] + 2.0 * pr) * zb_slope[i];
  }

  if (variant == ModelVariant::sv) {
    rep.equations = {"mass", "momentum_x"};
    rep.norms = {masked_norms(r_mass, inc, dx), masked_norms(r_momx, inc, dx)};
    return rep;
  }

  const Field d_huw = ddx(huw, g);
  Field r_momz(nn), r_surf(nn);
  Field Zm(nn), Z0(nn), Zp(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    Zm[i] = 0.5 * lm.H[i] * (lm.H[i] + 2.0 * zb_val[i]);
    Z0[i] = 0.5 * l0.H[i] * (l0.H[i] + 2.0 * zb_val[i]);
    Zp[i] = 0.5 * lp.H[i] * (lp.H[i] + 2.0 * zb_val[i]);
  }
  Field Zu(nn);
  for (std::size_t i = 0; i < nn; ++i) Zu[i] = Z0[i] * l0.u[i];
  const Field d_Zu = ddx(Zu, g);

  for (std::size_t i = 0; i < nn; ++i) {
    // In the dispersive variant the vertical source is (3/2) p_gn, which with
    // p_gn = (4/3) pnh coincides with the bottom pressure 2 pnh.
    const double vertical_source = 2.0 * l0.pnh[i];
    const double forcing = with_forcing ? l0.H[i] * l0.s[i] : 0.0;
    r_momz[i] = (lp.H[i] * lp.w[i] - lm.H[i] * lm.w[i]) / (2.0 * dt) +
                d_huw[i] - vertical_source - forcing;
    r_surf[i] = (Zp[i] - Zm[i]) / (2.0 * dt) + d_Zu[i] - l0.H[i] * l0.w[i];
  }

  if (variant == ModelVariant::ns) {
    State st{l0.H, hu0, Field(nn), l0.pnh};
    for (std::size_t i = 0; i < nn; ++i) st.hw[i] = l0.H[i] * l0.w[i];
    const ViscousTerms vt = ns_viscous_terms(st, g, p);
    for (std::size_t i = 0; i < nn; ++i) {
      r_momx[i] -= vt.momentum_x[i];
      r_momz[i] -= vt.momentum_z[i];
    }
  }

  rep.equations = {"mass", "momentum_x", "momentum_z", "surface"};
  rep.norms = {masked_norms(r_mass, inc, dx), masked_norms(r_momx, inc, dx),
               masked_norms(r_momz, inc, dx), masked_norms(r_surf, inc, dx)};
  return rep;
}

Norms energy_residual(const AnalyticSolution& sol, int n, double dt_stencil,
                      const PhysParams& p) {
  Grid1D g(sol.x_left(), sol.domain_length() / n, n, sol.bc_mode());
  const double dx = g.dx();
  const double dt = dt_stencil > 0.0 ? dt_stencil : dx;
  const double t0 = sol.eval_time();

  const TimeLevel lm = sample_level(sol, g, t0 - dt);
  const TimeLevel l0 = sample_level(sol, g, t0);
  const TimeLevel lp = sample_level(sol, g, t0 + dt);
  const std::vector<bool> inc = interior_mask({&lm, &l0, &lp}, g, p.h_min);
  const Field zb_val = sol.bathy().values(g);
  const auto nn = static_cast<std::size_t>(n);

  const auto energy = [&](const TimeLevel& lv, std::size_t i) {
    return 0.5 * lv.H[i] * (lv.u[i] * lv.u[i] + lv.w[i] * lv.w[i]) +
           0.5 * p.g * lv.H[i] * (lv.H[i] + 2.0 * zb_val[i]);
  };

  Field eflux(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    const double E = energy(l0, i);
    eflux[i] = l0.u[i] * (E + 0.5 * p.g * l0.H[i] * l0.H[i] +
                          l0.H[i] * l0.pnh[i]);
  }
  const Field d_eflux = ddx(eflux, g);

  Field r(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    const double work =
        sol.has_forcing() ? l0.H[i] * l0.s[i] * l0.w[i] : 0.0;
    r[i] = (energy(lp, i) - energy(lm, i)) / (2.0 * dt) + d_eflux[i] - work;
  }
  return masked_norms(r, inc, dx);
}

// ---------------------------------------------------------------------------
// Convergence
// ---------------------------------------------------------------------------

bool ConvergenceReport::orders_within(double lo, double hi) const {
  for (std::size_t e = 0; e < fitted_order.size(); ++e) {
    if (saturated[e]) continue;
    if (fitted_order[e] < lo || fitted_order[e] > hi) return false;
  }
  return true;
}

ConvergenceReport convergence_study(const AnalyticSolution& sol,
                                    ModelVariant variant,
                                    const std::vector<int>& ns,
                                    const PhysParams& p, double dt_stencil) {
  if (ns.size() < 2)
    throw ContractViolation("convergence_study: need at least two levels");
  ConvergenceReport rep;
  rep.variant = variant;
  rep.ns = ns;
  for (int n : ns) {
    rep.levels.push_back(pde_residual(sol, variant, n, dt_stencil, p));
    rep.energy_levels.push_back(energy_residual(sol, n, dt_stencil, p));
  }
  rep.equations = rep.levels.front().equations;
  rep.equations.push_back("energy");

  const std::size_t ne = rep.equations.size();
  const double floor = 1e-12;
  for (std::size_t e = 0; e < ne; ++e) {
    std::vector<double> errs;
    for (std::size_t k = 0; k < ns.size(); ++k) {
      const double v = e + 1 == ne ? rep.energy_levels[k].max_norm
                                   : rep.levels[k].norms[e].max_norm;
      errs.push_back(v);
    }
    const bool sat =
        std::all_of(errs.begin(), errs.end(), [&](double v) { return v < floor; });
    rep.saturated.push_back(sat);
    if (sat) {
      rep.fitted_order.push_back(0.0);
      continue;
    }
    // Least-squares slope of log(err) against log(1/n).
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const auto m = static_cast<double>(ns.size());
    for (std::size_t k = 0; k < ns.size(); ++k) {
      const double x = -std::log(static_cast<double>(ns[k]));
      const double y = std::log(std::max(errs[k], 1e-300));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    rep.fitted_order.push_back((m * sxy - sx * sy) / (m * sxx - sx * sx));
  }
  return rep;
}

EnergyBudget energy_budget(const RunResult& r) {
  EnergyBudget b;
  if (r.energy.empty()) return b;
  b.initial = r.energy.front();
  b.final_ = r.energy.back();
  const double ref = std::max(std::fabs(b.initial), 1e-300);
  b.drift_rel = (b.final_ - b.initial) / ref;
  double net_out = 0.0;
  for (std::size_t k = 1; k < r.energy.size(); ++k) {
    const double jump = r.energy[k] - r.energy[k - 1];
    b.max_step_increase_rel =
        std::max(b.max_step_increase_rel, jump / ref);
    const double fr = 0.5 * (r.boundary_flux_right[k] + r.boundary_flux_right[k - 1]);
    const double fl = 0.5 * (r.boundary_flux_left[k] + r.boundary_flux_left[k - 1]);
    net_out += r.dts[k] * (fr - fl);
  }
  b.boundary_closure_rel = std::fabs((b.final_ - b.initial) + net_out) / ref;
  return b;
}

}  // namespace nhsw
