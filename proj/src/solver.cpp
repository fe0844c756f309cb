#include "nhsw/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nhsw/pressure.hpp"

namespace nhsw {

PhysParams effective_params(const SolverConfig& cfg, const PhysParams& p) {
  PhysParams e = p;
  e.mu = cfg.mu;
  e.kappa = cfg.kappa;
  e.h_min = cfg.h_min;
  return e;
}

namespace {

void require_state(const State& s, const Grid1D& g, const char* op) {
  const auto n = static_cast<std::size_t>(g.n());
  if (s.H.size() != n || s.hu.size() != n || s.hw.size() != n ||
      s.pnh.size() != n)
    throw ContractViolation(std::string(op) + ": state not bound to grid");
}

void validate_bc(const SolverConfig& cfg, const Grid1D& g) {
  const bool lp = cfg.left.kind == BoundaryKind::periodic;
  const bool rp = cfg.right.kind == BoundaryKind::periodic;
  if (lp != rp)
    throw ContractViolation("solver: periodic bc must be set on both sides");
  if (lp && g.bc() != BcMode::periodic)
    throw ContractViolation("solver: periodic bc needs a periodic grid");
}

double minmod(double a, double b) {
  if (a > 0.0 && b > 0.0) return std::min(a, b);
  if (a < 0.0 && b < 0.0) return std::max(a, b);
  return 0.0;
}

// Primitive cell values with two ghost layers on each side; index i + 2.
struct ExtCells {
  std::size_t n = 0;
  Field H, u, w, zb, eta;
};

ExtCells extend(const State& s, const Field& zb_cells,
                const SolverConfig& cfg, const PhysParams& p) {
  const std::size_t n = s.H.size();
  ExtCells e;
  e.n = n;
  e.H.assign(n + 4, 0.0);
  e.u.assign(n + 4, 0.0);
  e.w.assign(n + 4, 0.0);
  e.zb.assign(n + 4, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double H = s.H[i];
    e.H[i + 2] = H;
    e.zb[i + 2] = zb_cells[i];
    if (H >= p.h_min) {
      e.u[i + 2] = s.hu[i] / H;
      e.w[i + 2] = s.hw[i] / H;
    }
  }
  const auto wrap = [&](std::size_t from, std::size_t to) {
    e.H[to] = e.H[from];
    e.u[to] = e.u[from];
    e.w[to] = e.w[from];
    e.zb[to] = e.zb[from];
  };
  switch (cfg.left.kind) {
    case BoundaryKind::periodic:
      wrap(n + 1, 1);
      wrap(n, 0);
      break;
    case BoundaryKind::reflective:
      for (std::size_t k = 0; k < 2; ++k) {
        wrap(2 + k, 1 - k);
        e.u[1 - k] = -e.u[2 + k];
      }
      break;
    case BoundaryKind::inflow:
      for (std::size_t k = 0; k < 2; ++k) {
        wrap(2, 1 - k);
        e.u[1 - k] = e.H[2] >= p.h_min ? cfg.left.value / e.H[2] : 0.0;
      }
      break;
    case BoundaryKind::outflow:
      for (std::size_t k = 0; k < 2; ++k) {
        wrap(2, 1 - k);
        e.H[1 - k] = cfg.left.value;
      }
      break;
  }
  switch (cfg.right.kind) {
    case BoundaryKind::periodic:
      wrap(2, n + 2);
      wrap(3, n + 3);
      break;
    case BoundaryKind::reflective:
      for (std::size_t k = 0; k < 2; ++k) {
        wrap(n + 1 - k, n + 2 + k);
        e.u[n + 2 + k] = -e.u[n + 1 - k];
      }
      break;
    case BoundaryKind::inflow:
      for (std::size_t k = 0; k < 2; ++k) {
        wrap(n + 1, n + 2 + k);
        e.u[n + 2 + k] =
            e.H[n + 1] >= p.h_min ? cfg.right.value / e.H[n + 1] : 0.0;
      }
      break;
    case BoundaryKind::outflow:
      for (std::size_t k = 0; k < 2; ++k) {
        wrap(n + 1, n + 2 + k);
        e.H[n + 2 + k] = cfg.right.value;
      }
      break;
  }
  e.eta.assign(n + 4, 0.0);
  for (std::size_t i = 0; i < n + 4; ++i) e.eta[i] = e.H[i] + e.zb[i];
  return e;
}

// Limited face values of one cell: m = left face, p = right face.
struct CellFaces {
  double Hm, Hp, etam, etap, zbm, zbp, um, up, wm, wp;
};

CellFaces faces_of(const ExtCells& e, std::size_t i, double h_min) {
  // i indexes the extended arrays; valid for 1 .. n + 2.
  CellFaces f{};
  const double H = e.H[i];
  double dH = 0.0, deta = 0.0, du = 0.0, dw = 0.0;
  if (e.H[i - 1] >= h_min && H >= h_min && e.H[i + 1] >= h_min) {
    dH = 0.5 * minmod(H - e.H[i - 1], e.H[i + 1] - H);
    deta = 0.5 * minmod(e.eta[i] - e.eta[i - 1], e.eta[i + 1] - e.eta[i]);
    du = 0.5 * minmod(e.u[i] - e.u[i - 1], e.u[i + 1] - e.u[i]);
    dw = 0.5 * minmod(e.w[i] - e.w[i - 1], e.w[i + 1] - e.w[i]);
  }
  f.Hm = H - dH;
  f.Hp = H + dH;
  f.etam = e.eta[i] - deta;
  f.etap = e.eta[i] + deta;
  f.zbm = f.etam - f.Hm;
  f.zbp = f.etap - f.Hp;
  f.um = e.u[i] - du;
  f.up = e.u[i] + du;
  f.wm = e.w[i] - dw;
  f.wp = e.w[i] + dw;
  return f;
}

struct SemiDiscreteRhs {
  Field H, hu, hw;
};

SemiDiscreteRhs hydrostatic_rhs(const State& s, const Field& zb_cells,
                                const Bathymetry& b, const SolverConfig& cfg,
                                const PhysParams& p, const Grid1D& g) {
  (void)b;
  const std::size_t n = s.H.size();
  const double dx = g.dx();
  const double grav = p.g;
  const ExtCells e = extend(s, zb_cells, cfg, p);

  std::vector<CellFaces> faces(n + 2);
  for (std::size_t i = 0; i < n + 2; ++i)
    faces[i] = faces_of(e, i + 1, p.h_min);  // cells -1 .. n

  // Interface fluxes with hydrostatic reconstruction. Interface k sits
  // between cells k-1 and k (k = 0 .. n); faces[k] is cell k-1.
  Field FH(n + 1), FHU(n + 1), FHW(n + 1), HLs(n + 1), HRs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const CellFaces& L = faces[k];
    const CellFaces& R = faces[k + 1];
    const double zs = std::max(L.zbp, R.zbm);
    const double HL = std::max(0.0, L.etap - zs);
    const double HR = std::max(0.0, R.etam - zs);
    const double uL = L.up, uR = R.um, wL = L.wp, wR = R.wm;
    const double lam = std::max(std::fabs(uL) + std::sqrt(grav * HL),
                                std::fabs(uR) + std::sqrt(grav * HR));
    FH[k] = 0.5 * (HL * uL + HR * uR) - 0.5 * lam * (HR - HL);
    FHU[k] = 0.5 * (HL * uL * uL + 0.5 * grav * HL * HL + HR * uR * uR +
                    0.5 * grav * HR * HR) -
             0.5 * lam * (HR * uR - HL * uL);
    FHW[k] = 0.5 * (HL * uL * wL + HR * uR * wR) -
             0.5 * lam * (HR * wR - HL * wL);
    HLs[k] = HL;
    HRs[k] = HR;
  }

  SemiDiscreteRhs r{Field(n), Field(n), Field(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const CellFaces& c = faces[i + 1];
    // Pressure corrections restore consistency between the reconstructed
    // interface depths and the in-cell face depths; the centered source
    // balances the topography gradient across the cell.
    const double right = FHU[i + 1] + 0.5 * grav * (c.Hp * c.Hp - HLs[i + 1] * HLs[i + 1]);
    const double left = FHU[i] + 0.5 * grav * (c.Hm * c.Hm - HRs[i] * HRs[i]);
    const double source = -grav * 0.5 * (c.Hm + c.Hp) * (c.zbp - c.zbm);
    r.H[i] = -(FH[i + 1] - FH[i]) / dx;
    r.hu[i] = -(right - left) / dx + source / dx;
    r.hw[i] = -(FHW[i + 1] - FHW[i]) / dx;
  }

  if (p.mu != 0.0 || p.kappa != 0.0) {
    const ViscousTerms vt = ns_viscous_terms(s, g, p);
    for (std::size_t i = 0; i < n; ++i) {
      r.hu[i] += vt.momentum_x[i];
      r.hw[i] += vt.momentum_z[i];
    }
  }
  return r;
}

// Forward-Euler stage with positivity repair at the dry floor.
State euler_stage(const State& s, const SemiDiscreteRhs& r, double dt,
                  const PhysParams& p, const Grid1D& g) {
  const std::size_t n = s.H.size();
  State out = s;
  for (std::size_t i = 0; i < n; ++i) {
    double H = s.H[i] + dt * r.H[i];
    if (H < 0.0) {
      if (H < -1e-12 * std::max(1.0, s.H[i]))
        throw PositivityFailure(
            "hydrostatic_step: negative depth in cell " + std::to_string(i),
            g.center(static_cast<int>(i)));
      H = 0.0;
    }
    out.H[i] = H;
    out.hu[i] = s.hu[i] + dt * r.hu[i];
    out.hw[i] = s.hw[i] + dt * r.hw[i];
    if (H < p.h_min) {
      out.hu[i] = 0.0;
      out.hw[i] = 0.0;
    }
  }
  return out;
}

}  // namespace

double admissible_dt(const State& s, const SolverConfig& cfg,
                     const PhysParams& p, const Grid1D& g) {
  require_state(s, g, "admissible_dt");
  double lam_max = 0.0;
  for (std::size_t i = 0; i < s.H.size(); ++i) {
    const double H = s.H[i];
    if (H < p.h_min) continue;
    const double u = std::fabs(s.hu[i] / H);
    lam_max = std::max(lam_max, u + std::sqrt(p.g * H));
  }
  double dt = lam_max > 0.0 ? cfg.cfl * g.dx() / lam_max
                            : std::numeric_limits<double>::infinity();
  if (p.mu > 0.0) dt = std::min(dt, 0.25 * g.dx() * g.dx() / p.mu);
  if (p.kappa > 0.0) {
    double h_wet_min = std::numeric_limits<double>::infinity();
    for (double H : s.H)
      if (H >= p.h_min) h_wet_min = std::min(h_wet_min, H);
    if (std::isfinite(h_wet_min))
      dt = std::min(dt, 0.5 * h_wet_min / p.kappa);
  }
  return dt;
}

State hydrostatic_step(const State& s, const Bathymetry& b,
                       const SolverConfig& cfg, const PhysParams& p0,
                       const Grid1D& g, double dt) {
  require_state(s, g, "hydrostatic_step");
  validate_bc(cfg, g);
  const PhysParams p = effective_params(cfg, p0);
  const double adm = admissible_dt(s, cfg, p, g);
  if (dt > adm * (1.0 + 1e-9))
    throw StepRejected("hydrostatic_step: dt = " + std::to_string(dt) +
                           " exceeds admissible " + std::to_string(adm),
                       adm);
  const Field zb_cells = b.values(g);

  // Two-stage strong-stability Runge-Kutta over the well-balanced
  // semi-discretization.
  const SemiDiscreteRhs r1 = hydrostatic_rhs(s, zb_cells, b, cfg, p, g);
  const State s1 = euler_stage(s, r1, dt, p, g);
  const SemiDiscreteRhs r2 = hydrostatic_rhs(s1, zb_cells, b, cfg, p, g);
  const State s2 = euler_stage(s1, r2, dt, p, g);

  State out = s;
  for (std::size_t i = 0; i < s.H.size(); ++i) {
    out.H[i] = 0.5 * (s.H[i] + s2.H[i]);
    out.hu[i] = 0.5 * (s.hu[i] + s2.hu[i]);
    out.hw[i] = 0.5 * (s.hw[i] + s2.hw[i]);
    if (out.H[i] < p.h_min) {
      out.hu[i] = 0.0;
      out.hw[i] = 0.0;
    }
  }
  return out;
}

State nh_correction(const State& s, const Bathymetry& b,
                    const SolverConfig& cfg, const PhysParams& p0,
                    const Grid1D& g, double t, double dt) {
  require_state(s, g, "nh_correction");
  const PhysParams p = effective_params(cfg, p0);
  const std::size_t n = s.H.size();
  State out = s;
  std::fill(out.pnh.begin(), out.pnh.end(), 0.0);

  // Thin films left behind by a moving shoreline make the scaled elliptic
  // problem ill-conditioned (u = hu/H and q/sqrt(H) both blow up), so the
  // correction only runs where the column is a meaningful fraction of the
  // flow depth. Skipped cells keep hydrostatic dynamics and zero pnh, which
  // is consistent: the dispersive pressure vanishes with H.
  double h_max = 0.0;
  for (double h : s.H) h_max = std::max(h_max, h);
  const double h_cut = std::max(p.h_min, 1e-2 * h_max);

  std::size_t i = 0;
  while (i < n) {
    if (s.H[i] < h_cut) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && s.H[j + 1] >= h_cut) ++j;
    const std::size_t len = j - i + 1;
    if (len >= 3) {
      const bool whole_periodic = (len == n && g.bc() == BcMode::periodic);
      const Grid1D sub =
          whole_periodic
              ? g
              : Grid1D(g.x_left() + static_cast<double>(i) * g.dx(), g.dx(),
                       static_cast<int>(len), BcMode::extrapolate);
      State ss;
      ss.H.assign(s.H.begin() + i, s.H.begin() + j + 1);
      ss.hu.assign(s.hu.begin() + i, s.hu.begin() + j + 1);
      ss.hw.assign(s.hw.begin() + i, s.hw.begin() + j + 1);
      ss.pnh.assign(len, 0.0);

      PressureProblem prob{sub, ss.H, lambda_coefficient(ss.H, b, sub),
                           rhs_B(ss, b, sub, p), 0.0, 0.0};
      if (cfg.forcing_w) {
        for (std::size_t k = 0; k < len; ++k)
          prob.rhs[k] -= ss.H[k] * cfg.forcing_w(sub.center(static_cast<int>(k)), t);
      }
      const Field pnh = solve_pressure_bvp(prob, p.h_min);

      Field Hp(len);
      for (std::size_t k = 0; k < len; ++k) Hp[k] = ss.H[k] * pnh[k];
      const Field dHp = ddx(Hp, sub);
      for (std::size_t k = 0; k < len; ++k) {
        const double slope = b.eval(sub.center(static_cast<int>(k))).slope;
        out.hu[i + k] -= dt * (dHp[k] + 2.0 * pnh[k] * slope);
        out.hw[i + k] += dt * 2.0 * pnh[k];
        out.pnh[i + k] = pnh[k];
      }
    }
    i = j + 1;
  }
  return out;
}

RunResult run(const State& initial, const Bathymetry& b,
              const SolverConfig& cfg, const PhysParams& p0, const Grid1D& g) {
  require_state(initial, g, "run");
  validate_bc(cfg, g);
  const PhysParams p = effective_params(cfg, p0);
  const double dx = g.dx();

  RunResult res;
  res.min_depth = std::numeric_limits<double>::infinity();

  const auto record_series = [&](const State& s, double t, double dt) {
    const Field e = energy_density(s, b, g, p);
    double esum = 0.0, msum = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      esum += e[i] * dx;
      msum += s.H[i] * dx;
      res.min_depth = std::min(res.min_depth, s.H[i]);
    }
    const Field c = divergence_constraint_residual(s, b, g, p);
    double cmax = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (s.H[i] >= p.h_min) cmax = std::max(cmax, std::fabs(c[i]));
    const Field ef = energy_flux(s, b, g, p);
    res.times.push_back(t);
    res.dts.push_back(dt);
    res.energy.push_back(esum);
    res.mass.push_back(msum);
    res.constraint_residual.push_back(cmax);
    res.boundary_flux_left.push_back(ef.front());
    res.boundary_flux_right.push_back(ef.back());
  };
  const auto snapshot = [&](const State& s, double t) {
    res.snapshot_times.push_back(t);
    res.snapshots.push_back(s);
  };
  const auto finite = [](const State& s) {
    for (const Field* f : {&s.H, &s.hu, &s.hw, &s.pnh})
      for (double v : *f)
        if (!std::isfinite(v)) return false;
    return true;
  };

  State s = initial;
  double t = 0.0;
  record_series(s, t, 0.0);
  snapshot(s, t);

  const double t_end = cfg.t_end;
  while (t_end - t > 1e-12 * std::max(1.0, std::fabs(t_end))) {
    if (res.steps >= cfg.max_steps)
      throw RunFailure("run: exceeded max_steps = " +
                           std::to_string(cfg.max_steps) + " at t = " +
                           std::to_string(t),
                       std::move(res));
    double dt = std::min(admissible_dt(s, cfg, p, g), t_end - t);
    if (!(dt > 0.0) || !std::isfinite(dt)) dt = t_end - t;

    State next = hydrostatic_step(s, b, cfg, p, g, dt);
    const double t_half = t + 0.5 * dt;
    if (cfg.forcing_w) {
      for (std::size_t i = 0; i < next.H.size(); ++i)
        if (next.H[i] >= p.h_min)
          next.hw[i] +=
              dt * next.H[i] * cfg.forcing_w(g.center(static_cast<int>(i)), t_half);
    }
    if (cfg.enable_nh) next = nh_correction(next, b, cfg, p, g, t_half, dt);

    t += dt;
    ++res.steps;
    if (!finite(next)) {
      snapshot(next, t);
      record_series(s, t, dt);  // last finite state closes the series
      throw RunFailure("run: non-finite field at t = " + std::to_string(t),
                       std::move(res));
    }
    s = std::move(next);
    record_series(s, t, dt);
    if (cfg.snapshot_every > 0 && res.steps % cfg.snapshot_every == 0 &&
        t < t_end)
      snapshot(s, t);
  }
  snapshot(s, t);
  return res;
}

}  // namespace nhsw
