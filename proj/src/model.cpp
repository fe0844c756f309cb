#include "nhsw/model.hpp"

#include <cmath>
#include <string>

#include "nhsw/errors.hpp"

namespace nhsw {

namespace {

void require_state(const State& s, const Grid1D& g, const char* op) {
  const auto n = static_cast<std::size_t>(g.n());
  if (s.H.size() != n || s.hu.size() != n || s.hw.size() != n ||
      s.pnh.size() != n)
    throw ContractViolation(std::string(op) +
                            ": state fields not bound to grid");
}

void require_same_size(const State& s, const char* op) {
  if (s.hu.size() != s.H.size() || s.hw.size() != s.H.size() ||
      s.pnh.size() != s.H.size())
    throw ContractViolation(std::string(op) + ": state fields of unequal length");
}

}  // namespace

State State::zero(const Grid1D& g) {
  const auto n = static_cast<std::size_t>(g.n());
  return State{Field(n, 0.0), Field(n, 0.0), Field(n, 0.0), Field(n, 0.0)};
}

Velocities velocities(const State& s, const PhysParams& p) {
  require_same_size(s, "velocities");
  const std::size_t n = s.H.size();
  Velocities v{Field(n, 0.0), Field(n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    if (s.H[i] >= p.h_min) {
      v.u[i] = s.hu[i] / s.H[i];
      v.w[i] = s.hw[i] / s.H[i];
    }
  }
  return v;
}

Fluxes nh_flux(const State& s, const PhysParams& p) {
  require_same_size(s, "nh_flux");
  const std::size_t n = s.H.size();
  Fluxes f{Field(n, 0.0), Field(n, 0.0), Field(n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    const double H = s.H[i];
    if (H < p.h_min) continue;
    const double u = s.hu[i] / H;
    const double w = s.hw[i] / H;
    f.mass[i] = H * u;
    f.momentum_x[i] = H * u * u + 0.5 * p.g * H * H + H * s.pnh[i];
    f.momentum_z[i] = H * w * u;
  }
  return f;
}

Sources nh_source(const State& s, const Bathymetry& b, const Grid1D& g,
                  const PhysParams& p) {
  require_state(s, g, "nh_source");
  const std::size_t n = s.H.size();
  Sources src{Field(n, 0.0), Field(n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    const double slope = b.eval(g.center(static_cast<int>(i))).slope;
    src.momentum_x[i] = -(p.g * s.H[i] + 2.0 * s.pnh[i]) * slope;
    src.momentum_z[i] = 2.0 * s.pnh[i];
  }
  return src;
}

Field bottom_pressure(const State& s) {
  Field out(s.pnh.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = 2.0 * s.pnh[i];
  return out;
}

Field divergence_constraint_residual(const State& s, const Bathymetry& b,
                                     const Grid1D& g, const PhysParams& p) {
  require_state(s, g, "divergence_constraint_residual");
  const Velocities v = velocities(s, p);
  const Field dudx = ddx(v.u, g);
  const std::size_t n = s.H.size();
  Field r(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double H = s.H[i];
    const double slope = b.eval(g.center(static_cast<int>(i))).slope;
    r[i] = s.hw[i] - (-0.5 * H * H * dudx[i] + H * slope * v.u[i]);
  }
  return r;
}

Field energy_density(const State& s, const Bathymetry& b, const Grid1D& g,
                     const PhysParams& p) {
  require_state(s, g, "energy_density");
  const Velocities v = velocities(s, p);
  const std::size_t n = s.H.size();
  Field e(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double H = s.H[i];
    const double zb = b.eval(g.center(static_cast<int>(i))).z;
    const double eta = H + zb;
    e[i] = 0.5 * H * (v.u[i] * v.u[i] + v.w[i] * v.w[i]) +
           0.5 * p.g * H * (eta + zb);
  }
  return e;
}

Field energy_flux(const State& s, const Bathymetry& b, const Grid1D& g,
                  const PhysParams& p) {
  const Field e = energy_density(s, b, g, p);
  const Velocities v = velocities(s, p);
  const std::size_t n = s.H.size();
  Field f(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double H = s.H[i];
    f[i] = v.u[i] * (e[i] + 0.5 * p.g * H * H + H * s.pnh[i]);
  }
  return f;
}

GnEval gn_pressure_and_energy(const State& s, const Field& dt_hw,
                              const Grid1D& g, const PhysParams& p) {
  require_state(s, g, "gn_pressure_and_energy");
  if (dt_hw.size() != s.H.size())
    throw ContractViolation("gn_pressure_and_energy: dt_hw not bound to grid");
  const Velocities v = velocities(s, p);
  const std::size_t n = s.H.size();
  Field huw(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) huw[i] = s.hw[i] * v.u[i];
  const Field dhuw = ddx(huw, g);
  GnEval out{Field(n, 0.0), Field(n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    out.p_gn[i] = (2.0 / 3.0) * (dt_hw[i] + dhuw[i]);
    const double H = s.H[i];
    out.energy[i] =
        0.5 * H * (v.u[i] * v.u[i] + (2.0 / 3.0) * v.w[i] * v.w[i]) +
        0.5 * p.g * H * H;
  }
  return out;
}

SvResidual sv_residual(const State& s, const Field& dt_H, const Field& dt_hu,
                       const Bathymetry& b, const Grid1D& g,
                       const PhysParams& p) {
  require_state(s, g, "sv_residual");
  if (dt_H.size() != s.H.size() || dt_hu.size() != s.H.size())
    throw ContractViolation("sv_residual: time derivatives not bound to grid");
  const Velocities v = velocities(s, p);
  const std::size_t n = s.H.size();
  Field hu(n, 0.0), f2(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double H = s.H[i];
    hu[i] = H * v.u[i];
    f2[i] = H * v.u[i] * v.u[i] + 0.5 * p.g * H * H;
  }
  const Field dhu = ddx(hu, g);
  const Field df2 = ddx(f2, g);
  SvResidual r{Field(n, 0.0), Field(n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    const double slope = b.eval(g.center(static_cast<int>(i))).slope;
    r.mass[i] = dt_H[i] + dhu[i];
    r.momentum_x[i] = dt_hu[i] + df2[i] + p.g * s.H[i] * slope;
  }
  return r;
}

Field sv_energy(const State& s, const Bathymetry& b, const Grid1D& g,
                const PhysParams& p) {
  require_state(s, g, "sv_energy");
  const Velocities v = velocities(s, p);
  const std::size_t n = s.H.size();
  Field e(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double H = s.H[i];
    const double zb = b.eval(g.center(static_cast<int>(i))).z;
    e[i] = 0.5 * H * v.u[i] * v.u[i] + 0.5 * p.g * H * (H + 2.0 * zb);
  }
  return e;
}

ViscousTerms ns_viscous_terms(const State& s, const Grid1D& g,
                              const PhysParams& p) {
  require_state(s, g, "ns_viscous_terms");
  const Velocities v = velocities(s, p);
  const Field dudx = ddx(v.u, g);
  const Field dwdx = ddx(v.w, g);
  const std::size_t n = s.H.size();
  Field su(n, 0.0), sw(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    su[i] = 2.0 * p.mu * s.H[i] * dudx[i];
    sw[i] = p.mu * s.H[i] * dwdx[i];
  }
  const Field dsu = ddx(su, g);
  const Field dsw = ddx(sw, g);
  ViscousTerms t{Field(n, 0.0), Field(n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    t.momentum_x[i] = dsu[i] - p.kappa * v.u[i];
    t.momentum_z[i] = dsw[i];
  }
  return t;
}

double closure_defect(const VerticalProfile& prof, double h_min) {
  if (prof.z.size() != prof.u.size())
    throw ContractViolation("closure_defect: z and u of unequal length");
  if (prof.z.size() < 2)
    throw ContractViolation("closure_defect: need at least two samples");
  for (std::size_t i = 1; i < prof.z.size(); ++i)
    if (!(prof.z[i] > prof.z[i - 1]))
      throw ContractViolation("closure_defect: z must be strictly increasing");
  const double H = prof.z.back() - prof.z.front();
  if (H < h_min)
    throw DegenerateColumnError("closure_defect: column of depth " +
                                std::to_string(H) + " below h_min");
  double mean = 0.0;
  for (std::size_t i = 0; i + 1 < prof.z.size(); ++i) {
    const double dz = prof.z[i + 1] - prof.z[i];
    mean += 0.5 * dz * (prof.u[i] + prof.u[i + 1]);
  }
  const double ubar = mean / H;
  // Two-pass deviation form of <u^2> - <u>^2/H: a sum of nonnegative terms,
  // so the sign survives floating point.
  double defect = 0.0;
  for (std::size_t i = 0; i + 1 < prof.z.size(); ++i) {
    const double dz = prof.z[i + 1] - prof.z[i];
    const double da = prof.u[i] - ubar;
    const double db = prof.u[i + 1] - ubar;
    defect += 0.5 * dz * (da * da + db * db);
  }
  return defect;
}

}  // namespace nhsw
