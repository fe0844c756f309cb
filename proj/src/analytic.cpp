#include "nhsw/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nhsw/errors.hpp"

namespace nhsw {

// ---------------------------------------------------------------------------
// Oscillating basin
// ---------------------------------------------------------------------------

ThackerTrajectory::ThackerTrajectory(std::vector<double> t,
                                     std::vector<double> f,
                                     std::vector<double> F,
                                     std::vector<double> dfdt)
    : t_(std::move(t)), f_(std::move(f)), F_(std::move(F)),
      dfdt_(std::move(dfdt)) {
  if (t_.size() < 2 || f_.size() != t_.size() || F_.size() != t_.size() ||
      dfdt_.size() != t_.size())
    throw ContractViolation("ThackerTrajectory: inconsistent sample arrays");
  dt_ = t_[1] - t_[0];
}

std::size_t ThackerTrajectory::locate(double t) const {
  const double lo = t_.front(), hi = t_.back();
  const double slack = 1e-9 * std::max(1.0, std::fabs(hi - lo));
  if (t < lo - slack || t > hi + slack)
    throw OutOfDomainError("ThackerTrajectory: t = " + std::to_string(t) +
                           " outside [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
  double s = (t - lo) / dt_;
  auto k = static_cast<std::ptrdiff_t>(std::floor(s));
  k = std::clamp<std::ptrdiff_t>(k, 0,
                                 static_cast<std::ptrdiff_t>(t_.size()) - 2);
  return static_cast<std::size_t>(k);
}

namespace {

struct Hermite {
  double h00, h10, h01, h11;
};

Hermite hermite_basis(double th) {
  const double th2 = th * th, th3 = th2 * th;
  return {2.0 * th3 - 3.0 * th2 + 1.0, th3 - 2.0 * th2 + th,
          -2.0 * th3 + 3.0 * th2, th3 - th2};
}

}  // namespace

double ThackerTrajectory::f(double t) const {
  const std::size_t k = locate(t);
  const double th = (t - t_[k]) / dt_;
  const Hermite h = hermite_basis(th);
  return h.h00 * f_[k] + h.h10 * dt_ * dfdt_[k] + h.h01 * f_[k + 1] +
         h.h11 * dt_ * dfdt_[k + 1];
}

double ThackerTrajectory::F(double t) const {
  const std::size_t k = locate(t);
  const double th = (t - t_[k]) / dt_;
  const Hermite h = hermite_basis(th);
  return h.h00 * F_[k] + h.h10 * dt_ * f_[k] + h.h01 * F_[k + 1] +
         h.h11 * dt_ * f_[k + 1];
}

double ThackerTrajectory::dfdt(double t) const {
  const std::size_t k = locate(t);
  const double th = (t - t_[k]) / dt_;
  return (1.0 - th) * dfdt_[k] + th * dfdt_[k + 1];
}

ThackerTrajectory integrate_f(const ThackerParams& tp, double t_end, double dt,
                              double g) {
  if (!(tp.H0 > 0.0))
    throw ContractViolation("integrate_f: H0 must be positive");
  if (!(dt > 0.0)) throw ContractViolation("integrate_f: dt must be positive");
  if (!(t_end >= tp.t0))
    throw ContractViolation("integrate_f: t_end before t0");

  const double span = t_end - tp.t0;
  const auto steps =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(span / dt)));
  const double h = span > 0.0 ? span / static_cast<double>(steps) : dt;

  const auto rhs_f = [&](double f, double F) {
    return -tp.b2 * (g + tp.b2 * f * f) * F;
  };

  std::vector<double> ts, fs, Fs, dfs;
  ts.reserve(steps + 1);
  fs.reserve(steps + 1);
  Fs.reserve(steps + 1);
  dfs.reserve(steps + 1);

  double f = tp.f0, F = tp.F0;
  ts.push_back(tp.t0);
  fs.push_back(f);
  Fs.push_back(F);
  dfs.push_back(rhs_f(f, F));
  for (std::size_t k = 0; k < steps; ++k) {
    const double k1f = rhs_f(f, F), k1F = f;
    const double k2f = rhs_f(f + 0.5 * h * k1f, F + 0.5 * h * k1F);
    const double k2F = f + 0.5 * h * k1f;
    const double k3f = rhs_f(f + 0.5 * h * k2f, F + 0.5 * h * k2F);
    const double k3F = f + 0.5 * h * k2f;
    const double k4f = rhs_f(f + h * k3f, F + h * k3F);
    const double k4F = f + h * k3f;
    f += h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
    F += h / 6.0 * (k1F + 2.0 * k2F + 2.0 * k3F + k4F);
    const double t = tp.t0 + static_cast<double>(k + 1) * h;
    if (!std::isfinite(f) || !std::isfinite(F))
      throw IntegrationFailure(
          "integrate_f: non-finite state at t = " + std::to_string(t), t);
    ts.push_back(t);
    fs.push_back(f);
    Fs.push_back(F);
    dfs.push_back(rhs_f(f, F));
  }
  if (span == 0.0) {
    // Degenerate request: duplicate the initial sample so interpolation works.
    ts.push_back(tp.t0 + dt);
    fs.push_back(f);
    Fs.push_back(F);
    dfs.push_back(rhs_f(f, F));
  }
  return ThackerTrajectory(std::move(ts), std::move(fs), std::move(Fs),
                           std::move(dfs));
}

ThackerPointFields thacker_fields(double x, double t, const ThackerParams& tp,
                                  const ThackerTrajectory& traj, double g) {
  if (!(tp.b2 > 0.0))
    throw ContractViolation("thacker_fields: b2 must be positive");
  const double F = traj.F(t);
  const double f = traj.f(t);
  const double fp = traj.dfdt(t);

  ThackerPointFields out;
  out.zb = tp.b1 + 0.5 * tp.b2 * x * x;
  out.s = tp.b2 * x * fp;
  const double H = tp.H0 - 0.5 * tp.b2 * (x - F) * (x - F);
  if (H > 0.0) {
    out.wet = true;
    out.H = H;
    out.u = f;
    out.w = tp.b2 * x * f;
    out.eta = H + out.zb;
    out.p_coeff = g + tp.b2 * f * f;
    out.p_bottom = out.p_coeff * H;
  } else {
    out.eta = out.zb;
  }
  return out;
}

ThackerAveraged thacker_depth_averaged(double x, double t,
                                       const ThackerParams& tp,
                                       const ThackerTrajectory& traj,
                                       double g) {
  const ThackerPointFields pt = thacker_fields(x, t, tp, traj, g);
  ThackerAveraged out;
  out.zb = pt.zb;
  out.s = pt.s;
  out.wet = pt.wet;
  if (pt.wet) {
    const double f = pt.u;
    out.H = pt.H;
    out.u = pt.u;
    out.w = pt.w;
    out.pnh = 0.5 * tp.b2 * f * f * pt.H;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Solitary wave
// ---------------------------------------------------------------------------

void SolitonParams::validate() const {
  if (!(H0 > 0.0) || !(l > H0) || !(d > 0.0))
    throw ContractViolation(
        "SolitonParams: require l > H0 > 0 and d > 0 (got H0 = " +
        std::to_string(H0) + ", l = " + std::to_string(l) +
        ", d = " + std::to_string(d) + ")");
}

double SolitonParams::celerity(double g) const {
  validate();
  return (l / d) * std::sqrt(g * H0 * H0 * H0 / (l * l - H0 * H0));
}

double SolitonParams::amplitude(double g) const {
  const double c0 = celerity(g);
  return c0 * c0 * d * d / (g * l * l);
}

SolitonSample soliton_state(double x, double t, const SolitonParams& sp,
                            double g) {
  const double c0 = sp.celerity(g);
  const double a = sp.amplitude(g);
  const double xi = (x - c0 * t) / sp.l;
  const double S = 1.0 / std::cosh(xi);
  const double T = std::tanh(xi);
  const double S1 = -S * T;                  // sech'
  const double S2 = S * (1.0 - 2.0 * S * S); // sech''

  SolitonSample out;
  out.H = sp.H0 + a * S * S;
  out.u = c0 * (1.0 - sp.d / out.H);
  out.w = -(a * c0 * sp.d) / (sp.l * out.H) * S * S1;
  out.pnh = (a * c0 * c0 * sp.d * sp.d) / (2.0 * sp.l * sp.l * out.H * out.H) *
            ((2.0 * sp.H0 - out.H) * S1 * S1 + out.H * S * S2);
  return out;
}

// ---------------------------------------------------------------------------
// Stationary solutions
// ---------------------------------------------------------------------------

double StationarySpec::f(double x) const {
  const double y = x - a;
  return 2.0 * c * y * std::exp(-b * y * y);
}

double StationarySpec::df(double x) const {
  const double y = x - a;
  return 2.0 * c * (1.0 - 2.0 * b * y * y) * std::exp(-b * y * y);
}

double StationarySpec::d2f(double x) const {
  const double y = x - a;
  return 2.0 * c * (-2.0 * b * y) * (3.0 - 2.0 * b * y * y) *
         std::exp(-b * y * y);
}

namespace {

struct MarchState {
  double H;
  double zb;
};

struct MarchRhs {
  double dH;
  double dzb;
};

class StationaryMarch {
public:
  StationaryMarch(const StationarySpec& spec, double g)
      : spec_(spec), g_(g) {}

  double depth_slope(double x, double H) const {
    if (H <= 0.0)
      throw PositivityFailure(
          "generate_stationary: depth reached zero at x = " + std::to_string(x),
          x);
    const double denom = 0.5 * g_ * H - spec_.Q0 * spec_.Q0 / (H * H);
    if (std::fabs(denom) < spec_.eps_crit)
      throw TranscriticalError(
          "generate_stationary: flow turned critical at x = " +
              std::to_string(x),
          x);
    const double f = spec_.f(x);
    const double fp = spec_.df(x);
    const double fpp = spec_.d2f(x);
    return (-(H / spec_.Q0) * (g_ * H + spec_.Q0 * fp) * f -
            0.5 * spec_.Q0 * H * fpp) /
           denom;
  }

  double bottom_slope(double x, double H) const {
    return -0.5 * depth_slope(x, H) + H * spec_.f(x) / spec_.Q0;
  }

  MarchRhs rhs(double x, const MarchState& y) const {
    const double dH = depth_slope(x, y.H);
    return {dH, -0.5 * dH + y.H * spec_.f(x) / spec_.Q0};
  }

  MarchState step(double x, const MarchState& y, double h) const {
    const MarchRhs k1 = rhs(x, y);
    const MarchRhs k2 = rhs(x + 0.5 * h, {y.H + 0.5 * h * k1.dH,
                                          y.zb + 0.5 * h * k1.dzb});
    const MarchRhs k3 = rhs(x + 0.5 * h, {y.H + 0.5 * h * k2.dH,
                                          y.zb + 0.5 * h * k2.dzb});
    const MarchRhs k4 = rhs(x + h, {y.H + h * k3.dH, y.zb + h * k3.dzb});
    return {y.H + h / 6.0 * (k1.dH + 2.0 * k2.dH + 2.0 * k3.dH + k4.dH),
            y.zb + h / 6.0 * (k1.dzb + 2.0 * k2.dzb + 2.0 * k3.dzb + k4.dzb)};
  }

private:
  const StationarySpec& spec_;
  double g_;
};

}  // namespace

StationarySolution generate_stationary(const StationarySpec& spec, double g) {
  if (spec.Q0 == 0.0)
    throw ContractViolation("generate_stationary: Q0 must be nonzero");
  if (!(spec.H_exit > 0.0))
    throw ContractViolation("generate_stationary: H_exit must be positive");
  if (!(spec.L > 0.0) || spec.n < 3)
    throw ContractViolation("generate_stationary: need L > 0 and n >= 3");
  if (spec.substeps < 1)
    throw ContractViolation("generate_stationary: substeps must be >= 1");

  const double dx = spec.L / spec.n;
  Grid1D grid(0.0, dx, spec.n, BcMode::extrapolate);
  const auto n = static_cast<std::size_t>(spec.n);

  StationarySolution sol{spec, g, grid, Field(n), Field(n), Field(n),
                         Field(n), Field(n), Field(n)};

  const StationaryMarch march(spec, g);
  MarchState y{spec.H_exit, 0.0};
  double x = spec.L;
  for (int i = spec.n - 1; i >= 0; --i) {
    const double x_target = grid.center(i);
    const double h = (x_target - x) / spec.substeps;  // negative
    for (int k = 0; k < spec.substeps; ++k) {
      y = march.step(x, y, h);
      x += h;
      if (!std::isfinite(y.H) || !std::isfinite(y.zb))
        throw IntegrationFailure(
            "generate_stationary: non-finite march state at x = " +
                std::to_string(x),
            x);
    }
    x = x_target;
    const auto k = static_cast<std::size_t>(i);
    sol.H[k] = y.H;
    sol.u[k] = spec.Q0 / y.H;
    sol.w[k] = spec.f(x);
    sol.pnh[k] = 0.5 * spec.Q0 * spec.df(x);
    sol.zb[k] = y.zb;
    sol.zb_x[k] = march.bottom_slope(x, y.H);
  }
  return sol;
}

Bathymetry StationarySolution::bathymetry() const {
  return Bathymetry::generated(grid, zb, zb_x, ddx(zb_x, grid));
}

double StationaryResiduals::max() const {
  return std::max(std::max(discharge, depth),
                  std::max(vertical_velocity, pressure));
}

StationaryResiduals stationary_ode_residual(const StationarySolution& sol) {
  const StationarySpec& spec = sol.spec;
  const StationaryMarch march(spec, sol.g);
  StationaryResiduals r;
  for (int i = 0; i < sol.grid.n(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    const double x = sol.grid.center(i);
    const double H = sol.H[k];
    const double w = sol.w[k];
    const double pnh = sol.pnh[k];
    const double zbx = sol.zb_x[k];

    r.discharge = std::max(r.discharge,
                           std::fabs(H * sol.u[k] - spec.Q0));
    const double dH = march.depth_slope(x, H);
    r.depth = std::max(
        r.depth, std::fabs(dH - ((2.0 / spec.Q0) * H * w - 2.0 * zbx)));
    r.vertical_velocity =
        std::max(r.vertical_velocity,
                 std::fabs(spec.df(x) - (2.0 / spec.Q0) * pnh));
    const double rhs33 =
        (spec.Q0 * spec.Q0 / (H * H) - sol.g * H - pnh) *
            ((2.0 / spec.Q0) * w - (2.0 / H) * zbx) -
        (sol.g + 2.0 * pnh / H) * zbx;
    r.pressure = std::max(r.pressure,
                          std::fabs(0.5 * spec.Q0 * spec.d2f(x) - rhs33));
  }
  return r;
}

}  // namespace nhsw
