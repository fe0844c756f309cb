#pragma once

#include <vector>

#include "nhsw/bathymetry.hpp"
#include "nhsw/grid.hpp"

namespace nhsw {

// ---------------------------------------------------------------------------
// Oscillating basin (parabolic bowl) solution
// ---------------------------------------------------------------------------

/// Parameters of the oscillating-basin solution over the parabolic bottom
/// zb = b1 + (b2/2) x^2. The wet region is a planar free surface sloshing in
/// the bowl; its motion is governed by the ODE for f below. t_ref is the
/// time at which the displacement F vanishes (F(t0) = F0, with F0 = 0 by
/// default).
struct ThackerParams {
  double H0 = 1.0;  // center depth at zero displacement
  double b1 = 0.0;  // bowl offset
  double b2 = 1.0;  // bowl curvature (> 0)
  double f0 = 0.0;  // velocity f(t0)
  double t0 = 0.0;  // initial time
  double F0 = 0.0;  // displacement F(t0)
};

/// Time samples of (f, F) with f' stored for dense output. F' = f and
/// f' = -b2 (g + b2 f^2) F; between samples the trajectory interpolates with
/// cubic Hermite polynomials, so dense evaluation keeps the integrator's
/// accuracy.
class ThackerTrajectory {
public:
  ThackerTrajectory(std::vector<double> t, std::vector<double> f,
                    std::vector<double> F, std::vector<double> dfdt);

  double t_begin() const { return t_.front(); }
  double t_end() const { return t_.back(); }

  double f(double t) const;
  double F(double t) const;
  double dfdt(double t) const;

  const std::vector<double>& times() const { return t_; }
  const std::vector<double>& f_samples() const { return f_; }
  const std::vector<double>& F_samples() const { return F_; }

private:
  std::vector<double> t_, f_, F_, dfdt_;
  double dt_ = 0.0;

  std::size_t locate(double t) const;
};

/// Integrate the basin ODE with classic fourth-order Runge-Kutta steps of
/// size dt from params.t0 to t_end. Throws IntegrationFailure if the state
/// stops being finite.
ThackerTrajectory integrate_f(const ThackerParams& tp, double t_end, double dt,
                              double g);

/// Pointwise resolved fields of the basin solution. Dry points report zero
/// velocity and pressure. p_bottom is the total pressure at z = zb; the total
/// pressure at height z inside the column is p_coeff * (eta - z).
struct ThackerPointFields {
  double H = 0.0;
  double u = 0.0;
  double w = 0.0;
  double s = 0.0;        // vertical forcing b2 x f'(t)
  double zb = 0.0;
  double eta = 0.0;
  double p_bottom = 0.0;
  double p_coeff = 0.0;  // (g + b2 f^2) on wet points
  bool wet = false;
};

ThackerPointFields thacker_fields(double x, double t, const ThackerParams& tp,
                                  const ThackerTrajectory& traj, double g);

/// Depth-averaged basin fields: the exact solution of the depth-averaged
/// system once the forcing s enters the vertical momentum balance as +H s.
struct ThackerAveraged {
  double H = 0.0;
  double u = 0.0;
  double w = 0.0;
  double pnh = 0.0;
  double s = 0.0;
  double zb = 0.0;
  bool wet = false;
};

ThackerAveraged thacker_depth_averaged(double x, double t,
                                       const ThackerParams& tp,
                                       const ThackerTrajectory& traj, double g);

// ---------------------------------------------------------------------------
// Solitary wave over a flat bottom
// ---------------------------------------------------------------------------

/// Solitary wave of rest depth H0 and length scale l > H0 travelling at
/// celerity c0; d sets the mass flux scale (u -> 0 far away when d = H0).
struct SolitonParams {
  double H0 = 1.0;
  double l = 2.0;
  double d = 1.0;

  double celerity(double g) const;   // c0 = (l/d) sqrt(g H0^3 / (l^2 - H0^2))
  double amplitude(double g) const;  // a  = c0^2 d^2 / (g l^2)
  void validate() const;             // requires l > H0 > 0, d > 0
};

struct SolitonSample {
  double H = 0.0;
  double u = 0.0;
  double w = 0.0;
  double pnh = 0.0;
};

/// Exact travelling-wave fields at (x, t); the bottom is flat at z = 0.
SolitonSample soliton_state(double x, double t, const SolitonParams& sp,
                            double g);

// ---------------------------------------------------------------------------
// Stationary solutions over generated topography
// ---------------------------------------------------------------------------

/// Build a steady solution with prescribed discharge Q0 and vertical velocity
/// profile wbar(x) = f(x) = 2 c (x - a) exp(-b (x - a)^2) on [0, L]. The
/// depth ODE is integrated right to left from H(L) = H_exit with zb(L) = 0;
/// the topography that supports the flow is recovered alongside. n is the
/// output sample count (cell centers); substeps refines the internal RK4
/// march between samples.
struct StationarySpec {
  double Q0 = 1.0;
  double H_exit = 1.0;
  double a = 5.0;
  double b = 1.0;
  double c = 0.0;
  double L = 10.0;
  int n = 2000;
  int substeps = 8;
  double eps_crit = 1e-6;  // transcritical guard on |g H/2 - Q0^2/H^2|

  double f(double x) const;
  double df(double x) const;
  double d2f(double x) const;
};

struct StationarySolution {
  StationarySpec spec;
  double g = 9.81;
  Grid1D grid;
  Field H, u, w, pnh, zb, zb_x;

  /// Topography as a generated bathymetry (curvature from one stencil pass
  /// over the analytic slope samples).
  Bathymetry bathymetry() const;
};

StationarySolution generate_stationary(const StationarySpec& spec, double g);

/// Self-consistency residuals of a generated solution against the equivalent
/// first-order formulation:
///   H'   = (2/Q0) H wbar - 2 zb'
///   wbar' = (2/Q0) pnh
///   pnh' = (Q0^2/H^2 - g H - pnh)((2/Q0) wbar - (2/H) zb') - (g + 2 pnh/H) zb'
/// plus exact discharge H u = Q0. Max-norms; small iff the march solved the
/// generating ODE accurately.
struct StationaryResiduals {
  double discharge = 0.0;
  double depth = 0.0;
  double vertical_velocity = 0.0;
  double pressure = 0.0;

  double max() const;
};

StationaryResiduals stationary_ode_residual(const StationarySolution& sol);

}  // namespace nhsw
