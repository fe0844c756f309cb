#pragma once

#include "nhsw/bathymetry.hpp"
#include "nhsw/grid.hpp"

namespace nhsw {

/// Physical constants and regularization thresholds shared across the model.
struct PhysParams {
  double g = 9.81;      // gravity
  double mu = 0.0;      // horizontal viscosity
  double kappa = 0.0;   // linear bottom friction
  double h_min = 1e-6;  // wet/dry threshold
};

/// Depth-averaged state on a grid: water depth H, horizontal momentum
/// H*ubar, vertical momentum H*wbar, and depth-averaged non-hydrostatic
/// pressure pnh. Cells with H below h_min are dry: their velocities read as
/// zero and they carry no flux.
struct State {
  Field H;
  Field hu;
  Field hw;
  Field pnh;

  static State zero(const Grid1D& g);
};

struct Velocities {
  Field u;
  Field w;
};

/// Dry-safe velocities: hu/H and hw/H where H >= h_min, zero elsewhere.
Velocities velocities(const State& s, const PhysParams& p);

struct Fluxes {
  Field mass;        // H ubar
  Field momentum_x;  // H ubar^2 + (g/2) H^2 + H pnh
  Field momentum_z;  // H wbar ubar
};

/// Pointwise conservative fluxes of the non-hydrostatic system. Dry cells
/// produce zero flux in every component.
Fluxes nh_flux(const State& s, const PhysParams& p);

struct Sources {
  Field momentum_x;  // -(g H + 2 pnh) zb'
  Field momentum_z;  // 2 pnh
};

/// Topography and pressure sources of the non-hydrostatic system. The
/// vertical momentum source is exactly the bottom pressure.
Sources nh_source(const State& s, const Bathymetry& b, const Grid1D& g,
                  const PhysParams& p);

/// Non-hydrostatic pressure at the bottom, 2 pnh. The factor two against the
/// depth average is what closes the energy budget for this model family.
Field bottom_pressure(const State& s);

/// Residual of the depth-averaged incompressibility constraint
///   H wbar = -(H^2/2) d(ubar)/dx + H zb' ubar,
/// evaluated with grid stencils. Zero (to stencil accuracy) for states of the
/// non-hydrostatic model.
Field divergence_constraint_residual(const State& s, const Bathymetry& b,
                                     const Grid1D& g, const PhysParams& p);

/// Mechanical energy density
///   E = H (ubar^2 + wbar^2)/2 + g H (eta + zb)/2,   eta = H + zb.
Field energy_density(const State& s, const Bathymetry& b, const Grid1D& g,
                     const PhysParams& p);

/// Energy flux ubar (E + (g/2) H^2 + H pnh); the pair (E, flux) obeys a
/// conservative balance on smooth solutions.
Field energy_flux(const State& s, const Bathymetry& b, const Grid1D& g,
                  const PhysParams& p);

struct GnEval {
  Field p_gn;    // dispersive pressure (2/3)(dt(H wbar) + d/dx(H ubar wbar))
  Field energy;  // (H/2)(ubar^2 + (2/3) wbar^2) + (g/2) H^2
};

/// Green-Naghdi pressure and energy evaluated from a state plus the time
/// derivative of its vertical momentum. For states whose vertical momentum
/// balance holds, p_gn = (4/3) pnh.
GnEval gn_pressure_and_energy(const State& s, const Field& dt_hw,
                              const Grid1D& g, const PhysParams& p);

struct SvResidual {
  Field mass;        // dt H + d/dx(H ubar)
  Field momentum_x;  // dt(H ubar) + d/dx(H ubar^2 + g/2 H^2) + g H zb'
};

/// Saint-Venant residual, given externally supplied time derivatives.
SvResidual sv_residual(const State& s, const Field& dt_H, const Field& dt_hu,
                       const Bathymetry& b, const Grid1D& g,
                       const PhysParams& p);

/// Hydrostatic energy density H ubar^2/2 + g H (eta + zb)/2.
Field sv_energy(const State& s, const Bathymetry& b, const Grid1D& g,
                const PhysParams& p);

struct ViscousTerms {
  Field momentum_x;  // d/dx(2 mu H d(ubar)/dx) - kappa ubar
  Field momentum_z;  // d/dx(mu H d(wbar)/dx)
};

/// Depth-averaged viscous and friction terms of the dissipative variant.
ViscousTerms ns_viscous_terms(const State& s, const Grid1D& g,
                              const PhysParams& p);

/// A resolved vertical profile of horizontal velocity: u sampled at strictly
/// increasing heights z spanning one water column.
struct VerticalProfile {
  Field z;
  Field u;
};

/// Quadrature defect <u^2> - <u>^2 / H of a vertical profile (trapezoid
/// rule). Nonnegative for every profile; zero exactly when u is constant.
/// This is the information a depth-averaged closure discards.
double closure_defect(const VerticalProfile& prof, double h_min = 1e-6);

}  // namespace nhsw
