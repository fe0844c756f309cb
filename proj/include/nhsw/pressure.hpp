#pragma once

#include <vector>

#include "nhsw/bathymetry.hpp"
#include "nhsw/grid.hpp"
#include "nhsw/model.hpp"

namespace nhsw {

/// The elliptic equation satisfied by the scaled pressure q = sqrt(H) pnh:
///
///   -4 H^2 q'' + Lambda q = 8 sqrt(H) B
///
/// with Dirichlet values for q pinned at the first and last cell centers.
/// Where Lambda > 0 the operator behaves like diffusion and the discrete
/// system is strictly diagonally dominant; Lambda < 0 cells put the equation
/// in an indefinite Helmholtz regime where the direct solve may legitimately
/// fail.
struct PressureProblem {
  Grid1D grid;
  Field H;
  Field lambda;
  Field rhs;  // B
  double q_left = 0.0;
  double q_right = 0.0;
};

/// Zeroth-order coefficient of the scaled pressure equation,
///   Lambda = 16 (1 + zb'^2) - 8 H zb'' + 16 H' zb' - 2 H H'' + 3 H'^2,
/// with H', H'' from grid stencils and bottom derivatives from b.
Field lambda_coefficient(const Field& H, const Bathymetry& b, const Grid1D& g);

/// Right-hand side B of the pressure equation, assembled from a state with
/// grid stencils on the flow fields and analytic bottom derivatives:
///   B = H (-ubar (H ubar)'' + 1/2 (H ubar^2)'' + (ubar^2/2)(H + 2 zb)'')
///     + (g H / 2)(H (H + zb)'' - 2 zb' (H + zb)').
Field rhs_B(const State& s, const Bathymetry& b, const Grid1D& g,
            const PhysParams& p);

/// Direct tridiagonal solve of the pressure problem. Returns the
/// depth-averaged pressure pnh = q / sqrt(H) at every cell, with the boundary
/// cells carrying the imposed Dirichlet data. Throws SolverFailure when a
/// pivot vanishes (indefinite or resonant Lambda) and WetIntervalViolation if
/// any cell of the problem is dry.
Field solve_pressure_bvp(const PressureProblem& prob, double h_min = 1e-6);

enum class PressureRegime { diffusion, helmholtz, marginal };

/// Classify each cell by the sign of Lambda against a threshold tau:
/// diffusion where Lambda > tau, helmholtz where Lambda < -tau, marginal
/// in between.
std::vector<PressureRegime> classify_regime(const Field& lambda,
                                            double tau = 1e-10);

const char* regime_name(PressureRegime r);

/// Solve a generic tridiagonal system in place (Thomas elimination).
/// lower[0] and upper[m-1] are ignored. Throws SolverFailure on a vanishing
/// pivot, reporting its index.
Field solve_tridiagonal(const Field& lower, const Field& diag,
                        const Field& upper, const Field& rhs);

}  // namespace nhsw
