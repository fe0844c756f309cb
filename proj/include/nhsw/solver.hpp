#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nhsw/bathymetry.hpp"
#include "nhsw/errors.hpp"
#include "nhsw/grid.hpp"
#include "nhsw/model.hpp"

namespace nhsw {

enum class BoundaryKind { periodic, reflective, inflow, outflow };

/// One side of the domain. `value` is the imposed discharge for inflow and
/// the imposed depth for outflow; other kinds ignore it.
struct BoundarySpec {
  BoundaryKind kind = BoundaryKind::periodic;
  double value = 0.0;
};

struct SolverConfig {
  double cfl = 0.5;
  double t_end = 1.0;
  BoundarySpec left;
  BoundarySpec right;
  double h_min = 1e-6;   // forwarded to PhysParams
  bool enable_nh = true;
  double mu = 0.0;       // forwarded to PhysParams
  double kappa = 0.0;    // forwarded to PhysParams
  int snapshot_every = 0;            // steps between snapshots, 0 = ends only
  long max_steps = 2000000;
  std::function<double(double, double)> forcing_w;  // vertical forcing s(x, t)
};

/// Time history of a run. One series row per accepted step (plus the initial
/// row with dt = 0); snapshots at the configured cadence plus initial and
/// final states.
struct RunResult {
  std::vector<double> times;
  std::vector<double> dts;
  std::vector<double> energy;               // sum E dx
  std::vector<double> mass;                 // sum H dx
  std::vector<double> constraint_residual;  // max wet-cell residual
  std::vector<double> boundary_flux_left;   // energy flux at first cell
  std::vector<double> boundary_flux_right;  // energy flux at last cell

  std::vector<double> snapshot_times;
  std::vector<State> snapshots;

  double min_depth = 0.0;  // smallest H seen over the run
  long steps = 0;
};

/// Thrown when a run aborts mid-integration; carries the partial history
/// including a diagnostic snapshot of the failing state.
class RunFailure : public Error {
public:
  RunFailure(const std::string& what, RunResult partial)
      : Error(what), partial(std::move(partial)) {}
  RunResult partial;
};

/// Effective physical parameters of a run: gravity from p, dissipation and
/// threshold from cfg.
PhysParams effective_params(const SolverConfig& cfg, const PhysParams& p);

/// Largest stable time step for the current state under cfg.cfl.
double admissible_dt(const State& s, const SolverConfig& cfg,
                     const PhysParams& p, const Grid1D& g);

/// One hydrostatic (shallow-water) step: MUSCL-reconstructed
/// positivity-preserving Rusanov fluxes with hydrostatic topography
/// reconstruction, advanced with two-stage strong-stability Runge-Kutta.
/// hw is advected conservatively alongside. Throws StepRejected (carrying
/// the admissible dt) if dt is too large.
State hydrostatic_step(const State& s, const Bathymetry& b,
                       const SolverConfig& cfg, const PhysParams& p,
                       const Grid1D& g, double dt);

/// Non-hydrostatic correction: assembles the pressure problem from the
/// predicted state on each wet interval (boundary pressure zero), solves it,
/// and applies the pressure impulses
///   hu -= dt (d/dx(H pnh) + 2 pnh zb'),   hw += dt 2 pnh.
/// The solved pnh is stored in the returned state; dry cells carry zero.
/// `t` is the time at which any configured forcing enters the right-hand
/// side.
State nh_correction(const State& s, const Bathymetry& b,
                    const SolverConfig& cfg, const PhysParams& p,
                    const Grid1D& g, double t, double dt);

/// Advance from `initial` to cfg.t_end with the prediction-correction
/// scheme, recording series and snapshots. Step errors propagate; a
/// non-finite state aborts with RunFailure carrying the partial history.
RunResult run(const State& initial, const Bathymetry& b,
              const SolverConfig& cfg, const PhysParams& p, const Grid1D& g);

}  // namespace nhsw
