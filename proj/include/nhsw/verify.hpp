#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nhsw/analytic.hpp"
#include "nhsw/bathymetry.hpp"
#include "nhsw/grid.hpp"
#include "nhsw/model.hpp"
#include "nhsw/solver.hpp"

namespace nhsw {

/// Which set of balance laws a residual is evaluated against.
enum class ModelVariant { nh, nh_forcing, gn, sv, ns };

const char* variant_name(ModelVariant v);
ModelVariant variant_from_name(const std::string& name);

/// A space-time sampler of an exact solution, with its topography and
/// evaluation domain. Residual operators difference the sampler in time
/// (centered) and in space (grid stencils) without touching any solver code.
class AnalyticSolution {
public:
  virtual ~AnalyticSolution() = default;

  struct Sample {
    double H = 0.0;
    double u = 0.0;
    double w = 0.0;
    double pnh = 0.0;
    double forcing_w = 0.0;
  };

  virtual Sample sample(double x, double t) const = 0;
  virtual const Bathymetry& bathy() const = 0;
  virtual double x_left() const = 0;
  virtual double domain_length() const = 0;
  virtual BcMode bc_mode() const = 0;
  virtual double eval_time() const = 0;
  virtual bool has_forcing() const { return false; }
  virtual std::string name() const = 0;
};

/// Travelling solitary wave on a periodic domain of 20 length scales,
/// centred on the crest at the evaluation time.
class SolitonSolution final : public AnalyticSolution {
public:
  SolitonSolution(const SolitonParams& sp, double g, double eval_time = 0.5);

  Sample sample(double x, double t) const override;
  const Bathymetry& bathy() const override { return bathy_; }
  double x_left() const override { return x_left_; }
  double domain_length() const override { return length_; }
  BcMode bc_mode() const override { return BcMode::periodic; }
  double eval_time() const override { return t_eval_; }
  std::string name() const override { return "soliton"; }

  const SolitonParams& params() const { return sp_; }

private:
  SolitonParams sp_;
  double g_;
  double t_eval_;
  double x_left_;
  double length_;
  Bathymetry bathy_;
};

/// Oscillating basin with its vertical forcing; domain covers the moving wet
/// bowl with dry margins.
class ThackerSolution final : public AnalyticSolution {
public:
  ThackerSolution(const ThackerParams& tp, double g, double eval_time,
                  double traj_dt = 1e-4);

  Sample sample(double x, double t) const override;
  const Bathymetry& bathy() const override { return bathy_; }
  double x_left() const override { return x_left_; }
  double domain_length() const override { return length_; }
  BcMode bc_mode() const override { return BcMode::extrapolate; }
  double eval_time() const override { return t_eval_; }
  bool has_forcing() const override { return true; }
  std::string name() const override { return "thacker"; }

  const ThackerParams& params() const { return tp_; }
  const ThackerTrajectory& trajectory() const { return traj_; }

private:
  ThackerParams tp_;
  double g_;
  double t_eval_;
  ThackerTrajectory traj_;
  double x_left_;
  double length_;
  Bathymetry bathy_;
};

/// Wraps another sampler and scales its pnh; a deliberately inconsistent
/// control for convergence tests.
class CorruptedSolution final : public AnalyticSolution {
public:
  CorruptedSolution(const AnalyticSolution& inner, double pnh_factor)
      : inner_(inner), factor_(pnh_factor) {}

  Sample sample(double x, double t) const override {
    Sample s = inner_.sample(x, t);
    s.pnh *= factor_;
    return s;
  }
  const Bathymetry& bathy() const override { return inner_.bathy(); }
  double x_left() const override { return inner_.x_left(); }
  double domain_length() const override { return inner_.domain_length(); }
  BcMode bc_mode() const override { return inner_.bc_mode(); }
  double eval_time() const override { return inner_.eval_time(); }
  bool has_forcing() const override { return inner_.has_forcing(); }
  std::string name() const override { return inner_.name() + "-corrupted"; }

private:
  const AnalyticSolution& inner_;
  double factor_;
};

struct Norms {
  double max_norm = 0.0;
  double l2_norm = 0.0;
  std::size_t cells = 0;  // cells included after front exclusion
};

/// Per-equation residual norms of a sampler against one model variant at
/// resolution n. Time derivatives are centered differences with step
/// dt_stencil (defaults to dx when <= 0); max and L2 norms exclude the two
/// cells adjacent to wet/dry fronts.
struct ResidualReport {
  ModelVariant variant = ModelVariant::nh;
  int n = 0;
  double dt_stencil = 0.0;
  std::vector<std::string> equations;
  std::vector<Norms> norms;

  double worst_max() const;
};

ResidualReport pde_residual(const AnalyticSolution& sol, ModelVariant variant,
                            int n, double dt_stencil, const PhysParams& p);

/// Residual of the energy balance (density / flux pair with the forcing work
/// term removed).
Norms energy_residual(const AnalyticSolution& sol, int n, double dt_stencil,
                      const PhysParams& p);

/// Residual norms across a refinement ladder with fitted convergence orders
/// (least-squares slope of log(norm) vs log(n)). An equation whose norms sit
/// at rounding level is flagged saturated instead of fitted.
struct ConvergenceReport {
  ModelVariant variant = ModelVariant::nh;
  std::vector<int> ns;
  std::vector<ResidualReport> levels;
  std::vector<Norms> energy_levels;
  std::vector<std::string> equations;   // + "energy" as the last entry
  std::vector<double> fitted_order;     // on max norms
  std::vector<bool> saturated;

  bool orders_within(double lo, double hi) const;
};

ConvergenceReport convergence_study(const AnalyticSolution& sol,
                                    ModelVariant variant,
                                    const std::vector<int>& ns,
                                    const PhysParams& p,
                                    double dt_stencil = 0.0);

/// Energy bookkeeping of a run: relative drift, worst single-step increase,
/// and the closure of interior change against boundary fluxes.
struct EnergyBudget {
  double initial = 0.0;
  double final_ = 0.0;
  double drift_rel = 0.0;              // (E_end - E_0) / |E_0|
  double max_step_increase_rel = 0.0;  // worst positive step jump / |E_0|
  double boundary_closure_rel = 0.0;   // |dE + net boundary outflow| / |E_0|
};

EnergyBudget energy_budget(const RunResult& r);

}  // namespace nhsw
