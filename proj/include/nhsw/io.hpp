#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nhsw/grid.hpp"
#include "nhsw/model.hpp"
#include "nhsw/pressure.hpp"
#include "nhsw/solver.hpp"

namespace nhsw {

using Json = nlohmann::json;

/// Shortest round-trippable decimal representation of a double. All output
/// files are written through this so reruns are byte-identical.
std::string format_double(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<Field> columns;
};

/// Read a CSV with the given header (order-sensitive). An empty `expect`
/// accepts any header.
CsvTable read_csv(const std::string& path,
                  const std::vector<std::string>& expect = {});

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<const Field*>& columns);

/// State snapshot `x,H,u,w,pnh,zb`; velocities are dry-filtered.
void write_state_csv(const std::string& path, const Grid1D& g, const State& s,
                     const Bathymetry& b, const PhysParams& p);

struct LoadedState {
  Grid1D grid;
  State state;
  Field zb;
};

/// Inverse of write_state_csv; reconstructs the grid from the (uniform) x
/// column with the requested bc mode.
LoadedState read_state_csv(const std::string& path, BcMode bc);

/// Regime map `x,lambda,regime`.
void write_regime_csv(const std::string& path, const Grid1D& g,
                      const Field& lambda,
                      const std::vector<PressureRegime>& regimes);

void write_json(const std::string& path, const Json& j);

void ensure_directory(const std::string& path);

/// Serialize a run directory: meta.json (caller-provided metadata, extended
/// with summary stats), snap_<k>.csv snapshots, and series.csv with
/// `t,dt,energy,mass,constraint_residual`.
void write_run_directory(const std::string& dir, const Grid1D& g,
                         const Bathymetry& b, const PhysParams& p,
                         const RunResult& r, Json meta);

}  // namespace nhsw
