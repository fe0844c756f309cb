#pragma once

#include <map>
#include <string>

#include "nhsw/bathymetry.hpp"
#include "nhsw/grid.hpp"
#include "nhsw/io.hpp"
#include "nhsw/model.hpp"
#include "nhsw/solver.hpp"

namespace nhsw {

/// Parses a flat `key = value` configuration. `#` starts a comment, blank
/// lines are skipped, keys may not repeat. No sections, no nesting.
std::map<std::string, std::string> parse_config_text(const std::string& text);
std::map<std::string, std::string> parse_config_file(const std::string& path);

/// A fully assembled simulation case: grid, topography, initial state and
/// solver settings, plus a metadata echo of every effective parameter.
struct Scenario {
  std::string name;
  Grid1D grid;
  Bathymetry bathy;
  State initial;
  SolverConfig config;
  PhysParams phys;
  Json meta;
};

/// Builds one of the named cases from a parsed configuration. Recognised
/// `scenario` values: lake_at_rest, dam_break, soliton, thacker, stationary,
/// csv. Unknown keys, missing required keys, and unparsable values raise
/// ConfigError.
Scenario build_scenario(const std::map<std::string, std::string>& kv);

/// Runs the scenario; writes the run directory when out_dir is non-empty.
RunResult run_scenario(const Scenario& sc, const std::string& out_dir);

}  // namespace nhsw
