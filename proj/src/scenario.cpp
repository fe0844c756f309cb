#include "nhsw/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "nhsw/analytic.hpp"
#include "nhsw/errors.hpp"

namespace nhsw {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected `key = value`, got `" + line + "`");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": empty key");
    if (value.empty())
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": empty value for key `" + key + "`");
    if (!kv.emplace(key, value).second)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": duplicate key `" + key + "`");
  }
  return kv;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file `" + path + "`");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

namespace {

/// Typed access to the key/value map. Every key a scenario understands gets
/// queried exactly once; finish() then rejects whatever is left over, so
/// misspelled keys fail loudly instead of silently using a default.
class KvReader {
public:
  explicit KvReader(const std::map<std::string, std::string>& kv) : kv_(kv) {}

  bool has(const std::string& key) {
    seen_.insert(key);
    return kv_.count(key) != 0;
  }

  std::string str(const std::string& key, const std::string& dflt) {
    seen_.insert(key);
    const auto it = kv_.find(key);
    return it == kv_.end() ? dflt : it->second;
  }

  std::string require(const std::string& key) {
    seen_.insert(key);
    const auto it = kv_.find(key);
    if (it == kv_.end())
      throw ConfigError("missing required key `" + key + "`");
    return it->second;
  }

  double num(const std::string& key, double dflt) {
    seen_.insert(key);
    const auto it = kv_.find(key);
    if (it == kv_.end()) return dflt;
    const char* begin = it->second.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v))
      throw ConfigError("key `" + key + "`: `" + it->second +
                        "` is not a finite number");
    return v;
  }

  long integer(const std::string& key, long dflt) {
    const double v = num(key, static_cast<double>(dflt));
    const auto r = static_cast<long>(v);
    if (static_cast<double>(r) != v)
      throw ConfigError("key `" + key + "`: expected an integer");
    return r;
  }

  bool flag(const std::string& key, bool dflt) {
    seen_.insert(key);
    const auto it = kv_.find(key);
    if (it == kv_.end()) return dflt;
    const std::string& v = it->second;
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("key `" + key + "`: `" + v + "` is not a boolean");
  }

  void finish() const {
    for (const auto& [key, value] : kv_) {
      (void)value;
      if (!seen_.count(key))
        throw ConfigError("unknown key `" + key + "`");
    }
  }

private:
  const std::map<std::string, std::string>& kv_;
  std::set<std::string> seen_;
};

BoundaryKind boundary_from_name(const std::string& name) {
  if (name == "periodic") return BoundaryKind::periodic;
  if (name == "reflective") return BoundaryKind::reflective;
  if (name == "inflow") return BoundaryKind::inflow;
  if (name == "outflow") return BoundaryKind::outflow;
  throw ConfigError("unknown boundary kind `" + name + "`");
}

const char* boundary_name(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::periodic: return "periodic";
    case BoundaryKind::reflective: return "reflective";
    case BoundaryKind::inflow: return "inflow";
    case BoundaryKind::outflow: return "outflow";
  }
  return "?";
}

/// Solver settings shared by every scenario, with per-scenario defaults for
/// the boundary conditions and end time.
void read_common(KvReader& kv, Scenario& sc, BoundaryKind bc_left_dflt,
                 BoundaryKind bc_right_dflt, double t_end_dflt) {
  sc.phys.g = kv.num("g", 9.81);
  sc.phys.h_min = kv.num("h_min", 1e-6);
  sc.phys.mu = kv.num("mu", 0.0);
  sc.phys.kappa = kv.num("kappa", 0.0);

  sc.config.cfl = kv.num("cfl", 0.5);
  sc.config.t_end = kv.num("t_end", t_end_dflt);
  sc.config.h_min = sc.phys.h_min;
  sc.config.enable_nh = kv.flag("enable_nh", true);
  sc.config.mu = sc.phys.mu;
  sc.config.kappa = sc.phys.kappa;
  sc.config.snapshot_every =
      static_cast<int>(kv.integer("snapshot_every", 0));
  sc.config.max_steps = kv.integer("max_steps", 2000000);

  sc.config.left.kind = boundary_from_name(kv.str("bc_left", boundary_name(bc_left_dflt)));
  sc.config.right.kind = boundary_from_name(kv.str("bc_right", boundary_name(bc_right_dflt)));
  sc.config.left.value = kv.num("bc_left_value", sc.config.left.value);
  sc.config.right.value = kv.num("bc_right_value", sc.config.right.value);
  const bool pl = sc.config.left.kind == BoundaryKind::periodic;
  const bool pr = sc.config.right.kind == BoundaryKind::periodic;
  if (pl != pr)
    throw ConfigError("periodic boundaries must be set on both sides");

  sc.meta["g"] = sc.phys.g;
  sc.meta["h_min"] = sc.phys.h_min;
  sc.meta["mu"] = sc.phys.mu;
  sc.meta["kappa"] = sc.phys.kappa;
  sc.meta["cfl"] = sc.config.cfl;
  sc.meta["t_end"] = sc.config.t_end;
  sc.meta["enable_nh"] = sc.config.enable_nh;
  sc.meta["snapshot_every"] = sc.config.snapshot_every;
  sc.meta["max_steps"] = sc.config.max_steps;
  sc.meta["bc_left"] = boundary_name(sc.config.left.kind);
  sc.meta["bc_right"] = boundary_name(sc.config.right.kind);
  sc.meta["bc_left_value"] = sc.config.left.value;
  sc.meta["bc_right_value"] = sc.config.right.value;
}

void record_grid(Scenario& sc) {
  sc.meta["n"] = sc.grid.n();
  sc.meta["dx"] = sc.grid.dx();
  sc.meta["x_left"] = sc.grid.x_left();
  sc.meta["length"] = sc.grid.length();
}

BcMode grid_mode(const Scenario& sc) {
  return sc.config.left.kind == BoundaryKind::periodic ? BcMode::periodic
                                                       : BcMode::extrapolate;
}

Scenario build_lake_at_rest(KvReader& kv) {
  Scenario sc;
  sc.name = "lake_at_rest";
  read_common(kv, sc, BoundaryKind::reflective, BoundaryKind::reflective, 1.0);
  const int n = static_cast<int>(kv.integer("n", 200));
  const double x_left = kv.num("x_left", -5.0);
  const double length = kv.num("length", 10.0);
  const double eta0 = kv.num("eta0", 1.0);
  const double bump_height = kv.num("bump_height", 0.2);
  const double bump_center = kv.num("bump_center", 0.0);
  const double bump_width = kv.num("bump_width", 1.0);
  kv.finish();
  if (bump_width <= 0.0) throw ConfigError("bump_width must be positive");

  sc.grid = Grid1D(x_left, length / n, n, grid_mode(sc));
  Field zb(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double r = (sc.grid.center(i) - bump_center) / bump_width;
    zb[static_cast<std::size_t>(i)] = bump_height * std::exp(-r * r);
  }
  sc.bathy = Bathymetry::sampled(sc.grid, zb);
  sc.initial = State::zero(sc.grid);
  for (int i = 0; i < n; ++i)
    sc.initial.H[static_cast<std::size_t>(i)] =
        std::max(0.0, eta0 - zb[static_cast<std::size_t>(i)]);

  record_grid(sc);
  sc.meta["scenario"] = sc.name;
  sc.meta["eta0"] = eta0;
  sc.meta["bump_height"] = bump_height;
  sc.meta["bump_center"] = bump_center;
  sc.meta["bump_width"] = bump_width;
  return sc;
}

Scenario build_dam_break(KvReader& kv) {
  Scenario sc;
  sc.name = "dam_break";
  read_common(kv, sc, BoundaryKind::reflective, BoundaryKind::reflective, 0.5);
  const int n = static_cast<int>(kv.integer("n", 400));
  const double x_left = kv.num("x_left", -10.0);
  const double length = kv.num("length", 20.0);
  const double h_left = kv.num("h_left", 2.0);
  const double h_right = kv.num("h_right", 1.0);
  const double x_dam = kv.num("x_dam", 0.0);
  kv.finish();

  sc.grid = Grid1D(x_left, length / n, n, grid_mode(sc));
  sc.bathy = Bathymetry::flat(0.0);
  sc.initial = State::zero(sc.grid);
  for (int i = 0; i < n; ++i)
    sc.initial.H[static_cast<std::size_t>(i)] =
        sc.grid.center(i) < x_dam ? h_left : h_right;

  record_grid(sc);
  sc.meta["scenario"] = sc.name;
  sc.meta["h_left"] = h_left;
  sc.meta["h_right"] = h_right;
  sc.meta["x_dam"] = x_dam;
  return sc;
}

Scenario build_soliton(KvReader& kv) {
  Scenario sc;
  sc.name = "soliton";
  SolitonParams sp;
  sp.H0 = kv.num("H0", sp.H0);
  sp.l = kv.num("l", sp.l);
  sp.d = kv.num("d", sp.d);
  sp.validate();

  const double g_probe = kv.num("g", 9.81);  // consumed again in read_common
  const double c0 = sp.celerity(g_probe);
  const double length_dflt = 20.0 * sp.l;
  read_common(kv, sc, BoundaryKind::periodic, BoundaryKind::periodic,
              length_dflt / c0);
  const int n = static_cast<int>(kv.integer("n", 500));
  const double x_left = kv.num("x_left", -0.5 * length_dflt);
  const double length = kv.num("length", length_dflt);
  kv.finish();

  sc.grid = Grid1D(x_left, length / n, n, grid_mode(sc));
  sc.bathy = Bathymetry::flat(0.0);
  sc.initial = State::zero(sc.grid);
  for (int i = 0; i < n; ++i) {
    const auto s = soliton_state(sc.grid.center(i), 0.0, sp, sc.phys.g);
    const auto k = static_cast<std::size_t>(i);
    sc.initial.H[k] = s.H;
    sc.initial.hu[k] = s.H * s.u;
    sc.initial.hw[k] = s.H * s.w;
    sc.initial.pnh[k] = s.pnh;
  }

  record_grid(sc);
  sc.meta["scenario"] = sc.name;
  sc.meta["H0"] = sp.H0;
  sc.meta["l"] = sp.l;
  sc.meta["d"] = sp.d;
  sc.meta["celerity"] = sp.celerity(sc.phys.g);
  sc.meta["amplitude"] = sp.amplitude(sc.phys.g);
  return sc;
}

Scenario build_thacker(KvReader& kv) {
  Scenario sc;
  sc.name = "thacker";
  ThackerParams tp;
  tp.H0 = kv.num("H0", 1.0);
  tp.b1 = kv.num("b1", 0.0);
  tp.b2 = kv.num("b2", 0.5);
  tp.f0 = kv.num("f0", 1.0);
  tp.F0 = kv.num("F0", 0.0);
  tp.t0 = 0.0;
  if (!(tp.b2 > 0.0)) throw ConfigError("b2 must be positive");
  if (!(tp.H0 > 0.0)) throw ConfigError("H0 must be positive");

  const double g_probe = kv.num("g", 9.81);
  const double period = 2.0 * M_PI / std::sqrt(tp.b2 * g_probe);
  read_common(kv, sc, BoundaryKind::reflective, BoundaryKind::reflective,
              period);
  const double radius = std::sqrt(2.0 * tp.H0 / tp.b2);
  const double f_amp =
      std::fabs(tp.F0) + std::fabs(tp.f0) / std::sqrt(tp.b2 * sc.phys.g);
  const double length_dflt = 2.6 * (radius + f_amp);
  const int n = static_cast<int>(kv.integer("n", 400));
  const double x_left = kv.num("x_left", -0.5 * length_dflt);
  const double length = kv.num("length", length_dflt);
  const double traj_dt = kv.num("traj_dt", 1e-4);
  kv.finish();

  sc.grid = Grid1D(x_left, length / n, n, grid_mode(sc));
  sc.bathy = Bathymetry::parabolic(tp.b1, tp.b2);

  auto traj = std::make_shared<ThackerTrajectory>(
      integrate_f(tp, sc.config.t_end + 1.0, traj_dt, sc.phys.g));
  sc.initial = State::zero(sc.grid);
  for (int i = 0; i < n; ++i) {
    const auto a =
        thacker_depth_averaged(sc.grid.center(i), tp.t0, tp, *traj, sc.phys.g);
    const auto k = static_cast<std::size_t>(i);
    sc.initial.H[k] = a.H;
    sc.initial.hu[k] = a.H * a.u;
    sc.initial.hw[k] = a.H * a.w;
    sc.initial.pnh[k] = a.pnh;
  }
  const double b2 = tp.b2;
  sc.config.forcing_w = [traj, b2](double x, double t) {
    return b2 * x * traj->dfdt(t);
  };

  record_grid(sc);
  sc.meta["scenario"] = sc.name;
  sc.meta["H0"] = tp.H0;
  sc.meta["b1"] = tp.b1;
  sc.meta["b2"] = tp.b2;
  sc.meta["f0"] = tp.f0;
  sc.meta["F0"] = tp.F0;
  sc.meta["traj_dt"] = traj_dt;
  sc.meta["period"] = period;
  return sc;
}

Scenario build_stationary(KvReader& kv) {
  Scenario sc;
  sc.name = "stationary";
  StationarySpec spec;
  spec.Q0 = kv.num("Q0", 1.8);
  spec.H_exit = kv.num("H_exit", 1.0);
  spec.a = kv.num("a", 5.0);
  spec.b = kv.num("b", 3.4);
  spec.c = kv.num("c", 1.5);
  spec.L = kv.num("length", 10.0);
  spec.n = static_cast<int>(kv.integer("n", 2000));
  spec.substeps = static_cast<int>(kv.integer("substeps", 8));

  read_common(kv, sc, BoundaryKind::inflow, BoundaryKind::outflow, 1.0);
  kv.finish();
  if (sc.config.left.kind == BoundaryKind::inflow &&
      sc.config.left.value == 0.0)
    sc.config.left.value = spec.Q0;
  if (sc.config.right.kind == BoundaryKind::outflow &&
      sc.config.right.value == 0.0)
    sc.config.right.value = spec.H_exit;
  sc.meta["bc_left_value"] = sc.config.left.value;
  sc.meta["bc_right_value"] = sc.config.right.value;

  const StationarySolution sol = generate_stationary(spec, sc.phys.g);
  sc.grid = sol.grid;
  sc.bathy = sol.bathymetry();
  sc.initial = State::zero(sc.grid);
  for (std::size_t k = 0; k < sol.H.size(); ++k) {
    sc.initial.H[k] = sol.H[k];
    sc.initial.hu[k] = sol.H[k] * sol.u[k];
    sc.initial.hw[k] = sol.H[k] * sol.w[k];
    sc.initial.pnh[k] = sol.pnh[k];
  }

  record_grid(sc);
  sc.meta["scenario"] = sc.name;
  sc.meta["Q0"] = spec.Q0;
  sc.meta["H_exit"] = spec.H_exit;
  sc.meta["a"] = spec.a;
  sc.meta["b"] = spec.b;
  sc.meta["c"] = spec.c;
  sc.meta["substeps"] = spec.substeps;
  return sc;
}

Scenario build_csv(KvReader& kv) {
  Scenario sc;
  sc.name = "csv";
  const std::string state_file = kv.require("state_file");
  read_common(kv, sc, BoundaryKind::reflective, BoundaryKind::reflective, 1.0);
  kv.finish();

  LoadedState ls = read_state_csv(state_file, BcMode::extrapolate);
  sc.grid = Grid1D(ls.grid.x_left(), ls.grid.dx(), ls.grid.n(), grid_mode(sc));
  sc.bathy = Bathymetry::sampled(sc.grid, ls.zb);
  sc.initial = ls.state;

  record_grid(sc);
  sc.meta["scenario"] = sc.name;
  sc.meta["state_file"] = state_file;
  return sc;
}

}  // namespace

Scenario build_scenario(const std::map<std::string, std::string>& kv) {
  KvReader reader(kv);
  const std::string name = reader.require("scenario");
  if (name == "lake_at_rest") return build_lake_at_rest(reader);
  if (name == "dam_break") return build_dam_break(reader);
  if (name == "soliton") return build_soliton(reader);
  if (name == "thacker") return build_thacker(reader);
  if (name == "stationary") return build_stationary(reader);
  if (name == "csv") return build_csv(reader);
  throw ConfigError("unknown scenario `" + name + "`");
}

RunResult run_scenario(const Scenario& sc, const std::string& out_dir) {
  RunResult r = run(sc.initial, sc.bathy, sc.config, sc.phys, sc.grid);
  if (!out_dir.empty()) {
    Json meta = sc.meta;
    if (sc.name == "soliton" && !r.snapshots.empty()) {
      const auto crest = [](const State& s) {
        return *std::max_element(s.H.begin(), s.H.end());
      };
      const double c0 = crest(r.snapshots.front());
      const double c1 = crest(r.snapshots.back());
      meta["crest_initial"] = c0;
      meta["crest_final"] = c1;
      meta["crest_retention"] = c0 > 0.0 ? c1 / c0 : 0.0;
    }
    write_run_directory(out_dir, sc.grid, sc.bathy, sc.phys, r, meta);
  }
  return r;
}

}  // namespace nhsw
