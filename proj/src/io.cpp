#include "nhsw/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "nhsw/errors.hpp"

namespace nhsw {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // Prefer the shortest representation that still round-trips.
  for (int prec = 1; prec < 17; ++prec) {
    char probe[40];
    std::snprintf(probe, sizeof probe, "%.*g", prec, v);
    if (std::strtod(probe, nullptr) == v) return probe;
  }
  return buf;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

CsvTable read_csv(const std::string& path,
                  const std::vector<std::string>& expect) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError(path + ": empty file");
  CsvTable t;
  t.header = split_line(line);
  if (!expect.empty() && t.header != expect) {
    std::string want;
    for (const auto& h : expect) want += (want.empty() ? "" : ",") + h;
    throw ConfigError(path + ": expected header `" + want + "`, got `" + line +
                      "`");
  }
  t.columns.assign(t.header.size(), {});
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split_line(line);
    if (cells.size() != t.header.size())
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": wrong number of columns");
    for (std::size_t c = 0; c < cells.size(); ++c) {
      char* end = nullptr;
      const double v = std::strtod(cells[c].c_str(), &end);
      if (end == cells[c].c_str())
        throw ConfigError(path + ":" + std::to_string(lineno) +
                          ": cannot parse `" + cells[c] + "`");
      t.columns[c].push_back(v);
    }
  }
  return t;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<const Field*>& columns) {
  if (header.size() != columns.size())
    throw ContractViolation("write_csv: header/column count mismatch");
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  for (std::size_t c = 0; c < header.size(); ++c)
    out << (c ? "," : "") << header[c];
  out << "\n";
  const std::size_t rows = columns.empty() ? 0 : columns[0]->size();
  for (const Field* col : columns)
    if (col->size() != rows)
      throw ContractViolation("write_csv: ragged columns");
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c)
      out << (c ? "," : "") << format_double((*columns[c])[r]);
    out << "\n";
  }
}

void write_state_csv(const std::string& path, const Grid1D& g, const State& s,
                     const Bathymetry& b, const PhysParams& p) {
  const Field x = g.centers();
  const Velocities v = velocities(s, p);
  const Field zb = b.values(g);
  write_csv(path, {"x", "H", "u", "w", "pnh", "zb"},
            {&x, &s.H, &v.u, &v.w, &s.pnh, &zb});
}

LoadedState read_state_csv(const std::string& path, BcMode bc) {
  CsvTable t = read_csv(path, {"x", "H", "u", "w", "pnh", "zb"});
  const Field& x = t.columns[0];
  if (x.size() < 3) throw ConfigError(path + ": need at least 3 rows");
  const double dx = x[1] - x[0];
  if (!(dx > 0.0)) throw ConfigError(path + ": x must be increasing");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (std::fabs(x[i] - x[i - 1] - dx) > 1e-9 * std::max(1.0, dx))
      throw ConfigError(path + ": x must be uniformly spaced");
  Grid1D g(x[0] - 0.5 * dx, dx, static_cast<int>(x.size()), bc);
  State s;
  s.H = t.columns[1];
  s.pnh = t.columns[4];
  s.hu.resize(x.size());
  s.hw.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    s.hu[i] = s.H[i] * t.columns[2][i];
    s.hw[i] = s.H[i] * t.columns[3][i];
  }
  return {g, std::move(s), std::move(t.columns[5])};
}

void write_regime_csv(const std::string& path, const Grid1D& g,
                      const Field& lambda,
                      const std::vector<PressureRegime>& regimes) {
  if (lambda.size() != regimes.size() ||
      lambda.size() != static_cast<std::size_t>(g.n()))
    throw ContractViolation("write_regime_csv: length mismatch");
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << "x,lambda,regime\n";
  for (int i = 0; i < g.n(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    out << format_double(g.center(i)) << "," << format_double(lambda[k]) << ","
        << regime_name(regimes[k]) << "\n";
  }
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << j.dump(2) << "\n";
}

void ensure_directory(const std::string& path) {
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec) throw ConfigError("cannot create directory " + path);
}

void write_run_directory(const std::string& dir, const Grid1D& g,
                         const Bathymetry& b, const PhysParams& p,
                         const RunResult& r, Json meta) {
  ensure_directory(dir);
  write_csv(dir + "/series.csv",
            {"t", "dt", "energy", "mass", "constraint_residual"},
            {&r.times, &r.dts, &r.energy, &r.mass, &r.constraint_residual});
  for (std::size_t k = 0; k < r.snapshots.size(); ++k)
    write_state_csv(dir + "/snap_" + std::to_string(k) + ".csv", g,
                    r.snapshots[k], b, p);
  Json snaps = Json::array();
  for (std::size_t k = 0; k < r.snapshot_times.size(); ++k) {
    snaps.push_back(Json{{"file", "snap_" + std::to_string(k) + ".csv"},
                         {"t", r.snapshot_times[k]}});
  }
  meta["snapshots"] = snaps;
  meta["steps"] = r.steps;
  meta["min_depth"] = r.min_depth;
  if (!r.energy.empty()) {
    meta["initial_energy"] = r.energy.front();
    meta["final_energy"] = r.energy.back();
    meta["initial_mass"] = r.mass.front();
    meta["final_mass"] = r.mass.back();
  }
  write_json(dir + "/meta.json", meta);
}

}  // namespace nhsw
