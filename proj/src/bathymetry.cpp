#include "nhsw/bathymetry.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "nhsw/errors.hpp"
#include "nhsw/io.hpp"

namespace nhsw {

Bathymetry Bathymetry::flat(double b1) {
  Bathymetry b;
  b.kind_ = Kind::flat;
  b.b1_ = b1;
  return b;
}

Bathymetry Bathymetry::parabolic(double b1, double b2) {
  Bathymetry b;
  b.kind_ = Kind::parabolic;
  b.b1_ = b1;
  b.b2_ = b2;
  return b;
}

Bathymetry Bathymetry::sampled(const Grid1D& grid, Field zb) {
  if (zb.size() != static_cast<std::size_t>(grid.n()))
    throw ContractViolation("Bathymetry::sampled: sample count does not match grid");
  Bathymetry b;
  b.kind_ = Kind::sampled;
  b.x_left_ = grid.x_left();
  b.dx_ = grid.dx();
  b.n_ = grid.n();
  b.slope_ = ddx(zb, grid);
  b.curvature_ = d2dx2(zb, grid);
  b.zb_ = std::move(zb);
  return b;
}

Bathymetry Bathymetry::generated(const Grid1D& grid, Field zb, Field slope,
                                 Field curvature) {
  const auto n = static_cast<std::size_t>(grid.n());
  if (zb.size() != n || slope.size() != n || curvature.size() != n)
    throw ContractViolation("Bathymetry::generated: sample count does not match grid");
  Bathymetry b;
  b.kind_ = Kind::generated;
  b.x_left_ = grid.x_left();
  b.dx_ = grid.dx();
  b.n_ = grid.n();
  b.zb_ = std::move(zb);
  b.slope_ = std::move(slope);
  b.curvature_ = std::move(curvature);
  return b;
}

Bathymetry Bathymetry::from_csv(const std::string& path) {
  CsvTable t = read_csv(path, {"x", "zb"});
  const Field& x = t.columns[0];
  if (x.size() < 3)
    throw ConfigError(path + ": need at least 3 bathymetry samples");
  const double dx = x[1] - x[0];
  if (!(dx > 0.0))
    throw ConfigError(path + ": x column must be strictly increasing");
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double step = x[i] - x[i - 1];
    if (std::fabs(step - dx) > 1e-9 * std::max(1.0, std::fabs(dx)))
      throw ConfigError(path + ": x column must be uniformly spaced");
  }
  Grid1D g(x[0] - 0.5 * dx, dx, static_cast<int>(x.size()), BcMode::extrapolate);
  return sampled(g, t.columns[1]);
}

double Bathymetry::interp(const Field& f, double x) const {
  // Piecewise-linear through the cell-center samples, extended linearly over
  // the half cells between the domain edge and the first/last center.
  const double xc0 = x_left_ + 0.5 * dx_;
  double s = (x - xc0) / dx_;
  int i = static_cast<int>(std::floor(s));
  if (i < 0) i = 0;
  if (i > n_ - 2) i = n_ - 2;
  const double w = s - i;
  const auto k = static_cast<std::size_t>(i);
  return f[k] + w * (f[k + 1] - f[k]);
}

Bathymetry::Eval Bathymetry::eval(double x) const {
  switch (kind_) {
    case Kind::flat:
      return {b1_, 0.0, 0.0};
    case Kind::parabolic:
      return {b1_ + 0.5 * b2_ * x * x, b2_ * x, b2_};
    case Kind::sampled:
    case Kind::generated: {
      const double x_right = x_left_ + dx_ * n_;
      if (x < x_left_ || x > x_right)
        throw OutOfDomainError("Bathymetry::eval: x = " + std::to_string(x) +
                               " outside sampled domain [" +
                               std::to_string(x_left_) + ", " +
                               std::to_string(x_right) + "]");
      return {interp(zb_, x), interp(slope_, x), interp(curvature_, x)};
    }
  }
  return {};
}

Field Bathymetry::values(const Grid1D& g) const {
  return sample(g, [this](double x) { return eval(x).z; });
}

Field Bathymetry::slopes(const Grid1D& g) const {
  return sample(g, [this](double x) { return eval(x).slope; });
}

Field Bathymetry::curvatures(const Grid1D& g) const {
  return sample(g, [this](double x) { return eval(x).curvature; });
}

}  // namespace nhsw
