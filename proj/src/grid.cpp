#include "nhsw/grid.hpp"

#include <cmath>
#include <string>

#include "nhsw/errors.hpp"

namespace nhsw {

namespace {

void require_bound(const Field& f, const Grid1D& g, const char* op) {
  if (f.size() != static_cast<std::size_t>(g.n()))
    throw ContractViolation(std::string(op) + ": field of length " +
                            std::to_string(f.size()) +
                            " not bound to grid of length " +
                            std::to_string(g.n()));
}

}  // namespace

Grid1D::Grid1D(double x_left, double dx, int n, BcMode bc,
               double ghost_left, double ghost_right)
    : x_left_(x_left), dx_(dx), n_(n), bc_(bc),
      ghost_left_(ghost_left), ghost_right_(ghost_right) {
  if (!(dx > 0.0) || !std::isfinite(dx))
    throw ContractViolation("Grid1D: dx must be positive and finite");
  if (n < 3)
    throw ContractViolation("Grid1D: need at least 3 cells");
  if (!std::isfinite(x_left))
    throw ContractViolation("Grid1D: x_left must be finite");
}

Field Grid1D::centers() const {
  Field out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = center(i);
  return out;
}

Field ddx(const Field& f, const Grid1D& g) {
  require_bound(f, g, "ddx");
  const std::size_t n = f.size();
  const double h = g.dx();
  Field out(n);
  for (std::size_t i = 1; i + 1 < n; ++i)
    out[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
  switch (g.bc()) {
    case BcMode::periodic:
      out[0] = (f[1] - f[n - 1]) / (2.0 * h);
      out[n - 1] = (f[0] - f[n - 2]) / (2.0 * h);
      break;
    case BcMode::extrapolate:
      // One-sided formulas written on neighbor differences so constant
      // fields give exactly zero.
      out[0] = (3.0 * (f[1] - f[0]) - (f[2] - f[1])) / (2.0 * h);
      out[n - 1] =
          (3.0 * (f[n - 1] - f[n - 2]) - (f[n - 2] - f[n - 3])) / (2.0 * h);
      break;
    case BcMode::dirichlet:
      out[0] = (f[1] - g.ghost_left()) / (2.0 * h);
      out[n - 1] = (g.ghost_right() - f[n - 2]) / (2.0 * h);
      break;
  }
  return out;
}

Field d2dx2(const Field& f, const Grid1D& g) {
  require_bound(f, g, "d2dx2");
  const std::size_t n = f.size();
  const double h2 = g.dx() * g.dx();
  Field out(n);
  for (std::size_t i = 1; i + 1 < n; ++i)
    out[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / h2;
  switch (g.bc()) {
    case BcMode::periodic:
      out[0] = (f[1] - 2.0 * f[0] + f[n - 1]) / h2;
      out[n - 1] = (f[0] - 2.0 * f[n - 1] + f[n - 2]) / h2;
      break;
    case BcMode::extrapolate:
      if (n >= 4) {
        // Same one-sided stencils, assembled from second differences so
        // constant fields give exactly zero.
        out[0] = (2.0 * (f[0] - 2.0 * f[1] + f[2]) -
                  (f[1] - 2.0 * f[2] + f[3])) / h2;
        out[n - 1] = (2.0 * (f[n - 1] - 2.0 * f[n - 2] + f[n - 3]) -
                      (f[n - 2] - 2.0 * f[n - 3] + f[n - 4])) / h2;
      } else {
        // Three cells only: the shifted centered stencil is still exact on
        // quadratics.
        out[0] = (f[2] - 2.0 * f[1] + f[0]) / h2;
        out[n - 1] = out[0];
      }
      break;
    case BcMode::dirichlet:
      out[0] = (f[1] - 2.0 * f[0] + g.ghost_left()) / h2;
      out[n - 1] = (g.ghost_right() - 2.0 * f[n - 1] + f[n - 2]) / h2;
      break;
  }
  return out;
}

}  // namespace nhsw
