#pragma once

#include <cstddef>
#include <vector>

namespace nhsw {

enum class BcMode { periodic, extrapolate, dirichlet };

/// Cell-centered sample values. A Field is bound to a Grid1D of the same
/// length; operators check the binding and reject mismatched sizes.
using Field = std::vector<double>;

/// Uniform 1D grid. Cell centers sit at x_left + (i + 1/2) dx and the domain
/// length is exactly n * dx. The bc mode selects how stencils close at the
/// domain edges; dirichlet mode carries caller-supplied ghost values read at
/// the two off-domain stencil positions.
class Grid1D {
public:
  /// Placeholder grid (unit spacing, three cells) so aggregates holding a
  /// grid can be default-constructed before assembly.
  Grid1D() : Grid1D(0.0, 1.0, 3, BcMode::extrapolate) {}

  Grid1D(double x_left, double dx, int n, BcMode bc,
         double ghost_left = 0.0, double ghost_right = 0.0);

  double x_left() const { return x_left_; }
  double dx() const { return dx_; }
  int n() const { return n_; }
  BcMode bc() const { return bc_; }
  double ghost_left() const { return ghost_left_; }
  double ghost_right() const { return ghost_right_; }

  double center(int i) const { return x_left_ + (i + 0.5) * dx_; }
  double x_right() const { return x_left_ + dx_ * n_; }
  double length() const { return dx_ * n_; }

  /// All cell centers as a Field.
  Field centers() const;

private:
  double x_left_;
  double dx_;
  int n_;
  BcMode bc_;
  double ghost_left_;
  double ghost_right_;
};

/// First derivative at cell centers: centered three-point stencil in the
/// interior, wraparound for periodic grids, second-order one-sided
/// three-point formulas at extrapolate edges.
Field ddx(const Field& f, const Grid1D& g);

/// Second derivative at cell centers: three-point stencil in the interior,
/// second-order one-sided four-point formulas at extrapolate edges.
Field d2dx2(const Field& f, const Grid1D& g);

/// Sample a callable at every cell center.
template <class F>
Field sample(const Grid1D& g, F&& fn) {
  Field out(static_cast<std::size_t>(g.n()));
  for (int i = 0; i < g.n(); ++i)
    out[static_cast<std::size_t>(i)] = fn(g.center(i));
  return out;
}

}  // namespace nhsw
