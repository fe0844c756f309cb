#pragma once

#include <string>

#include "nhsw/grid.hpp"

namespace nhsw {

/// Bottom topography z_b(x) with its first two derivatives.
///
/// Analytic kinds (flat, parabolic) evaluate everywhere. Sampled kinds carry
/// cell-centered samples on their own grid, interpolate linearly, and reject
/// queries outside [x_left, x_right]. A `sampled` bathymetry differentiates
/// its samples with grid stencils (so curvature is one differencing noisier
/// than the data); a `generated` one is built with explicit derivative
/// samples.
class Bathymetry {
public:
  enum class Kind { flat, parabolic, sampled, generated };

  struct Eval {
    double z = 0.0;
    double slope = 0.0;
    double curvature = 0.0;
  };

  /// Default-constructed bathymetry is a flat bottom at z = 0.
  Bathymetry() = default;

  static Bathymetry flat(double b1);
  static Bathymetry parabolic(double b1, double b2);
  static Bathymetry sampled(const Grid1D& grid, Field zb);
  static Bathymetry generated(const Grid1D& grid, Field zb, Field slope,
                              Field curvature);
  /// Load a `x,zb` CSV (uniformly spaced x) as a sampled bathymetry.
  static Bathymetry from_csv(const std::string& path);

  Eval eval(double x) const;

  Kind kind() const { return kind_; }
  /// True when curvature comes from twice-differenced samples, which is the
  /// lowest-accuracy path and worth flagging in diagnostics.
  bool derivatives_sampled() const { return kind_ == Kind::sampled; }

  /// Samples at the centers of an arbitrary grid.
  Field values(const Grid1D& g) const;
  Field slopes(const Grid1D& g) const;
  Field curvatures(const Grid1D& g) const;

private:
  Kind kind_ = Kind::flat;
  double b1_ = 0.0;
  double b2_ = 0.0;
  // sampled / generated kinds
  double x_left_ = 0.0;
  double dx_ = 0.0;
  int n_ = 0;
  Field zb_, slope_, curvature_;

  double interp(const Field& f, double x) const;
};

}  // namespace nhsw
