#include <cmath>
#include <random>

#include <doctest.h>

#include "nhsw/bathymetry.hpp"
#include "nhsw/errors.hpp"
#include "nhsw/grid.hpp"
#include "nhsw/model.hpp"

using namespace nhsw;

namespace {

State make_state(const Grid1D& g, double H, double u, double w, double pnh) {
  State s = State::zero(g);
  for (std::size_t i = 0; i < s.H.size(); ++i) {
    s.H[i] = H;
    s.hu[i] = H * u;
    s.hw[i] = H * w;
    s.pnh[i] = pnh;
  }
  return s;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("velocities filter dry cells") {
  Grid1D g(0.0, 1.0, 4, BcMode::extrapolate);
  State s = State::zero(g);
  s.H = {2.0, 1e-9, 0.0, 4.0};
  s.hu = {6.0, 1.0, 1.0, 2.0};
  s.hw = {2.0, 1.0, 1.0, -4.0};
  PhysParams p;
  const Velocities v = velocities(s, p);
  CHECK(v.u[0] == doctest::Approx(3.0));
  CHECK(v.w[0] == doctest::Approx(1.0));
  CHECK(v.u[1] == 0.0);  // below h_min: treated as dry
  CHECK(v.w[2] == 0.0);
  CHECK(v.u[3] == doctest::Approx(0.5));
  CHECK(v.w[3] == doctest::Approx(-1.0));
}

TEST_CASE("conservative fluxes on a uniform state") {
  Grid1D g(0.0, 1.0, 4, BcMode::extrapolate);
  PhysParams p;
  p.g = 10.0;
  const State s = make_state(g, 2.0, 3.0, 1.0, 0.5);
  const Fluxes f = nh_flux(s, p);
  CHECK(f.mass[0] == doctest::Approx(6.0));
  // H u^2 + g/2 H^2 + H pnh = 18 + 20 + 1
  CHECK(f.momentum_x[0] == doctest::Approx(39.0));
  CHECK(f.momentum_z[0] == doctest::Approx(6.0));
}

TEST_CASE("dry cells carry no flux") {
  Grid1D g(0.0, 1.0, 3, BcMode::extrapolate);
  PhysParams p;
  State s = State::zero(g);
  s.H = {0.0, 1e-12, 1.0};
  s.hu = {1.0, 1.0, 1.0};
  s.pnh = {5.0, 5.0, 0.0};
  const Fluxes f = nh_flux(s, p);
  CHECK(f.mass[0] == 0.0);
  CHECK(f.momentum_x[0] == 0.0);
  CHECK(f.momentum_x[1] == 0.0);
  CHECK(f.mass[2] == doctest::Approx(1.0));
}

TEST_CASE("sources: topography force and bottom pressure") {
  Grid1D g(0.0, 0.5, 6, BcMode::extrapolate);
  PhysParams p;
  p.g = 10.0;
  const Bathymetry b = Bathymetry::parabolic(0.0, 2.0);  // slope 2x
  const State s = make_state(g, 1.5, 0.0, 0.0, 0.25);
  const Sources src = nh_source(s, b, g, p);
  for (int i = 0; i < 6; ++i) {
    const double slope = 2.0 * g.center(i);
    const auto k = static_cast<std::size_t>(i);
    CHECK(src.momentum_x[k] ==
          doctest::Approx(-(10.0 * 1.5 + 2.0 * 0.25) * slope));
    CHECK(src.momentum_z[k] == doctest::Approx(0.5));
  }
  const Field pb = bottom_pressure(s);
  CHECK(pb[0] == doctest::Approx(0.5));
}

TEST_CASE("divergence constraint vanishes for consistent fields") {
  const int n = 32;
  Grid1D g(0.0, 1.0 / n, n, BcMode::extrapolate);
  PhysParams p;
  const Bathymetry b = Bathymetry::flat(0.0);
  const double H = 2.0, alpha = 0.7;
  State s = State::zero(g);
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    s.H[k] = H;
    s.hu[k] = H * alpha * g.center(i);          // u = alpha x
    s.hw[k] = H * (-0.5 * H * alpha);           // w = -(H/2) u'
  }
  const Field r = divergence_constraint_residual(s, b, g, p);
  for (double v : r) CHECK(std::fabs(v) < 1e-11);
}

TEST_CASE("energy density, flux, and the dispersive-model energy") {
  Grid1D g(0.0, 1.0, 3, BcMode::extrapolate);
  PhysParams p;
  p.g = 9.0;
  const Bathymetry b = Bathymetry::flat(0.0);
  // H=1, u=1, w=3 at g=9: E = (1+9)/2 + 9/2 = 9.5 while the dispersive
  // variant counts only 2/3 of the vertical kinetic term: E_gn = 8.
  const State s = make_state(g, 1.0, 1.0, 3.0, 0.0);
  const Field E = energy_density(s, b, g, p);
  CHECK(E[1] == doctest::Approx(9.5));
  const Field F = energy_flux(s, b, g, p);
  // u (E + g/2 H^2 + H pnh) = 1 * (9.5 + 4.5 + 0)
  CHECK(F[1] == doctest::Approx(14.0));

  const GnEval gn = gn_pressure_and_energy(s, Field(3, 0.0), g, p);
  CHECK(gn.energy[1] == doctest::Approx(8.0));
  CHECK(E[1] - gn.energy[1] == doctest::Approx(1.0 * 9.0 / 6.0));  // H w^2/6
}

TEST_CASE("dispersive pressure is 4/3 of pnh for balanced states") {
  const int n = 64;
  const double L = 2.0 * M_PI;
  Grid1D g(0.0, L / n, n, BcMode::periodic);
  PhysParams p;
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> coef(-0.3, 0.3);
  for (int trial = 0; trial < 5; ++trial) {
    State s = State::zero(g);
    const double a1 = coef(rng), a2 = coef(rng), a3 = coef(rng);
    for (int i = 0; i < n; ++i) {
      const double x = g.center(i);
      const auto k = static_cast<std::size_t>(i);
      s.H[k] = 1.0 + a1 * std::sin(x);
      s.hu[k] = s.H[k] * a2 * std::cos(x);
      s.hw[k] = s.H[k] * a3 * std::sin(2.0 * x);
      s.pnh[k] = 0.2 + a1 * std::cos(2.0 * x);
    }
    // States on the model's vertical momentum balance satisfy
    // dt(H w) = 2 pnh - d/dx(H u w); feed exactly that.
    const Velocities v = velocities(s, p);
    Field huw(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < huw.size(); ++k) huw[k] = s.hw[k] * v.u[k];
    const Field d = ddx(huw, g);
    Field dt_hw(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < dt_hw.size(); ++k)
      dt_hw[k] = 2.0 * s.pnh[k] - d[k];
    const GnEval gn = gn_pressure_and_energy(s, dt_hw, g, p);
    for (std::size_t k = 0; k < gn.p_gn.size(); ++k)
      CHECK(gn.p_gn[k] ==
            doctest::Approx(4.0 / 3.0 * s.pnh[k]).epsilon(1e-12));
  }
}

TEST_CASE("hydrostatic residual: manufactured fields") {
  const int n = 512;
  const double L = 2.0 * M_PI;
  Grid1D g(0.0, L / n, n, BcMode::periodic);
  PhysParams p;
  const Bathymetry b = Bathymetry::flat(0.0);
  State s = State::zero(g);
  Field dt_H(static_cast<std::size_t>(n)), dt_hu(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = g.center(i);
    const auto k = static_cast<std::size_t>(i);
    const double H = 2.0 + 0.1 * std::sin(x);
    const double u = std::cos(x);
    s.H[k] = H;
    s.hu[k] = H * u;
    // Time derivatives chosen so the residual is exactly zero in the
    // continuum: dt H = -(H u)', dt(Hu) = -(H u^2 + g/2 H^2)'.
    const double dH = 0.1 * std::cos(x);
    const double du = -std::sin(x);
    dt_H[k] = -(dH * u + H * du);
    dt_hu[k] = -(dH * u * u + 2.0 * H * u * du + p.g * H * dH);
  }
  const SvResidual r = sv_residual(s, dt_H, dt_hu, b, g, p);
  for (double v : r.mass) CHECK(std::fabs(v) < 2e-4);
  for (double v : r.momentum_x) CHECK(std::fabs(v) < 5e-3);

  const Field Eh = sv_energy(s, b, g, p);
  CHECK(Eh[0] == doctest::Approx(s.H[0] * 1.0 * std::cos(g.center(0)) *
                                     std::cos(g.center(0)) / 2.0 +
                                 p.g * s.H[0] * s.H[0] / 2.0)
                     .epsilon(1e-9));
}

TEST_CASE("viscous terms on manufactured fields") {
  const int n = 256;
  const double L = 2.0 * M_PI;
  Grid1D g(0.0, L / n, n, BcMode::periodic);
  PhysParams p;
  p.mu = 0.3;
  p.kappa = 0.05;
  const double H = 2.0;
  State s = State::zero(g);
  for (int i = 0; i < n; ++i) {
    const double x = g.center(i);
    const auto k = static_cast<std::size_t>(i);
    s.H[k] = H;
    s.hu[k] = H * std::sin(x);
    s.hw[k] = H * std::cos(x);
  }
  const ViscousTerms vt = ns_viscous_terms(s, g, p);
  for (int i = 0; i < n; ++i) {
    const double x = g.center(i);
    const auto k = static_cast<std::size_t>(i);
    // d/dx(2 mu H u') - kappa u with u = sin x
    CHECK(vt.momentum_x[k] ==
          doctest::Approx(-2.0 * p.mu * H * std::sin(x) -
                          p.kappa * std::sin(x))
              .epsilon(5e-4));
    // d/dx(mu H w') with w = cos x
    CHECK(vt.momentum_z[k] ==
          doctest::Approx(-p.mu * H * std::cos(x)).epsilon(5e-4));
  }
}

TEST_CASE("closure defect: reference profiles") {
  const int m = 2001;
  VerticalProfile lin, quad;
  for (int i = 0; i < m; ++i) {
    const double z = static_cast<double>(i) / (m - 1);
    lin.z.push_back(z);
    lin.u.push_back(z);
    quad.z.push_back(z);
    quad.u.push_back(z * z);
  }
  CHECK(closure_defect(lin) == doctest::Approx(1.0 / 12.0).epsilon(1e-6));
  CHECK(closure_defect(quad) == doctest::Approx(4.0 / 45.0).epsilon(1e-6));

  VerticalProfile flat;
  flat.z = {0.0, 0.4, 1.0};
  flat.u = {2.5, 2.5, 2.5};
  CHECK(closure_defect(flat) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("closure defect is nonnegative on random profiles") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::uniform_int_distribution<int> count(2, 40);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = count(rng);
    VerticalProfile prof;
    double z = uni(rng);
    for (int i = 0; i < m; ++i) {
      prof.z.push_back(z);
      prof.u.push_back(4.0 * uni(rng) - 2.0);
      z += 0.01 + uni(rng);
    }
    CHECK(closure_defect(prof) >= -1e-15);
  }
}

TEST_CASE("closure defect contract checks") {
  VerticalProfile thin;
  thin.z = {0.0, 1e-9};
  thin.u = {1.0, 2.0};
  CHECK_THROWS_AS(closure_defect(thin), DegenerateColumnError);

  VerticalProfile bad;
  bad.z = {0.0, 0.5, 0.5};
  bad.u = {1.0, 2.0, 3.0};
  CHECK_THROWS_AS(closure_defect(bad), ContractViolation);

  VerticalProfile mismatched;
  mismatched.z = {0.0, 1.0};
  mismatched.u = {1.0};
  CHECK_THROWS_AS(closure_defect(mismatched), ContractViolation);
}

}  // TEST_SUITE
