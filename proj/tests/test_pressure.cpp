#include <cmath>
#include <random>

#include <doctest.h>

#include "nhsw/bathymetry.hpp"
#include "nhsw/errors.hpp"
#include "nhsw/grid.hpp"
#include "nhsw/model.hpp"
#include "nhsw/pressure.hpp"

using namespace nhsw;

TEST_SUITE("pressure") {

TEST_CASE("lambda is exactly 16 for constant depth over a flat bottom") {
  Grid1D g(0.0, 0.1, 20, BcMode::extrapolate);
  const Field lambda =
      lambda_coefficient(Field(20, 3.7), Bathymetry::flat(1.0), g);
  for (double v : lambda) CHECK(v == 16.0);
}

TEST_CASE("lambda with constant curvature bottom") {
  // H = 1, zb parabolic with curvature b2: Lambda = 16(1 + (b2 x)^2) - 8 b2.
  Grid1D g(-1.0, 0.125, 16, BcMode::extrapolate);
  SUBCASE("mild curvature keeps diffusion regime") {
    const Field lambda =
        lambda_coefficient(Field(16, 1.0), Bathymetry::parabolic(0.0, 0.5), g);
    for (int i = 0; i < 16; ++i) {
      const double x = g.center(i);
      CHECK(lambda[static_cast<std::size_t>(i)] ==
            doctest::Approx(16.0 * (1.0 + 0.25 * x * x) - 4.0)
                .epsilon(1e-13));
    }
    CHECK(lambda[8] > 0.0);  // 12 + small
  }
  SUBCASE("strong curvature turns the center indefinite") {
    const Field lambda =
        lambda_coefficient(Field(16, 1.0), Bathymetry::parabolic(0.0, 3.0), g);
    for (int i = 0; i < 16; ++i) {
      const double x = g.center(i);
      CHECK(lambda[static_cast<std::size_t>(i)] ==
            doctest::Approx(-8.0 + 144.0 * x * x).epsilon(1e-12));
    }
    const auto regimes = classify_regime(lambda);
    for (int i = 0; i < 16; ++i) {
      const double exact = -8.0 + 144.0 * g.center(i) * g.center(i);
      const auto k = static_cast<std::size_t>(i);
      if (exact < -1e-10) CHECK(regimes[k] == PressureRegime::helmholtz);
      if (exact > 1e-10) CHECK(regimes[k] == PressureRegime::diffusion);
    }
  }
}

TEST_CASE("regime classification thresholds") {
  const Field lambda = {1e-9, -1e-9, 5e-11, -5e-11, 16.0};
  const auto r = classify_regime(lambda, 1e-10);
  CHECK(r[0] == PressureRegime::diffusion);
  CHECK(r[1] == PressureRegime::helmholtz);
  CHECK(r[2] == PressureRegime::marginal);
  CHECK(r[3] == PressureRegime::marginal);
  CHECK(r[4] == PressureRegime::diffusion);
  CHECK(std::string(regime_name(PressureRegime::diffusion)) == "diffusion");
  CHECK(std::string(regime_name(PressureRegime::helmholtz)) == "helmholtz");
  CHECK(std::string(regime_name(PressureRegime::marginal)) == "marginal");
}

TEST_CASE("tridiagonal solver: known system and residual check") {
  // [2 1 0; 1 3 1; 0 1 2] x = [4; 10; 8] -> x = [1; 2; 3]
  const Field lower = {0.0, 1.0, 1.0};
  const Field diag = {2.0, 3.0, 2.0};
  const Field upper = {1.0, 1.0, 0.0};
  const Field rhs = {4.0, 10.0, 8.0};
  const Field x = solve_tridiagonal(lower, diag, upper, rhs);
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(2.0));
  CHECK(x[2] == doctest::Approx(3.0));
}

TEST_CASE("tridiagonal solver: random diagonally dominant system") {
  const std::size_t m = 50;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Field lower(m), diag(m), upper(m), rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    lower[i] = uni(rng);
    upper[i] = uni(rng);
    diag[i] = 3.0 + uni(rng);  // dominant
    rhs[i] = 10.0 * uni(rng);
  }
  const Field x = solve_tridiagonal(lower, diag, upper, rhs);
  double rhs_max = 0.0, res_max = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double ax = diag[i] * x[i];
    if (i > 0) ax += lower[i] * x[i - 1];
    if (i + 1 < m) ax += upper[i] * x[i + 1];
    res_max = std::max(res_max, std::fabs(ax - rhs[i]));
    rhs_max = std::max(rhs_max, std::fabs(rhs[i]));
  }
  CHECK(res_max <= 1e-10 * rhs_max);
}

TEST_CASE("tridiagonal solver reports the vanishing pivot") {
  // Row sums zero with ones in the null space: elimination pivots are
  // exactly 1, 1, 0 in floating point.
  const Field lower = {0.0, -1.0, -1.0};
  const Field diag = {1.0, 2.0, 1.0};
  const Field upper = {-1.0, -1.0, 0.0};
  const Field rhs = {0.0, 0.0, 0.0};
  try {
    solve_tridiagonal(lower, diag, upper, rhs);
    FAIL("expected SolverFailure");
  } catch (const SolverFailure& e) {
    CHECK(e.pivot_index == 2);
  }
}

TEST_CASE("pressure equation: manufactured solution converges at order 2") {
  // H = 1 over a flat bottom gives Lambda = 16 and the operator
  // -4 q'' + 16 q; q* = sin(pi x / L) needs rhs 8 B = (4 pi^2/L^2 + 16) q*.
  const double L = 1.0;
  const auto err = [&](int n) {
    Grid1D g(0.0, L / n, n, BcMode::extrapolate);
    PressureProblem prob;
    prob.grid = g;
    prob.H = Field(static_cast<std::size_t>(n), 1.0);
    prob.lambda = Field(static_cast<std::size_t>(n), 16.0);
    const double kk = M_PI / L;
    prob.rhs = sample(g, [&](double x) {
      return (4.0 * kk * kk + 16.0) * std::sin(kk * x) / 8.0;
    });
    prob.q_left = std::sin(kk * g.center(0));
    prob.q_right = std::sin(kk * g.center(n - 1));
    const Field pnh = solve_pressure_bvp(prob);
    double e = 0.0;
    for (int i = 0; i < n; ++i)
      e = std::max(e, std::fabs(pnh[static_cast<std::size_t>(i)] -
                                std::sin(kk * g.center(i))));
    return e;
  };
  const double e200 = err(200);
  const double e400 = err(400);
  const double e800 = err(800);
  const double o1 = std::log2(e200 / e400);
  const double o2 = std::log2(e400 / e800);
  CHECK(o1 == doctest::Approx(2.0).epsilon(0.15));
  CHECK(o2 == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("returned pressure is q / sqrt(H)") {
  const int n = 50;
  Grid1D g(0.0, 1.0 / n, n, BcMode::extrapolate);
  PressureProblem prob;
  prob.grid = g;
  prob.H = Field(static_cast<std::size_t>(n), 4.0);
  prob.lambda = Field(static_cast<std::size_t>(n), 16.0);
  prob.rhs = Field(static_cast<std::size_t>(n), 1.0);
  prob.q_left = 0.3;
  prob.q_right = -0.2;
  const Field pnh = solve_pressure_bvp(prob);

  // Boundary cells carry the imposed q divided by sqrt(H) = 2.
  CHECK(pnh.front() == doctest::Approx(0.15).epsilon(1e-14));
  CHECK(pnh.back() == doctest::Approx(-0.1).epsilon(1e-14));

  // Scaling back by sqrt(H) must satisfy the discrete equation
  // -4 H^2 q'' + Lambda q = 8 sqrt(H) B on the interior stencil.
  const double dx = g.dx();
  for (int i = 1; i + 1 < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const double qm = 2.0 * pnh[k - 1];
    const double q0 = 2.0 * pnh[k];
    const double qp = 2.0 * pnh[k + 1];
    const double qpp = (qm - 2.0 * q0 + qp) / (dx * dx);
    CHECK(-64.0 * qpp + 16.0 * q0 ==
          doctest::Approx(16.0 * prob.rhs[k]).epsilon(1e-9));
  }

  // The solve is linear: doubling the data doubles the pressure.
  PressureProblem twice = prob;
  twice.q_left *= 2.0;
  twice.q_right *= 2.0;
  for (double& v : twice.rhs) v *= 2.0;
  const Field pnh2 = solve_pressure_bvp(twice);
  for (std::size_t k = 0; k < pnh.size(); ++k)
    CHECK(pnh2[k] == doctest::Approx(2.0 * pnh[k]).epsilon(1e-12));
}

TEST_CASE("indefinite but nonresonant problems still solve") {
  const int n = 40;
  Grid1D g(0.0, 1.0 / n, n, BcMode::extrapolate);
  PressureProblem prob;
  prob.grid = g;
  prob.H = Field(static_cast<std::size_t>(n), 1.0);
  prob.lambda = Field(static_cast<std::size_t>(n), -8.0);
  prob.rhs = Field(static_cast<std::size_t>(n), 1.0);
  const Field pnh = solve_pressure_bvp(prob);
  for (double v : pnh) CHECK(std::isfinite(v));
  // Residual of the interior equation -4 H^2 q'' + Lambda q = 8 sqrt(H) B.
  const double dx = g.dx();
  for (int i = 1; i + 1 < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const double qpp = (pnh[k - 1] - 2.0 * pnh[k] + pnh[k + 1]) / (dx * dx);
    CHECK(-4.0 * qpp - 8.0 * pnh[k] ==
          doctest::Approx(8.0 * prob.rhs[k]).epsilon(1e-9));
  }
}

TEST_CASE("dry cells are rejected") {
  const int n = 10;
  Grid1D g(0.0, 0.1, n, BcMode::extrapolate);
  PressureProblem prob;
  prob.grid = g;
  prob.H = Field(static_cast<std::size_t>(n), 1.0);
  prob.H[5] = 0.0;
  prob.lambda = Field(static_cast<std::size_t>(n), 16.0);
  prob.rhs = Field(static_cast<std::size_t>(n), 1.0);
  CHECK_THROWS_AS(solve_pressure_bvp(prob), WetIntervalViolation);
}

TEST_CASE("rhs assembly: flat bottom, constant depth") {
  // With H constant and zb flat,
  //   B = H (-u (H u)'' + (H u^2)''/2) = H^2 (u')^2  ... for H = 1: (u')^2.
  const int n = 512;
  const double L = 2.0 * M_PI;
  Grid1D g(0.0, L / n, n, BcMode::periodic);
  PhysParams p;
  const Bathymetry b = Bathymetry::flat(0.0);
  State s = State::zero(g);
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    s.H[k] = 1.0;
    s.hu[k] = std::sin(g.center(i));
  }
  const Field B = rhs_B(s, b, g, p);
  for (int i = 0; i < n; ++i) {
    const double c = std::cos(g.center(i));
    CHECK(B[static_cast<std::size_t>(i)] ==
          doctest::Approx(c * c).epsilon(2e-3));
  }
}

TEST_CASE("rhs vanishes at rest") {
  const int n = 64;
  Grid1D g(-2.0, 4.0 / n, n, BcMode::extrapolate);
  PhysParams p;
  const Bathymetry b = Bathymetry::parabolic(0.1, 0.8);
  State s = State::zero(g);
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    s.H[k] = 2.0 - b.eval(g.center(i)).z;  // eta constant
  }
  const Field B = rhs_B(s, b, g, p);
  for (double v : B) CHECK(std::fabs(v) < 1e-10);
}

}  // TEST_SUITE
