#include <cmath>

#include <doctest.h>

#include "nhsw/errors.hpp"
#include "nhsw/grid.hpp"

using namespace nhsw;

namespace {

double max_abs_diff(const Field& a, const Field& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_SUITE("grid") {

TEST_CASE("geometry accessors") {
  Grid1D g(-1.0, 0.25, 8, BcMode::extrapolate);
  CHECK(g.n() == 8);
  CHECK(g.dx() == doctest::Approx(0.25));
  CHECK(g.center(0) == doctest::Approx(-0.875));
  CHECK(g.center(7) == doctest::Approx(0.875));
  CHECK(g.x_right() == doctest::Approx(1.0));
  CHECK(g.length() == doctest::Approx(2.0));
  const Field c = g.centers();
  REQUIRE(c.size() == 8);
  CHECK(c[3] == doctest::Approx(g.center(3)));
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(Grid1D(0.0, 0.0, 8, BcMode::periodic), ContractViolation);
  CHECK_THROWS_AS(Grid1D(0.0, -0.1, 8, BcMode::periodic), ContractViolation);
  CHECK_THROWS_AS(Grid1D(0.0, 0.1, 2, BcMode::periodic), ContractViolation);
  const double nan = std::nan("");
  CHECK_THROWS_AS(Grid1D(nan, 0.1, 8, BcMode::periodic), ContractViolation);
}

TEST_CASE("ddx exact on quadratics including one-sided edges") {
  Grid1D g(0.5, 0.1, 12, BcMode::extrapolate);
  const Field f = sample(g, [](double x) { return 3.0 * x * x - 2.0 * x + 1.0; });
  const Field expect = sample(g, [](double x) { return 6.0 * x - 2.0; });
  CHECK(max_abs_diff(ddx(f, g), expect) < 1e-12);
}

TEST_CASE("d2dx2 exact on cubics including one-sided edges") {
  Grid1D g(-0.3, 0.05, 16, BcMode::extrapolate);
  const Field f = sample(g, [](double x) { return x * x * x - x * x; });
  const Field expect = sample(g, [](double x) { return 6.0 * x - 2.0; });
  CHECK(max_abs_diff(d2dx2(f, g), expect) < 1e-10);
}

TEST_CASE("periodic stencils wrap") {
  const double L = 2.0 * M_PI;
  const int n = 64;
  Grid1D g(0.0, L / n, n, BcMode::periodic);
  const Field f = sample(g, [](double x) { return std::sin(x); });
  const Field d1 = ddx(f, g);
  const Field d2 = d2dx2(f, g);
  const Field c1 = sample(g, [](double x) { return std::cos(x); });
  const Field c2 = sample(g, [](double x) { return -std::sin(x); });
  // Uniform second-order accuracy, no edge artifacts.
  CHECK(max_abs_diff(d1, c1) < 2.0e-3);
  CHECK(max_abs_diff(d2, c2) < 3.0e-3);
  CHECK(std::fabs(d1[0] - c1[0]) < 2.0e-3);
  CHECK(std::fabs(d2[0] - c2[0]) < 3.0e-3);
}

TEST_CASE("second-order convergence of both stencils") {
  const auto err = [](int n, bool second) {
    Grid1D g(0.0, 1.0 / n, n, BcMode::extrapolate);
    const Field f = sample(g, [](double x) { return std::exp(x); });
    const Field d = second ? d2dx2(f, g) : ddx(f, g);
    return max_abs_diff(d, f);  // all derivatives of exp are exp
  };
  for (bool second : {false, true}) {
    const double e1 = err(40, second);
    const double e2 = err(80, second);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.25));
  }
}

TEST_CASE("dirichlet ghosts close the stencil exactly on quadratics") {
  const int n = 10;
  const double dx = 0.1;
  const auto f = [](double x) { return x * x + x; };
  // Ghost values at the off-domain stencil positions x_{-1} and x_n.
  Grid1D g(0.0, dx, n, BcMode::dirichlet, f(-0.5 * dx), f(1.0 + 0.5 * dx));
  const Field v = sample(g, f);
  const Field d1 = ddx(v, g);
  const Field expect = sample(g, [](double x) { return 2.0 * x + 1.0; });
  CHECK(max_abs_diff(d1, expect) < 1e-12);
}

TEST_CASE("length mismatch is rejected") {
  Grid1D g(0.0, 0.1, 8, BcMode::periodic);
  Field wrong(7, 0.0);
  CHECK_THROWS_AS(ddx(wrong, g), ContractViolation);
  CHECK_THROWS_AS(d2dx2(wrong, g), ContractViolation);
}

}  // TEST_SUITE
