#include <cmath>
#include <cstdio>
#include <fstream>

#include <doctest.h>

#include "nhsw/bathymetry.hpp"
#include "nhsw/errors.hpp"
#include "nhsw/grid.hpp"

using namespace nhsw;

TEST_SUITE("bathymetry") {

TEST_CASE("flat bottom") {
  const Bathymetry b = Bathymetry::flat(0.7);
  for (double x : {-100.0, 0.0, 3.5}) {
    const auto e = b.eval(x);
    CHECK(e.z == doctest::Approx(0.7));
    CHECK(e.slope == 0.0);
    CHECK(e.curvature == 0.0);
  }
  CHECK_FALSE(b.derivatives_sampled());
}

TEST_CASE("default-constructed bathymetry is flat at zero") {
  const Bathymetry b;
  CHECK(b.eval(2.0).z == 0.0);
  CHECK(b.kind() == Bathymetry::Kind::flat);
}

TEST_CASE("parabolic bowl") {
  const Bathymetry b = Bathymetry::parabolic(0.3, 2.0);
  const auto e = b.eval(1.5);
  CHECK(e.z == doctest::Approx(0.3 + 0.5 * 2.0 * 1.5 * 1.5));
  CHECK(e.slope == doctest::Approx(2.0 * 1.5));
  CHECK(e.curvature == doctest::Approx(2.0));
}

TEST_CASE("sampled bathymetry interpolates and differentiates") {
  const int n = 400;
  Grid1D g(0.0, M_PI / n, n, BcMode::extrapolate);
  const Bathymetry b = Bathymetry::sampled(g, sample(g, [](double x) {
                                             return std::sin(x);
                                           }));
  CHECK(b.derivatives_sampled());
  const auto e = b.eval(M_PI / 2.0);
  CHECK(e.z == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(e.slope == doctest::Approx(0.0).epsilon(1e-3));
  CHECK(std::fabs(e.slope) < 1e-2);
  CHECK(e.curvature == doctest::Approx(-1.0).epsilon(1e-2));
}

TEST_CASE("sampled bathymetry is exact on linear data") {
  Grid1D g(-1.0, 0.2, 10, BcMode::extrapolate);
  const Bathymetry b =
      Bathymetry::sampled(g, sample(g, [](double x) { return 2.0 * x + 1.0; }));
  // Arbitrary points between samples, including the edge half-cells.
  for (double x : {-0.97, -0.33, 0.0, 0.514, 0.99}) {
    CHECK(b.eval(x).z == doctest::Approx(2.0 * x + 1.0).epsilon(1e-12));
    CHECK(b.eval(x).slope == doctest::Approx(2.0).epsilon(1e-10));
  }
}

TEST_CASE("sampled bathymetry rejects queries outside its domain") {
  Grid1D g(0.0, 0.1, 10, BcMode::extrapolate);
  const Bathymetry b = Bathymetry::sampled(g, Field(10, 0.0));
  CHECK_THROWS_AS(b.eval(-0.5), OutOfDomainError);
  CHECK_THROWS_AS(b.eval(1.5), OutOfDomainError);
  CHECK_NOTHROW(b.eval(0.0));
  CHECK_NOTHROW(b.eval(1.0));
}

TEST_CASE("generated bathymetry carries its own derivatives") {
  Grid1D g(0.0, 0.25, 8, BcMode::extrapolate);
  const Field z = sample(g, [](double x) { return x; });
  const Field s(8, 42.0);  // deliberately not the slope of z
  const Field c(8, -7.0);
  const Bathymetry b = Bathymetry::generated(g, z, s, c);
  CHECK_FALSE(b.derivatives_sampled());
  CHECK(b.eval(1.0).slope == doctest::Approx(42.0));
  CHECK(b.eval(1.0).curvature == doctest::Approx(-7.0));
}

TEST_CASE("values/slopes/curvatures sample onto any grid") {
  const Bathymetry b = Bathymetry::parabolic(0.0, 1.0);
  Grid1D g(-2.0, 0.5, 8, BcMode::periodic);
  const Field v = b.values(g);
  const Field s = b.slopes(g);
  const Field c = b.curvatures(g);
  for (int i = 0; i < 8; ++i) {
    const double x = g.center(i);
    CHECK(v[static_cast<std::size_t>(i)] == doctest::Approx(0.5 * x * x));
    CHECK(s[static_cast<std::size_t>(i)] == doctest::Approx(x));
    CHECK(c[static_cast<std::size_t>(i)] == doctest::Approx(1.0));
  }
}

TEST_CASE("csv round trip") {
  const char* path = "bathy_roundtrip.csv";
  {
    std::ofstream f(path);
    f << "x,zb\n";
    for (int i = 0; i < 5; ++i)
      f << 0.1 + 0.2 * i << "," << 1.0 + i << "\n";
  }
  const Bathymetry b = Bathymetry::from_csv(path);
  CHECK(b.eval(0.5).z == doctest::Approx(3.0));
  CHECK(b.eval(0.6).z == doctest::Approx(3.5));
  std::remove(path);
}

TEST_CASE("csv loader validates header and spacing") {
  const char* bad_header = "bathy_bad_header.csv";
  {
    std::ofstream f(bad_header);
    f << "x,depth\n0,1\n1,2\n2,3\n";
  }
  CHECK_THROWS_AS(Bathymetry::from_csv(bad_header), ConfigError);
  std::remove(bad_header);

  const char* bad_spacing = "bathy_bad_spacing.csv";
  {
    std::ofstream f(bad_spacing);
    f << "x,zb\n0,1\n1,2\n2.5,3\n";
  }
  CHECK_THROWS_AS(Bathymetry::from_csv(bad_spacing), ConfigError);
  std::remove(bad_spacing);

  CHECK_THROWS_AS(Bathymetry::from_csv("no_such_file.csv"), Error);
}

}  // TEST_SUITE
