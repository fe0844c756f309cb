#include "nhsw/pressure.hpp"

#include <cmath>
#include <string>

#include "nhsw/errors.hpp"

namespace nhsw {

Field lambda_coefficient(const Field& H, const Bathymetry& b, const Grid1D& g) {
  if (H.size() != static_cast<std::size_t>(g.n()))
    throw ContractViolation("lambda_coefficient: H not bound to grid");
  const Field Hx = ddx(H, g);
  const Field Hxx = d2dx2(H, g);
  const std::size_t n = H.size();
  Field lam(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto zb = b.eval(g.center(static_cast<int>(i)));
    lam[i] = 16.0 * (1.0 + zb.slope * zb.slope) - 8.0 * H[i] * zb.curvature +
             16.0 * Hx[i] * zb.slope - 2.0 * H[i] * Hxx[i] + 3.0 * Hx[i] * Hx[i];
  }
  return lam;
}

Field rhs_B(const State& s, const Bathymetry& b, const Grid1D& g,
            const PhysParams& p) {
  if (s.H.size() != static_cast<std::size_t>(g.n()))
    throw ContractViolation("rhs_B: state not bound to grid");
  const Velocities v = velocities(s, p);
  const std::size_t n = s.H.size();
  Field hu(n), hu2(n);
  for (std::size_t i = 0; i < n; ++i) {
    hu[i] = s.H[i] * v.u[i];
    hu2[i] = s.H[i] * v.u[i] * v.u[i];
  }
  const Field d2hu = d2dx2(hu, g);
  const Field d2hu2 = d2dx2(hu2, g);
  const Field Hx = ddx(s.H, g);
  const Field Hxx = d2dx2(s.H, g);
  Field B(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto zb = b.eval(g.center(static_cast<int>(i)));
    const double H = s.H[i];
    const double u = v.u[i];
    const double d2_h2zb = Hxx[i] + 2.0 * zb.curvature;   // (H + 2 zb)''
    const double d2_eta = Hxx[i] + zb.curvature;          // (H + zb)''
    const double d1_eta = Hx[i] + zb.slope;               // (H + zb)'
    B[i] = H * (-u * d2hu[i] + 0.5 * d2hu2[i] + 0.5 * u * u * d2_h2zb) +
           0.5 * p.g * H * (H * d2_eta - 2.0 * zb.slope * d1_eta);
  }
  return B;
}

Field solve_tridiagonal(const Field& lower, const Field& diag,
                        const Field& upper, const Field& rhs) {
  const std::size_t m = diag.size();
  if (lower.size() != m || upper.size() != m || rhs.size() != m)
    throw ContractViolation("solve_tridiagonal: band lengths differ");
  if (m == 0) return {};
  double scale = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    scale = std::max(scale, std::fabs(lower[i]) + std::fabs(diag[i]) +
                                std::fabs(upper[i]));
  const double pivot_tol = 1e-13 * scale;

  Field c(m), d(m);
  double piv = diag[0];
  if (!std::isfinite(piv) || std::fabs(piv) <= pivot_tol)
    throw SolverFailure("solve_tridiagonal: vanishing pivot at row 0", 0);
  c[0] = upper[0] / piv;
  d[0] = rhs[0] / piv;
  for (std::size_t i = 1; i < m; ++i) {
    piv = diag[i] - lower[i] * c[i - 1];
    if (!std::isfinite(piv) || std::fabs(piv) <= pivot_tol)
      throw SolverFailure("solve_tridiagonal: vanishing pivot at row " +
                              std::to_string(i),
                          static_cast<int>(i));
    c[i] = upper[i] / piv;
    d[i] = (rhs[i] - lower[i] * d[i - 1]) / piv;
  }
  Field x(m);
  x[m - 1] = d[m - 1];
  for (std::size_t i = m - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

Field solve_pressure_bvp(const PressureProblem& prob, double h_min) {
  const std::size_t n = prob.H.size();
  if (prob.lambda.size() != n || prob.rhs.size() != n ||
      n != static_cast<std::size_t>(prob.grid.n()))
    throw ContractViolation("solve_pressure_bvp: problem fields not bound to grid");
  for (std::size_t i = 0; i < n; ++i)
    if (prob.H[i] < h_min)
      throw WetIntervalViolation(
          "solve_pressure_bvp: dry cell " + std::to_string(i) +
          " inside pressure problem (H = " + std::to_string(prob.H[i]) + ")");

  Field q(n);
  q[0] = prob.q_left;
  q[n - 1] = prob.q_right;
  if (n > 2) {
    const std::size_t m = n - 2;  // interior unknowns
    const double inv_h2 = 1.0 / (prob.grid.dx() * prob.grid.dx());
    Field lo(m), di(m), up(m), rh(m);
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t i = k + 1;
      const double a = 4.0 * prob.H[i] * prob.H[i] * inv_h2;
      lo[k] = -a;
      up[k] = -a;
      di[k] = 2.0 * a + prob.lambda[i];
      rh[k] = 8.0 * std::sqrt(prob.H[i]) * prob.rhs[i];
    }
    rh[0] -= lo[0] * prob.q_left;
    rh[m - 1] -= up[m - 1] * prob.q_right;
    const Field qi = solve_tridiagonal(lo, di, up, rh);
    for (std::size_t k = 0; k < m; ++k) q[k + 1] = qi[k];
  }

  Field pnh(n);
  for (std::size_t i = 0; i < n; ++i) pnh[i] = q[i] / std::sqrt(prob.H[i]);
  return pnh;
}

std::vector<PressureRegime> classify_regime(const Field& lambda, double tau) {
  std::vector<PressureRegime> out(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] > tau)
      out[i] = PressureRegime::diffusion;
    else if (lambda[i] < -tau)
      out[i] = PressureRegime::helmholtz;
    else
      out[i] = PressureRegime::marginal;
  }
  return out;
}

const char* regime_name(PressureRegime r) {
  switch (r) {
    case PressureRegime::diffusion: return "diffusion";
    case PressureRegime::helmholtz: return "helmholtz";
    case PressureRegime::marginal: return "marginal";
  }
  return "?";
}

}  // namespace nhsw
