#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "morsenu/potential.hpp"
#include "morsenu/units.hpp"

// Independent numerical ground truth: Numerov integration of the exact
// radial equation (Morse + true 1/r^2 centrifugal term) with node-counting
// bisection on the energy.  No Pekeris surrogate enters anywhere here.

namespace morsenu::oracle {

struct RadialGrid {
  double r_min = 0.0;
  double r_max = 0.0;
  double step = 0.0;
  int points = 0;

  double r(int i) const { return r_min + i * step; }

  static RadialGrid with_step(const MoleculeParams& p, double step) {
    validate(p);
    RadialGrid g;
    g.r_min = std::max(0.05 * p.r0, 0.05);
    g.r_max = p.r0 + 30.0 / p.a;
    g.points = std::max(
        1000, static_cast<int>(std::lround((g.r_max - g.r_min) / step)) + 1);
    g.step = (g.r_max - g.r_min) / (g.points - 1);
    return g;
  }

  /// Default grid: >= 40 points per local de Broglie wavelength at
  /// E = -D/2, capped at 5e-4 A, and small enough that h^2 f stays
  /// well below 1 on the repulsive inner wall.
  static RadialGrid defaults(const MoleculeParams& p) {
    const double inv_len2 = 2.0 * p.mu / units::hbar2_over_amu_A2;  // 1/(eV A^2)
    const double k_well = std::sqrt(inv_len2 * 0.5 * p.D);
    double step = std::min(2.0 * std::numbers::pi / k_well / 40.0, 5e-4);
    const double r_min = std::max(0.05 * p.r0, 0.05);
    const double f_wall = inv_len2 * (morse_potential(p, r_min) + p.D);
    if (f_wall > 0.0) step = std::min(step, std::sqrt(0.5 / f_wall));
    return with_step(p, step);
  }
};

inline void validate(const RadialGrid& g, const MoleculeParams& p) {
  if (!(0.0 < g.r_min && g.r_min < p.r0 && p.r0 < g.r_max))
    throw std::domain_error("RadialGrid: need 0 < r_min < r0 < r_max");
  if (g.step <= 0.0 || g.points < 1000)
    throw std::domain_error("RadialGrid: need step > 0 and >= 1000 points");
}

struct NumerovRun {
  int node_count = 0;
  double boundary_residual = 0.0;  // log-derivative mismatch vs e^{-kappa r}
  std::vector<double> u;           // unnormalized; rescaled to avoid overflow
};

namespace detail {

// u'' = f u with f = (2 mu / hbar^2)(V_eff - E), sampled on the grid.
inline std::vector<double> f_values(const MoleculeParams& p, int l, double E,
                                    const RadialGrid& g) {
  const double inv_len2 = 2.0 * p.mu / units::hbar2_over_amu_A2;
  std::vector<double> f(g.points);
  for (int i = 0; i < g.points; ++i)
    f[i] = inv_len2 * (effective_potential(p, l, g.r(i)) - E);
  return f;
}

inline void rescale_if_large(std::vector<double>& u, int upto) {
  const double m = std::fabs(u[upto]);
  if (m > 1e150) {
    const double s = 1.0 / m;
    for (int j = 0; j <= upto; ++j) u[j] *= s;
  }
}

// Outward Numerov pass from u(r_min) = 0.  Node count is exact; past the
// outer turning point the tail is dominated by the exponentially growing
// solution, which is precisely what makes the node count flip at an
// eigenvalue.
// `stop` < 0 integrates the full grid; otherwise the pass ends at that
// index (used for matching, where running into the far tail would force
// rescales that flush the interior to zero).
inline NumerovRun outward(const std::vector<double>& f, const RadialGrid& g,
                          double kappa, int stop = -1) {
  const double hh = g.step * g.step;
  const int last = stop < 0 ? g.points - 1 : stop;
  NumerovRun run;
  run.u.assign(g.points, 0.0);
  run.u[0] = 0.0;
  run.u[1] = 1e-120;
  for (int i = 1; i + 1 <= last; ++i) {
    const double num = 2.0 * run.u[i] * (1.0 + 5.0 * hh * f[i] / 12.0) -
                       run.u[i - 1] * (1.0 - hh * f[i - 1] / 12.0);
    run.u[i + 1] = num / (1.0 - hh * f[i + 1] / 12.0);
    if (run.u[i + 1] * run.u[i] < 0.0) ++run.node_count;
    rescale_if_large(run.u, i + 1);
  }
  if (stop >= 0) return run;
  const int n = g.points;
  const double denom = run.u[n - 2];
  if (denom != 0.0) {
    const double logder =
        (run.u[n - 1] - run.u[n - 3]) / (2.0 * g.step * denom);
    run.boundary_residual = logder + kappa;
  } else {
    run.boundary_residual = std::numeric_limits<double>::infinity();
  }
  return run;
}

// Inward pass seeded with the asymptotic decay e^{-kappa r}, integrated
// down to index `stop`.  Entries below `stop` are left zero.
inline std::vector<double> inward(const std::vector<double>& f,
                                  const RadialGrid& g, double kappa,
                                  int stop) {
  const double hh = g.step * g.step;
  const int n = g.points;
  std::vector<double> u(n, 0.0);
  u[n - 1] = 1e-200;
  u[n - 2] = 1e-200 * std::exp(kappa * g.step);
  for (int i = n - 2; i - 1 >= stop; --i) {
    const double num = 2.0 * u[i] * (1.0 + 5.0 * hh * f[i] / 12.0) -
                       u[i + 1] * (1.0 - hh * f[i + 1] / 12.0);
    u[i - 1] = num / (1.0 - hh * f[i - 1] / 12.0);
    const double m = std::fabs(u[i - 1]);
    if (m > 1e150) {
      const double s = 1.0 / m;
      for (int j = i - 1; j < n; ++j) u[j] *= s;
    }
  }
  return u;
}

// Outermost classically allowed index, clamped to the interior.
inline int match_index(const MoleculeParams& p, int l, double E,
                       const RadialGrid& g) {
  int m = -1;
  for (int i = g.points - 2; i >= 1; --i) {
    if (effective_potential(p, l, g.r(i)) < E) {
      m = i;
      break;
    }
  }
  if (m < 0) {
    // Classically forbidden everywhere; match at the potential minimum.
    double best = std::numeric_limits<double>::max();
    for (int i = 1; i + 1 < g.points; ++i) {
      const double v = effective_potential(p, l, g.r(i));
      if (v < best) {
        best = v;
        m = i;
      }
    }
  }
  return std::clamp(m, 2, g.points - 3);
}

}  // namespace detail

/// One outward shot; returns interior node count and the log-derivative
/// mismatch against the asymptotic decay at r_max.
inline NumerovRun numerov_integrate(const MoleculeParams& p, int l, double E,
                                    const RadialGrid& g) {
  validate(g, p);
  if (E >= 0.0)
    throw std::domain_error("numerov_integrate: bound-state search needs E < 0");
  const double kappa =
      std::sqrt(-2.0 * p.mu * E / units::hbar2_over_amu_A2);
  return detail::outward(detail::f_values(p, l, E, g), g, kappa);
}

struct ShootingResult {
  int n = 0;
  int l = 0;
  double energy = 0.0;
  int node_count = 0;
  double boundary_residual = 0.0;  // matched log-derivative mismatch
  bool converged = false;
};

namespace detail {

// Matched log-derivative residual at the outer turning point: outward and
// inward solutions must have equal u'/u at an eigenvalue.
inline double matched_residual(const MoleculeParams& p, int l, double E,
                               const RadialGrid& g) {
  const double kappa =
      std::sqrt(-2.0 * p.mu * E / units::hbar2_over_amu_A2);
  const auto f = f_values(p, l, E, g);
  const int m = match_index(p, l, E, g);
  const auto out = outward(f, g, kappa, m + 1);
  const auto in = inward(f, g, kappa, m - 1);
  if (out.u[m] == 0.0 || in[m] == 0.0)
    return std::numeric_limits<double>::infinity();
  const double d_out = (out.u[m + 1] - out.u[m - 1]) / (2.0 * g.step * out.u[m]);
  const double d_in = (in[m + 1] - in[m - 1]) / (2.0 * g.step * in[m]);
  return d_out - d_in;
}

}  // namespace detail

/// Bisection on the n -> n+1 node-count transition, refined until the
/// energy bracket is below tol (eV).
inline ShootingResult solve_level(const MoleculeParams& p, int n, int l,
                                  double tol = 1e-7,
                                  const RadialGrid* grid = nullptr) {
  if (tol <= 0.0) throw std::domain_error("solve_level: tol must be > 0");
  if (n < 0 || l < 0) throw std::domain_error("solve_level: n, l must be >= 0");
  const RadialGrid g = grid ? *grid : RadialGrid::defaults(p);

  const auto nodes = [&](double E) {
    return detail::outward(
               detail::f_values(p, l, E, g), g,
               std::sqrt(-2.0 * p.mu * E / units::hbar2_over_amu_A2))
        .node_count;
  };

  double lo = -p.D;
  double hi = -1e-9;
  if (nodes(hi) < n + 1)
    throw std::runtime_error(p.name + ": level (n=" + std::to_string(n) +
                             ", l=" + std::to_string(l) +
                             ") not bound numerically");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (nodes(mid) >= n + 1)
      hi = mid;
    else
      lo = mid;
  }

  ShootingResult res;
  res.n = n;
  res.l = l;
  res.energy = 0.5 * (lo + hi);
  res.node_count = nodes(lo);
  res.boundary_residual = detail::matched_residual(p, l, res.energy, g);
  const double kappa =
      std::sqrt(-2.0 * p.mu * res.energy / units::hbar2_over_amu_A2);
  res.converged = res.node_count == n && (hi - lo) <= tol &&
                  std::fabs(res.boundary_residual) <= 0.05 * kappa;
  return res;
}

/// Normalized eigenfunction at a solved energy: outward solution up to the
/// outer turning point, inward (asymptotically seeded) solution beyond,
/// scaled to match and trapezoid-normalized on the grid.
inline std::vector<double> eigenfunction(const MoleculeParams& p,
                                         const ShootingResult& solved,
                                         const RadialGrid& g) {
  const double E = solved.energy;
  const double kappa =
      std::sqrt(-2.0 * p.mu * E / units::hbar2_over_amu_A2);
  const auto f = detail::f_values(p, solved.l, E, g);
  const int m = detail::match_index(p, solved.l, E, g);
  const auto out = detail::outward(f, g, kappa, m + 1);
  const auto in = detail::inward(f, g, kappa, m - 1);
  if (out.u[m] == 0.0 || in[m] == 0.0)
    throw std::runtime_error("eigenfunction: vanishing match value");

  std::vector<double> u(g.points);
  for (int i = 0; i <= m; ++i) u[i] = out.u[i] / out.u[m];
  for (int i = m + 1; i < g.points; ++i) u[i] = in[i] / in[m];

  double norm = 0.0;
  for (int i = 0; i + 1 < g.points; ++i)
    norm += 0.5 * (u[i] * u[i] + u[i + 1] * u[i + 1]) * g.step;
  norm = std::sqrt(norm);

  // Fix the overall sign via the dominant antinode.
  int peak = 0;
  for (int i = 0; i < g.points; ++i)
    if (std::fabs(u[i]) > std::fabs(u[peak])) peak = i;
  const double sign = u[peak] >= 0.0 ? 1.0 : -1.0;
  for (auto& v : u) v *= sign / norm;
  return u;
}

}  // namespace morsenu::oracle
