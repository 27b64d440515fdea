#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "morsenu/nu_core.hpp"
#include "morsenu/potential.hpp"
#include "morsenu/units.hpp"

// Morse-specific NU pipeline: dimensionless reduction with the Pekeris
// surrogate for the centrifugal barrier, closed-form ro-vibrational
// energies, and normalized radial wavefunctions in associated-Laguerre
// form.

namespace morsenu {

/// Energy-independent dimensionless parameters of the reduced problem
/// in s = e^{-alpha x}.  eps1 is fixed per level by quantization.
struct DimensionlessParams {
  double eps2 = 0.0;
  double eps3 = 0.0;
  double alpha = 0.0;
  double gamma = 0.0;  // eV
  PekerisCoefficients pekeris;

  /// eps2 / (2 sqrt(eps3)); the quantized eps1 is this minus (n + 1/2).
  double level_ratio() const { return eps2 / (2.0 * std::sqrt(eps3)); }
  double quantized_eps1(int n) const { return level_ratio() - (n + 0.5); }
};

inline DimensionlessParams dimensionless_params(const MoleculeParams& p,
                                                int l) {
  const PekerisCoefficients pek = pekeris_coefficients(p, l);
  DimensionlessParams dp;
  dp.alpha = pek.alpha;
  dp.gamma = pek.gamma;
  dp.pekeris = pek;
  const double scale = 2.0 * p.mu * p.r0 * p.r0 /
                       (units::hbar2_over_amu_A2 * dp.alpha * dp.alpha);
  dp.eps2 = scale * (2.0 * p.D - pek.gamma * pek.d1);
  dp.eps3 = scale * (p.D + pek.gamma * pek.d2);
  if (dp.eps3 <= 0.0)
    throw std::domain_error(p.name + ": no bound spectrum (eps3 <= 0)");
  return dp;
}

/// The reduced Morse equation as a generic NU problem:
/// sigma = s, tau_tilde = 1, sigma_tilde = -eps1^2 + eps2 s - eps3 s^2.
inline NuProblem morse_nu_problem(const DimensionlessParams& dp, double eps1) {
  NuProblem p;
  p.sigma = {0.0, 1.0, 0.0};
  p.tau_tilde = {1.0, 0.0, 0.0};
  p.sigma_tilde = {-eps1 * eps1, dp.eps2, -dp.eps3};
  return p;
}

struct EnergyLevel {
  int n = 0;
  int l = 0;
  double energy = 0.0;  // eV
  double eps1 = 0.0;    // quantized eps1 for this level
};

/// Largest n with eps2/(2 sqrt(eps3)) - (n + 1/2) > 0 (strict; a state
/// with eps1 = 0 is not normalizable and counts as unbound).
inline int max_bound_n(const MoleculeParams& p, int l) {
  const double ratio = dimensionless_params(p, l).level_ratio();
  int n_max = static_cast<int>(std::ceil(ratio - 0.5)) - 1;
  if (n_max >= 0 && ratio - (n_max + 0.5) <= 0.0) --n_max;
  if (n_max < 0)
    throw std::domain_error(p.name + ": no bound state at l=" +
                            std::to_string(l));
  return n_max;
}

inline EnergyLevel energy_level(const MoleculeParams& p, int n, int l) {
  if (n < 0) throw std::domain_error("energy_level: n must be >= 0");
  const DimensionlessParams dp = dimensionless_params(p, l);
  const double eps1 = dp.quantized_eps1(n);
  if (eps1 <= 0.0)
    throw std::domain_error(p.name + ": state (n=" + std::to_string(n) +
                            ", l=" + std::to_string(l) +
                            ") not bound; n_max=" +
                            std::to_string(max_bound_n(p, l)));
  EnergyLevel lvl;
  lvl.n = n;
  lvl.l = l;
  lvl.eps1 = eps1;
  const double vib_scale =
      units::hbar2_over_amu_A2 * p.a * p.a / (2.0 * p.mu);
  lvl.energy = dp.gamma * dp.pekeris.d0 - vib_scale * eps1 * eps1;
  return lvl;
}

/// Generalized associated Laguerre polynomial L_n^order(x) by the
/// three-term recurrence.
inline double laguerre(int n, double order, double x) {
  if (n < 0) throw std::domain_error("laguerre: n must be >= 0");
  if (order <= -1.0) throw std::domain_error("laguerre: order must be > -1");
  if (n == 0) return 1.0;
  double lm2 = 1.0;
  double lm1 = 1.0 + order - x;
  for (int k = 2; k <= n; ++k) {
    const double lk =
        ((2.0 * k - 1.0 + order - x) * lm1 - (k - 1.0 + order) * lm2) / k;
    lm2 = lm1;
    lm1 = lk;
  }
  return lm1;
}

namespace detail {

// Composite Simpson on a uniform grid.  The bound-state density is a
// narrow peak (width ~1/a) in a much wider window and its unnormalized
// magnitude swings over hundreds of decades, which defeats adaptive
// schemes driven by an absolute tolerance; a fine fixed grid with a
// step well below the shortest oscillation is both simpler and safe.
inline double composite_simpson(const std::function<double(double)>& f,
                                double a, double b, int intervals) {
  if (intervals % 2 != 0) ++intervals;
  const double h = (b - a) / intervals;
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < intervals; i += 2) odd += f(a + i * h);
  for (int i = 2; i < intervals; i += 2) even += f(a + i * h);
  return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

}  // namespace detail

/// Normalized bound-state radial wavefunction
///   R_nl(r) = A nu^eps1 e^{-nu/2} L_n^{1+2 eps1}(nu),
///   nu = 2 sqrt(eps3) e^{-a (r - r0)}.
/// The prefactor is kept in log space (nu^eps1 alone overflows for deep
/// wells) and fixed by quadrature so that the r-space norm is 1.
struct RadialWavefunction {
  EnergyLevel level;
  MoleculeParams params;
  double two_sqrt_eps3 = 0.0;
  double laguerre_order = 0.0;
  double log_prefactor = 0.0;  // log of A (2 sqrt(eps3))^{-eps1}
  double log_norm = 0.0;       // log of A in the Laguerre-form convention
  double norm = 0.0;           // exp(log_norm)
  double r_max = 0.0;          // quadrature window upper edge

  double nu(double r) const {
    return two_sqrt_eps3 * std::exp(-params.a * (r - params.r0));
  }

  double operator()(double r) const {
    const double v = nu(r);
    if (v <= 0.0) return 0.0;
    const double t = log_prefactor + level.eps1 * std::log(v) - 0.5 * v;
    if (t < -700.0) return 0.0;
    return std::exp(t) * laguerre(level.n, laguerre_order, v);
  }
};

inline RadialWavefunction radial_wavefunction(const MoleculeParams& p, int n,
                                              int l) {
  RadialWavefunction wf;
  wf.level = energy_level(p, n, l);
  wf.params = p;
  const DimensionlessParams dp = dimensionless_params(p, l);
  wf.two_sqrt_eps3 = 2.0 * std::sqrt(dp.eps3);
  wf.laguerre_order = 1.0 + 2.0 * wf.level.eps1;
  wf.r_max = p.r0 + 30.0 / p.a;

  // Peak of the nu^eps1 e^{-nu/2} envelope sets the log-space shift.
  const double eps1 = wf.level.eps1;
  const double shift = eps1 * std::log(2.0 * eps1) - eps1;

  wf.log_prefactor = -shift;  // provisional; normalized below
  const auto density = [&wf](double r) {
    const double v = wf(r);
    return v * v;
  };
  const double r_min = 1e-8;
  const int intervals = 2 * static_cast<int>((wf.r_max - r_min) / 1e-4) + 2;
  const double integral =
      detail::composite_simpson(density, r_min, wf.r_max, intervals);
  if (!(integral > 0.0) || !std::isfinite(integral))
    throw std::runtime_error("radial_wavefunction: normalization failed");
  wf.log_prefactor = -shift - 0.5 * std::log(integral);
  wf.log_norm = wf.log_prefactor + eps1 * std::log(wf.two_sqrt_eps3);
  wf.norm = std::exp(wf.log_norm);
  return wf;
}

/// Closed-form normalization constant
///   A^2 = 4 a n! (1 + n + eps1)^2 (2 sqrt(eps3))^{2 eps1} / (1+n+2 eps1)!
/// with non-integer factorials read as Gamma(x+1).  Diagnostic only; the
/// quadrature norm is authoritative.
inline double normalization_constant_closed_form(const MoleculeParams& p, int n,
                                           int l) {
  const EnergyLevel lvl = energy_level(p, n, l);
  const DimensionlessParams dp = dimensionless_params(p, l);
  const double gamma_arg = 2.0 + n + 2.0 * lvl.eps1;
  if (gamma_arg <= 0.0)
    throw std::domain_error("normalization_constant_closed_form: Gamma pole");
  const double log_a2 = std::log(4.0 * p.a) + std::lgamma(n + 1.0) +
                        2.0 * std::log(1.0 + n + lvl.eps1) +
                        2.0 * lvl.eps1 * std::log(2.0 * std::sqrt(dp.eps3)) -
                        std::lgamma(gamma_arg);
  return std::exp(0.5 * log_a2);
}

}  // namespace morsenu
