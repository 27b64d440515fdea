#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "morsenu/units.hpp"

namespace morsenu {

/// Physical description of a diatomic system.
/// D: dissociation energy [eV], a: well width parameter [1/A],
/// r0: equilibrium bond length [A], mu: reduced mass [amu].
struct MoleculeParams {
  std::string name;
  double D = 0.0;
  double a = 0.0;
  double r0 = 0.0;
  double mu = 0.0;
};

inline void validate(const MoleculeParams& p) {
  if (p.D <= 0.0) throw std::domain_error(p.name + ": D must be > 0");
  if (p.a <= 0.0) throw std::domain_error(p.name + ": a must be > 0");
  if (p.r0 <= 0.0) throw std::domain_error(p.name + ": r0 must be > 0");
  if (p.mu <= 0.0) throw std::domain_error(p.name + ": mu must be > 0");
}

// The dimensionless radial coordinate x = (r - r0)/r0 and its inverse.
// Kept explicit so r-space and x-space never mix silently.
inline double radial_x(const MoleculeParams& p, double r) {
  return (r - p.r0) / p.r0;
}
inline double radial_r(const MoleculeParams& p, double x) {
  return p.r0 * (1.0 + x);
}

/// Morse potential D(e^{-2a(r-r0)} - 2 e^{-a(r-r0)}) in eV.
inline double morse_potential(const MoleculeParams& p, double r) {
  const double w = std::exp(-p.a * (r - p.r0));
  return p.D * (w * w - 2.0 * w);
}

/// Morse potential plus the exact centrifugal barrier hbar^2 l(l+1)/(2 mu r^2).
inline double effective_potential(const MoleculeParams& p, int l, double r) {
  if (r <= 0.0) throw std::domain_error("effective_potential: r must be > 0");
  if (l < 0) throw std::domain_error("effective_potential: l must be >= 0");
  const double centrifugal =
      units::hbar2_over_amu_A2 * l * (l + 1) / (2.0 * p.mu * r * r);
  return morse_potential(p, r) + centrifugal;
}

/// Coefficients of the three-exponential surrogate for the centrifugal
/// barrier, matched to the Taylor expansion of gamma/(1+x)^2 through x^2.
/// gamma carries l(l+1) already folded in.
struct PekerisCoefficients {
  double alpha = 0.0;  // a * r0
  double gamma = 0.0;  // hbar^2 l(l+1) / (2 mu r0^2), eV
  double d0 = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

inline PekerisCoefficients pekeris_coefficients(const MoleculeParams& p,
                                                int l) {
  validate(p);
  if (l < 0) throw std::domain_error("pekeris_coefficients: l must be >= 0");
  PekerisCoefficients c;
  c.alpha = p.a * p.r0;
  c.gamma = units::rotational_unit(p.mu, p.r0) * l * (l + 1);
  const double ia = 1.0 / c.alpha;
  c.d0 = 1.0 - 3.0 * ia + 3.0 * ia * ia;
  c.d1 = 4.0 * ia - 6.0 * ia * ia;
  c.d2 = -ia + 3.0 * ia * ia;
  return c;
}

/// gamma (D0 + D1 e^{-alpha x} + D2 e^{-2 alpha x}), the Pekeris surrogate
/// for the rotational term, evaluated at x = (r - r0)/r0.
inline double pekeris_rotational_potential(const PekerisCoefficients& c,
                                           double x) {
  const double w = std::exp(-c.alpha * x);
  return c.gamma * (c.d0 + c.d1 * w + c.d2 * w * w);
}

}  // namespace morsenu
