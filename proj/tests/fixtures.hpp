#pragma once

#include <cmath>

#include "morsenu/potential.hpp"
#include "morsenu/units.hpp"

// Shared test fixtures and independent oracles.  Nothing here may go
// through the NU pipeline under test.

namespace morsenu::testing {

inline MoleculeParams co() {
  return {"CO", units::cm1_to_ev(90540.0), 2.2994, 1.1283, 6.8606719};
}

inline MoleculeParams lih() {
  return {"LiH", units::cm1_to_ev(20287.0), 1.1280, 1.5956, 0.8801221};
}

/// Textbook Morse spectrum for l = 0:
///   E_n = -D + hbar a sqrt(2D/mu) (n + 1/2) - hbar^2 a^2 / (2 mu) (n + 1/2)^2
inline double closed_form_l0_energy(const MoleculeParams& p, int n) {
  const double c = units::hbar2_over_amu_A2 * p.a * p.a / (2.0 * p.mu);
  const double half = n + 0.5;
  return -p.D + 2.0 * std::sqrt(c * p.D) * half - c * half * half;
}

}  // namespace morsenu::testing
