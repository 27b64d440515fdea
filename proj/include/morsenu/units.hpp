#pragma once

#include <stdexcept>

// Internal unit system: energy in eV, length in Angstrom, mass in amu.
// Conversions from other units happen at ingestion boundaries only.

namespace morsenu::units {

// CODATA-2018 fundamental constants (SI).
inline constexpr double hbar_J_s = 1.054571817e-34;
inline constexpr double planck_J_s = 6.62607015e-34;
inline constexpr double c_m_per_s = 2.99792458e8;
inline constexpr double amu_kg = 1.66053906660e-27;
inline constexpr double electron_charge_C = 1.602176634e-19;

// hbar^2 / (1 amu * 1 A^2), expressed in eV.  This is the only place
// hbar enters the library.
inline constexpr double hbar2_over_amu_A2 =
    hbar_J_s * hbar_J_s / (amu_kg * 1e-20) / electron_charge_C;

// Photon energy of a 1 cm^-1 wavenumber, in eV.
inline constexpr double cm1_to_ev_factor =
    planck_J_s * c_m_per_s * 100.0 / electron_charge_C;

inline double cm1_to_ev(double wavenumber_cm1) {
  return wavenumber_cm1 * cm1_to_ev_factor;
}

/// Rotational energy scale hbar^2/(2 mu r0^2) in eV; multiply by l(l+1)
/// to get the centrifugal energy at the equilibrium bond length.
inline double rotational_unit(double mu_amu, double r0_angstrom) {
  if (mu_amu <= 0.0) throw std::domain_error("rotational_unit: mu must be > 0");
  if (r0_angstrom <= 0.0)
    throw std::domain_error("rotational_unit: r0 must be > 0");
  return hbar2_over_amu_A2 / (2.0 * mu_amu * r0_angstrom * r0_angstrom);
}

}  // namespace morsenu::units
