#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "morsenu/potential.hpp"
#include "morsenu/units.hpp"

// Molecule files are JSON with exactly the keys
//   {"name", "D_cm1", "a_inv_angstrom", "r0_angstrom", "mu_amu"}.
// D is given in cm^-1 (as the literature tabulates it) and converted to
// eV at this ingestion boundary.

namespace morsenu {

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline MoleculeParams parse_molecule_json(const nlohmann::json& j,
                                          const std::string& context) {
  if (!j.is_object()) throw FileError(context + ": expected a JSON object");
  static const char* keys[] = {"name", "D_cm1", "a_inv_angstrom",
                               "r0_angstrom", "mu_amu"};
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw FileError(context + ": unknown key \"" + key + "\"");
  }
  for (const char* k : keys)
    if (!j.contains(k)) throw FileError(context + ": missing key \"" + k + "\"");
  if (!j["name"].is_string())
    throw FileError(context + ": \"name\" must be a string");

  MoleculeParams p;
  p.name = j["name"].get<std::string>();
  const auto number = [&](const char* k) {
    const auto& v = j[k];
    if (!v.is_number())
      throw FileError(context + ": \"" + std::string(k) + "\" must be a number");
    const double x = v.get<double>();
    if (x <= 0.0)
      throw FileError(context + ": \"" + std::string(k) +
                      "\" must be strictly positive");
    return x;
  };
  p.D = units::cm1_to_ev(number("D_cm1"));
  p.a = number("a_inv_angstrom");
  p.r0 = number("r0_angstrom");
  p.mu = number("mu_amu");
  return p;
}

inline MoleculeParams load_molecule_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError(path + ": cannot open file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FileError(path + ": " + e.what());
  }
  return parse_molecule_json(j, path);
}

/// Writes the five-key JSON form; doubles round-trip bit-identically
/// through nlohmann's shortest-representation serialization.
inline void write_molecule_file(const std::string& path,
                                const std::string& name, double D_cm1,
                                double a_inv_angstrom, double r0_angstrom,
                                double mu_amu) {
  nlohmann::json j;
  j["name"] = name;
  j["D_cm1"] = D_cm1;
  j["a_inv_angstrom"] = a_inv_angstrom;
  j["r0_angstrom"] = r0_angstrom;
  j["mu_amu"] = mu_amu;
  std::ofstream out(path);
  if (!out) throw FileError(path + ": cannot open file for writing");
  out << j.dump(2) << "\n";
}

}  // namespace morsenu
