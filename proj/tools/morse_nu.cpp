// Command-line front end: ro-vibrational spectrum tables, analytic vs
// numerical validation reports, and wavefunction sampling for a diatomic
// molecule described by a JSON parameter file.
//
// Exit codes: 0 success, 1 I/O or parse error, 2 usage error,
//             3 tolerance breach, 4 solver failure / unbound state.

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "morsenu/molecule_file.hpp"
#include "morsenu/oracle.hpp"
#include "morsenu/spectrum.hpp"
#include "morsenu/units.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTolerance = 3;
constexpr int kExitSolver = 4;

std::vector<int> parse_int_list(const std::string& csv, const char* what) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size() || v < 0)
      throw CLI::ValidationError(std::string(what) +
                                 ": expected comma-separated nonnegative "
                                 "integers, got \"" +
                                 tok + "\"");
    out.push_back(v);
  }
  if (out.empty())
    throw CLI::ValidationError(std::string(what) + ": list must be nonempty");
  return out;
}

struct SpectrumRow {
  int n = 0;
  int l = 0;
  std::optional<double> e_nu;      // eV
  std::optional<double> e_oracle;  // eV
  std::optional<double> delta;     // eV
  std::string note;                // "unbound", "no-convergence", ...
};

std::string format_energy(double ev, bool as_cm1) {
  char buf[64];
  if (as_cm1)
    std::snprintf(buf, sizeof buf, "%.2f", ev / morsenu::units::cm1_to_ev_factor);
  else
    std::snprintf(buf, sizeof buf, "%.4f", ev);
  return buf;
}

void print_rows(const std::vector<SpectrumRow>& rows, const std::string& format,
                bool with_oracle, bool as_cm1) {
  const std::string unit = as_cm1 ? "cm1" : "eV";
  const auto cell = [&](const std::optional<double>& v,
                        const std::string& note) {
    if (v) return format_energy(*v, as_cm1);
    return note.empty() ? std::string("n/a") : note;
  };
  if (format == "csv") {
    std::string header = "n,l,E_nu_" + unit;
    if (with_oracle) header += ",E_oracle_" + unit + ",delta_" + unit;
    std::printf("%s\n", header.c_str());
    for (const auto& r : rows) {
      std::printf("%d,%d,%s", r.n, r.l, cell(r.e_nu, r.note).c_str());
      if (with_oracle)
        std::printf(",%s,%s", cell(r.e_oracle, r.note).c_str(),
                    cell(r.delta, r.note).c_str());
      std::printf("\n");
    }
  } else if (format == "json") {
    // Same display precision as the text/csv writers so the formats agree.
    const auto rounded = [&](double ev) {
      return std::stod(format_energy(ev, as_cm1));
    };
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json o;
      o["n"] = r.n;
      o["l"] = r.l;
      if (r.e_nu) o["E_nu_" + unit] = rounded(*r.e_nu);
      if (r.e_oracle) o["E_oracle_" + unit] = rounded(*r.e_oracle);
      if (r.delta) o["delta_" + unit] = rounded(*r.delta);
      if (!r.note.empty()) o["note"] = r.note;
      arr.push_back(o);
    }
    std::printf("%s\n", arr.dump(2).c_str());
  } else {  // aligned text
    if (with_oracle)
      std::printf("%3s %3s %12s %12s %12s\n", "n", "l",
                  ("E_nu_" + unit).c_str(), ("E_oracle_" + unit).c_str(),
                  ("delta_" + unit).c_str());
    else
      std::printf("%3s %3s %12s\n", "n", "l", ("E_nu_" + unit).c_str());
    for (const auto& r : rows) {
      std::printf("%3d %3d %12s", r.n, r.l, cell(r.e_nu, r.note).c_str());
      if (with_oracle)
        std::printf(" %12s %12s", cell(r.e_oracle, r.note).c_str(),
                    cell(r.delta, r.note).c_str());
      std::printf("\n");
    }
  }
}

int cmd_spectrum(const std::string& molecule_path, const std::string& n_csv,
                 const std::string& l_csv, const std::string& format,
                 bool as_cm1) {
  const auto mol = morsenu::load_molecule_file(molecule_path);
  const auto ns = parse_int_list(n_csv, "--n");
  const auto ls = parse_int_list(l_csv, "--l");
  std::vector<SpectrumRow> rows;
  bool any_unbound = false;
  for (int n : ns)
    for (int l : ls) {
      SpectrumRow row;
      row.n = n;
      row.l = l;
      try {
        row.e_nu = morsenu::energy_level(mol, n, l).energy;
      } catch (const std::domain_error&) {
        row.note = "unbound";
        any_unbound = true;
      }
      rows.push_back(row);
    }
  print_rows(rows, format, /*with_oracle=*/false, as_cm1);
  return any_unbound ? kExitSolver : kExitOk;
}

int cmd_validate(const std::string& molecule_path, const std::string& n_csv,
                 const std::string& l_csv, const std::string& format,
                 double tol_ev) {
  const auto mol = morsenu::load_molecule_file(molecule_path);
  const auto ns = parse_int_list(n_csv, "--n");
  const auto ls = parse_int_list(l_csv, "--l");
  std::vector<SpectrumRow> rows;
  bool solver_failure = false;
  bool breach = false;
  for (int n : ns)
    for (int l : ls) {
      SpectrumRow row;
      row.n = n;
      row.l = l;
      try {
        row.e_nu = morsenu::energy_level(mol, n, l).energy;
        const auto solved = morsenu::oracle::solve_level(mol, n, l);
        if (!solved.converged) {
          row.note = "no-convergence";
          solver_failure = true;
        } else {
          row.e_oracle = solved.energy;
          row.delta = *row.e_nu - solved.energy;
          if (std::fabs(*row.delta) > tol_ev) breach = true;
        }
      } catch (const std::exception&) {
        row.note = "unbound";
        solver_failure = true;
      }
      rows.push_back(row);
    }
  print_rows(rows, format, /*with_oracle=*/true, /*as_cm1=*/false);
  if (solver_failure) return kExitSolver;
  return breach ? kExitTolerance : kExitOk;
}

int cmd_wavefunction(const std::string& molecule_path, int n, int l,
                     double r_min, double r_max, int samples) {
  const auto mol = morsenu::load_molecule_file(molecule_path);
  morsenu::RadialWavefunction wf;
  try {
    wf = morsenu::radial_wavefunction(mol, n, l);
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSolver;
  }
  const auto dp = morsenu::dimensionless_params(mol, l);
  std::printf("# molecule=%s n=%d l=%d energy_eV=%.10g eps1=%.10g eps3=%.10g "
              "norm=quadrature\n",
              mol.name.c_str(), n, l, wf.level.energy, wf.level.eps1, dp.eps3);
  std::printf("# r_angstrom R_nl\n");
  const double h = (r_max - r_min) / (samples - 1);
  for (int i = 0; i < samples; ++i) {
    const double r = r_min + i * h;
    std::printf("%.10g %.10g\n", r, wf(r));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound states of a rotating diatomic molecule in a Morse "
               "potential"};
  app.require_subcommand(1);

  std::string molecule, n_csv, l_csv;
  std::string format = "text";
  bool as_cm1 = false;
  double tol_ev = 0.01;
  int wf_n = 0, wf_l = 0, samples = 1000;
  double r_min = 0.5, r_max = 4.0;

  auto* spectrum = app.add_subcommand("spectrum", "Energy table E_nl");
  spectrum->add_option("--molecule", molecule, "molecule JSON file")
      ->required();
  spectrum->add_option("--n", n_csv, "comma-separated n values")->required();
  spectrum->add_option("--l", l_csv, "comma-separated l values")->required();
  spectrum->add_option("--format", format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  spectrum->add_flag("--cm1", as_cm1, "print energies in cm^-1 instead of eV");

  auto* validate = app.add_subcommand(
      "validate", "Compare analytic energies against the Numerov solver");
  validate->add_option("--molecule", molecule, "molecule JSON file")
      ->required();
  validate->add_option("--n", n_csv, "comma-separated n values")->required();
  validate->add_option("--l", l_csv, "comma-separated l values")->required();
  validate->add_option("--tol-ev", tol_ev, "per-row tolerance in eV");
  validate->add_option("--format", format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  auto* wavefunction =
      app.add_subcommand("wavefunction", "Sample a normalized R_nl(r)");
  wavefunction->add_option("--molecule", molecule, "molecule JSON file")
      ->required();
  wavefunction->add_option("--n", wf_n, "vibrational quantum number")
      ->required();
  wavefunction->add_option("--l", wf_l, "rotational quantum number")
      ->required();
  wavefunction->add_option("--r-min", r_min, "first sample radius [A]");
  wavefunction->add_option("--r-max", r_max, "last sample radius [A]");
  wavefunction->add_option("--samples", samples, "number of samples (>= 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (spectrum->parsed())
      return cmd_spectrum(molecule, n_csv, l_csv, format, as_cm1);
    if (validate->parsed())
      return cmd_validate(molecule, n_csv, l_csv, format, tol_ev);
    if (wavefunction->parsed()) {
      if (samples < 2 || !(r_min < r_max)) {
        std::fprintf(stderr, "error: need samples >= 2 and r-min < r-max\n");
        return kExitUsage;
      }
      return cmd_wavefunction(molecule, wf_n, wf_l, r_min, r_max, samples);
    }
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const morsenu::FileError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSolver;
  }
  return kExitUsage;
}
