// End-to-end tests of the command-line tool: exit-code contract, output
// formats, and determinism.  The binary path and fixture directory come
// from the build.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#ifndef MORSENU_CLI_BIN
#error "MORSENU_CLI_BIN must be defined by the build"
#endif
#ifndef MORSENU_DATA_DIR
#error "MORSENU_DATA_DIR must be defined by the build"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run(const std::string& args) {
  const std::string cmd =
      std::string(MORSENU_CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.output.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

const std::string kCo = std::string(MORSENU_DATA_DIR) + "/co.json";
const std::string kLiH = std::string(MORSENU_DATA_DIR) + "/lih.json";

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("spectrum reproduces the golden grids in CSV") {
  const auto res =
      run("spectrum --molecule " + kCo + " --n 0,5,7 --l 0,5,10 --format csv");
  CHECK(res.exit_code == 0);
  const auto rows = lines(res.output);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == "n,l,E_nu_eV");
  CHECK(rows[1] == "0,0,-11.0915");
  CHECK(rows[6] == "5,10,-9.7700");
  CHECK(rows[7] == "7,0,-9.2991");

  const auto lih =
      run("spectrum --molecule " + kLiH + " --n 0,5,7 --l 0,5,10 --format csv");
  CHECK(lih.exit_code == 0);
  const auto lih_rows = lines(lih.output);
  REQUIRE(lih_rows.size() == 10);
  CHECK(lih_rows[1] == "0,0,-2.4288");
  CHECK(lih_rows[9] == "7,10,-1.2958");
}

TEST_CASE("CSV output is byte-identical across runs") {
  const std::string args =
      "spectrum --molecule " + kCo + " --n 0,5,7 --l 0,5,10 --format csv";
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK_FALSE(first.output.empty());
}

TEST_CASE("json and text formats carry the same energies") {
  const auto js =
      run("spectrum --molecule " + kCo + " --n 0 --l 0 --format json");
  CHECK(js.exit_code == 0);
  CHECK(js.output.find("\"E_nu_eV\"") != std::string::npos);
  CHECK(js.output.find("-11.0915") != std::string::npos);

  const auto txt = run("spectrum --molecule " + kCo + " --n 0 --l 0");
  CHECK(txt.exit_code == 0);
  CHECK(txt.output.find("-11.0915") != std::string::npos);
}

TEST_CASE("cm^-1 energy display") {
  const auto res =
      run("spectrum --molecule " + kCo + " --n 0 --l 0 --format csv --cm1");
  CHECK(res.exit_code == 0);
  const auto rows = lines(res.output);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "n,l,E_nu_cm1");
  // -11.0915 eV / (hc * 100/e) ~ -89460 cm^-1
  CHECK(rows[1].find("-894") != std::string::npos);
}

TEST_CASE("exit-code contract") {
  SUBCASE("nonexistent molecule file -> 1") {
    CHECK(run("spectrum --molecule missing.json --n 0 --l 0").exit_code == 1);
  }
  SUBCASE("missing required option -> 2") {
    CHECK(run("spectrum --molecule " + kCo + " --l 0").exit_code == 2);
  }
  SUBCASE("empty n list -> 2") {
    CHECK(run("spectrum --molecule " + kCo + " --n , --l 0").exit_code == 2);
  }
  SUBCASE("unbound state -> 4 with explicit marker") {
    const auto res = run("spectrum --molecule " + kCo +
                         " --n 200 --l 0 --format csv");
    CHECK(res.exit_code == 4);
    CHECK(res.output.find("unbound") != std::string::npos);
  }
  SUBCASE("validate within a loose tolerance -> 0") {
    const auto res = run("validate --molecule " + kLiH +
                         " --n 0 --l 0 --tol-ev 0.01 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(lines(res.output)[0] == "n,l,E_nu_eV,E_oracle_eV,delta_eV");
  }
  SUBCASE("validate with an unmeetable tolerance -> 3") {
    const auto res = run("validate --molecule " + kLiH +
                         " --n 7 --l 10 --tol-ev 1e-4 --format csv");
    CHECK(res.exit_code == 3);
  }
}

TEST_CASE("wavefunction sampling") {
  const auto res = run("wavefunction --molecule " + kLiH +
                       " --n 2 --l 0 --r-min 0.6 --r-max 6.0 --samples 2000");
  CHECK(res.exit_code == 0);
  const auto rows = lines(res.output);
  REQUIRE(rows.size() == 2002);
  CHECK(rows[0].find("norm=quadrature") != std::string::npos);
  CHECK(rows[0].find("eps1=") != std::string::npos);

  // Parse samples; count sign changes and trapezoid-integrate R^2.
  int nodes = 0;
  double prev = 0.0, acc = 0.0, prev_r = 0.0, prev_v = 0.0;
  bool first = true;
  for (size_t i = 2; i < rows.size(); ++i) {
    std::stringstream ss(rows[i]);
    double r, v;
    ss >> r >> v;
    if (!first) acc += 0.5 * (v * v + prev_v * prev_v) * (r - prev_r);
    if (v != 0.0) {
      if (prev != 0.0 && v * prev < 0.0) ++nodes;
      prev = v;
    }
    prev_r = r;
    prev_v = v;
    first = false;
  }
  CHECK(nodes == 2);
  CHECK(acc >= 0.999);

  SUBCASE("ground state has no interior sign change") {
    const auto gs = run("wavefunction --molecule " + kLiH +
                        " --n 0 --l 0 --r-min 0.6 --r-max 6.0 --samples 500");
    CHECK(gs.exit_code == 0);
    const auto gs_rows = lines(gs.output);
    double p = 0.0;
    int n = 0;
    for (size_t i = 2; i < gs_rows.size(); ++i) {
      std::stringstream ss(gs_rows[i]);
      double r, v;
      ss >> r >> v;
      if (v != 0.0) {
        if (p != 0.0 && v * p < 0.0) ++n;
        p = v;
      }
    }
    CHECK(n == 0);
  }

  SUBCASE("unbound request names n_max") {
    const auto bad = run("wavefunction --molecule " + kLiH +
                         " --n 500 --l 0 --r-min 0.6 --r-max 6.0");
    CHECK(bad.exit_code == 4);
  }
}
