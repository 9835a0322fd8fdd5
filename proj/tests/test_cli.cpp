#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const std::string base = "abc_cli_test_" + std::to_string(++counter);
  const std::string cmd = env + " \"" ABC_CLI_PATH "\" " + args + " >" + base + ".out 2>" + base + ".err";
  const int status = std::system(cmd.c_str());
  Run r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(base + ".out"), slurp(base + ".err")};
  std::remove((base + ".out").c_str());
  std::remove((base + ".err").c_str());
  return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  FAIL("missing column " << name);
  return 0;
}

const char* const kCommands[] = {
    "spectrum --a 0.3 --flux 0.25 --l -2..2 --n-max 3",
    "cross-section --a 0.3 --flux 0.25 --energy 1.25 --phi-grid 0.3:3.141592653589793:13",
    "cross-section --a 0.05 --flux 0.25 --momentum 0.75 --phi-grid 1:3:3 --partial-waves --l-max 60",
    "phase-shifts --a 0.2 --flux 0.3 --energy 1.25 --l -3..3",
    "wavefunction --a 0.3 --flux 0 --l 0 --n 1",
    "wavefunction --a 0.3 --flux 0.25 --l 1 --kind continuum --momentum 0.75 --r-grid log:0.01:50:200",
    "validate",
};

}  // namespace

TEST_CASE("spectrum command") {
  const Run one = run("spectrum --a 0.3 --flux 0 --l 0..0 --n-max 0");
  REQUIRE(one.code == 0);
  const auto rows = parse_csv(one.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"model", "l", "n", "kappa", "gamma", "e_over_m", "lambda_over_m",
                                            "regime"});
  CHECK(rows[1][0] == "dirac");
  CHECK(std::stod(rows[1][column(rows[0], "e_over_m")]) == 0.8);

  const Run zero = run("spectrum --a 0 --l -2..2");
  CHECK(zero.code == 0);
  CHECK(parse_csv(zero.out).size() == 1);
  CHECK(zero.err.find("warning") != std::string::npos);

  CHECK(run("spectrum --a 0.6 --l 0..0 --flux 0").code == 3);

  // ordered by model, then l, then n
  const auto many = parse_csv(run("spectrum --a 0.3 --flux 0.25 --l -2..2 --n-max 3").out);
  REQUIRE(many.size() > 10);
  for (std::size_t i = 2; i < many.size(); ++i) {
    const auto& a = many[i - 1];
    const auto& b = many[i];
    const bool ordered = a[0] < b[0] || (a[0] == b[0] && (std::stoi(a[1]) < std::stoi(b[1]) ||
                                                          (a[1] == b[1] && std::stoi(a[2]) < std::stoi(b[2]))));
    CHECK(ordered);
  }

  const auto kg = parse_csv(run("spectrum --a 0.3 --flux 0 --l 1..1 --n-max 1 --model kg").out);
  REQUIRE(kg.size() == 2);
  CHECK(std::abs(std::stod(kg[1][5]) - 0.979369198914) < 1e-11);
}

TEST_CASE("configuration errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("spectrum").code == 2);
  CHECK(run("spectrum --a -1").code == 2);
  CHECK(run("spectrum --a 0.3 --l 2..1").code == 2);
  CHECK(run("spectrum --a 0.3 --mass 0").code == 2);
  CHECK(run("spectrum --a 0.3 --format xml").code == 2);
  CHECK(run("phase-shifts --a 0.3 --energy 1.25 --momentum 1").code == 2);
  CHECK(run("phase-shifts --a 0.3 --energy 0.9").code == 2);
  CHECK(run("cross-section --a 0.3 --momentum 1 --phi-grid 3:1:5").code == 2);
  CHECK(run("wavefunction --a 0.3 --l 0 --n 0 --r-grid log:0:1:10").code == 2);
  CHECK(run("wavefunction --a 0.3 --l 0..1").code == 2);
  CHECK(run("spectrum --a 0.3 --out /nonexistent/dir/x.csv").code == 2);
}

TEST_CASE("cross-section command") {
  const Run r = run("cross-section --a 0 --flux 0.5 --momentum 1 --phi-grid 3.141592653589793:3.141592653589793:1");
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(std::stod(rows[1][column(rows[0], "dsigma")]) == doctest::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-11));

  const auto integer = parse_csv(run("cross-section --a 0 --flux 2 --momentum 1 --phi-grid 0.5:3:8").out);
  REQUIRE(integer.size() == 9);
  for (std::size_t i = 1; i < integer.size(); ++i) CHECK(std::stod(integer[i][column(integer[0], "dsigma")]) == 0.0);

  const Run cone = run("cross-section --a 0.3 --flux 0.25 --momentum 1 --phi-grid 0.05:3:5");
  CHECK(cone.code == 2);
  CHECK(cone.err.find("forward cone") != std::string::npos);

  // dsigma column against the bracket form, at full JSON precision
  const auto doc = nlohmann::json::parse(
      run("cross-section --a 0.3 --flux 0.25 --energy 1.25 --phi-grid 0.3:6:40 --format json").out);
  const double s = 0.0;  // decompose_flux(0.25).s
  for (const auto& row : doc["rows"]) {
    const double phi = row["phi"];
    const double ds = row["dsigma"];
    CHECK(ds >= 0.0);
    CHECK(std::abs(ds - row["dsigma_bracket"].get<double>()) <= 1e-12 * ds);
    const double expected = std::cos(s * phi + 0.5 * phi + std::numbers::pi * 0.25);
    const double inter = row["interference"];
    if (std::abs(expected) > 1e-9) CHECK((inter > 0.0) == (expected > 0.0));
  }
}

TEST_CASE("phase-shifts command") {
  const Run r = run("phase-shifts --a 0.2 --flux 0.3 --energy 1.25 --l -2..1 --format json");
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["rows"].size() == 4);
  const auto& l0 = doc["rows"][2];
  CHECK(l0["l"] == 0);
  CHECK(l0["delta_total"].get<double>() == doctest::Approx(-1.6727951371820111839).epsilon(1e-12));
  CHECK(l0["abs_s"].get<double>() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(doc["rows"][1]["regime"] == "supercritical");
  CHECK(doc["rows"][1]["delta_total"].is_null());
}

TEST_CASE("wavefunction command") {
  const auto bound = parse_csv(run("wavefunction --a 0.3 --l 0 --n 0").out);
  CHECK(bound.size() == 2001);
  const auto custom = parse_csv(run("wavefunction --a 0.3 --l 0 --n 0 --r-grid lin:0.5:4:8").out);
  REQUIRE(custom.size() == 9);
  CHECK(std::stod(custom[1][0]) == 0.5);
  CHECK(std::stod(custom[8][0]) == 4.0);
  const Run cont = run("wavefunction --a 0.3 --l 0 --kind continuum --energy 1.25 --r-grid log:0.1:10:20");
  CHECK(cont.code == 0);
  CHECK(parse_csv(cont.out).size() == 21);
  CHECK(run("wavefunction --a 0.6 --l 0 --n 0").code == 3);
  CHECK(run("wavefunction --a 0.3 --l 0 --n -1").code == 3);
}

TEST_CASE("validate command") {
  const Run ok = run("validate");
  CHECK(ok.code == 0);
  const auto doc = nlohmann::json::parse(ok.out);
  CHECK(doc["validation"]["passed"] == true);
  CHECK(doc["rows"].size() == 10);
  CHECK(run("validate --tolerance 1e-30").code == 1);
  CHECK(run("validate --suites ''").code == 2);
  CHECK(run("validate --suites bogus").code == 2);
  CHECK(run("validate --tolerance 0").code == 2);
  const Run strict = run("validate --suites unitarity --format csv", "ABC_TOLERANCE_PROFILE=strict");
  CHECK(strict.code == 0);
  CHECK(strict.out.find("1e-13") != std::string::npos);
  CHECK(run("validate", "ABC_TOLERANCE_PROFILE=bogus").code == 2);
}

TEST_CASE("output is deterministic, LF-terminated and the same in both formats") {
  for (const char* cmd : kCommands) {
    CAPTURE(cmd);
    const Run a = run(std::string(cmd) + " --format csv");
    const Run b = run(std::string(cmd) + " --format csv");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find('\r') == std::string::npos);
    const Run ja = run(std::string(cmd) + " --format json");
    const Run jb = run(std::string(cmd) + " --format json");
    CHECK(ja.out == jb.out);

    const auto csv = parse_csv(a.out);
    const auto doc = nlohmann::json::parse(ja.out);
    REQUIRE(doc["rows"].size() + 1 == csv.size());
    for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
      const auto& row = doc["rows"][i];
      for (std::size_t j = 0; j < csv[0].size(); ++j) {
        const auto& v = row[csv[0][j]];
        const std::string& text = j < csv[i + 1].size() ? csv[i + 1][j] : std::string();
        if (v.is_null()) {
          CHECK(text.empty());
        } else if (v.is_string()) {
          CHECK(v.get<std::string>() == text);
        } else if (v.is_number_integer()) {
          CHECK(std::to_string(v.get<long long>()) == text);
        } else {
          const double x = v.get<double>();
          CHECK(std::abs(std::stod(text) - x) <= 5e-12 * std::abs(x));
        }
      }
    }
  }
  const std::string path = "abc_cli_test_out.csv";
  const Run to_stdout = run(kCommands[0]);
  REQUIRE(run(std::string(kCommands[0]) + " --out " + path).code == 0);
  CHECK(slurp(path) == to_stdout.out);
  std::remove(path.c_str());
}
