// Drives the installed binary end to end: output documents, CSV round trips,
// determinism, and exit codes.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "qaoa/optimize.hpp"
#include "qaoa/ring.hpp"

#ifndef QAOA_CLI_PATH
#error "QAOA_CLI_PATH must point at the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const fs::path errfile =
      fs::temp_directory_path() / ("qaoa_cli_stderr_" + std::to_string(::getpid()) + ".txt");
  const std::string cmd =
      env_prefix + " \"" + QAOA_CLI_PATH + "\" " + args + " 2>" + errfile.string();
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(errfile);
  std::stringstream ss;
  ss << err.rdbuf();
  res.err = ss.str();
  fs::remove(errfile);
  return res;
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

json result_of(const CliResult& res) { return json::parse(res.out).at("result"); }

const std::string kRing8 = "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 0\n";

}  // namespace

TEST_CASE("ring-eval reproduces the level-1 table row") {
  const CliResult res = run_cli("ring-eval --n 8 --angles 0.375pi,0.125pi");
  REQUIRE(res.exit_code == 0);
  const json r = result_of(res);
  CHECK(r.at("F").get<double>() == doctest::Approx(-4.0).epsilon(1e-12));
  CHECK(r.at("r").get<double>() == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(r.at("tilde_F").get<double>() == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(json::parse(res.out).at("manifest").at("subcommand") == "ring-eval");
}

TEST_CASE("ring-eval --tilde maps the cut-counting angles") {
  const CliResult res = run_cli("ring-eval --n 8 --angles 0.25pi,0.125pi --tilde");
  REQUIRE(res.exit_code == 0);
  const json r = result_of(res);
  CHECK(r.at("F_per_site").get<double>() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(r.at("gammas")[0].get<double>() ==
        doctest::Approx(-std::numbers::pi / 8).epsilon(1e-12));
}

TEST_CASE("eval-p1 on the ring at gamma = 0") {
  const fs::path graph = write_temp("qaoa_cli_ring8.txt", kRing8);
  const CliResult res = run_cli("eval-p1 --graph " + graph.string() + " --gamma 0 --beta 0.3");
  REQUIRE(res.exit_code == 0);
  const json r = result_of(res);
  CHECK(r.at("F").get<double>() == doctest::Approx(4.0));
  CHECK(r.at("r_lower_bound").get<double>() == doctest::Approx(0.5));
  CHECK(r.at("classes").size() == 1);
  CHECK(r.at("classes")[0].at("chi") == 8);
  fs::remove(graph);
}

TEST_CASE("simulate with samples is deterministic byte for byte") {
  const fs::path graph = write_temp("qaoa_cli_ring8b.txt", kRing8);
  const std::string args = "simulate --graph " + graph.string() +
                           " --convention ring --angles 0.375pi,0.125pi --samples 50 --seed 9";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  const json r = result_of(a);
  CHECK(r.at("F").get<double>() == doctest::Approx(-4.0).epsilon(1e-12));
  CHECK(r.at("samples").at("prng") == "mt19937_64");
  CHECK(r.at("samples").at("items").size() == 50);
  const std::string bits = r.at("samples").at("items")[0].at("bits").get<std::string>();
  CHECK(bits.size() == 8);
  fs::remove(graph);
}

TEST_CASE("optimize output is reproducible and hits the known optimum") {
  const std::string args = "optimize --p 2 --manifold m1 --seed 4";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  const json r = result_of(a);
  CHECK(r.at("best_F_per_site").get<double>() == doctest::Approx(-2.0 / 3.0).epsilon(1e-9));
  CHECK(r.at("best_r").get<double>() == doctest::Approx(5.0 / 6.0).epsilon(1e-9));
  CHECK(r.at("starts") == 32);
  CHECK(r.at("tolerances").at("grad_tol").get<double>() == doctest::Approx(1e-8));
  REQUIRE(!r.at("optima").empty());
}

TEST_CASE("optimize accepts a warm-start file") {
  const CliResult first = run_cli("optimize --p 1 --manifold m1 --seed 2");
  REQUIRE(first.exit_code == 0);
  const fs::path warm = write_temp("qaoa_cli_warm.json", first.out);
  const CliResult second =
      run_cli("optimize --p 2 --manifold m1 --seed 2 --starts 4 --warm-start " + warm.string());
  REQUIRE(second.exit_code == 0);
  CHECK(result_of(second).at("best_F_per_site").get<double>() ==
        doctest::Approx(-2.0 / 3.0).epsilon(1e-6));
  fs::remove(warm);
}

TEST_CASE("scan CSV round-trips against the library") {
  const CliResult res = run_cli("scan --p 1 --manifold full --resolution 16");
  REQUIRE(res.exit_code == 0);
  std::istringstream in(res.out);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line.starts_with("# manifest: "));
  REQUIRE(std::getline(in, line));
  CHECK(line == "gamma1,beta1,F_per_site");
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream cells(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(cells, cell, ',')) vals.push_back(std::stod(cell));
    REQUIRE(vals.size() == 3);
    const double expect =
        qaoa::ring_expectation(
            4, qaoa::expand_manifold({vals[0], vals[1]},
                                     qaoa::ManifoldSpec{qaoa::ManifoldKind::Full, 1}))
            .f_per_site;
    CHECK(vals[2] == doctest::Approx(expect).epsilon(1e-12));
    ++rows;
  }
  CHECK(rows == 16 * 16);
}

TEST_CASE("classify CSV for the ring") {
  const fs::path graph = write_temp("qaoa_cli_ring8c.txt", kRing8);
  const CliResult res = run_cli("classify --graph " + graph.string());
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("d,e,f,chi\n1,1,0,8\n") != std::string::npos);
  fs::remove(graph);
}

TEST_CASE("table matches the closed-form ratios at six decimals") {
  const CliResult res = run_cli("table --p-max 5");
  REQUIRE(res.exit_code == 0);
  std::istringstream in(res.out);
  std::string line;
  std::getline(in, line);  // manifest
  std::getline(in, line);  // header
  CHECK(line.starts_with("p,r,F_per_site"));
  int p = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++p;
    std::istringstream cells(line);
    std::string cell;
    std::vector<std::string> fields;
    while (std::getline(cells, cell, ',')) fields.push_back(cell);
    REQUIRE(fields.size() == static_cast<std::size_t>(3 + p));
    CHECK(std::stoi(fields[0]) == p);
    const double r_target = (2.0 * p + 1) / (2.0 * p + 2);
    const double f_target = -static_cast<double>(p) / (p + 1);
    CHECK(std::abs(std::stod(fields[1]) - r_target) < 5e-7);
    CHECK(std::abs(std::stod(fields[2]) - f_target) < 5e-7);
    // Angles are tabulated in units of pi within [0, 0.5).
    for (std::size_t i = 3; i < fields.size(); ++i) {
      const double a = std::stod(fields[i]);
      CHECK(a >= 0.0);
      CHECK(a < 0.5);
    }
  }
  CHECK(p == 5);
}

TEST_CASE("exit codes: usage errors") {
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("ring-eval --n 8").exit_code == 2);  // missing --angles
  const CliResult bad_angle = run_cli("ring-eval --n 8 --angles xyz,0.1");
  CHECK(bad_angle.exit_code == 2);
  CHECK(bad_angle.err.find("E_USAGE") != std::string::npos);
  CHECK(run_cli("ring-eval --n 8 --angles 0.1,0.2,0.3").exit_code == 2);  // odd count
}

TEST_CASE("exit codes: domain errors carry machine-readable codes") {
  const CliResult odd = run_cli("ring-eval --n 7 --angles 0.375pi,0.125pi");
  CHECK(odd.exit_code == 3);
  CHECK(odd.err.find("error[E_DOMAIN]") != std::string::npos);

  const fs::path dup = write_temp("qaoa_cli_dup.txt", "0 1\n0 1\n");
  const CliResult parse = run_cli("classify --graph " + dup.string());
  CHECK(parse.exit_code == 3);
  CHECK(parse.err.find("error[E_PARSE]") != std::string::npos);
  CHECK(parse.err.find("line 2") != std::string::npos);
  fs::remove(dup);

  const CliResult missing = run_cli("classify --graph /nonexistent/graph.txt");
  CHECK(missing.exit_code == 3);
}

TEST_CASE("QAOA_QUBIT_CAP caps the simulator") {
  const fs::path graph = write_temp("qaoa_cli_ring8d.txt", kRing8);
  const std::string args =
      "simulate --graph " + graph.string() + " --convention maxcut --angles 0.1,0.2";
  CHECK(run_cli(args).exit_code == 0);
  const CliResult capped = run_cli(args, "QAOA_QUBIT_CAP=4");
  CHECK(capped.exit_code == 3);
  CHECK(capped.err.find("error[E_DOMAIN]") != std::string::npos);
  // The hard cap cannot be raised past 26.
  const CliResult over = run_cli(args, "QAOA_QUBIT_CAP=30");
  CHECK(over.exit_code == 3);
  fs::remove(graph);
}

TEST_CASE("angle literals: plain radians and pi multiples agree") {
  const CliResult a = run_cli("ring-eval --n 8 --angles 0.375pi,0.125pi");
  const CliResult b =
      run_cli("ring-eval --n 8 --angles 1.1780972450961724,0.39269908169872414");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(result_of(a).at("F").get<double>() ==
        doctest::Approx(result_of(b).at("F").get<double>()).epsilon(1e-12));
}
