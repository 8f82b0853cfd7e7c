// Contract and golden-output tests for the command-line tool. The binary path
// arrives in LPL_BIN, a scratch directory in LPL_TEST_DIR (both set by ctest).

#include "lpl/tensor_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

std::string scratch_dir() {
  const char* dir = std::getenv("LPL_TEST_DIR");
  return dir ? dir : ".";
}

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("LPL_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "LPL_BIN must point to the CLI binary");
  const std::string out_path = scratch_dir() + "/cli_stdout.txt";
  const std::string err_path = scratch_dir() + "/cli_stderr.txt";
  const std::string cmd = std::string(bin) + " " + args + " > " + out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  return {WEXITSTATUS(status), slurp(out_path), slurp(err_path)};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("--help contract for every subcommand") {
  CHECK(run_cli("--help").exit_code == 0);
  for (const std::string sub :
       {"catalog", "classify", "simulate", "linearize", "spectrum-table", "field"}) {
    const RunResult r = run_cli(sub + " --help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Usage") != std::string::npos);
  }
  CHECK(run_cli("field local-demo --help").exit_code == 0);
  CHECK(run_cli("field vortex --help").exit_code == 0);
}

TEST_CASE("unknown flags are usage errors") {
  CHECK(run_cli("simulate --no-such-flag").exit_code != 0);
  CHECK(run_cli("catalog --type X9").exit_code != 0);
}

TEST_CASE("linearize: PRS at the spinning state gives {2, -1, 0}, chiral") {
  const RunResult r = run_cli("linearize --system prs --alpha 2 --at 0,0,1");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report["verdict"] == "chiral");
  CHECK(report["equilibrium_kind"] == "singular");
  std::vector<double> reals;
  for (const auto& ev : report["eigenvalues"]) reals.push_back(ev[0].get<double>());
  std::sort(reals.begin(), reals.end());
  REQUIRE(reals.size() == 3);
  CHECK(reals[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(reals[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(reals[2] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("linearize rejects a non-equilibrium point with a structured error") {
  const RunResult r = run_cli("linearize --system prs --alpha 2 --at 1,1,1");
  CHECK(r.exit_code == 1);
  const json err = json::parse(r.err);
  CHECK(err.contains("error"));
}

TEST_CASE("classify: the so(3) tensor file is class A with the identity witness") {
  const std::string path = scratch_dir() + "/so3.tensor";
  lpl::write_tensor_file(lpl::so3_cross_tensor(), path);
  const RunResult r = run_cli("classify --file " + path);
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report["class"] == "A");
  CHECK(report["jacobi_residual"].get<double>() == 0.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(report["M"][i][j].get<double>() == (i == j ? 1.0 : 0.0));
  CHECK(report["kernel"].empty());
}

TEST_CASE("classify reports class B with kernel for type V") {
  const std::string path = scratch_dir() + "/v.tensor";
  std::ofstream out(path);
  out << "dim 3\n1 1 3 1\n2 2 3 1\n";  // [e1,e3] = e1, [e2,e3] = e2
  out.close();
  const RunResult r = run_cli("classify --file " + path);
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report["class"] == "B");
  CHECK(report["kernel"].size() == 1);  // Ker M is the xi3 line
}

TEST_CASE("classify fails cleanly on a non-Lie tensor") {
  const std::string path = scratch_dir() + "/broken.tensor";
  std::ofstream out(path);
  out << "dim 3\n2 1 2 1\n1 2 3 1\n1 3 1 1\n";
  out.close();
  const RunResult r = run_cli("classify --file " + path);
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.err).contains("error"));
}

TEST_CASE("simulate: JSON summary and CSV trajectory") {
  const std::string csv = scratch_dir() + "/prs.csv";
  const RunResult r =
      run_cli("simulate --system prs --alpha 2 --x0 0.01,0.01,1 --dt 1e-3 --T 0.5 --csv " + csv);
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report["hamiltonian_drift"].get<double>() < 1e-9);
  CHECK(report["casimir_drifts"][0].get<double>() < 1e-9);
  CHECK_FALSE(report["blew_up"].get<bool>());
  // the summary echoes the effective configuration
  CHECK(report["system"] == "prs");
  CHECK(report["dt"].get<double>() == 1e-3);
  CHECK(report["T"].get<double>() == 0.5);
  CHECK(report["scheme"] == "rk4");
  CHECK(report["x0"][2].get<double>() == 1.0);
  const std::string head = slurp(csv).substr(0, 13);
  CHECK(head == "t,xi1,xi2,xi3");
}

TEST_CASE("catalog --tensor-out round-trips through classify") {
  const std::string tensor_path = scratch_dir() + "/vii0.tensor";
  const RunResult c = run_cli("catalog --type VII --eta 0 --tensor-out " + tensor_path);
  REQUIRE(c.exit_code == 0);
  const RunResult r = run_cli("classify --file " + tensor_path);
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report["class"] == "A");  // VII(0) has the symmetric witness diag(-1,-1,0)
  CHECK(report["M"][0][0].get<double>() == -1.0);
}

TEST_CASE("deterministic bytes: identical flags and seed give identical output") {
  const std::string a = run_cli("spectrum-table --dim 3 --seed 7").out;
  const std::string b = run_cli("spectrum-table --dim 3 --seed 7").out;
  CHECK(a == b);
  CHECK(a.substr(0, 5) == "type,");
  const std::string c = run_cli("spectrum-table --dim 3 --seed 8").out;
  CHECK(a != c);

  const std::string v1 = run_cli("field vortex --K 1 --dt 1e-2 --T 0.05 --init random-seeded --seed 3").out;
  const std::string v2 = run_cli("field vortex --K 1 --dt 1e-2 --T 0.05 --init random-seeded --seed 3").out;
  CHECK(v1 == v2);
}

TEST_CASE("LPL_SEED environment variable overrides --seed") {
  const char* bin = std::getenv("LPL_BIN");
  REQUIRE(bin != nullptr);
  const std::string out_path = scratch_dir() + "/env_seed.txt";
  const std::string cmd = std::string("LPL_SEED=7 ") + bin + " spectrum-table --dim 3 --seed 99 > " + out_path;
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(slurp(out_path) == run_cli("spectrum-table --dim 3 --seed 7").out);
}

TEST_CASE("spectrum-table --dim 4 covers the full catalog") {
  const RunResult r = run_cli("spectrum-table --dim 4 --seed 5");
  REQUIRE(r.exit_code == 0);
  for (const std::string name : {"R+so3", "A4_10", "A4_8", "A4_1", "A4_3", "A4_12"})
    CHECK(r.out.find(name) != std::string::npos);
}

TEST_CASE("catalog subcommand emits tensor, Poisson pattern, Casimir, singular set") {
  const RunResult r = run_cli("catalog --type VI --eta -1");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report["class"] == "A");
  CHECK(report["tensor"]["dim"] == 3);
  CHECK(report["singular_set"]["dimension"] == 1);
  CHECK(report["poisson_matrix"][0][2] == "xi1");
  const RunResult missing_eta = run_cli("catalog --type VI");
  CHECK(missing_eta.exit_code == 1);

  const RunResult dim4 = run_cli("catalog --type A4_12");
  REQUIRE(dim4.exit_code == 0);
  CHECK(json::parse(dim4.out)["class"] == "C");
}

TEST_CASE("catalog output matches the stored golden files byte for byte") {
  // catalog entries are exact rational data with no eigensolves, so their
  // bytes are stable across platforms
  const char* src_dir = std::getenv("LPL_SOURCE_DIR");
  REQUIRE(src_dir != nullptr);
  const std::string golden = std::string(src_dir) + "/golden/";
  CHECK(run_cli("catalog --type IX").out == slurp(golden + "catalog_ix.json"));
  CHECK(run_cli("catalog --type A4_3").out == slurp(golden + "catalog_a4_3.json"));
  CHECK(run_cli("catalog --type VI --eta -1").out == slurp(golden + "catalog_vi_minus1.json"));
}

TEST_CASE("field local-demo reports closed-form agreement and writes rates") {
  const std::string csv = scratch_dir() + "/rates.csv";
  const RunResult r = run_cli("field local-demo --n 6 --t 0.5 --dt 1e-2 --csv " + csv);
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report["closed_vs_generic_max_error"].get<double>() < 1e-6);
  CHECK(report["rate_min"].get<double>() == doctest::Approx(-2.0));
  CHECK(slurp(csv).substr(0, 10) == "x,y,z,rate");
}

TEST_CASE("field vortex conserves the invariants in a short run") {
  const RunResult r = run_cli("field vortex --K 2 --dt 1e-3 --T 0.05 --init two-beltrami");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report["energy_drift"].get<double>() < 1e-9);
  CHECK(report["helicity_drift"].get<double>() < 1e-9);
}

}  // TEST_SUITE
