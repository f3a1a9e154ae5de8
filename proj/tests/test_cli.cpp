#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
  const char* env = std::getenv("POLYJAC_CLI");
  return env ? env : "";
}

struct RunResult {
  int exit_code;
  std::string output;
};

// run the CLI, capture combined output and the exit code
RunResult run(const std::string& args) {
  const std::string command = "'" + cli_path() + "' " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[512];
  while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) output.append(buf, got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("polyjac_test_" + std::to_string(getpid()) + "_" + name);
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return text;
}

}  // namespace

TEST_CASE("cli contract" * doctest::skip(std::getenv("POLYJAC_CLI") == nullptr)) {
  REQUIRE(!cli_path().empty());

  SUBCASE("verify passes on the generated suite") {
    const RunResult r = run("verify --orders 2,3,1.5 --n 8 --trials 100 --seed 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
    CHECK(r.output.find("pointwise") != std::string::npos);
    CHECK(r.output.find("power") != std::string::npos);
  }

  SUBCASE("verify notices a linear-only system") {
    const fs::path path = temp_file("linear.json");
    std::ofstream(path) << R"({"n": 2, "D": [1.0, 0.0, 0.0, 1.0], "b": [1.0, -1.0]})";
    const RunResult r = run("verify --system " + path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("no nonlinear terms") != std::string::npos);
    fs::remove(path);
  }

  SUBCASE("verify checks the terms of a system file") {
    const fs::path path = temp_file("quad.json");
    std::ofstream(path) << R"({"n": 1, "b": [-4.0],
      "terms": [{"variant": "power", "coefficient": [1.0], "exponent": 2.0}]})";
    const RunResult r = run("verify --system " + path.string() + " --trials 25 --seed 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("term[0]") != std::string::npos);
    fs::remove(path);
  }

  SUBCASE("malformed JSON exits with code 2") {
    const fs::path path = temp_file("broken.json");
    std::ofstream(path) << "{ this is not json";
    const RunResult r = run("verify --system " + path.string());
    CHECK(r.exit_code == 2);
    fs::remove(path);
  }

  SUBCASE("missing file exits with code 2") {
    const RunResult r = run("solve --system /definitely/not/here.json");
    CHECK(r.exit_code == 2);
  }

  SUBCASE("solve converges on burgers with newton") {
    const RunResult r = run("solve --problem burgers --n 32 --method newton");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("converged") != std::string::npos);
  }

  SUBCASE("newton-nofe with --compare stays within tolerance of newton") {
    const RunResult r = run("solve --problem burgers --n 32 --method newton-nofe --compare");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("max deviation") != std::string::npos);
  }

  SUBCASE("newton-nofe on a mixed-order system exits with code 3") {
    const RunResult r = run("solve --problem mixed --method newton-nofe");
    CHECK(r.exit_code == 3);
  }

  SUBCASE("solve writes the documented CSV schema") {
    const fs::path path = temp_file("report.csv");
    const RunResult r = run("solve --problem duffing --n 8 --method newton --out " +
                            path.string() + " --format csv");
    CHECK(r.exit_code == 0);
    const std::string text = read_file(path);
    CHECK(text.rfind("iter,residual_norm,step_norm,millis\n", 0) == 0);
    CHECK(text.find('\r') == std::string::npos);
    fs::remove(path);
  }

  SUBCASE("jacobian rejects a zero step with code 2") {
    const RunResult r = run("jacobian --problem burgers --h 0");
    CHECK(r.exit_code == 2);
  }

  SUBCASE("jacobian sweeps steps and prints the instance analysis") {
    const RunResult r =
        run("jacobian --problem duffing --n 8 --fd central --h 1e-4,1e-5 --report");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("fd_deviation") != std::string::npos);
    CHECK(r.output.find("condition_one") != std::string::npos);
    CHECK(r.output.find("eigenvalue sum") != std::string::npos);
  }

  SUBCASE("an unknown problem name exits with code 2") {
    const RunResult r = run("solve --problem vortex");
    CHECK(r.exit_code == 2);
  }

  SUBCASE("config files feed problem and solver settings") {
    const fs::path path = temp_file("config.json");
    std::ofstream(path) << R"({"problem": {"name": "burgers", "n": 8,
      "parameters": {"viscosity": 0.5}}, "solver": {"max_iters": 30}})";
    const RunResult r = run("solve --config " + path.string() + " --method newton");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("n = 8") != std::string::npos);
    fs::remove(path);
  }
}
