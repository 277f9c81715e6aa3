#include "freud/cli.hpp"

#include "freud/precision.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

using namespace freud;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "freud");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  for (std::string f; std::getline(is, f, ',');) out.push_back(f);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("freud_cli_test_" + name)).string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("gamma table") {
    const Run r = run({"gamma", "--c", "1", "--t", "0", "--sigma", "0", "--n-max", "10", "--digits", "120"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0] == "n,gamma,Gamma_hat");
    CHECK(fields(rows[1])[1] == "0");
    CHECK(fields(rows[2])[1].rfind("5.054680881560892780320687454035944035978838742757504846336937", 0) == 0);
    const Run again = run({"gamma", "--c", "1", "--t", "0", "--sigma", "0", "--n-max", "10", "--digits", "120"});
    CHECK(again.out == r.out);
  }

  TEST_CASE("gamma table through a file and every method") {
    const std::string path = temp_path("gamma.csv");
    for (const char* method : {"stieltjes", "hankel", "string"}) {
      const Run r = run({"gamma", "--t", "1", "--sigma", "0.5", "--n-max", "8", "--digits", "60", "--method", method,
                         "--out", path});
      REQUIRE(r.code == 0);
      CHECK(r.out.empty());
      std::ifstream file(path);
      std::stringstream ss;
      ss << file.rdbuf();
      CHECK(lines(ss.str()).size() == 10);
    }
    std::filesystem::remove(path);
  }

  TEST_CASE("verify exit codes") {
    const Run ok = run({"verify", "--checks", "string,toda", "--c", "1", "--t", "1", "--sigma", "0.5", "--n-max", "20"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("\"check\": \"string\"") != std::string::npos);
    CHECK(ok.out.find("\"check\": \"toda\"") != std::string::npos);
    CHECK(ok.out.find("runtime_ms") == std::string::npos);

    const Run dde2 = run({"verify", "--checks", "dde2", "--c", "1", "--t", "0", "--sigma", "0", "--n-max", "12"});
    CHECK(dde2.code == 0);
    CHECK(dde2.out.find("\"gating\": false") != std::string::npos);

    CHECK(run({"verify", "--bogus"}).code == 2);
    CHECK(run({"verify", "--n-max", "ten"}).code == 2);
    CHECK(run({"verify", "--checks", "string,unknown"}).code == 2);
    CHECK(run({"verify", "--c", "0"}).code == 2);
    CHECK(run({"verify", "--method", "lanczos"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
  }

  TEST_CASE("verify reports are deterministic") {
    const std::vector<std::string> args{"verify", "--checks", "ladder,m1,quasi", "--t", "-1", "--sigma", "1.5",
                                        "--n-max", "14", "--digits", "80"};
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::vector<std::string> timed = args;
    timed.push_back("--timings");
    CHECK(run(timed).out.find("runtime_ms") != std::string::npos);
  }

  TEST_CASE("verify fails when a tolerance cannot be met") {
    const Run r = run({"verify", "--checks", "m1", "--n-max", "8", "--tol-quadrature-exp", "-250"});
    CHECK(r.code == 1);
    CHECK(r.out.find("\"pass\": false") != std::string::npos);
  }

  TEST_CASE("zeros table") {
    const Run r = run({"zeros", "--n", "3", "--c", "1", "--t", "0", "--sigma", "0", "--n-max", "6"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "j,zero");
    CHECK(fields(rows[2])[1] == "0");
    const std::string neg = fields(rows[1])[1], pos = fields(rows[3])[1];
    CHECK(neg == "-" + pos);

    const Run e = run({"zeros", "--n", "6", "--electrostatic", "--t", "1", "--sigma", "0.5", "--n-max", "6"});
    REQUIRE(e.code == 0);
    const auto erows = lines(e.out);
    REQUIRE(erows.size() == 7);
    CHECK(erows[0] == "j,zero,electrostatic_residual");
    WorkingPrecision scope(120);
    for (std::size_t i = 1; i < erows.size(); ++i) CHECK(parse_real(fields(erows[i])[2]) < parse_real("1e-30"));

    const Run odd = run({"zeros", "--n", "5", "--electrostatic", "--n-max", "8"});
    CHECK(fields(lines(odd.out)[3])[2].empty());
    CHECK(run({"zeros", "--n", "9", "--n-max", "8"}).code == 2);
  }

  TEST_CASE("moments table") {
    const Run r = run({"moments", "--n-max", "4", "--digits", "40"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "k,eta_2k");
    CHECK(fields(rows[1])[1].rfind("8.92979511569249211218564313658225881376", 0) == 0);
    const Run q = run({"moments", "--n-max", "4", "--digits", "40", "--moment-method", "quadrature"});
    CHECK(q.code == 0);
    CHECK(run({"moments", "--moment-method", "simpson"}).code == 2);
  }

  TEST_CASE("config file with flag precedence") {
    const std::string path = temp_path("config.json");
    {
      std::ofstream f(path);
      f << R"({"c": "1", "t": 1, "sigma": "0.5", "digits": 60, "n_max": 5, "method": "hankel"})";
    }
    const Run fromfile = run({"gamma", "--config", path});
    REQUIRE(fromfile.code == 0);
    CHECK(lines(fromfile.out).size() == 7);
    const Run direct = run({"gamma", "--t", "1", "--sigma", "0.5", "--digits", "60", "--n-max", "5", "--method", "hankel"});
    CHECK(fromfile.out == direct.out);
    const Run override_n = run({"gamma", "--config", path, "--n-max", "3"});
    CHECK(lines(override_n.out).size() == 5);
    {
      std::ofstream f(path);
      f << R"({"c": 1, "colour": "red"})";
    }
    CHECK(run({"gamma", "--config", path}).code == 2);
    {
      std::ofstream f(path);
      f << "{not json";
    }
    CHECK(run({"gamma", "--config", path}).code == 2);
    std::filesystem::remove(path);
    CHECK(run({"gamma", "--config", path}).code == 2);
  }

  TEST_CASE("run configuration validation") {
    cli::RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.checks = {"zeros", "nope"};
    CHECK_THROWS(cfg.validate());
    cfg.checks = cli::known_checks();
    CHECK_NOTHROW(cfg.validate());
    CHECK_FALSE(cli::is_gating("dde2"));
    CHECK(cli::is_gating("string"));
  }
}
