#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include <sys/wait.h>

#include "cli.hpp"

using genus1::cli::CommandResult;
using genus1::cli::run_command;
using genus1::cli::Status;
using nlohmann::json;

namespace fs = std::filesystem;

namespace {

const char* kDegree2 = R"({"degree": 2, "coefficients": {"alpha0": "0", "alpha1": "0", "alpha2": "1",
  "a": "1", "b": "1", "c": "1", "d": "0", "e": "0"}})";
const char* kCubic = R"({"degree": 3, "coefficients": {"a": "-1", "b": "0", "c": "0", "a2": "0", "a3": "0",
  "b1": "0", "b3": "1", "c1": "0", "c2": "1", "m": "0"}})";
const char* kPair1 = R"({"degree": 4, "coefficients": {
  "q1": [["0","1/2","1/2","0"],["1/2","0","0","0"],["1/2","0","0","1/2"],["0","0","1/2","0"]],
  "q2": [["0","0","0","1/2"],["0","0","1/2","1/2"],["0","1/2","0","0"],["1/2","1/2","0","0"]]}})";
const char* kPfaffian = R"({"degree": 5, "coefficients": {"matrix": [
  ["0","x0","0","0","0"],["-x0","0","0","0","0"],["0","0","0","x1","0"],["0","0","-x1","0","0"],["0","0","0","0","0"]]}})";

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("genus1_cli_" + std::to_string(std::random_device{}()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }

 private:
  fs::path path_;
};

const TempDir& temp() {
  static const TempDir dir;
  return dir;
}

CommandResult run(std::initializer_list<std::string> args) { return run_command(args); }

void check_error_shape(const CommandResult& r) {
  CHECK(r.status == Status::Error);
  CHECK(r.exit_code != 0);
  CHECK_FALSE(r.diagnostics.empty());
}

}  // namespace

TEST_CASE("invariants of the degree-2 anchor") {
  const auto r = run({"invariants", temp().write("model2.json", kDegree2)});
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["c4"] == "64");
  CHECK(r.payload["c6"] == "296");
  CHECK(r.payload["delta"] == "101");
  CHECK(json::parse(r.stdout_text) == r.payload);
}

TEST_CASE("check of the cubic anchor") {
  const auto r = run({"check", temp().write("model3.json", kCubic)});
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["alpha"] == "1/2");
  CHECK(r.payload["c4_ok"] == true);
  CHECK(r.payload["c6_ok"] == true);
  CHECK(r.payload["delta_ok"] == true);
  CHECK(r.payload["delta_model"] == "-27");
  CHECK(r.payload["delta_jacobian"] == "-110592");
}

TEST_CASE("jacobian and singular points of Pair 1") {
  const std::string file = temp().write("pair1.json", kPair1);
  const auto j = run({"jacobian", file});
  REQUIRE(j.exit_code == 0);
  CHECK(j.payload["g2"] == "1/3072");
  CHECK(j.payload["g3"] == "-161/884736");
  CHECK(j.payload["delta"] == "-15/4096");

  const auto s3 = run({"singular", file, "--mod", "3"});
  REQUIRE(s3.exit_code == 0);
  CHECK(s3.payload["points"] == json::array({"(1:1:1:1)"}));
  CHECK(s3.payload["consistent"] == true);
  const auto s2 = run({"singular", file, "--mod", "2"});
  REQUIRE(s2.exit_code == 0);
  CHECK(s2.payload["smooth"] == true);
  CHECK(s2.payload["count"] == 0);
}

TEST_CASE("pfaffians") {
  const auto r = run({"pfaffians", temp().write("pf.json", kPfaffian)});
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["quadrics"] == json::array({"0", "0", "0", "0", "x0*x1"}));
  const auto wrong = run({"pfaffians", temp().write("model2b.json", kDegree2)});
  check_error_shape(wrong);
  CHECK(wrong.exit_code == 1);
}

TEST_CASE("q-expansions") {
  const auto d = run({"qexp", "--form", "D", "--terms", "5"});
  REQUIRE(d.exit_code == 0);
  CHECK(d.payload["series"] == "q - 24*q^2 + 252*q^3 - 1472*q^4 + O(q^5)");
  const auto plain = run({"qexp", "--form", "E4", "--terms", "3", "--plain"});
  CHECK(plain.stdout_text == "1 + 240*q + 2160*q^2 + O(q^3)\n");
  const auto mod = run({"qexp", "--form", "E2k:12", "--terms", "4", "--mod", "13"});
  CHECK(mod.payload["series"] == "1 + O(q^4)");
  const auto hasse = run({"hasse", "--prime", "13", "--terms", "50"});
  CHECK(hasse.payload["congruent"] == true);
}

TEST_CASE("output is deterministic") {
  const std::string file = temp().write("det.json", kPair1);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"invariants", file}, {"check", file}, {"singular", file, "--mod", "5"}, {"qexp", "--form", "D", "--terms", "40"}}) {
    const auto a = run_command(args), b = run_command(args);
    CHECK(a.stdout_text == b.stdout_text);
    CHECK_FALSE(a.stdout_text.empty());
  }
}

TEST_CASE("exit codes and diagnostics") {
  const auto unknown = run({"frobnicate"});
  check_error_shape(unknown);
  CHECK(unknown.exit_code == 2);
  CHECK(run({}).exit_code == 2);
  CHECK(run({"qexp", "--form", "E5", "--terms", "3"}).exit_code == 2);
  CHECK(run({"qexp", "--form", "E4", "--terms", "0"}).exit_code == 2);
  CHECK(run({"singular", temp().write("s.json", kDegree2)}).exit_code == 2);

  const auto missing = run({"invariants", "/nonexistent/model.json"});
  check_error_shape(missing);
  CHECK(missing.exit_code == 1);
  CHECK(missing.diagnostics.front().find("/nonexistent/model.json") != std::string::npos);

  const auto bad = run({"invariants", temp().write("bad.json", R"({"degree": 1, "coefficients": {"a1": "x", "a2": "0", "a3": "0", "a4": "0", "a6": "0"}})")});
  check_error_shape(bad);
  CHECK(bad.exit_code == 1);
  CHECK(bad.diagnostics.front().find("coefficients.a1") != std::string::npos);
  const auto body = json::parse(bad.stdout_text);
  CHECK(body["status"] == "error");

  const auto reduction = run({"singular", temp().write("pair1b.json", kPair1), "--mod", "7", "--plain"});
  CHECK(reduction.exit_code == 0);
  const auto deg5 = run({"invariants", temp().write("pf2.json", kPfaffian)});
  check_error_shape(deg5);
  CHECK(deg5.exit_code == 1);
  const auto hasse3 = run({"hasse", "--prime", "3", "--terms", "5"});
  CHECK(hasse3.exit_code == 1);
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("the binary reports the same exit codes") {
  const std::string tool = GENUS1_CLI_PATH;
  const std::string file = temp().write("bin.json", kDegree2);
  auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status(tool + " invariants " + file) == 0);
  CHECK(status(tool + " invariants /nonexistent.json") == 1);
  CHECK(status(tool + " nonsense") == 2);
}

TEST_CASE("fuzzed malformed files never crash") {
  const std::vector<std::string> seeds{kDegree2, kCubic, kPair1, kPfaffian};
  const std::string alphabet = "{}[]\":,-/0123456789xaq ";
  std::mt19937_64 gen(99);
  const char* commands[] = {"invariants", "jacobian", "check", "pfaffians"};
  for (int n = 0; n < 100; ++n) {
    std::string text = seeds[gen() % seeds.size()];
    const int edits = 1 + static_cast<int>(gen() % 4);
    for (int e = 0; e < edits && !text.empty(); ++e) {
      const std::size_t at = gen() % text.size();
      switch (gen() % 3) {
        case 0: text.erase(at, 1 + gen() % 3); break;
        case 1: text.insert(at, 1, alphabet[gen() % alphabet.size()]); break;
        default: text[at] = alphabet[gen() % alphabet.size()]; break;
      }
    }
    const std::string file = temp().write("fuzz.json", text);
    for (const char* cmd : commands) {
      const auto r = run({cmd, file});
      CAPTURE(text);
      CHECK((r.exit_code == 0 || r.exit_code == 1));
      if (r.exit_code != 0) {
        CHECK_FALSE(r.diagnostics.empty());
        CHECK(json::parse(r.stdout_text)["status"] == "error");
      }
    }
    const auto s = run({"singular", file, "--mod", "5"});
    CHECK((s.exit_code == 0 || s.exit_code == 1));
  }
}
