#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cli.hpp"
#include "cnsgt/serialization.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cnsgt::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scenario(const std::string& name) { return std::string(CNSGT_SCENARIO_DIR) + "/" + name; }

std::string test_data(const std::string& name) { return (fs::path(__FILE__).parent_path() / "data" / name).string(); }

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "cnsgt_cli_tests" / name;
  fs::remove_all(dir);
  return dir;
}

int run_binary(const std::string& args, const fs::path& stdout_file) {
  const std::string cmd = std::string(CNSGT_BINARY) + " " + args + " > " + stdout_file.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("awh composite --xi 0 prints 3.0") {
    const auto r = run({"awh", "composite", "--xi", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "3.0\n");
    CHECK(run({"awh", "composite", "--xi", "2"}).out == "2.0\n");
    CHECK(run({"awh", "composite", "--xi", "0.5"}).out == "2.75\n");
  }

  TEST_CASE("the installed binary behaves like run()") {
    const auto dir = fresh_dir("binary");
    fs::create_directories(dir);
    CHECK(run_binary("awh composite --xi 0", dir / "a.txt") == 0);
    CHECK(cnsgt::io::read_text_file(dir / "a.txt") == "3.0\n");
    CHECK(run_binary("check --scenario " + scenario("delta_manifest.json"), dir / "b.txt") == 0);
    CHECK(run_binary("invert --scenario " + scenario("zero_spectrum.json"), dir / "c.txt") == 1);
    CHECK(run_binary("check --scenario " + test_data("malformed.json"), dir / "d.txt") == 2);
    CHECK(run_binary("no-such-command", dir / "e.txt") == 2);
  }

  TEST_CASE("check: delta manifest is a tight frame") {
    const auto r = run({"check", "--scenario", scenario("delta_manifest.json")});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("kind") == "frame");
    CHECK(j.at("lower") == 1.0);
    CHECK(j.at("upper") == 1.0);
    CHECK(j.at("tight") == true);
  }

  TEST_CASE("check and invert on a symbol with zeros exit 1") {
    const auto c = run({"check", "--scenario", scenario("zero_spectrum.json")});
    CHECK(c.code == 1);
    CHECK(nlohmann::json::parse(c.out).at("kind") == "bessel_only");
    const auto i = run({"invert", "--scenario", scenario("zero_spectrum.json")});
    CHECK(i.code == 1);
    CHECK(i.err.find("not-invertible") != std::string::npos);
  }

  TEST_CASE("finite pipeline: invert recovers the signal") {
    const auto r = run({"invert", "--scenario", scenario("gabor_z12.json")});
    REQUIRE(r.code == 0);
    const auto rec = cnsgt::io::signal_from_json(nlohmann::json::parse(r.out));
    const auto text = cnsgt::io::read_text_file(scenario("z12_signal.csv"));
    const auto orig = cnsgt::io::signal_from_csv(text, rec.group(), cnsgt::Side::time);
    for (std::size_t i = 0; i < rec.size(); ++i) CHECK(std::abs(rec[i] - orig[i]) <= 1e-12);

    CHECK(run({"symbol", "--scenario", scenario("gabor_z12.json")}).out.rfind("coord_1,re,im,abs\n", 0) == 0);
    CHECK(run({"analyze", "--scenario", scenario("gabor_z12.json")}).out.rfind("coord_1,channel,re,im\n", 0) == 0);
    CHECK(run({"synthesize", "--scenario", scenario("gabor_z12.json")}).code == 0);
  }

  TEST_CASE("input errors exit 2 with an anchored message") {
    const auto r = run({"check", "--scenario", test_data("malformed.json")});
    CHECK(r.code == 2);
    CHECK(r.err.find("malformed.json:3:") != std::string::npos);
    CHECK(run({"check", "--scenario", "/nonexistent.json"}).code == 2);
    CHECK(run({"check"}).code == 2);
    CHECK(run({"awh", "composite"}).code == 2);
    CHECK(run({"awh", "symbol", "--scenario", scenario("delta_manifest.json")}).code == 2);
    CHECK(run({"check", "--scenario", scenario("stft.json")}).code == 2);
  }

  TEST_CASE("awh subcommands") {
    const auto sym = run({"awh", "symbol", "--scenario", scenario("stft.json")});
    CHECK(sym.code == 0);
    CHECK(sym.out.rfind("xi,re,im,abs\n", 0) == 0);

    const auto dy = run({"awh", "dyadic", "--scenario", scenario("mexican_hat.json")});
    CHECK(dy.code == 0);
    const auto dj = nlohmann::json::parse(dy.out);
    CHECK(dj.at("lower_condition").at("holds") == true);
    CHECK(dj.at("envelope_condition").at("holds") == true);

    CHECK(run({"awh", "dyadic", "--scenario", scenario("mexican_hat.json"), "--xi", "0"}).code == 2);
    CHECK(run({"awh", "dual", "--scenario", scenario("mexican_hat.json")}).code == 0);

    const auto der = run({"awh", "derivative", "--scenario", scenario("bump_pair.json"), "--tol", "1e-5"});
    CHECK(der.code == 0);
    CHECK(nlohmann::json::parse(der.out).at("passed") == true);

    const auto gr = run({"awh", "growth", "--scenario", scenario("growth.json")});
    CHECK(gr.code == 0);
    CHECK(nlohmann::json::parse(gr.out).at("verdict") == "unbounded growth");
  }

  TEST_CASE("--out writes artifacts deterministically") {
    const auto a = fresh_dir("det_a");
    const auto b = fresh_dir("det_b");
    for (const auto& dir : {a, b}) {
      CHECK(run({"awh", "symbol", "--scenario", scenario("composite.json"), "--nodes", "20000", "--out", dir.string()})
                .code == 0);
      CHECK(run({"symbol", "--scenario", scenario("gabor_z12.json"), "--out", (dir / "finite").string()}).code == 0);
    }
    for (const auto* name : {"symbol.csv", "report.json", "finite/symbol.csv"}) {
      REQUIRE(fs::exists(a / name));
      CHECK(cnsgt::io::read_text_file(a / name) == cnsgt::io::read_text_file(b / name));
    }
    const auto report = nlohmann::json::parse(cnsgt::io::read_text_file(a / "report.json"));
    CHECK(report.at("min_abs").get<double>() >= 2.0 - 1e-3);
    CHECK(report.at("max_abs").get<double>() <= 3.0 + 1e-3);
  }

  TEST_CASE("verify-paper passes, and fails under an impossible tolerance") {
    const auto dir = fresh_dir("verify");
    const auto r = run({"verify-paper", "--out", dir.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    const auto records = nlohmann::json::parse(cnsgt::io::read_text_file(dir / "verification.json"));
    CHECK(records.size() >= 12);
    for (const auto& rec : records) {
      CHECK(rec.contains("anchor"));
      CHECK(rec.at("status") == "pass");
    }
    const auto strict = run({"verify-paper", "--tol", "1e-30"});
    CHECK(strict.code == 1);
    CHECK(strict.out.find("FAIL") != std::string::npos);
  }
}
