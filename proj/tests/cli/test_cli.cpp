#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "doctest.h"
#include "hermit/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hermit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("census parabolas, both modes") {
  const auto r = run({"census", "parabolas", "--q", "3", "--mode", "both"});
  REQUIRE(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["match"] == true);
  CHECK(j["histograms"]["brute"] == j["histograms"]["formula"]);
  CHECK(j["histograms"]["brute"]["counts"]["3"] == 252);
  CHECK(j["histograms"]["brute"]["total"] == 648);
  CHECK(j["field"]["q"] == 3);
  CHECK(j["point_order"].is_string());
}

TEST_CASE("census lines") {
  const auto r = run({"census", "lines", "--q", "2"});
  REQUIRE(r.code == 0);
  const auto counts = json_of(r)["histograms"]["formula"]["non_vertical"]["counts"];
  CHECK(counts == nlohmann::json{{"1", 8}, {"3", 8}});
}

TEST_CASE("field selection") {
  CHECK(run({"census", "parabolas", "--q", "1000000"}).code == 1);
  CHECK(run({"census", "parabolas", "--q", "1000000"}).err.find("FieldTooLarge") != std::string::npos);
  CHECK(run({"census", "parabolas", "--q", "6"}).code == 1);
  CHECK(run({"census", "parabolas", "--q", "4", "--p", "3"}).code == 1);
  const auto r = run({"census", "parabolas", "--p", "2", "--e", "2"});
  REQUIRE(r.code == 0);
  CHECK(json_of(r)["field"]["q"] == 4);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"census"}).code == 1);
  CHECK(run({"census", "parabolas", "--q", "3", "--mode", "guess"}).code == 1);
  CHECK(run({"weights", "brute", "--q", "3", "--d", "3", "--j", "0"}).code == 1);
  CHECK(run({"code", "params", "--q", "3"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("code params") {
  const auto r = run({"code", "params", "--q", "3", "--d", "3", "--j", "1"});
  REQUIRE(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["n"] == 27);
  CHECK(j["k"] == 23);
  CHECK(j["d"] == 3);
  const auto m = run({"code", "params", "--q", "4", "--m", "30"});
  REQUIRE(m.code == 0);
  CHECK(json_of(m)["phase"] == 3);
  CHECK(json_of(m)["d"] == 19);
  CHECK(run({"code", "params", "--q", "3", "--m", "1000"}).code == 1);
}

TEST_CASE("code matrix") {
  const auto r = run({"code", "matrix", "--q", "2", "--d", "2", "--j", "1"});
  REQUIRE(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][0].size() == 8);
  CHECK(j["points"].size() == 8);
}

TEST_CASE("weights formula and brute") {
  const auto f = run({"weights", "formula", "--q", "3", "--d", "3", "--j", "0", "--w", "4"});
  REQUIRE(f.code == 0);
  CHECK(json_of(f)["count"] == 101088);
  const auto b = run({"weights", "brute", "--q", "3", "--d", "3", "--j", "0", "--w", "3"});
  REQUIRE(b.code == 0);
  CHECK(json_of(b)["count"] == 1800);
  CHECK(json_of(b)["solution_tuples"] == 1800 * 6);
  const auto h = run({"weights", "brute", "--q", "3", "--d", "3", "--j", "1", "--w", "4", "--filter", "horizontal"});
  REQUIRE(h.code == 0);
  CHECK(json_of(h)["count"] == 48);
  CHECK(run({"weights", "formula", "--q", "3", "--d", "2", "--j", "0", "--w", "5"}).code == 1);
  CHECK(run({"weights", "formula", "--q", "3", "--d", "4", "--j", "0", "--w", "4"}).code == 1);
}

TEST_CASE("budget flag and environment") {
  const auto over = run({"weights", "brute", "--q", "3", "--d", "3", "--j", "0", "--w", "3", "--budget", "10"});
  CHECK(over.code == 1);
  CHECK(over.err.find("BudgetExceeded") != std::string::npos);
  ::setenv("HERMIT_BUDGET", "10", 1);
  CHECK(run({"weights", "brute", "--q", "3", "--d", "3", "--j", "0", "--w", "3"}).code == 1);
  CHECK(run({"weights", "brute", "--q", "3", "--d", "3", "--j", "0", "--w", "3", "--budget", "3000"}).code == 0);
  const auto v = run({"verify", "--q", "3"});
  CHECK(v.code == 0);
  CHECK(json_of(v)["summary"]["skipped"].get<int>() > 0);
  ::unsetenv("HERMIT_BUDGET");
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--q", "2", "--max-w", "3"});
  CHECK(r.code == 0);
  const auto v3 = run({"verify", "--q", "3"});
  REQUIRE(v3.code == 0);
  const auto j = json_of(v3);
  CHECK(j["max_w"] == 4);
  CHECK(j["summary"]["mismatched"] == 0);
  CHECK(j["summary"]["skipped"] == 0);
  CHECK(j["horizontal_edge_formula"]["winner"] == "proof_end");
  CHECK(v3.out.find("seconds") == std::string::npos);
}

TEST_CASE("verify output does not depend on threads") {
  const auto a = run({"verify", "--q", "3", "--threads", "1"});
  const auto b = run({"verify", "--q", "3", "--threads", "4"});
  const auto c = run({"verify", "--q", "3", "--threads", "16"});
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("csv and output file") {
  const auto csv = run({"census", "parabolas", "--q", "2", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("mode,universe,k,count\n", 0) == 0);
  CHECK(csv.out.find("formula,parabolas,1,24\n") != std::string::npos);
  const auto path = temp_file("hermit_cli_test_output.json");
  const auto r = run({"census", "lines", "--q", "3", "--output", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(nlohmann::json::parse(in)["field"]["q"] == 3);
  std::filesystem::remove(path);
}

TEST_CASE("config file") {
  const auto path = temp_file("hermit_cli_test_config.json");
  {
    std::ofstream cfg(path);
    cfg << R"({"q": 3, "d": 3, "j": 1, "w": 3, "threads": 2})";
  }
  const auto r = run({"weights", "brute", "--config", path.string()});
  REQUIRE(r.code == 0);
  CHECK(json_of(r)["count"] == 72);
  const auto over = run({"weights", "brute", "--config", path.string(), "--j", "0"});
  REQUIRE(over.code == 0);
  CHECK(json_of(over)["count"] == 1800);
  {
    std::ofstream cfg(path);
    cfg << "not json";
  }
  CHECK(run({"weights", "brute", "--config", path.string()}).code == 1);
  std::filesystem::remove(path);
}

}  // TEST_SUITE
