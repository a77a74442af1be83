#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "test_util.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const char* bin = std::getenv("PLETH_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = env + " '" + std::string(bin) + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path fresh_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("pleth-cli-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("identity reports", "[cli]") {
  Run r = run("identity cno --n 2");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["identity"] == "cno");
  CHECK(j["parameters"]["n"] == "2");
  CHECK(j["order_checked"] == 2);
  CHECK(j["pass"] == true);
  CHECK(j["authoritative"] == true);
  CHECK_FALSE(j.contains("first_failure"));
  CHECK_FALSE(j.contains("wall_time_s"));

  for (const char* args : {"identity tcore --r 3 --size 12", "identity macid --r 2 --order 10", "identity 2core --n 6",
                           "identity genus1 --n 3", "identity bernstein --r 2 --symbolic-x --size 8", "identity h2 --g 1",
                           "identity cmn --parity odd --r 2 --s 2", "identity boundary --k 2 --k2 1 --n 2"}) {
    INFO(args);
    Run x = run(args);
    CHECK(x.code == 0);
    CHECK(Json::parse(x.out)["pass"] == true);
  }
}

TEST_CASE("hh rows", "[cli]") {
  Run r = run("hh --g 1 --k 0 --n 4");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j["rows"].size() == 4);
  for (const auto& row : j["rows"]) {
    CHECK(row["g"] == 1);
    CHECK(row["k"] == 0);
    CHECK(row["is_polynomial"] == true);
    CHECK(row["nonneg_after_sign_flip"] == true);
    CHECK(row["denominator"] == "1");
  }
  CHECK(j["rows"][0]["numerator"] == "-z*w*u + z^2 + w^2 - z*w*u^-1");
  CHECK(j["report"]["pass"] == true);

  Run k2 = run("hh --g 0 --k 2 --n 3");
  REQUIRE(k2.code == 0);
  Json j2 = Json::parse(k2.out);
  REQUIRE_FALSE(j2["rows"].empty());
  CHECK(j2["rows"][0]["lambda_tuple"] == Json::parse("[[1],[1]]"));

  CHECK(run("hh --g 0 --k 0 --n 1").code == 0);
  CHECK(run("hh --g 2 --k 0 --n 2 --u-mode unit").code == 0);

  Run csv = run("hh --g 1 --n 2 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("g,k,n,lambda_tuple,numerator,denominator,is_polynomial,nonneg_after_sign_flip\n", 0) == 0);
}

TEST_CASE("usage errors and modes", "[cli]") {
  CHECK(run("hh --g 9 --n 1").code == 2);
  CHECK(run("hh --g 1 --n 1 --u-mode values --u 1,2,3").code == 2);
  CHECK(run("identity nosuch").code != 0);
  CHECK(run("identity bernstein --r 3 --symbolic-x").code == 2);
  CHECK(run("cache build --n 1").code == 2);

  Json prob = Json::parse(run("identity genus1 --n 2 --equality probabilistic").out);
  CHECK(prob["pass"] == true);
  CHECK(prob["authoritative"] == false);

  Json timed = Json::parse(run("identity euler --n 3 --timing").out);
  CHECK(timed.contains("wall_time_s"));
  CHECK(timed.contains("cache_hits"));
}

TEST_CASE("macdonald dump", "[cli]") {
  Run r = run("macdonald --n 2");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j["entries"].size() == 2);
  CHECK(j["entries"][0]["mu"] == Json::parse("[2]"));
  CHECK(j["entries"][0]["H"] == Json::parse(R"({"[2]": "1", "[1,1]": "q"})"));
  CHECK(j["entries"][1]["H"] == Json::parse(R"({"[2]": "1", "[1,1]": "t"})"));
  CHECK(run("macdonald --n 0").code == 0);
}

TEST_CASE("core listing", "[cli]") {
  Json j = Json::parse(run("core --r 3 --lambda 5,3,1,1").out);
  CHECK(j["cores"][0]["is_core"] == true);
  CHECK(j["cores"][0]["n_vector"] == Json::parse("[0,2,-2]"));
}

TEST_CASE("cache round trip", "[cli]") {
  fs::path d = fresh_dir("cache");
  std::string env = "PLETH_CACHE_DIR='" + d.string() + "'";
  Run cold = run("identity cno --n 3", env);
  REQUIRE(cold.code == 0);
  REQUIRE(fs::exists(d / "macdonald-v1-n3.txt"));
  Run warm = run("identity cno --n 3", env);
  CHECK(warm.out == cold.out);
  CHECK(run("identity cno --n 3").out == cold.out);
  CHECK(run("identity cno --n 3 --workers 3").out == cold.out);
  Json timed = Json::parse(run("identity cno --n 3 --timing", env).out);
  CHECK(timed["cache_hits"].get<int>() > 0);

  CHECK(run("cache build --n 3 --cache-dir '" + d.string() + "'").code == 0);
  CHECK(run("cache verify --n 3", env).code == 0);

  // A table written by a different format version is rejected.
  {
    std::ofstream f(d / "macdonald-v1-n2.txt");
    f << "pleth-macdonald-table 2\nvars q t\ndegree 2\n";
  }
  Run bumped = run("cache load --n 3", env);
  CHECK(bumped.code == 1);
  CHECK(Json::parse(bumped.out)["first_failure"]["label"] == "degree 2 readable");
  {
    std::ofstream f(d / "macdonald-v1-n2.txt");
    f << "garbage\n";
  }
  CHECK(run("cache verify --n 3", env).code == 1);
  // Normal runs fall back to recomputation and still agree.
  CHECK(run("identity cno --n 3", env).out == cold.out);
  fs::remove_all(d);
}
