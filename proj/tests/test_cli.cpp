#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int rc;
  std::string out;
};

Run run(const std::string& args) {
  const char* bin = std::getenv("RRS_BIN");
  REQUIRE_MESSAGE(bin, "RRS_BIN not set");
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

bool has(const std::string& s, const std::string& t) { return s.find(t) != std::string::npos; }

}  // namespace

TEST_CASE("verify one id") {
  Run r = run("verify --id RR1 --order 200");
  CHECK(r.rc == 0);
  CHECK(has(r.out, "RR1"));
  CHECK(has(r.out, "pass"));
}

TEST_CASE("exit codes") {
  CHECK(run("verify --id nosuch").rc == 2);
  CHECK(run("verify").rc == 2);
  CHECK(run("verify --id RR1 --order 0").rc == 2);
  CHECK(run("verify --all --catalog /nonexistent/catalog.json").rc == 3);
  CHECK(run("frobnicate").rc == 2);
  CHECK(run("partitions bressoud --k 3 --i 3 --nmax 10").rc == 2);
  CHECK(run("partitions gordon --k 2 --i 3 --nmax 10").rc == 2);
}

TEST_CASE("RRS_CATALOG overrides the catalog path") {
  const char* bin = std::getenv("RRS_BIN");
  REQUIRE(bin);
  std::string cmd = std::string("RRS_CATALOG=/nonexistent.json ") + bin + " verify --id RR1 >/dev/null 2>&1";
  int st = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(st) == 3);
}

TEST_CASE("json report follows the schema and agrees with text") {
  Run j = run("verify --all --order 30 --jobs 2 --output json");
  CHECK(j.rc == 0);
  auto rep = nlohmann::json::parse(j.out);
  CHECK(rep["order"] == 30);
  REQUIRE(rep["results"].is_array());
  int fails = 0;
  for (const auto& r : rep["results"]) {
    CHECK(r.contains("id"));
    CHECK(r.contains("verified_order"));
    std::string s = r["status"];
    CHECK((s == "pass" || s == "fail" || s == "skip"));
    if (s == "fail") ++fails;
  }
  CHECK(fails == 0);
  CHECK(rep["summary"]["fail"] == 0);

  Run t = run("verify --all --order 30 --jobs 2");
  CHECK(t.rc == 0);
  for (const auto& r : rep["results"]) {
    std::string id = r["id"], s = r["status"];
    auto at = t.out.find(id + " ");
    REQUIRE(at != std::string::npos);
    CHECK(t.out.substr(at, t.out.find('\n', at) - at).find(" " + s + " ") != std::string::npos);
  }
}

TEST_CASE("json bodies do not depend on jobs") {
  CHECK(run("verify --all --order 25 --jobs 1 --output json").out ==
        run("verify --all --order 25 --jobs 4 --output json").out);
}

TEST_CASE("derive") {
  Run r = run("derive --family E --d 1 --e 2 --k 3 --order 60");
  CHECK(r.rc == 0);
  CHECK(has(r.out, "4 members"));
  CHECK(has(r.out, "(q^1;q^8)(q^7;q^8)(q^8;q^8) / (q^2;q^2)"));
  CHECK(has(r.out, "recursion: ok"));

  r = run("derive --family S --d 1 --e 1 --k 2 --order 60");
  CHECK(r.rc == 0);
  CHECK(has(r.out, "(q^1;q^5)(q^4;q^5)(q^5;q^5) / (q^1;q^1)"));
  CHECK(has(r.out, "(q^2;q^5)(q^3;q^5)(q^5;q^5) / (q^1;q^1)"));

  r = run("derive --family S --d 3 --e 1 --k 4 --order 60");
  CHECK(r.rc == 0);
  CHECK(has(r.out, "(q^9;q^27)(q^18;q^27)(q^27;q^27) / (q^1;q^1)"));

  CHECK(run("derive --family X --d 1 --e 1 --k 1").rc == 2);
  CHECK(run("derive --family S --d 0 --e 1 --k 1").rc == 2);
}

TEST_CASE("partitions") {
  Run r = run("partitions gordon --k 2 --i 2 --nmax 30");
  CHECK(r.rc == 0);
  CHECK(has(r.out, "all equal"));
  CHECK(run("partitions santos --k 2 --i 1 --nmax 30").rc == 0);
  CHECK(run("partitions bressoud --k 3 --i 3 --extended --nmax 30").rc == 0);
  Run j = run("partitions gordon --k 3 --i 1 --d 2 --nmax 20 --output json");
  CHECK(j.rc == 0);
  auto js = nlohmann::json::parse(j.out);
  CHECK(js["theorem"] == "dilated-gordon");
  CHECK(js["lhs"] == js["rhs"]);
}
