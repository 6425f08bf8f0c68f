#include "doctest.h"

#include <sstream>

#include <nlohmann/json.hpp>

#include "coxcert/commands.hpp"

using namespace coxcert;
using nlohmann::json;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

template <class F>
Run run(F&& f) {
  std::ostringstream out, err;
  const int rc = f(out, err);
  return {rc, out.str(), err.str()};
}

RunConfig config(const std::string& type, const std::string& q = "auto") {
  RunConfig cfg;
  cfg.type = type;
  cfg.q = q;
  return cfg;
}

}  // namespace

TEST_CASE("q lists") {
  CHECK(parse_q_list("auto", 6) == std::vector<long>{7, 8, 9, 10});
  CHECK(parse_q_list("7,8", 6) == std::vector<long>{7, 8});
  CHECK_THROWS_AS(parse_q_list("7,x", 6), std::invalid_argument);
  CHECK_THROWS_AS(parse_q_list("1", 6), std::invalid_argument);
  CHECK_THROWS_AS(parse_q_list("", 6), std::invalid_argument);
}

TEST_CASE("m-table") {
  const Run r = run([](auto& o, auto& e) { return cmd_m_table(o, e); });
  CHECK(r.rc == kExitOk);
  CHECK(r.out.rfind("type\trank\tM\tsource\n", 0) == 0);
  CHECK(r.out.find("\nD4\t4\t2\tderived\n") != std::string::npos);
  CHECK(r.out.find("\nE8\t8\t6\tpaper\n") != std::string::npos);
  CHECK(r.out.find("\nG2\t2\t3\tpaper\n") != std::string::npos);
}

TEST_CASE("certify") {
  const Run r = run([](auto& o, auto& e) { return cmd_certify(config("A2", "2"), o, e); });
  REQUIRE(r.rc == kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["type"] == "A2");
  CHECK(doc["q"] == 2);
  CHECK(doc["M"] == 1);
  CHECK(doc["h"] == 3);
  CHECK(doc["c_word"] == json::array({1, 2}));
  for (const auto& c : doc["checks"]) {
    CAPTURE(c["name"].get<std::string>());
    CHECK(c["status"] == "pass");
  }

  const Run again = run([](auto& o, auto& e) { return cmd_certify(config("A2", "2"), o, e); });
  CHECK(again.out == r.out);

  const Run twisted = run([](auto& o, auto& e) { return cmd_certify(config("2A3"), o, e); });
  CHECK(twisted.rc == kExitOk);
  const json t = json::parse(twisted.out);
  CHECK(t["twist"] == 2);
  CHECK(t["q"] == json::array({2, 3, 4, 5}));
}

TEST_CASE("certify refuses q <= M unless forced") {
  const Run r = run([](auto& o, auto& e) { return cmd_certify(config("B2", "2"), o, e); });
  CHECK(r.rc == kExitUsage);
  CHECK(r.out.empty());
  CHECK(r.err.find("M=2") != std::string::npos);

  RunConfig forced = config("B2", "2");
  forced.force = true;
  const Run f = run([&](auto& o, auto& e) { return cmd_certify(forced, o, e); });
  CHECK(f.rc != kExitUsage);
  CHECK(json::parse(f.out)["schema"] == 1);

  CHECK(run([](auto& o, auto& e) { return cmd_certify(config("Q3"), o, e); }).rc == kExitUsage);
}

TEST_CASE("verify-cells") {
  const Run r = run([](auto& o, auto& e) { return cmd_verify_cells(config("B2"), o, e); });
  REQUIRE(r.rc == kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc["mode"] == "exhaustive");
  CHECK(doc["elements"] == 8);
  CHECK(doc["reports"].size() == 4);
  for (const auto& rep : doc["reports"]) CHECK(rep["violators"].empty());

  RunConfig big = config("E6");
  big.exhaustive = true;
  CHECK(run([&](auto& o, auto& e) { return cmd_verify_cells(big, o, e); }).rc == kExitUsage);
}

TEST_CASE("oracle-check") {
  const Run ok = run([](auto& o, auto& e) { return cmd_oracle_check(RunConfig{}, o, e); });
  CHECK(ok.rc == kExitOk);
  CHECK(ok.out.find("oracle: pass") != std::string::npos);

  RunConfig mutated;
  mutated.mutate = true;
  const Run bad = run([&](auto& o, auto& e) { return cmd_oracle_check(mutated, o, e); });
  CHECK(bad.rc == kExitFailed);
  CHECK(bad.out.find("oracle: FAIL") != std::string::npos);
  CHECK(bad.err.find("mismatch") != std::string::npos);
}
