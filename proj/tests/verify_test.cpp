#include <stdexcept>
#include <string>

#include "accdom/generators.hpp"
#include "accdom/graph.hpp"
#include "accdom/verify.hpp"
#include "doctest.h"

using namespace accdom;

namespace {

RunConfig tiny(const std::string& id) {
  RunConfig c;
  c.theorem_id = id;
  c.max_n = 4;
  c.samples = 5;
  c.seed = 1;
  return c;
}

}  // namespace

TEST_CASE("every check passes at a small size") {
  for (const std::string& id : known_check_ids()) {
    VerificationReport rep = run_check(tiny(id));
    CHECK(rep.theorem_id == id);
    CHECK(rep.passed());
    CHECK(rep.instances_tested > 0);
    CHECK(rep.seed == 1);
  }
}

TEST_CASE("check list is fixed") {
  const auto& ids = known_check_ids();
  REQUIRE(ids.size() == 16);
  CHECK(ids.front() == "obs1.1");
  CHECK(ids[4] == "lem2.1");
  CHECK(ids[7] == "thm2.4");
  CHECK(ids.back() == "disconnected");
  CHECK_THROWS_AS(run_check({"thm9.9", {}, {}, 1}), std::invalid_argument);
  CHECK_THROWS_AS(run_check({"", {}, {}, 1}), std::invalid_argument);
}

TEST_CASE("runs are deterministic apart from timing") {
  for (const std::string& id : {std::string("lem2.1"), std::string("thm3.3"),
                                std::string("disconnected")}) {
    RunConfig c = tiny(id);
    c.samples = 20;
    c.seed = 9;
    VerificationReport a = run_check(c);
    VerificationReport b = run_check(c);
    CHECK(a.instances_tested == b.instances_tested);
    CHECK(a.seed == b.seed);
    REQUIRE(a.failures.size() == b.failures.size());
    for (std::size_t i = 0; i < a.failures.size(); ++i) {
      CHECK(a.failures[i].instance == b.failures[i].instance);
      CHECK(a.failures[i].expected == b.failures[i].expected);
      CHECK(a.failures[i].actual == b.failures[i].actual);
    }
  }
}

TEST_CASE("seed changes the sampled instances but not the verdict") {
  RunConfig c = tiny("lem2.2");
  c.samples = 30;
  c.seed = 2;
  VerificationReport a = run_check(c);
  c.seed = 3;
  VerificationReport b = run_check(c);
  CHECK(a.passed());
  CHECK(b.passed());
  CHECK(a.instances_tested == b.instances_tested);
}

TEST_CASE("running everything covers each check once") {
  RunConfig c;
  c.max_n = 4;
  c.samples = 3;
  c.seed = 5;
  std::vector<VerificationReport> reports = run_all_checks(c);
  REQUIRE(reports.size() == known_check_ids().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].theorem_id == known_check_ids()[i]);
    CHECK(reports[i].passed());
  }
}

TEST_CASE("report serialization") {
  VerificationReport rep;
  rep.theorem_id = "obs1.1";
  rep.instances_tested = 3;
  rep.failures.push_back({"K4", "gamma_a = 3", "gamma_a = 2"});
  rep.elapsed_ms = 12;
  rep.seed = 4;
  CHECK(report_to_json(rep) ==
        "{\n"
        "  \"theorem_id\": \"obs1.1\",\n"
        "  \"instances_tested\": 3,\n"
        "  \"failures\": [\n"
        "    {\n"
        "      \"instance\": \"K4\",\n"
        "      \"expected\": \"gamma_a = 3\",\n"
        "      \"actual\": \"gamma_a = 2\"\n"
        "    }\n"
        "  ],\n"
        "  \"elapsed_ms\": 12,\n"
        "  \"seed\": 4\n"
        "}");

  VerificationReport clean;
  clean.theorem_id = "cor2.5";
  clean.instances_tested = 12;
  clean.elapsed_ms = 1;
  clean.seed = 1;
  CHECK(report_to_json(clean) ==
        "{\n"
        "  \"theorem_id\": \"cor2.5\",\n"
        "  \"instances_tested\": 12,\n"
        "  \"failures\": [],\n"
        "  \"elapsed_ms\": 1,\n"
        "  \"seed\": 1\n"
        "}");

  std::string both = reports_to_json({clean, clean});
  CHECK(both.front() == '[');
  CHECK(both.find("\"cor2.5\"") != std::string::npos);
}

TEST_CASE("component equality transfer") {
  CHECK(check_disconnected_rule(build_standard(StandardFamily::path, 3)));

  Graph two_edges(4, {{0, 1}, {2, 3}});  // equality fails on both levels
  CHECK(check_disconnected_rule(two_edges));

  Graph mixed(5, {{0, 1}, {1, 2}, {3, 4}});  // P3 component carries equality
  CHECK(check_disconnected_rule(mixed));

  Graph lonely(3, {{0, 1}});
  CHECK(check_disconnected_rule(lonely));

  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : all_graphs(n, false))
      CHECK(check_disconnected_rule(g));
}

TEST_CASE("reports respect sample overrides") {
  RunConfig c = tiny("lem2.2");
  c.samples = 7;
  CHECK(run_check(c).instances_tested == 7);
  c.samples = 11;
  CHECK(run_check(c).instances_tested == 11);
}
