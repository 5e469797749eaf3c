#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crn/verdict.hpp"
#include "fixture_util.hpp"

using crn::AnalysisConfig;
using crn::Boundedness;
using crn::Network;
using crn::Verdict;

TEST_CASE("verdicts for the bundled fixtures") {
  const auto ex1 = crn::analyze(load_fixture("example1.crn"));
  CHECK(ex1.verdict == Verdict::PersistentAndGAC);
  CHECK(ex1.boundedness == Boundedness::ComplexBalancedStructural);
  CHECK(ex1.nested_critical_locking);

  const auto ex2 = crn::analyze(load_fixture("example2.crn"));
  CHECK(ex2.verdict == Verdict::PersistentAndGAC);
  CHECK(ex2.boundedness == Boundedness::ComplexBalancedStructural);

  const auto ex3 = crn::analyze(load_fixture("example3.crn"));
  CHECK(ex3.verdict == Verdict::Inconclusive);

  const auto abba = crn::analyze(load_fixture("abba.crn"));
  CHECK(abba.verdict == Verdict::PersistentAndGAC);
  CHECK(abba.boundedness == Boundedness::Conservative);
}

TEST_CASE("boundedness assumption flag") {
  // Pure growth: certifiable siphon but no structural bound on trajectories.
  const Network net = crn::parse_network("A -> 2 A ; k = 1\n");
  const auto plain = crn::analyze(net);
  CHECK(plain.boundedness == Boundedness::Unknown);
  CHECK(plain.verdict == Verdict::PersistentIfBounded);

  AnalysisConfig config;
  config.assume_bounded = true;
  const auto assumed = crn::analyze(net, config);
  CHECK(assumed.boundedness == Boundedness::AssumedByFlag);
  CHECK(assumed.verdict == Verdict::Persistent);
}

TEST_CASE("rule trace covers every siphon") {
  const Network net = load_fixture("example3.crn");
  const auto report = crn::analyze(net);
  REQUIRE(report.siphons.size() == 2);
  for (const auto& s : report.siphons) CHECK(!s.rule.empty());
  CHECK(report.siphons[0].rule.find("unresolved") != std::string::npos);
}

TEST_CASE("json report shape") {
  const Network net = load_fixture("example2.crn");
  const auto report = crn::analyze(net);
  const auto j = crn::report_to_json(report, net);
  CHECK(j["verdict"] == "PersistentAndGAC");
  CHECK(j["structure"]["deficiency"] == 0);
  CHECK(j["structure"]["weakly_reversible"] == true);
  CHECK(j["boundedness"] == "ComplexBalancedStructural");
  REQUIRE(j["siphons"].size() == 2);
  CHECK(j["siphons"][0]["I"] == nlohmann::ordered_json::array({"A1", "A2"}));
  CHECK(j["siphons"][0]["status"]["kind"] == "WdneCertified");
  CHECK(j["siphons"][1]["status"]["kind"] == "VertexOrEmpty");
  CHECK(j["rule_trace"].size() == 2);

  // 1-based reaction indices in the pair list.
  const auto& pairs = j["siphons"][0]["status"]["J"];
  for (const auto& p : pairs) {
    CHECK(p[0].get<int>() >= 1);
    CHECK(p[1].get<int>() >= 1);
  }
}

TEST_CASE("analysis is deterministic, including under parallel certification") {
  for (const char* name : {"example1.crn", "example2.crn", "example3.crn", "abba.crn"}) {
    const Network net = load_fixture(name);
    const auto first = crn::report_to_json(crn::analyze(net), net).dump(2);
    const auto second = crn::report_to_json(crn::analyze(net), net).dump(2);
    CHECK(first == second);

    AnalysisConfig parallel;
    parallel.threads = 4;
    const auto third = crn::report_to_json(crn::analyze(net, parallel), net).dump(2);
    CHECK(first == third);
  }
}

TEST_CASE("text report mentions the verdict and every siphon") {
  const Network net = load_fixture("example1.crn");
  const auto report = crn::analyze(net);
  const std::string text = crn::report_to_text(report, net);
  CHECK(text.find("verdict: PersistentAndGAC") != std::string::npos);
  CHECK(text.find("{A1}") != std::string::npos);
  CHECK(text.find("{A1,A2}") != std::string::npos);
  CHECK(text.find("facet") != std::string::npos);
}
