#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "json.hpp"
#include "plectic/error.hpp"
#include "plectic/report.hpp"
#include "plectic/verify.hpp"

using namespace plectic;

TEST(Verify, SkipsCarryTheirFlag) {
  const auto m = fixtures::model("zeta15");
  for (const auto& suite : {"taniyama", "cmaction", "pi0"}) {
    const auto checks = run_suite(m, suite);
    ASSERT_EQ(checks.size(), 1u);
    EXPECT_EQ(checks[0].status, Status::Skip);
    EXPECT_EQ(checks[0].flag, "top_cartesian");
  }
  for (const auto& c : run_suite(m, "halftransfer")) EXPECT_EQ(c.status, Status::Pass) << c.name;
  EXPECT_THROW(run_suite(m, "bogus"), Error);
}

TEST(Verify, AllSuitesPassOnCartesianModels) {
  for (const auto& id : {"sextic-synthetic", "zeta15-synthetic"}) {
    const auto m = fixtures::model(id);
    for (const auto& s : suite_names())
      for (const auto& c : run_suite(m, s)) {
        EXPECT_EQ(c.status, Status::Pass) << id << " " << c.suite << "/" << c.name;
        EXPECT_GT(c.cases, 0u) << c.name;
      }
  }
}

TEST(Verify, IntermediateTorusIsCovered) {
  const auto m = fixtures::model("zeta24-synthetic");
  bool seen = false;
  for (const auto& c : run_suite(m, "cmaction"))
    if (c.name == "action_law[intermediate]") {
      seen = true;
      EXPECT_EQ(c.status, Status::Pass);
    }
  EXPECT_TRUE(seen);
}

TEST(ChiDependenceTest, UniqueSplitting) {
  const auto d = chi_dependence(fixtures::model("zeta15-synthetic"));
  EXPECT_EQ(d.splittings, 1u);
  EXPECT_FALSE(d.taniyama_varies);
  EXPECT_TRUE(d.ok());
}

TEST(ChiDependenceTest, Zeta24) {
  const auto d = chi_dependence(fixtures::model("zeta24-synthetic"));
  ASSERT_EQ(d.splittings, 2u);
  EXPECT_TRUE(d.taniyama_varies);
  EXPECT_TRUE(d.ok());
  for (const auto& t : d.tori) {
    EXPECT_TRUE(t.pi0_invariant) << t.name;
    EXPECT_GT(t.pi0_compared, 0u);
    if (t.name == "intermediate") EXPECT_TRUE(t.membership_varies);
    if (t.name == "full") EXPECT_FALSE(t.membership_varies);
  }
}

TEST(Report, JsonSchemaAndDeterminism) {
  const auto m = fixtures::model("zeta15");
  auto r = start_report("verify", m);
  r.checks = run_suite(m, "taniyama");
  r.seconds = 1.5;
  const auto a = to_json(r, false), b = to_json(r, false);
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["model"], "zeta15");
  EXPECT_EQ(j["checks"][0]["status"], "skipped");
  EXPECT_EQ(j["checks"][0]["flag"], "top_cartesian");
  EXPECT_EQ(j["flags"]["top_cartesian"], false);
  EXPECT_EQ(j["ok"], true);
  EXPECT_DOUBLE_EQ(j["seconds"].get<double>(), 1.5);
  EXPECT_FALSE(nlohmann::json::parse(a).contains("seconds"));
  EXPECT_NE(to_table(r).find("skipped"), std::string::npos);
}

TEST(Report, FailureMakesReportNotOk) {
  const auto m = fixtures::model("zeta15");
  auto r = start_report("verify", m);
  Check c;
  c.suite = "x";
  c.name = "y";
  c.status = Status::Fail;
  c.counterexamples = {"boom"};
  r.checks.push_back(c);
  EXPECT_FALSE(r.ok());
  const auto j = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(j["ok"], false);
  EXPECT_EQ(j["checks"][0]["counterexamples"][0], "boom");
}
