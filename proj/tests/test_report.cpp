#include <gtest/gtest.h>

#include "localdeg/report.hpp"

using namespace localdeg;

namespace {

Report sample_report() {
  Report r;
  r.command = "verify demo";
  r.params["p"] = 3;
  r.add("exact identity", true, EvidenceKind::Proof, "a = a");
  r.add_sampled("random orders", true, 42, "100 samples");
  r.skip("large table", EvidenceKind::Exhaustive, "over the cap");
  r.data["order"] = 27;
  return r;
}

}  // namespace

TEST(Report, ExitCodeFollowsFailures) {
  Report r = sample_report();
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.exit_code(), 0);
  r.add("broken", false, EvidenceKind::Exhaustive);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(Report, SkippedIsNotFailure) {
  Report r;
  r.skip("only", EvidenceKind::Proof, "n/a");
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Report, JsonShape) {
  const Json j = to_json(sample_report());
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "params", "checks", "seed", "data"}));
  EXPECT_TRUE(j["seed"].is_null());
  ASSERT_EQ(j["checks"].size(), 3u);
  EXPECT_EQ(j["checks"][0]["status"], "pass");
  EXPECT_EQ(j["checks"][0]["kind"], "proof");
  EXPECT_FALSE(j["checks"][0].contains("seed"));
  EXPECT_EQ(j["checks"][1]["kind"], "sampled");
  EXPECT_EQ(j["checks"][1]["seed"], 42);
  EXPECT_EQ(j["checks"][2]["status"], "skipped");
  EXPECT_EQ(j["data"]["order"], 27);
}

TEST(Report, ElapsedOnlyWhenSet) {
  Report r = sample_report();
  EXPECT_FALSE(to_json(r).contains("elapsed_ms"));
  r.elapsed_ms = 5;
  EXPECT_EQ(to_json(r)["elapsed_ms"], 5);
  EXPECT_NE(to_text(r).find("elapsed_ms 5"), std::string::npos);
}

TEST(Report, TextLines) {
  const std::string t = to_text(sample_report());
  EXPECT_EQ(t.rfind("verify demo p=3\n", 0), 0u);
  EXPECT_NE(t.find("[pass] exact identity (proof): a = a\n"), std::string::npos);
  EXPECT_NE(t.find("[pass] random orders (sampled, seed 42): 100 samples\n"), std::string::npos);
  EXPECT_NE(t.find("[skipped] large table (exhaustive): over the cap\n"), std::string::npos);
  EXPECT_NE(t.find("order: 27\n"), std::string::npos);
  EXPECT_NE(t.find("OK 3 checks, 0 failed\n"), std::string::npos);
}

TEST(Report, EveryRecordedSampledCheckHasSeed) {
  const Json j = to_json(sample_report());
  for (const auto& c : j["checks"]) {
    if (c["kind"] == "sampled") {
      EXPECT_TRUE(c.contains("seed"));
    }
  }
}
