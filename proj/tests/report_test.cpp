#include <gtest/gtest.h>

#include <set>

#include "json.hpp"
#include "ppclass/reproduce.hpp"

using namespace ppclass;

namespace {

ClaimReport verified_row() {
  ClaimReport r;
  r.claim_id = "v1.dim";
  r.group = "intersections";
  r.field = "F_9";
  r.status = ClaimStatus::Verified;
  r.expected = "2";
  r.observed = "2";
  r.runtime_ms = 1.25;
  return r;
}

ClaimReport measured_row() {
  ClaimReport r;
  r.claim_id = "fp2.full-shape";
  r.group = "fp2-family";
  r.field = "F_49";
  r.status = ClaimStatus::Measured;
  r.observed = "m=4: full 840";
  return r;
}

}  // namespace

TEST(Report, EmptyListIsHeaderOnly) {
  EXPECT_EQ(emit_report({}, ReportFormat::Csv), "claim_id,group,field,status,expected,observed,note\n");
  const std::string md = emit_report({}, ReportFormat::Markdown);
  EXPECT_EQ(std::count(md.begin(), md.end(), '\n'), 2);
  const auto j = nlohmann::json::parse(emit_report({}, ReportFormat::Json));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_TRUE(j["claims"].empty());
}

TEST(Report, VerifiedAndMeasuredRows) {
  const std::string csv = emit_report({verified_row(), measured_row()}, ReportFormat::Csv);
  EXPECT_NE(csv.find("v1.dim,intersections,F_9,verified,2,2,\n"), std::string::npos);
  EXPECT_NE(csv.find("fp2.full-shape,fp2-family,F_49,measured,,m=4: full 840,\n"), std::string::npos);
  const auto j = nlohmann::json::parse(emit_report({verified_row(), measured_row()}, ReportFormat::Json));
  EXPECT_EQ(j["claims"][0]["status"], "verified");
  EXPECT_EQ(j["claims"][0]["expected"], j["claims"][0]["observed"]);
  EXPECT_TRUE(j["claims"][1]["expected"].is_null());
  EXPECT_FALSE(j["claims"][0].contains("runtime_ms"));
  const auto timed = nlohmann::json::parse(emit_report({verified_row()}, ReportFormat::Json, true));
  EXPECT_DOUBLE_EQ(timed["claims"][0]["runtime_ms"].get<double>(), 1.25);
}

TEST(Report, MarkdownTablePerGroup) {
  const std::string md = emit_report({verified_row(), measured_row(), verified_row()}, ReportFormat::Markdown);
  EXPECT_NE(md.find("## intersections"), std::string::npos);
  EXPECT_NE(md.find("## fp2-family"), std::string::npos);
  EXPECT_EQ(md.find("## intersections"), md.rfind("## intersections"));
}

TEST(Report, CsvQuoting) {
  ClaimReport r = verified_row();
  r.note = "a, \"b\"";
  EXPECT_NE(emit_report({r}, ReportFormat::Csv).find("\"a, \"\"b\"\"\""), std::string::npos);
}

TEST(Inventory, UniqueIdsWithOneGroupEach) {
  std::set<std::string_view> ids;
  for (const auto& c : claim_inventory()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.group.empty());
    EXPECT_FALSE(c.summary.empty());
  }
}

TEST(Reproduce, ClaimsBelongToInventoryAndInvariantsHold) {
  ReproduceConfig cfg;
  cfg.hermite_samples = 200;
  std::set<std::string> emitted;
  for (auto [p, n] : {std::pair{3u, 2u}, {5u, 1u}, {2u, 2u}}) {
    for (const auto& r : reproduce_field(Field::build(p, n), cfg)) {
      emitted.insert(r.claim_id);
      const auto& inv = claim_inventory();
      const auto it = std::find_if(inv.begin(), inv.end(), [&](const ClaimSpec& s) { return s.id == r.claim_id; });
      ASSERT_NE(it, inv.end()) << r.claim_id;
      EXPECT_EQ(r.group, it->group);
      if (r.status == ClaimStatus::Measured) {
        EXPECT_FALSE(r.expected.has_value()) << r.claim_id;
      }
      if (r.status == ClaimStatus::Refuted) {
        EXPECT_FALSE(r.note.empty()) << r.claim_id;
      }
    }
  }
  EXPECT_TRUE(emitted.count("fp2.inverse"));
  EXPECT_TRUE(emitted.count("degree.total"));
}

TEST(Reproduce, ByteIdenticalAcrossRunsAndWorkers) {
  const Field F = Field::build(3, 2);
  ReproduceConfig one;
  one.hermite_samples = 500;
  ReproduceConfig many = one;
  many.workers = 4;
  const std::string a = emit_report(reproduce_field(F, one), ReportFormat::Json);
  const std::string b = emit_report(reproduce_field(F, one), ReportFormat::Json);
  const std::string c = emit_report(reproduce_field(F, many), ReportFormat::Json);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  ReproduceConfig other_seed = one;
  other_seed.seed = 99;
  EXPECT_NE(emit_report(reproduce_field(F, other_seed), ReportFormat::Csv), std::string());
}
