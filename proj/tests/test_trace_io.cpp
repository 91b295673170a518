#include <gtest/gtest.h>

#include <sstream>

#include "repbasis/trace_io.hpp"

using namespace repbasis;
using nlohmann::json;

namespace {

const ConstructionTrace& sample() {
  static const ConstructionTrace t =
      build(RepTarget::with_overrides(0, {{0, RepValue::infinity()}}, RepValue(1)), PhiSpec::parse("pow:1/4"), 1);
  return t;
}

}  // namespace

TEST(TraceIo, RoundTripIsByteStable) {
  const std::string text = write_trace(sample());
  ASSERT_EQ(text.back(), '\n');
  const ConstructionTrace back = parse_trace(text);
  EXPECT_EQ(back, sample());
  EXPECT_EQ(write_trace(back), text);
}

TEST(TraceIo, StageFields) {
  const json j = json::parse(write_trace(sample()));
  ASSERT_EQ(j["stages"].size(), 3u);
  EXPECT_EQ(j["stages"][0]["kind"], "BASE");
  EXPECT_EQ(j["stages"][1]["kind"], "TARGET_EXTENSION");
  EXPECT_EQ(j["stages"][2]["kind"], "DENSIFICATION");
  EXPECT_TRUE(j["stages"][0].contains("x"));
  EXPECT_FALSE(j["stages"][1].contains("x"));
  EXPECT_EQ(j["phi"], "pow:1/4");
  EXPECT_EQ(j["f"]["values"]["0"], "inf");
}

TEST(TraceIo, RejectsMalformedInput) {
  EXPECT_THROW(parse_trace("{"), Error);
  EXPECT_THROW(parse_trace("{}"), Error);
  json j = json::parse(write_trace(sample()));
  j["stages"][0]["set"] = json::array({5, 3});
  EXPECT_THROW(parse_trace(j.dump()), Error);
  j = json::parse(write_trace(sample()));
  j["stages"][1]["kind"] = "OTHER";
  EXPECT_THROW(parse_trace(j.dump()), Error);
  j = json::parse(write_trace(sample()));
  j["phi"] = "pow:0.7";
  EXPECT_THROW(parse_trace(j.dump()), Error);
}

TEST(TargetJson, Parses) {
  const RepTarget f = rep_target_from_json(json::parse(R"({"window":2,"values":{"0":0,"-2":"inf","1":3},"default":1})"));
  EXPECT_EQ(f.at(0), RepValue(0));
  EXPECT_EQ(f.at(-2), RepValue::infinity());
  EXPECT_EQ(f.at(1), RepValue(3));
  EXPECT_EQ(f.at(2), RepValue(1));
  EXPECT_EQ(f.at(-1), RepValue(1));
  EXPECT_EQ(f.at(99), RepValue(1));
  EXPECT_EQ(rep_target_from_json(to_json(f)), f);
}

TEST(TargetJson, Errors) {
  for (const char* bad : {
           R"({"window":1,"values":{"2":1},"default":1})",
           R"({"window":1,"default":0})",
           R"({"window":-1,"default":1})",
           R"({"window":1,"values":{"0":-1},"default":1})",
           R"({"window":1,"values":{"x":1},"default":1})",
           R"({"default":1})",
       }) {
    try {
      rep_target_from_json(json::parse(bad));
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
}

TEST(Report, Shape) {
  const json j = to_json(verify_trace(sample()));
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["failures"], 0);
  EXPECT_EQ(j["total"], j["checks"].size());
}

TEST(Stats, RowsMatchCheckpoints) {
  const std::string csv = stats_csv(sample());
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "l,x,count,bound,ratio,ceiling");
  std::vector<std::int64_t> xs;
  std::size_t l = 0;
  while (std::getline(in, line)) {
    ++l;
    std::istringstream row(line);
    std::string cell;
    std::getline(row, cell, ',');
    EXPECT_EQ(std::stoull(cell), l);
    std::getline(row, cell, ',');
    xs.push_back(std::stoll(cell));
    std::getline(row, cell, ',');
    std::getline(row, cell, ',');
    std::getline(row, cell, ',');
    EXPECT_GT(std::stod(cell), 1.0);
  }
  std::vector<std::int64_t> expected;
  for (const auto& s : sample().stages) {
    if (s.checkpoint) expected.push_back(*s.checkpoint);
  }
  EXPECT_EQ(xs, expected);
}
