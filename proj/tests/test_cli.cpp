#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "repbasis/cli.hpp"
#include "repbasis/trace_io.hpp"

using namespace repbasis;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "repbasis");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("repbasis_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, BuildVerifyStats) {
  write_text_file(path("f.json"), R"({"window":0,"default":1})");
  Outcome b = invoke({"build", "--f", path("f.json"), "--phi", "log2", "--stages", "1", "--out", path("t.json")});
  ASSERT_EQ(b.code, cli::kExitOk) << b.err;
  const ConstructionTrace t = parse_trace(read_text_file(path("t.json")));
  EXPECT_EQ(t.stages.size(), 3u);

  Outcome v = invoke({"verify", "--trace", path("t.json"), "--report", path("r.json")});
  EXPECT_EQ(v.code, cli::kExitOk) << v.err;
  const auto report = nlohmann::json::parse(read_text_file(path("r.json")));
  EXPECT_EQ(report["pass"], true);

  Outcome s = invoke({"stats", "--trace", path("t.json")});
  EXPECT_EQ(s.code, cli::kExitOk);
  EXPECT_EQ(s.out.rfind("l,x,count,bound,ratio,ceiling\n", 0), 0u);
}

TEST_F(CliTest, VerifyFailsOnCorruptedTrace) {
  ConstructionTrace t = build(RepTarget::constant(RepValue(1)), PhiSpec::log2(), 1);
  std::vector<std::int64_t> v(t.stages[0].set.begin(), t.stages[0].set.end());
  v.push_back(0);
  t.stages[0].set = FiniteBasis(v);
  write_text_file(path("t.json"), write_trace(t));
  Outcome r = invoke({"verify", "--trace", path("t.json")});
  EXPECT_EQ(r.code, cli::kExitCheckFailed);
  EXPECT_NE(r.err.find("zero_absent"), std::string::npos);
}

TEST_F(CliTest, BuildHaltReportsError) {
  write_text_file(path("f.json"), R"({"window":0,"default":1})");
  Outcome b = invoke({"build", "--f", path("f.json"), "--stages", "1", "--search-cap", "100", "--out", path("t.json")});
  EXPECT_EQ(b.code, cli::kExitError);
  EXPECT_NE(b.err.find("PHI_TOO_SLOW"), std::string::npos);
}

TEST_F(CliTest, Sidon) {
  Outcome r = invoke({"sidon", "--method", "auto", "--n", "16"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["size"], 5);
  EXPECT_EQ(j["dense"], true);
  EXPECT_EQ(j["sidon"], true);

  r = invoke({"sidon", "--method", "erdos-turan", "--n", "18"});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["set"], nlohmann::json::array({1, 8, 14}));

  r = invoke({"sidon", "--method", "erdos-turan", "--n", "7"});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_NE(r.err.find("INPUT_TOO_SMALL"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, cli::kExitError);
  EXPECT_EQ(invoke({"sidon", "--n", "0"}).code, cli::kExitError);
  EXPECT_EQ(invoke({"build", "--f", path("missing.json")}).code, cli::kExitError);
  write_text_file(path("f.json"), R"({"window":0,"default":1})");
  EXPECT_EQ(invoke({"build", "--f", path("f.json"), "--phi", "pow:2"}).code, cli::kExitError);
  EXPECT_EQ(invoke({"build", "--f", path("f.json"), "--checkpoint-rule", "fast"}).code, cli::kExitError);
}
