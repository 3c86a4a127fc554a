#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "support.hpp"
#include "wintgen/classify.hpp"
#include "wintgen/cli.hpp"
#include "wintgen/io.hpp"

using namespace wintgen;
using namespace wintgen::testing;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("wintgen_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

const char* kUnitFrame = R"({"n":4,"m":3,"k_tilde":"0","choi_lu":{"a":1,"b":1,"c":1,"mu":1}})";

}  // namespace

TEST_F(CliTest, ComputeCurvatureComponent) {
  const auto model = write("m.json", kUnitFrame);
  ASSERT_EQ(run({"compute", "--model", model, "--select", "R"}), kExitPass) << err_.str();
  const auto j = json::parse(out_.str());
  bool found = false;
  for (const auto& c : j["components"])
    if (c["index"] == json::array({1, 2, 2, 1})) {
      EXPECT_EQ(c["value"], "1");
      found = true;
    }
  EXPECT_TRUE(found);
  EXPECT_EQ(j["summary"]["tau"], "32");
  EXPECT_EQ(j["summary"]["ddvv_gap"], "0");
  EXPECT_EQ(j["summary"]["rho_perp"], "1/3");
}

TEST_F(CliTest, ComputeEmptyCases) {
  const auto umb = write("u.json", R"({"n":5,"m":3,"k_tilde":"1/3","choi_lu":{"a":"1/3","b":2,"c":"-1","mu":0}})");
  ASSERT_EQ(run({"compute", "--model", umb, "--select", "C"}), kExitPass);
  EXPECT_TRUE(json::parse(out_.str())["components"].empty());
  const auto one = write("one.json",
                         R"({"n":4,"m":1,"k_tilde":0,"shape_operators":[[[1,2,0,0],[2,1,0,0],[0,0,3,0],[0,0,0,"1/2"]]]})");
  ASSERT_EQ(run({"compute", "--model", one, "--select", "Rperp"}), kExitPass);
  EXPECT_TRUE(json::parse(out_.str())["components"].empty());
}

TEST_F(CliTest, ComputeRoundTrip) {
  const auto model = write("m.json", kUnitFrame);
  for (const char* sel : {"RC", "QgR", "Ricc"}) {
    ASSERT_EQ(run({"compute", "--model", model, "--select", sel}), kExitPass);
    const auto j = json::parse(out_.str());
    PointTensors<Rational> pt(unit_model());
    const auto id = std::string(sel) == "Ricc" ? std::nullopt : parse_selector(sel);
    std::size_t count = 0;
    for (const auto& c : j["components"]) {
      std::vector<int> idx = c["index"];
      const Rational v = Rational::parse(c["value"].get<std::string>());
      if (!id) {
        ASSERT_EQ(pt.ricci().ricc(idx[0] - 1, idx[1] - 1), v);
      } else {
        std::array<int, 6> i{};
        for (int k = 0; k < 6; ++k) i[k] = idx[k] - 1;
        ASSERT_EQ(pt.tensor6(*id)[i], v);
      }
      ++count;
    }
    std::size_t nonzero = 0;
    if (!id) {
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) nonzero += !pt.ricci().ricc(a, b).is_zero();
    } else {
      for (const auto& v : pt.tensor6(*id).data()) nonzero += !v.is_zero();
    }
    EXPECT_EQ(count, nonzero) << sel;
  }
}

TEST_F(CliTest, ComputeCsvAndDeterminism) {
  const auto model = write("m.json", kUnitFrame);
  ASSERT_EQ(run({"compute", "--model", model, "--select", "C", "--out", "csv"}), kExitPass);
  const std::string first = out_.str();
  EXPECT_NE(first.find("index,value"), std::string::npos);
  EXPECT_NE(first.find("\"(1,2,2,1)\",-2/3"), std::string::npos);
  ASSERT_EQ(run({"compute", "--model", model, "--select", "C", "--out", "csv"}), kExitPass);
  EXPECT_EQ(out_.str(), first);
}

TEST_F(CliTest, InputErrorsExitTwo) {
  EXPECT_EQ(run({"compute", "--model", write("bad.json", "{not json"), "--select", "R"}), kExitInput);
  EXPECT_EQ(run({"compute", "--model", (dir_ / "missing.json").string(), "--select", "R"}), kExitInput);
  const auto model = write("m.json", kUnitFrame);
  EXPECT_EQ(run({"compute", "--model", model, "--select", "XYZ"}), kExitInput);
  EXPECT_EQ(run({"compute", "--model", write("asym.json", R"({"n":4,"m":1,"k_tilde":0,
      "shape_operators":[[[1,2,0,0],[3,1,0,0],[0,0,3,0],[0,0,0,1]]]})"),
                 "--select", "R"}),
            kExitInput);
  EXPECT_EQ(run({"compute", "--model", write("both.json", R"({"n":4,"m":3,"k_tilde":0,
      "choi_lu":{"a":1,"b":1,"c":1,"mu":1},"shape_operators":[]})"),
                 "--select", "R"}),
            kExitInput);
  EXPECT_EQ(run({"compute", "--model", write("m2.json", R"({"n":4,"m":2,"k_tilde":0,"choi_lu":{"a":1,"b":1,"c":1,"mu":1}})"),
                 "--select", "R"}),
            kExitInput);
  EXPECT_EQ(run({"verify", "T99"}), kExitInput);
  EXPECT_EQ(run({"verify", "T9", "--grid", write("g.json", R"({"grid":{"zeta":[1]}})")}), kExitInput);
  EXPECT_EQ(run({"frobnicate"}), kExitInput);
}

TEST_F(CliTest, ConditionsRows) {
  const auto semi = write("s.json", R"({"n":4,"m":3,"k_tilde":-1,"choi_lu":{"a":0,"b":0,"c":1,"mu":1}})");
  ASSERT_EQ(run({"conditions", "--model", semi}), kExitPass);
  const auto rows = json::parse(out_.str())["conditions"];
  EXPECT_EQ(rows.size(), 31u);
  for (const auto& r : rows)
    if (r["left"] == "R·C") {
      EXPECT_TRUE(r["kind"] == "LeftZero" || r["kind"] == "BothZero") << r.dump();
      EXPECT_EQ(r["dependent"], true);
    }

  const auto gen = write("g.json", kUnitFrame);
  ASSERT_EQ(run({"conditions", "--model", gen, "--out", "csv"}), kExitPass);
  EXPECT_NE(out_.str().find("C·R,\"Q(g,R)\",,Independent,0,"), std::string::npos) << out_.str();

  const auto umb = write("u.json", R"({"n":4,"m":3,"k_tilde":0,"choi_lu":{"a":1,"b":1,"c":1,"mu":0}})");
  ASSERT_EQ(run({"conditions", "--model", umb, "--mode", "float"}), kExitPass);
  for (const auto& r : json::parse(out_.str())["conditions"])
    EXPECT_TRUE(r["kind"] == "BothZero" || r["kind"] == "LeftZero") << r.dump();
}

TEST_F(CliTest, Ddvv) {
  const auto model = write("m.json", kUnitFrame);
  ASSERT_EQ(run({"ddvv", "--model", model}), kExitPass);
  EXPECT_EQ(json::parse(out_.str())["gap"], "0");
  const auto geo = write("g.json", R"({"n":4,"m":2,"k_tilde":5,"choi_lu":{"a":0,"b":0,"c":0,"mu":0}})");
  ASSERT_EQ(run({"ddvv", "--model", geo}), kExitPass);
  EXPECT_EQ(json::parse(out_.str())["gap"], "0");
  ASSERT_EQ(run({"ddvv", "--random", "1000", "--n", "4", "--m", "2", "--seed", "7"}), kExitPass);
  const std::string first = out_.str();
  EXPECT_EQ(json::parse(first)["negative"], 0);
  ASSERT_EQ(run({"ddvv", "--random", "1000", "--n", "4", "--m", "2", "--seed", "7"}), kExitPass);
  EXPECT_EQ(out_.str(), first);
}

TEST_F(CliTest, VerifyOnSmallGrid) {
  const auto grid = write("grid.json", R"({"grid":{"a":[0,"1/3"],"b":[0,"-2/3"],"c":[0,"2/3"],"mu":[0,1],
      "k_tilde":[-1,0]},"n_list":[4],"m_list":[3],"output":"csv"})");
  EXPECT_EQ(run({"verify", "T9", "--grid", grid}), kExitPass) << err_.str();
  EXPECT_NE(out_.str().find("theorem_id,n,m,a,b,c,mu,k_tilde,branch"), std::string::npos);
  EXPECT_NE(err_.str().find("T9: PASS"), std::string::npos);
  EXPECT_EQ(run({"verify", "T7", "--grid", grid, "--failures-only"}), kExitFail);
  EXPECT_NE(err_.str().find("T7: FAIL"), std::string::npos);
  EXPECT_EQ(run({"verify", "identity:commutation", "--grid", grid}), kExitPass) << err_.str();
}

TEST_F(CliTest, SweepCounterexamples) {
  const auto grid = write("grid.json", R"({"grid":{"a":["1/3"],"b":["-2/3"],"c":[0],"mu":[1,"1/3"],
      "k_tilde":[0]},"n_list":[4],"m_list":[3]})");
  EXPECT_EQ(run({"sweep", "--grid", grid, "--left", "CR", "--right", "QgR", "--counterexamples"}), kExitPass)
      << err_.str();
  EXPECT_EQ(run({"sweep", "--grid", grid, "--left", "XX"}), kExitInput);
}
