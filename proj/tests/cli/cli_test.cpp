#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "rsub_tools/cli.hpp"

namespace fs = std::filesystem;
using rsub::tools::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rsub");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rsub-cli-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }
  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

constexpr const char* kK4 = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
constexpr const char* kRainbowC4 = "0 1 0\n1 2 1\n2 3 2\n3 0 3\n";

TEST_F(CliTest, HelpExitsZero) {
  auto r = cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("rainbow-cycle"), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"extract", "--alpha", "abc"}).code, 2);
  EXPECT_EQ(cli({"extract", "--input", path("missing.txt")}).code, 2);
  EXPECT_EQ(cli({"hcycle", "--input", write("h.txt", "0 1 2\n"), "--mode", "sideways"}).code, 2);
}

TEST_F(CliTest, ExtractOnK4TakesEveryVertex) {
  auto r = cli({"extract", "--input", write("k4.txt", kK4), "--alpha", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"format\": \"rsub-extract\""), std::string::npos);
  EXPECT_NE(r.out.find("\"score\": 0.75"), std::string::npos);
  EXPECT_NE(r.out.find("\"num_vertices\": 4"), std::string::npos);
  auto peel = cli({"extract", "--input", path("k4.txt"), "--alpha", "0.5", "--mode", "peel"});
  EXPECT_EQ(peel.code, 0);
  EXPECT_NE(peel.out.find("\"score\": 0.75"), std::string::npos);
}

TEST_F(CliTest, DataDirResolvesRelativeInputs) {
  write("k4.txt", kK4);
  ::setenv(rsub::tools::kDataDirEnv, dir_.c_str(), 1);
  auto r = cli({"extract", "--input", "k4.txt", "--alpha", "0.5"});
  ::unsetenv(rsub::tools::kDataDirEnv);
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST_F(CliTest, HypercubeHasNoRainbowCycle) {
  ASSERT_EQ(cli({"construct", "hypercube", "--m", "3", "--output", path("q3.txt")}).code, 0);
  EXPECT_EQ(cli({"rainbow-cycle", "--input", path("q3.txt")}).code, 1);
  EXPECT_EQ(cli({"rainbow-cycle", "--input", path("q3.txt"), "--mode", "exact"}).code, 1);
}

TEST_F(CliTest, ImproperColoringIsRejectedUnlessAllowed) {
  write("bad.txt", "0 1 0\n1 2 0\n2 0 1\n");
  EXPECT_EQ(cli({"rainbow-cycle", "--input", path("bad.txt")}).code, 2);
  auto r = cli({"rainbow-cycle", "--input", path("bad.txt"), "--allow-improper"});
  EXPECT_NE(r.code, 2);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST_F(CliTest, CertificateRoundTripAndTampering) {
  write("c4.txt", kRainbowC4);
  auto found = cli({"rainbow-cycle", "--input", path("c4.txt"), "--seed", "7", "--output", path("cert.json")});
  ASSERT_EQ(found.code, 0) << found.err;
  const std::string cert = read("cert.json");
  EXPECT_NE(cert.find("\"seed\": 7"), std::string::npos);
  EXPECT_EQ(cli({"validate", "--input", path("c4.txt"), "--cert", path("cert.json")}).code, 0);

  std::string tampered = cert;
  tampered.replace(tampered.find("\"colors\": [\n  0"), 16, "\"colors\": [\n  1");
  write("tampered.json", tampered);
  EXPECT_EQ(cli({"validate", "--input", path("c4.txt"), "--cert", path("tampered.json")}).code, 2);

  write("other.txt", "0 1 0\n1 2 1\n2 3 2\n3 0 4\n");
  EXPECT_EQ(cli({"validate", "--input", path("other.txt"), "--cert", path("cert.json")}).code, 2);

  write("broken.json", "{\"format\": ");
  EXPECT_EQ(cli({"validate", "--input", path("c4.txt"), "--cert", path("broken.json")}).code, 2);
}

TEST_F(CliTest, FaceCycleCertificateClassifiesAndValidates) {
  std::string k7;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c) k7 += std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) + "\n";
  write("k7.txt", k7);
  ASSERT_EQ(cli({"hcycle", "--input", path("k7.txt"), "--ell", "6", "--output", path("walk.json")}).code, 0);
  EXPECT_EQ(cli({"validate", "--input", path("k7.txt"), "--cert", path("walk.json")}).code, 0);
  auto cls = cli({"classify", "--cert", path("walk.json")});
  EXPECT_EQ(cls.code, 0);
  EXPECT_NE(cls.out.find("\"kind\": \"cycle\""), std::string::npos);

  write("tiny.txt", "0 1 2\n");
  EXPECT_EQ(cli({"validate", "--input", path("tiny.txt"), "--cert", path("walk.json")}).code, 2);
  EXPECT_EQ(cli({"hcycle", "--input", path("tiny.txt"), "--ell", "6"}).code, 1);
}

TEST_F(CliTest, SeedIsEchoedAndDefaultsToOne) {
  ASSERT_EQ(cli({"construct", "girth", "--n", "30", "--ell", "1", "--output", path("g.txt"), "--log", path("l.json")}).code, 0);
  EXPECT_NE(read("l.json").find("\"seed\": 1"), std::string::npos);
  ASSERT_EQ(cli({"construct", "girth", "--n", "30", "--ell", "1", "--seed", "9", "--output", path("g.txt"), "--log", path("l.json")}).code, 0);
  EXPECT_NE(read("l.json").find("\"seed\": 9"), std::string::npos);
}

TEST_F(CliTest, MonteCarloCommands) {
  auto c = cli({"mc", "chernoff", "--n", "16", "--p", "0.5", "--trials", "2000"});
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out.rfind("version,", 0), 0u);
  auto n = cli({"mc", "neighborhood", "--a", "200", "--b", "600", "--trials", "500", "--summary", path("s.json")});
  EXPECT_EQ(n.code, 0) << n.err;
  EXPECT_NE(read("s.json").find("neighborhood"), std::string::npos);
  EXPECT_EQ(cli({"mc", "inequalities", "--points", "20"}).code, 0);
  EXPECT_EQ(cli({"mc", "reach", "--ell", "3", "--trials", "200"}).code, 0);
  EXPECT_EQ(cli({"mc", "nonsense"}).code, 2);
  EXPECT_EQ(cli({"mc", "neighborhood", "--p", "1.5"}).code, 2);
}

TEST_F(CliTest, McTrendsIsDeterministic) {
  auto a = cli({"report", "mc-trends", "--seed", "3"});
  auto b = cli({"report", "mc-trends", "--seed", "3"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

int parity_mismatches(const std::string& csv) {
  const std::string key = "classify_surface parity x";
  auto pos = csv.find(key);
  return pos == std::string::npos ? 0 : std::stoi(csv.substr(pos + key.size()));
}

TEST_F(CliTest, SurfaceParityMutationIsDetected) {
  auto honest = cli({"report", "acceptance-primary", "--only", "4"});
  auto mutated = cli({"report", "acceptance-primary", "--only", "4", "--inject", "surface-parity"});
  EXPECT_EQ(mutated.code, 1);
  EXPECT_NE(mutated.out.find(",4,\"cycle topology\",FAIL,"), std::string::npos);
  EXPECT_NE(mutated.out.find("expected cylinder got moebius"), std::string::npos);
  EXPECT_GT(parity_mismatches(mutated.out), parity_mismatches(honest.out));
  EXPECT_EQ(cli({"report", "acceptance-primary", "--inject", "gremlins"}).code, 2);
}

}  // namespace
