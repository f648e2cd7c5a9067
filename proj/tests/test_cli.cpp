#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// stderr is folded into the captured output only when asked.
Run run(const std::string& args, bool with_stderr = false) {
  std::string cmd = std::string("\"") + LAXCENTER_CLI + "\" " + args +
                    (with_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string("\"") + LAXCENTER_TEST_DATA + "/" + name + "\"";
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, ExamplesPass) {
  for (const char* name : {"intro", "matrix", "dkr"}) {
    auto r = run(std::string("example ") + name);
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "summary: PASS")) << r.out;
  }
}

TEST(Cli, SpecNamedAliases) {
  EXPECT_EQ(run("run_example matrix").status, 0);
  EXPECT_EQ(run("verify_suite " + data("dkr_f.json") + " --target cospan").status, 0);
}

TEST(Cli, IntroReportsFactorThree) {
  auto r = run("example intro --json");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["summary"]["passed"].get<bool>());
  EXPECT_TRUE(contains(r.out, "3"));
}

TEST(Cli, DkrSizes) {
  auto j = nlohmann::json::parse(run("example dkr --json").out);
  ASSERT_EQ(j["sections"].size(), 2u);
  auto facts = j["sections"][0]["facts"];
  EXPECT_EQ(facts["|Z(g) (x) Z(f)|"], "16");
  EXPECT_EQ(facts["|Z(g o f)|"], "4");
  EXPECT_EQ(j["sections"][1]["facts"]["|Z(g) (x) Z(f)|"], "81");
}

TEST(Cli, ReportsAreByteIdentical) {
  for (const std::string args :
       std::vector<std::string>{"example dkr", "example intro --json",
        "verify " + data("dkr_f.json") + " " + data("dkr_g.json") + " --target cospan --seed 7",
        "verify " + data("dkr_f.json") + " " + data("dkr_g.json") + " --target cospan --json"}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.status, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, SeedIsEchoed) {
  auto r = run("verify " + data("dkr_f.json") + " --target cospan --seed 9 --json");
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["seed"], 9);
  EXPECT_TRUE(contains(j["command"].get<std::string>(), "--seed 9"));
}

TEST(Cli, UnknownExampleIsUsageError) {
  auto r = run("example nonsense", true);
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.out, "unknown example"));
}

TEST(Cli, BadFlagsAreUsageErrors) {
  EXPECT_EQ(run("verify " + data("dkr_f.json") + " --target category").status, 2);
  EXPECT_EQ(run("verify " + data("dkr_f.json") + " --word-len 0").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("verify").status, 2);
}

TEST(Cli, CorruptedHomNamesTheAxiom) {
  auto r = run("verify " + data("corrupted_hom.json"), true);
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.out, "multiplicativity")) << r.out;
  EXPECT_TRUE(contains(r.out, "(1,1)")) << r.out;
}

TEST(Cli, SyntaxErrorNamesTheLine) {
  auto r = run("centralizer " + data("bad_syntax.json"), true);
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.out, "line 4")) << r.out;
}

TEST(Cli, FieldErrorNamesThePath) {
  auto r = run("centralizer " + data("bad_field.json"), true);
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.out, "/matrix")) << r.out;
}

TEST(Cli, MissingFile) {
  EXPECT_EQ(run("center " + data("no_such_ring.json")).status, 2);
}

TEST(Cli, IdentityChainPasses) {
  for (const char* t : {"morita", "cospan"}) {
    auto r = run("verify " + data("identity_d6.json") + " --target " + t);
    EXPECT_EQ(r.status, 0) << r.out;
  }
}

TEST(Cli, DkrChainPassesBothTargets) {
  for (const char* t : {"morita", "cospan"}) {
    auto r = run("verify " + data("dkr_f.json") + " " + data("dkr_g.json") + " " +
                 data("dkr_f.json") + " --target " + t);
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "summary: PASS")) << r.out;
  }
}

TEST(Cli, NonComposableChain) {
  auto r = run("verify " + data("dkr_f.json") + " " + data("dkr_f.json"), true);
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.out, "not composable")) << r.out;
}

TEST(Cli, CorpusBothTargets) {
  EXPECT_EQ(run("verify --corpus 5 --target morita").status, 0);
  EXPECT_EQ(run("verify --corpus 5 --target cospan --samples 50").status, 0);
}

TEST(Cli, CenterAndCentralizer) {
  auto r = run("center " + data("zc2.json"));
  EXPECT_EQ(r.status, 0) << r.out;
  auto m = run("centralizer " + data("unit_mat2.json") + " --json");
  EXPECT_EQ(m.status, 0) << m.out;
  EXPECT_TRUE(contains(m.out, "16")) << m.out;
  EXPECT_EQ(run("centralizer " + data("augmentation.json")).status, 0);
}
