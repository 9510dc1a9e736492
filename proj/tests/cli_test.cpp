#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Per-test names, so ctest may run the cases concurrently.
std::string scratch(const std::string& name) {
  const auto* info = testing::UnitTest::GetInstance()->current_test_info();
  return testing::TempDir() + "eblab_cli_" + info->name() + "_" + name;
}

CliRun eblab(const std::string& args) {
  const std::string out = scratch("stdout"), err = scratch("stderr");
  const std::string cmd = std::string(EBLAB_CLI) + " " + args + " >" + out + " 2>" + err;
  const int status = std::system(cmd.c_str());
  CliRun r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string l4_bundle() {
  const std::string p = scratch("l4.alg");
  const CliRun r = eblab("builtin mv:4 --out " + p);
  EXPECT_EQ(r.code, 0) << r.err;
  return p;
}

}  // namespace

TEST(Cli, BuiltinThenCheckBl) {
  const CliRun r = eblab("check-bl " + l4_bundle());
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("RESULT bl.mv4.residuation pass"), std::string::npos);
}

TEST(Cli, ProveFindsM1Witness) {
  const CliRun r = eblab("prove " + l4_bundle() + " --structure paper --stmt \"A x -> x = 1\"");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("RESULT prove.stmt1 fail witness=x=2"), std::string::npos) << r.out;
}

TEST(Cli, ProveLibraryAxiom) {
  const CliRun r = eblab("--mode machine prove mv:4 --structure paper --axiom E5");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "RESULT prove.E5 pass\n");
}

TEST(Cli, ProveStatementFile) {
  const std::string path = scratch("laws.stmts");
  std::ofstream(path) << "# two laws\nA A x = A x\n\nA x <= x   # fails\n";
  const CliRun r = eblab("--mode machine prove mv:4 --structure paper --stmts " + path);
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "RESULT prove.stmt1 pass\nRESULT prove.stmt2 fail witness=x=2\n");
}

TEST(Cli, MachineLinesHaveExactShape) {
  const std::regex line(R"(RESULT [A-Za-z0-9_.+\-]+ (pass|fail)( witness=[a-z]+=[0-9]+(,[a-z]+=[0-9]+)*)?)");
  for (const std::string args :
       {"check-ebl mv:4 --structure paper --derived", "focal mv:4 --structure paper",
        "enumerate godel:4", "filters godel:3 --structure s2 --epistemic",
        "correspond godel:3 --family godel-kd45", "check-ebl mv:4 --structure crisp"}) {
    const CliRun r = eblab("--mode machine " + args);
    EXPECT_LE(r.code, 1) << args << r.err;
    std::istringstream in(r.out);
    std::string l;
    int n = 0;
    while (std::getline(in, l)) {
      EXPECT_TRUE(std::regex_match(l, line)) << args << ": " << l;
      ++n;
    }
    EXPECT_GT(n, 0) << args;
  }
}

TEST(Cli, HumanModeHasNoResultLines) {
  const CliRun r = eblab("--mode human check-ebl mv:4 --structure paper");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("RESULT"), std::string::npos);
  EXPECT_FALSE(r.out.empty());
}

TEST(Cli, CheckEblFailureExitsOne) {
  const std::string path = scratch("bad.alg");
  std::ofstream(path) << slurp(l4_bundle())
                      << "structure broken over mv4\nforall 0 0 3 3\nexists 0 3 3 3\nend\n";
  const CliRun r = eblab("--mode machine check-ebl " + path + " --structure broken");
  EXPECT_EQ(r.code, 1) << r.err;
  EXPECT_NE(r.out.find("RESULT ebl.E2 fail witness="), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("RESULT ebl.E1 pass"), std::string::npos) << r.out;
  // Anything that needs a valid structure refuses it.
  EXPECT_EQ(eblab("focal " + path + " --structure broken").code, 2);
}

TEST(Cli, QuotientWritesBundle) {
  const std::string path = scratch("q.alg");
  const CliRun r = eblab("quotient godel:3 --structure s2 --filter 1,2 --out " + path);
  EXPECT_EQ(r.code, 0) << r.err;
  const CliRun check = eblab("--mode machine check-bl " + path);
  EXPECT_EQ(check.code, 0) << check.err;
  const CliRun bad = eblab("quotient godel:3 --structure crisp --filter 1,2 --out " + path);
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, FrameComplex) {
  const std::string path = scratch("frame.alg");
  std::ofstream(path) << slurp(l4_bundle()) << "frame f over mv4\nworlds 2\npi 3 1\nend\n";
  const CliRun r = eblab("--mode machine frame-complex " + path + " --frame f --verify-all");
  EXPECT_EQ(r.code, 0) << r.err << r.out;
  EXPECT_NE(r.out.find("pass"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  for (const std::string args :
       {"", "bogus", "check-bl", "prove mv:4 --structure paper", "check-bl /nonexistent/file",
        "--mode loud check-bl mv:4", "correspond mv:3 --family pseudomonadic",
        "prove mv:4 --structure paper --stmt \"x ->\"", "enumerate mv:4 --emit yaml"}) {
    const CliRun r = eblab(args);
    EXPECT_EQ(r.code, 2) << "'" << args << "' " << r.out;
    EXPECT_FALSE(r.err.empty()) << args;
  }
}

TEST(Cli, ConfigFile) {
  const std::string path = scratch("run.cfg");
  std::ofstream(path) << "output-mode = machine\nworker-count = 2\nmethod = both\n";
  const CliRun r = eblab("--config " + path + " enumerate mv:4");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("RESULT", 0), 0u) << r.out;
  std::ofstream(path) << "colour = red\n";
  EXPECT_EQ(eblab("--config " + path + " enumerate mv:4").code, 2);
}

TEST(Cli, EnumerateCounts) {
  const CliRun r = eblab("--mode human enumerate mv:4 --emit count");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3"), std::string::npos) << r.out;
}
