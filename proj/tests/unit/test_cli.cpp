#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct Output {
  int status;
  std::string out;
};

Output isolab(const std::string& args) {
  const std::string cmd = std::string(ISOLAB_BIN) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string fx(const std::string& rel) { return std::string(ISOLAB_FIXTURES) + "/" + rel; }

}  // namespace

TEST(Cli, CompareDeltaZ2) {
  const auto r = isolab("isotropy compare --bounds 2,5 smc " + fx("delta_z2.model"));
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("isomorphic: Z2"), std::string::npos) << r.out;
}

TEST(Cli, NfReduce) {
  const auto r = isolab("nf reduce monoid " + fx("z2.model") + " \"x 1 x 1 1 x\"");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("0 x 1 x 0 x 0"), std::string::npos) << r.out;
}

TEST(Cli, BrokenModelExitsOne) {
  const auto r = isolab("model check strmoncat " + fx("broken.model"));
  EXPECT_EQ(r.status, 1) << r.out;
  EXPECT_NE(r.out.find("tensor_A"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(isolab("frobnicate").status, 2);
  EXPECT_EQ(isolab("nf reduce monoid /nonexistent/file \"x\"").status, 2);
  EXPECT_EQ(isolab("isotropy compute --bounds 0,x monoid " + fx("data/z4.json")).status, 2);
  EXPECT_EQ(isolab("--help").status, 0);
}

TEST(Cli, TheoryCheck) {
  EXPECT_EQ(isolab("theory check " + fx("theories/monoid.phl")).status, 0);
  EXPECT_EQ(isolab("theory check " + fx("theories/ill_sorted.phl")).status, 1);
}

TEST(Cli, JsonIsSelfDescribingAndDeterministic) {
  const std::string args = "--format json isotropy compute --method brute monoid " + fx("data/t2.json");
  const auto a = isolab(args);
  const auto b = isolab(args);
  ASSERT_EQ(a.status, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc.at("schema_version"), 1);
  EXPECT_EQ(doc.at("command"), "isotropy compute");
  EXPECT_EQ(doc.at("status"), "ok");
  ASSERT_EQ(doc.at("inputs").size(), 1u);
  EXPECT_EQ(doc.at("inputs")[0].at("fnv1a64").get<std::string>().size(), 16u);
}

TEST(Cli, SuiteRunIsSeedDeterministic) {
  const auto a = isolab("--format json suite run --seed 5 --count 50");
  const auto b = isolab("--format json suite run --seed 5 --count 50");
  EXPECT_EQ(a.status, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
}
