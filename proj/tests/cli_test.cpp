#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "oracles/printers.hpp"
#include "skyline/json_io.hpp"

namespace skyline {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

TEST(Cli, KeypolyExample) {
  Result r = run({"keypoly", "--alpha", "1,0,3"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out,
            "x^(1,0,3) + x^(1,1,2) + x^(1,2,1) + x^(1,3,0) + x^(2,0,2) + x^(2,1,1) + x^(2,2,0) + x^(3,0,1) + "
            "x^(3,1,0)\n");
  Result a = run({"atom", "--alpha", "1,0,3", "--json"});
  EXPECT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(json::parse(a.out)["polynomial"].size(), 5u);
}

TEST(Cli, PhiExampleJson) {
  Result r = run({"phi", "--biword", "4 6 6 7 / 4 1 2 1", "--n", "7", "--json"});
  ASSERT_EQ(r.code, cli::kExitOk);
  json j = json::parse(r.out);
  EXPECT_EQ(j["shape_F"].get<WeakComposition>(), WeakComposition({2, 1, 0, 1, 0, 0, 0}));
  EXPECT_EQ(j["shape_G"].get<WeakComposition>(), WeakComposition({0, 0, 0, 1, 0, 2, 1}));
  EXPECT_EQ(j["key_G_leq_key_rev_F"], true);
  Ssaf f = j["F"].get<Ssaf>();
  Ssaf g = j["G"].get<Ssaf>();
  Result inv = run({"phi-inv", "--f", j["F"].dump(), "--g", j["G"].dump(), "--json"});
  ASSERT_EQ(inv.code, cli::kExitOk) << inv.err;
  EXPECT_EQ(json::parse(inv.out)["biword"].get<Biword>(), Biword::parse("4 6 6 7 / 4 1 2 1"));
  EXPECT_EQ(f.rank(), 7);
  EXPECT_EQ(g.shape().sorted_decreasing(), f.shape().sorted_decreasing());
}

TEST(Cli, InsertExample) {
  Result r = run({"insert", "--k", "3", "--ssaf", R"({"n":6,"columns":[[],[],[3,2,1],[4,1],[],[6]]})", "--json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["filling"].get<Ssaf>().shape(), WeakComposition({0, 0, 3, 2, 0, 2}));
  EXPECT_EQ(j["chain"], json::parse("[3,2,1]"));
}

TEST(Cli, PsiRoundtrip) {
  Result r = run({"psi", "--rows", "1,1,1,3;2,3,4;3,4;5", "--n", "5", "--json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["filling"].get<Ssaf>().shape(), WeakComposition({2, 0, 4, 3, 1}));
  Result back = run({"psi-inv", "--ssaf", j["filling"].dump(), "--json"});
  ASSERT_EQ(back.code, cli::kExitOk) << back.err;
  EXPECT_EQ(json::parse(back.out)["tableau"].get<Tableau>(), Tableau({{1, 1, 1, 3}, {2, 3, 4}, {3, 4}, {5}}, 5));
}

TEST(Cli, KeyAndRsk) {
  Result k = run({"key", "--alpha", "1,3,0,0,1", "--json"});
  ASSERT_EQ(k.code, cli::kExitOk);
  EXPECT_EQ(json::parse(k.out)["key"].get<Tableau>(), Tableau({{1, 2, 2}, {2}, {5}}, 5));
  Result r = run({"rsk", "--biword", "1 2 / 2 1", "--n", "2"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("P: [[1],[2]]"), std::string::npos);
}

TEST(Cli, VerifyVerbs) {
  Result k = run({"verify-kernel", "--n", "3", "--m", "3", "--k", "3", "--deg", "0"});
  EXPECT_EQ(k.code, cli::kExitOk);
  Result m = run({"verify-main", "--n", "3", "--max-len", "3"});
  EXPECT_EQ(m.code, cli::kExitOk);
  EXPECT_NE(m.out.find("failures: 0"), std::string::npos);
  Result kj = run({"verify-kernel", "--n", "4", "--m", "3", "--k", "2", "--deg", "3", "--json", "-"});
  ASSERT_EQ(kj.code, cli::kExitOk);
  EXPECT_EQ(json::parse(kj.out)["equal"], true);
}

TEST(Cli, JobsDoNotChangeBytes) {
  Result a = run({"verify-main", "--n", "3", "--max-len", "4", "--jobs", "1"});
  Result b = run({"verify-main", "--n", "3", "--max-len", "4", "--jobs", "4"});
  EXPECT_EQ(a.out, b.out);
  Result c = run({"verify-kernel", "--n", "5", "--m", "4", "--k", "3", "--deg", "2", "--jobs", "1", "--json", "-"});
  Result d = run({"verify-kernel", "--n", "5", "--m", "4", "--k", "3", "--deg", "2", "--jobs", "3", "--json", "-"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, Reproducible) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"crystal", "--shape", "3,1", "--n", "3", "--format", "json"},
           {"crystal", "--alpha", "1,0,3", "--format", "json"},
           {"keypoly", "--alpha", "0,2,1,1"}}) {
    Result a = run(args);
    Result b = run(args);
    EXPECT_EQ(a.code, cli::kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, CrystalDot) {
  Result r = run({"crystal", "--shape", "1", "--n", "2", "--format", "dot"});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  EXPECT_NE(r.out.find("v0 -> v1"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"keypoly"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"keypoly", "--alpha", "1,x"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"insert", "--k", "9", "--ssaf", R"({"n":2,"columns":[[1],[]]})"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"phi", "--biword", "2 1 / 1 1", "--n", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"psi-inv", "--ssaf", "{not json"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify-kernel", "--n", "4", "--m", "2", "--k", "2", "--deg", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"crystal", "--shape", "2,1", "--format", "svg"}).code, cli::kExitUsage);
  Result help = run({"--help"});
  EXPECT_EQ(help.code, cli::kExitOk);
  EXPECT_NE(help.out.find("verify-kernel"), std::string::npos);
}

}  // namespace
}  // namespace skyline
