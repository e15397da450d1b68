#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "conres/io.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CONRES_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, LinkInFourSpace) {
  const auto r = run("link --n 4");
  ASSERT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j.at("poincare").dump(), "[[3,1],[5,1],[7,2],[9,1],[11,1]]");
  EXPECT_EQ(j.at("variable"), "t");
  EXPECT_EQ(j.at("command").at("name"), "link");
  EXPECT_EQ(run("link --n 4 --format md").out, "t^3 + t^5 + 2t^7 + t^9 + t^11\n");
}

TEST(Cli, GammaSign) {
  const auto r = run("gamma --parts 2,2 --n 4 --character sign --format md");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q + q^2 + q^3\n");
}

TEST(Cli, Order) {
  const auto r = run("order --seq 0,1,4,9,16");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r).at("order"), 2);
  EXPECT_EQ(run("order --seq 0,1,x").code, 1);
}

TEST(Cli, TableTwoIsSingleCell) {
  const auto r = run("table --n 2 --total-degree --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p,i,block,rank\n1,1,\"2\",1\n");
}

TEST(Cli, TableJsonMatchesLibrary) {
  const auto r = run("table --n 5 --format json");
  ASSERT_EQ(r.code, 0);
  const auto doc = conres::io::make_document(conres::Resolution().spectral_table(5), conres::View::homological);
  EXPECT_EQ(conres::io::table_from_json(json_of(r)), doc);
}

TEST(Cli, CsvAndJsonAgree) {
  for (const char* view : {"hom", "cohom"}) {
    const std::string base = std::string("table --n 5 --view ") + view;
    const auto j = conres::io::table_from_json(json_of(run(base)));
    const auto c = conres::io::table_from_csv(run(base + " --format csv").out, 5, conres::io::parse_view(view));
    EXPECT_EQ(j, c) << view;
  }
}

TEST(Cli, DeterministicAcrossThreads) {
  const auto a = run("table --n 6 --format md --threads 1");
  const auto b = run("table --n 6 --format md --threads 4");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, run("table --n 6 --format md").out);
}

TEST(Cli, VerifyPasses) {
  const auto r = run("verify --n 5");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json_of(r).at("ok").get<bool>());
  EXPECT_EQ(run("verify --n 4 --checks miller,bogus").code, 1);
}

TEST(Cli, Stab) {
  auto r = run("stab --p -1 --q 5");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r).at("n_star"), 3);
  r = run("stab --parts 2,2 --degree 4 --format md");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "stab((2,2), 4) = 6\n");
  r = run("stab --p-min -2 --total-max 4 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 16), "p,q,n_star,rank\n");
  EXPECT_EQ(run("stab --p 1 --q 0").code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("table").code, 1);
  EXPECT_EQ(run("table --n 11").code, 1);
  EXPECT_EQ(run("table --n 1").code, 1);
  EXPECT_EQ(run("table --n 3 --format xml").code, 1);
  EXPECT_EQ(run("link --n 2").code, 1);
  EXPECT_EQ(run("gamma --parts 3,3 --n 5").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
}
