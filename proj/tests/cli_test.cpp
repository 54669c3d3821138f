#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "subadd/io.hpp"

namespace {

const std::string kCli = SUBADD_CLI;
const std::string kData = SUBADD_DATA "/";

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  FILE* p = popen((kCli + " " + args + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int s = pclose(p);
  r.status = WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  return r;
}

subadd::io::Json report(const Run& r) { return subadd::io::parse_json(r.out, "report"); }

std::string data(const char* name) { return kData + name; }

}  // namespace

TEST(Cli, Check2dStrictContainment) {
  auto r = run("check2d --model " + data("a1_blown_up.json") + " --ideal-a " + data("a1_fa.json") + " --ideal-b " +
               data("a1_fa.json"));
  ASSERT_EQ(r.status, 0) << r.out;
  auto j = report(r);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["result"]["holds"], true);
  EXPECT_EQ(j["result"]["strict_at"], subadd::io::Json::array({"E1"}));
  EXPECT_EQ(j["command"]["verb"], "check2d");
  EXPECT_EQ(j["inputs_digest"].get<std::string>().size(), 16u);
  EXPECT_FALSE(j.contains("wall_time_ms"));
}

TEST(Cli, Check2dViolations) {
  auto r = run("check2d --model " + data("a1_rulings.json") + " --ideal-a " + data("d1.json") + " --ideal-b " +
               data("d2.json"));
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(report(r)["result"]["witness"], "E");
  r = run("check2d -k 4");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(report(r)["result"]["witnesses"], subadd::io::Json::array({"E2"}));
  r = run("check2d --model " + data("hj52.json") + " -n 2");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(report(r)["result"]["z"]["E1"], "2");
}

TEST(Cli, MonomialViolations) {
  auto r = run("checkmono --ring " + data("q41.json") + " --ideal-a " + data("q41_ideal.json") + " --ideal-b " +
               data("q41_ideal.json"));
  ASSERT_EQ(r.status, 1) << r.out;
  auto j = report(r);
  EXPECT_EQ(j["status"], "violation");
  EXPECT_EQ(j["result"]["witness"], subadd::io::Json::array({10, 3, 7}));

  r = run("checkmono --ring " + data("q5_113.json") + " --ideal-a " + data("q5_a.json") + " --ideal-b " + data("q5_b.json"));
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(report(r)["result"]["witness"], subadd::io::Json::array({5, 2, 6}));

  r = run("strongmono --ring " + data("z2.json") + " --ideal-a " + data("z2_a.json") + " --ideal-b " + data("z2_b.json") +
          " -c 3/2 -d 1/3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(report(r)["command"]["c"], "3/2");
}

TEST(Cli, Multiplier) {
  auto r = run("multiplier --model " + data("a1_blown_up.json") + " --ideal " + data("a1_fa.json") + " -c 2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(report(r)["result"]["cycle"], subadd::io::parse_json(R"({"F": "2", "E1": "3"})", "x"));
  r = run("multiplier --ring " + data("z2.json") + " --ideal " + data("z2_b.json") + " -c 1");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(report(r)["result"]["generators"].is_array());
}

TEST(Cli, Reproduce) {
  for (const char* id : {"2.6.1", "2.6.2", "2.3.2", "2.4.1", "2.4.2", "3.2"}) {
    auto r = run(std::string("reproduce --id ") + id);
    EXPECT_EQ(r.status, 0) << id;
    EXPECT_EQ(report(r)["result"]["passed"], true) << id;
  }
  auto r = run("reproduce --id 7.7");
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(report(r)["error"]["kind"], "UnknownExample");
}

TEST(Cli, InputErrors) {
  const std::string bad = ::testing::TempDir() + "bad.json";
  std::ofstream(bad) << "{\"base_curves\": [";
  auto r = run("check2d --model " + bad + " --ideal-a " + data("a1_fa.json") + " --ideal-b " + data("a1_fa.json"));
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(report(r)["error"]["kind"], "ParseError");
  r = run("check2d --model " + data("a1_blown_up.json") + " --ideal-a " + data("a1_fa.json"));
  EXPECT_EQ(r.status, 2);
  r = run("check2d --model " + data("a1_blown_up.json") + " --ideal-a " + data("d1.json") + " --ideal-b " + data("a1_fa.json"));
  EXPECT_EQ(r.status, 2);
  r = run("multiplier --model " + data("a1_blown_up.json") + " --ideal " + data("a1_fa.json") + " -c x");
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("checkmono --ring " + data("q41.json") + " --ideal-a " + data("q5_a.json") + " --ideal-b " + data("q5_a.json")).status, 2);
}

TEST(Cli, ExploreIsDeterministic) {
  const std::string args = "explore --seed 11 --trials 60";
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(report(a)["result"]["trials_run"], 60);
  auto r = run("explore --trials 1 --no-gorenstein-filter --ring " + data("q41.json") + " --ideal-a " + data("q41_ideal.json") +
               " --ideal-b " + data("q41_ideal.json"));
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(report(r)["result"]["violations"][0]["certificate"]["witness"], subadd::io::Json::array({10, 3, 7}));
  r = run("explore --trials 1 --ring " + data("q41.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(report(r)["result"]["filtered"], 1);
  EXPECT_EQ(run("explore --trials 80 --full-lattice").status, 0);
}

TEST(Cli, ReportsAreByteIdenticalAndTimingIsOptIn) {
  const std::string args = "checkmono --ring " + data("q5_113.json") + " --ideal-a " + data("q5_a.json") + " --ideal-b " +
                           data("q5_b.json");
  EXPECT_EQ(run(args).out, run(args).out);
  const std::string out = ::testing::TempDir() + "report.json";
  EXPECT_EQ(run(args + " --output " + out + " --timing").status, 1);
  auto j = subadd::io::load_json(out);
  EXPECT_TRUE(j.contains("wall_time_ms"));
  EXPECT_EQ(j["result"]["witness"], subadd::io::Json::array({5, 2, 6}));
}
