#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(LOCALDEG_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args, int expected_code = 0) {
  const CliRun r = run("--format json " + args);
  EXPECT_EQ(r.code, expected_code) << args;
  return nlohmann::json::parse(r.out);
}

void expect_schema(const nlohmann::json& j) {
  ASSERT_TRUE(j.is_object());
  EXPECT_TRUE(j["command"].is_string());
  EXPECT_TRUE(j["params"].is_object());
  EXPECT_TRUE(j["seed"].is_null() || j["seed"].is_number_unsigned());
  EXPECT_TRUE(j["data"].is_object());
  ASSERT_TRUE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c["name"].is_string());
    const std::string s = c["status"], k = c["kind"];
    EXPECT_TRUE(s == "pass" || s == "fail" || s == "skipped");
    EXPECT_TRUE(k == "proof" || k == "exhaustive" || k == "sampled");
    EXPECT_TRUE(c["details"].is_string());
    if (k == "sampled") {
      EXPECT_TRUE(c.contains("seed"));
    }
  }
}

}  // namespace

TEST(Cli, VerifyExtraspecialPasses) {
  const auto j = run_json("verify extraspecial --p 3 --m 2");
  expect_schema(j);
  EXPECT_EQ(j["data"]["order"], 243);
  for (const auto& c : j["checks"]) EXPECT_NE(c["status"], "fail") << c["name"];
}

TEST(Cli, ModuleWithoutRootOfUnityIsUsageError) {
  const CliRun r = run("verify module --p 3 --q 5 --m 1");
  EXPECT_EQ(r.code, 2);
  const auto j = run_json("verify module --p 3 --q 5 --m 1", 2);
  EXPECT_EQ(j["error"], "NoRootOfUnity");
}

TEST(Cli, SemidirectWitness) {
  const auto j = run_json("verify semidirect --p 3 --q 7 --m 1 --samples 1000 --seed 42");
  expect_schema(j);
  EXPECT_EQ(j["data"]["witness_order"], 21);
  EXPECT_EQ(j["seed"], 42);
}

TEST(Cli, Bounds) {
  EXPECT_EQ(run_json("bounds derived --b 3 --n 1")["data"]["total"]["simplified"], "3^32");
  EXPECT_EQ(run_json("bounds abelian --b 2")["data"]["bound"]["value"], "8192");
  EXPECT_EQ(run_json("bounds pq --p 3 --q 7")["data"]["overall"]["simplified"], "7^2407");
  EXPECT_EQ(run_json("bounds factorial --b 3")["data"]["value"], "6");
}

TEST(Cli, RealizeKummer) {
  const auto j = run_json("realize kummer --m 1 --seed 7");
  expect_schema(j);
  const auto& lv = j["data"]["tower"]["levels"][0];
  EXPECT_EQ(lv["a"], 2);
  EXPECT_EQ(lv["q"], 31);
  const auto empty = run_json("realize kummer --m 0");
  EXPECT_TRUE(empty["data"]["tower"]["levels"].empty());
}

TEST(Cli, RealizeEmbedding) {
  const auto j = run_json("realize embedding --p 3 --q 7 --m 1");
  expect_schema(j);
  EXPECT_EQ(j["data"]["delta_size"], 27);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("verify abelian-witness --cyclic 2,2,3").code, 0);
  EXPECT_EQ(run("verify nonsense").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("bounds local-count --p 5 --d 4").code, 2);
  EXPECT_EQ(run("verify abelian-witness --group S3").code, 2);
  EXPECT_EQ(run("realize kummer --m 1 --prime-bound 20").code, 1);
  EXPECT_EQ(run("--format yaml bounds abelian").code, 2);
}

TEST(Cli, ByteIdenticalOutput) {
  for (const char* args : {"--format json --seed 5 verify semidirect --samples 300",
                           "--format json realize kummer --m 2", "--format json realize embedding --seed 9",
                           "verify kummer-formal --m 3 --seed 4"}) {
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
  EXPECT_EQ(run("--seed 3 --format json verify module --p 3 --q 7").out,
            run("verify module --p 3 --q 7 --format json --seed 3").out);
}

TEST(Cli, TextAndJsonHaveSameChecks) {
  for (const char* args : {"verify extraspecial --m 2", "verify module --q 7 --m 2", "verify semidirect",
                           "verify product-quotient --max-factor-order 4", "verify kummer-formal --m 2",
                           "bounds pq", "bounds local-count --p 2 --d 3", "realize kummer --m 2",
                           "realize embedding"}) {
    const CliRun text = run(args);
    const auto j = run_json(args);
    expect_schema(j);
    std::size_t pos = 0, lines = 0;
    for (const auto& c : j["checks"]) {
      const std::string prefix = "[" + c["status"].get<std::string>() + "] " + c["name"].get<std::string>() + " (" +
                                 c["kind"].get<std::string>();
      const std::size_t at = text.out.find("\n" + prefix, pos);
      ASSERT_NE(at, std::string::npos) << args << ": " << prefix;
      pos = at + 1;
    }
    for (std::size_t at = 0; (at = text.out.find("\n[", at)) != std::string::npos; ++at) ++lines;
    EXPECT_EQ(lines, j["checks"].size()) << args;
  }
}

TEST(Cli, TimingIsOptIn) {
  EXPECT_FALSE(run_json("bounds factorial --b 4").contains("elapsed_ms"));
  EXPECT_TRUE(run_json("--timing bounds factorial --b 4").contains("elapsed_ms"));
}
