#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(PQFIB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(const std::string& args, int expect_code = 0) {
  const CliResult r = run(args);
  EXPECT_EQ(r.code, expect_code) << args;
  return json::parse(r.out);
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(PQFIB_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> column(const json& rows, const char* key) {
  std::vector<std::string> out;
  for (const auto& r : rows) out.push_back(r[key].get<std::string>());
  return out;
}

}  // namespace

TEST(Eval, FibonacciThree) {
  const json j = run_json("eval --family fib --n 3 --p 2 --q 3 --s 1");
  EXPECT_EQ(j["command"], "eval");
  EXPECT_EQ(j["results"]["coefficients"], (json{{"0", "6"}, {"2", "1"}}));
  EXPECT_EQ(j["results"]["degree"], 2);
}

TEST(Eval, ZeroAndOne) {
  EXPECT_EQ(run_json("eval --family lucas --n 0 --p 2 --q 3 --s 1")["results"]["coefficients"], (json{{"0", "1"}}));
  EXPECT_TRUE(run_json("eval --family fib --n 0 --p 2 --q 3 --s 1")["results"]["coefficients"].empty());
}

TEST(Eval, ValueAtPoint) {
  // L_2 = x^2 + [2] s = x^2 + 5 at p=2, q=3, s=1.
  EXPECT_EQ(run_json("eval --family lucas --n 2 --p 2 --q 3 --s 1 --x 1/2")["results"]["value"], "21/4");
  const json f = run_json("eval --family fib --n 3 --p 2 --q 3 --s 1 --x 0.5 --mode float");
  EXPECT_DOUBLE_EQ(f["results"]["value"].get<double>(), 6.25);
}

TEST(Numbers, ClassicalAndDeformed) {
  const json fib = run_json("numbers --family fib --n-max 6 --p 1 --q 1");
  EXPECT_EQ(column(fib["results"]["rows"], "value"), (std::vector<std::string>{"0", "1", "1", "2", "3", "5", "8"}));
  for (const auto& r : fib["results"]["rows"]) EXPECT_EQ(r["match"], true);
  const json luc = run_json("numbers --family lucas --n-max 4 --p 1 --q 1");
  EXPECT_EQ(column(luc["results"]["rows"], "value"), (std::vector<std::string>{"1", "1", "3", "4", "7"}));
  EXPECT_TRUE(luc["results"]["rows"][0]["classical"].is_null());
  const json def = run_json("numbers --family fib --n-max 3 --p 2 --q 3");
  EXPECT_EQ(column(def["results"]["rows"], "value"), (std::vector<std::string>{"0", "1", "1", "7"}));
  EXPECT_FALSE(def["results"]["rows"][0].contains("classical"));
}

TEST(Genfunc, ClassicalFibonacci) {
  const json j = run_json("genfunc --family fib --p 1 --q 1 --s 1 --x 1 --order 6");
  const std::vector<std::string> want{"0", "1", "1", "2", "3", "5", "8"};
  EXPECT_EQ(j["results"]["definitional"].get<std::vector<std::string>>(), want);
  EXPECT_EQ(j["results"]["closed"].get<std::vector<std::string>>(), want);
  EXPECT_EQ(j["results"]["match"], true);
}

TEST(Genfunc, ZeroArgumentIsGeometric) {
  const json j = run_json("genfunc --family fib --p 2 --q 3 --s 0 --x 3/2 --order 4");
  EXPECT_EQ(j["results"]["definitional"].get<std::vector<std::string>>(),
            (std::vector<std::string>{"0", "1", "3/2", "9/4", "27/8"}));
  EXPECT_EQ(j["results"]["match"], true);
}

TEST(Genfunc, RandomParametersMatch) {
  for (const char* args : {"--p 3/7 --q -5/2 --s 4/9 --x -7/3", "--p -2 --q 9/8 --s -1/6 --x 5"}) {
    const json f = run_json(std::string("genfunc --family fib --order 12 ") + args);
    EXPECT_EQ(f["results"]["match"], true);
    const json l = run_json(std::string("genfunc --family lucas --order 12 ") + args);
    EXPECT_EQ(l["results"]["match_split"], true);
    EXPECT_EQ(l["results"]["match"], false);
  }
}

TEST(Genfunc, LucasAtPEqualsOne) {
  const json j = run_json("genfunc --family lucas --p 1 --q 1 --s 1 --x 1 --order 5");
  EXPECT_EQ(j["results"]["closed"].get<std::vector<std::string>>(),
            (std::vector<std::string>{"1", "1", "3", "4", "7", "11"}));
  EXPECT_EQ(j["results"]["match"], true);
  EXPECT_EQ(j["results"]["match_split"], true);
}

TEST(Verify, BinomialsPass) {
  const json j = run_json("verify --suite binomials --n-max 30 --seed 7");
  EXPECT_EQ(j["results"]["status"], "pass");
}

TEST(Verify, FourierReportsResidual) {
  const json j = run_json("verify --suite fourier");
  EXPECT_EQ(j["results"]["status"], "pass");
  for (const auto& c : j["results"]["suites"][0]["checks"]) {
    EXPECT_TRUE(c["max_residual"].is_number());
  }
}

TEST(Verify, AllAggregates) {
  const json j = run_json("verify --suite all --n-max 10 --samples 3");
  EXPECT_EQ(j["results"]["suites"].size(), 5u);
  EXPECT_EQ(j["results"]["status"], "pass");
}

TEST(ExitCodes, UsageErrors) {
  EXPECT_EQ(run("eval --family fib --n 3 --p 2/ --q 3 --s 1").code, 2);
  EXPECT_EQ(run("eval --family fib --n 3 --p 1.5 --q 3 --s 1").code, 2);
  EXPECT_EQ(run("eval --family fib --n 3 --p 2 --q 3 --s 1 --mode float --x 1/2").code, 2);
  EXPECT_EQ(run("eval --family fib --n 3 --p 0 --q 3 --s 1").code, 2);
  EXPECT_EQ(run("eval --family both --n 3 --p 2 --q 3 --s 1").code, 2);
  EXPECT_EQ(run("genfunc --family fib --p 1 --q 1 --s 1 --x 1 --order 65").code, 2);
  EXPECT_EQ(run("verify --suite nope").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Formats, CsvAndPlain) {
  const CliResult csv = run("numbers --family fib --n-max 3 --p 2 --q 3 --format csv");
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "n,value");
  EXPECT_NE(csv.out.find("3,7\n"), std::string::npos);
  const CliResult eval = run("eval --family fib --n 3 --p 2 --q 3 --s 1 --format csv");
  EXPECT_EQ(eval.out, "power,coefficient\n0,6\n2,1\n");
  const CliResult plain = run("verify --suite binomials --n-max 5 --format plain");
  EXPECT_EQ(plain.code, 0);
  EXPECT_NE(plain.out.find("overall: pass"), std::string::npos);
}

TEST(Determinism, ByteIdenticalOutput) {
  for (const char* args : {"verify --suite all --seed 11 --n-max 8", "genfunc --family lucas --p 2/3 --q 5 --s 1 --x 2"}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Golden, MatchesFiles) {
  const std::pair<const char*, const char*> cases[] = {
      {"eval_fib_3.json", "eval --family fib --n 3 --p 2 --q 3 --s 1"},
      {"numbers_lucas_classical.json", "numbers --family lucas --n-max 4 --p 1 --q 1"},
      {"genfunc_fib_classical.json", "genfunc --family fib --p 1 --q 1 --s 1 --x 1 --order 6"},
      {"verify_binomials_seed7.json", "verify --suite binomials --n-max 30 --seed 7"},
  };
  for (const auto& [file, args] : cases) EXPECT_EQ(run(args).out, golden(file)) << file;
}
