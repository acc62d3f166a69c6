#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace slicepoly::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "slicepoly");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<double> value_of(const std::string& text) {
  return nlohmann::json::parse(text)["value"].get<std::vector<double>>();
}

TEST(Cli, EStar) {
  const Result r = call({"kernel", "--kind", "estar", "--q", "0,1,0,0", "--r", "0,0,1,0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto v = value_of(r.out);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_NEAR(v[0], 1.5430806348152437, 1e-12);
  EXPECT_NEAR(v[3], -1.1752011936438014, 1e-12);
  EXPECT_GT(nlohmann::json::parse(r.out)["terms_used"].get<int>(), 0);
}

TEST(Cli, Kernels) {
  const Result f = call({"kernel", "--kind", "fock", "--order", "2", "--q", "0,1,0,0", "--r", "0,0,1,0"});
  ASSERT_EQ(f.code, kExitOk);
  for (double x : value_of(f.out)) EXPECT_NEAR(x, 0.0, 1e-13);

  const Result b = call({"kernel", "--kind", "bergman", "--order", "2", "--q", "0,0,0,0", "--r", "0,0,0,0"});
  ASSERT_EQ(b.code, kExitOk);
  EXPECT_NEAR(value_of(b.out)[0], 1.2732395447351628, 1e-14);

  const Result alt = call({"kernel", "--kind", "bergman", "--order", "3", "--alt", "--q", "0.1,0.2,0,0.3",
                           "--r", "0,0.4,0.1,0"});
  const Result std_form = call({"kernel", "--kind", "bergman", "--order", "3", "--q", "0.1,0.2,0,0.3",
                                "--r", "0,0.4,0.1,0"});
  ASSERT_EQ(alt.code, kExitOk);
  const auto a = value_of(alt.out), s = value_of(std_form.out);
  for (int m = 0; m < 4; ++m) EXPECT_NEAR(a[m], s[m], 1e-10);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"kernel", "--kind", "bergman", "--order", "1", "--q", "1,0,0,0", "--r", "0,0,0,0"}).code,
            kExitDomain);
  EXPECT_EQ(call({"kernel", "--kind", "fock", "--q", "1,2,3", "--r", "0,0,0,0"}).code, kExitUsage);
  EXPECT_EQ(call({"kernel", "--kind", "nope", "--q", "0,0,0,0", "--r", "0,0,0,0"}).code, kExitUsage);
  EXPECT_EQ(call({"kernel", "--kind", "fock", "--order", "0", "--q", "0,0,0,0", "--r", "0,0,0,0"}).code,
            kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "--suite", "nope"}).code, kExitUsage);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(Cli, VerifyDeterministic) {
  const std::vector<std::string> args = {"verify", "--suite", "structure", "--seed", "3", "--samples", "20",
                                         "--no-timing"};
  const Result a = call(args), b = call(args);
  ASSERT_EQ(a.code, kExitOk) << a.out;
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["suite"], "structure");
  EXPECT_EQ(doc["cases_run"], doc["cases_passed"]);
  EXPECT_EQ(doc["elapsed_ms"], 0);

  const Result empty = call({"verify", "--suite", "all", "--samples", "0"});
  EXPECT_EQ(empty.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(empty.out)["cases_run"], 0);
}

TEST(Cli, Table) {
  const Result f = call({"table", "--kind", "fock", "--order", "1", "--grid", "5", "--r", "0,0,0,0"});
  ASSERT_EQ(f.code, kExitOk) << f.err;
  std::istringstream lines(f.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "x,y,v0,v1,v2,v3");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    // K_1(q, 0) = 1 everywhere.
    double x, y, v0, v1, v2, v3;
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf", &x, &y, &v0, &v1, &v2, &v3), 6);
    EXPECT_NEAR(v0, 1.0, 1e-14);
  }
  EXPECT_EQ(rows, 25);

  const Result b = call({"table", "--kind", "bergman", "--grid", "5", "--slice", "k"});
  ASSERT_EQ(b.code, kExitOk);
  // Points with x^2 + y^2 > 0.95^2 are skipped: 12 of the 25.
  EXPECT_EQ(std::count(b.out.begin(), b.out.end(), '\n'), 1 + 25 - 12);
}

TEST(Cli, Eval) {
  const auto path = std::filesystem::temp_directory_path() / "slicepoly_cli_eval.json";
  {
    std::ofstream os(path);
    os << R"({"order": 2, "components": [[[1, 0, 0, 0]], [[0, 0, 0, 0], [0, 0, -1, 0]]], "radius": "inf"})";
  }
  const Result r = call({"eval", "--function", path.string(), "--q", "0,1,0,0"});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto v = value_of(r.out);
  EXPECT_NEAR(v[0], 1.0, 1e-15);
  EXPECT_NEAR(v[2], -1.0, 1e-15);

  EXPECT_EQ(call({"eval", "--function", "/nonexistent/f.json", "--q", "0,0,0,0"}).code, kExitUsage);
}

}  // namespace
}  // namespace slicepoly::cli
