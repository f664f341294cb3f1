/* Copyright 2026 The symlie Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "symlie/cli.hpp"

namespace symlie::cli {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args)
{
  args.insert(args.begin(), "symlie");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path tempFile(const std::string& name, const std::string& content)
{
  const auto p = std::filesystem::temp_directory_path() / ("symlie_test_" + name);
  std::ofstream(p) << content;
  return p;
}

RunResult runJson(const char* text) { return run(parseJob(Json::parse(text))); }

TEST(Job, ParseAndEcho)
{
  const JobSpec j = parseJob(Json::parse(R"({"command": "invariance", "model": "backward-kolmogorov"})"));
  EXPECT_EQ(j.command, Command::invariance);
  EXPECT_EQ(j.model, "backward-kolmogorov");
  const Json echo = toJson(j);
  EXPECT_EQ(echo["sampling"]["seed"], kDefaultSeed);
  EXPECT_EQ(echo["operator"], "exponential");
  // Echo parses back to the same echo.
  EXPECT_EQ(toJson(parseJob(echo)), echo);
}

TEST(Job, Rejections)
{
  const char* bad[] = {
      R"({"model": "fokker-planck"})",
      R"({"command": "nope"})",
      R"({"command": "invariance", "model": "heat"})",
      R"({"command": "invariance", "model": "family:zzz"})",
      R"({"command": "invariance", "colour": 1})",
      R"({"command": "invariance", "operator": ["1", "0"]})",
      R"({"command": "invariance", "operator": ["x +* t", "0", "0"]})",
      R"({"command": "invariance", "model": "abstract"})",
      R"({"command": "fd-solve", "grid": {"nx": 4}})",
      R"({"command": "convergence", "levels": 2})",
      R"({"command": "family-check", "instances": ["fp", "none"]})",
      R"({"command": "verify-solution", "solution": {"name": "heat"}})",
      R"({"command": "invariance", "sampling": {"samples": 0}})",
  };
  for (const char* b : bad) EXPECT_THROW(parseJob(Json::parse(b)), InvalidJob) << b;
}

TEST(Run, InvarianceExamples)
{
  RunResult r = runJson(R"({"command": "invariance", "model": "fokker-planck", "operator": "paper"})");
  EXPECT_EQ(r.exitCode, kPass);
  EXPECT_LT(r.report["result"]["maxResidual"].get<double>(), 1e-9);
  const Json& res = r.report["result"];
  const std::vector<std::string> keys = {"pass", "maxResidual", "tolerance", "seed", "nSamples", "worstPoint"};
  std::size_t k = 0;
  for (const auto& [name, v] : res.items())
    if (k < keys.size()) EXPECT_EQ(name, keys[k++]);

  r = runJson(R"({"command": "invariance", "model": "fokker-planck", "operator": ["1", "0", "0"]})");
  EXPECT_EQ(r.exitCode, kFail);
  EXPECT_FALSE(r.report["result"]["worstPoint"].empty());
}

TEST(Run, ReduceReportsDisplayForm)
{
  const RunResult r = runJson(R"({"command": "reduce", "family": [1, -1, 0]})");
  EXPECT_EQ(r.exitCode, kPass);
  EXPECT_NE(r.report.dump().find("z*phi'' - phi' = 0"), std::string::npos);
  EXPECT_EQ(r.report["result"]["solution"], "k1 + k2*z^2");

  EXPECT_EQ(runJson(R"({"command": "reduce", "family": [1, 1, 0]})").report["result"]["solution"], nullptr);
  EXPECT_EQ(runJson(R"({"command": "reduce", "family": [0, 1, 0]})").exitCode, kInvalid);
}

TEST(Run, OtherCommands)
{
  EXPECT_EQ(runJson(R"({"command": "family-check"})").exitCode, kPass);
  EXPECT_EQ(runJson(R"({"command": "characteristics"})").exitCode, kPass);
  EXPECT_EQ(runJson(R"({"command": "verify-solution"})").exitCode, kPass);
  EXPECT_EQ(runJson(R"({"command": "verify-solution", "model": "backward-kolmogorov",
                        "solution": {"name": "backward-kolmogorov", "constants": {"c3": 0, "c4": 1}}})")
                .exitCode,
            kPass);
  EXPECT_EQ(runJson(R"j({"command": "verify-solution", "solution": {"u": "x^2*exp(-x^2/2)"}})j").exitCode, kFail);
  EXPECT_EQ(runJson(R"({"command": "fd-solve", "grid": {"nx": 99, "nt": 100}, "sampling": {"tolerance": 1e-3}})")
                .exitCode,
            kPass);
  EXPECT_EQ(runJson(R"({"command": "convergence", "grid": {"nx": 24, "nt": 25}})").exitCode, kPass);
  EXPECT_EQ(runJson(R"({"command": "pipeline", "model": "backward-kolmogorov"})").exitCode, kPass);
  EXPECT_EQ(runJson(R"({"command": "fd-solve", "model": "family:smooth"})").exitCode, kInvalid);

  const RunResult d = runJson(R"({"command": "determining", "model": "fokker-planck", "operator": ["1", "0", "0"]})");
  EXPECT_EQ(d.exitCode, kPass);
  EXPECT_EQ(d.report["result"]["count"], 1);
  EXPECT_EQ(d.report["result"]["equations"][0]["monomial"], "u_x");
  EXPECT_EQ(d.report["result"]["equations"][0]["vanishes"], false);

  const RunResult a = runJson(R"({"command": "determining", "model": "abstract", "operator": "abstract"})");
  EXPECT_EQ(a.exitCode, kPass);
  EXPECT_GT(a.report["result"]["count"].get<int>(), 3);
}

TEST(Cli, ExitCodes)
{
  EXPECT_EQ(invoke({"invariance"}).code, kPass);
  EXPECT_EQ(invoke({"invariance", "--model", "backward-kolmogorov"}).code, kPass);
  EXPECT_EQ(invoke({"invariance", "--model", "nope"}).code, kInvalid);
  EXPECT_EQ(invoke({"pipeline", "nope"}).code, kInvalid);
  EXPECT_EQ(invoke({}).code, kInvalid);
  EXPECT_EQ(invoke({"--job", "/nonexistent/job.json"}).code, kIoError);
  EXPECT_EQ(invoke({"invariance", "--out", "/nonexistent/dir/report.json"}).code, kIoError);
  EXPECT_EQ(invoke({"--job", tempFile("bad.json", "{not json").string()}).code, kInvalid);
  EXPECT_EQ(invoke({"--bogus"}).code, kInvalid);

  const auto job = tempFile("fail.json", R"({"command": "invariance", "operator": ["1", "0", "0"]})");
  EXPECT_EQ(invoke({"--job", job.string()}).code, kFail);
  // Command-line tolerance overrides the job (here loosened far enough to pass).
  EXPECT_EQ(invoke({"--job", job.string(), "--tolerance", "10"}).code, kPass);
}

TEST(Cli, PipelineEndsWithSolution)
{
  const Invocation fp = invoke({"pipeline", "fokker-planck"});
  EXPECT_EQ(fp.code, kPass);
  EXPECT_NE(fp.out.find("reconstructed u: c1*x*exp(-t)*exp(-x^2/2) + c2*exp(-x^2/2)\nresidual: pass"),
            std::string::npos)
      << fp.out;
  const Invocation bk = invoke({"pipeline", "backward-kolmogorov"});
  EXPECT_NE(bk.out.find("reconstructed u: exp(-x^2/2)*(c3 + c4*x^2*exp(-2*t))\nresidual: pass"), std::string::npos);
}

TEST(Cli, DeterministicReports)
{
  const auto path = (std::filesystem::temp_directory_path() / "symlie_det.json").string();
  const auto body = [&](const char* cmd) {
    EXPECT_EQ(invoke({cmd, "--seed", "99", "--out", path}).code, kPass);
    std::ifstream is(path);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
  };
  for (const char* cmd : {"invariance", "family-check", "verify-solution"}) {
    const std::string first = body(cmd);
    EXPECT_EQ(first, body(cmd)) << cmd;
    EXPECT_NE(first.find("\"seed\": 99"), std::string::npos);
  }
}

}  // namespace
}  // namespace symlie::cli
