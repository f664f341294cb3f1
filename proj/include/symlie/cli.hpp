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

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symlie/errors.hpp"
#include "symlie/numerics.hpp"
#include "symlie/sampling.hpp"

namespace symlie::cli {

using Json = nlohmann::ordered_json;

enum class Command {
  invariance,
  determining,
  familyCheck,
  reduce,
  characteristics,
  verifySolution,
  fdSolve,
  convergence,
  pipeline,
};

std::string_view toString(Command c);
std::optional<Command> commandFromName(std::string_view name);

enum ExitCode : int { kPass = 0, kFail = 1, kInvalid = 2, kIoError = 3 };

/// Malformed or inconsistent job; maps to exit code 2.
class InvalidJob : public Error {
 public:
  using Error::Error;
};

struct SolutionSpec {
  /// "fokker-planck" or "backward-kolmogorov" for the catalog solutions,
  /// empty for an inline expression.
  std::string name;
  std::string u;  // inline u(x, t) with named constants c1..c9
  std::map<std::string, double> constants;
};

struct CharacteristicsSpec {
  std::array<double, 3> start{0.0, 1.0, 1.0};  // t0, x0, u0
  double sSpan = 1.0;
  double step = 1e-3;
  std::optional<double> tStop = 0.5;
  double tCap = 20.0;
};

struct JobSpec {
  Command command = Command::invariance;
  /// Registry name, "abstract", or "inline" with inlineModel set.
  std::string model = "fokker-planck";
  std::optional<std::array<std::string, 3>> inlineModel;  // A, B, C
  /// "exponential", "abstract", or "inline" with inlineOperator set.
  std::string op = "exponential";
  std::optional<std::array<std::string, 3>> inlineOperator;  // xi, phi, eta
  std::array<double, 3> family{1.0, 0.0, 0.0};
  std::vector<std::string> instances;  // family-check; empty: whole registry
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::size_t> samples;
  std::optional<double> tolerance;
  std::optional<Domain> domain;
  std::optional<Grid> grid;
  int levels = 4;
  SolutionSpec solution{"fokker-planck", "", {{"c1", 1.0}, {"c2", 1.0}}};
  CharacteristicsSpec characteristics;
  std::string output;
  std::string csv;
};

/// Reads a JobSpec; rejects unknown keys, unknown registry names and
/// unparsable expressions with InvalidJob.
JobSpec parseJob(const Json& j);
/// Echo of the job with defaults resolved; always carries the seed.
Json toJson(const JobSpec& job);

struct RunResult {
  int exitCode = kPass;
  Json report;
  std::string summary;  // human-readable, for standard output
};

/// Executes the job. Library errors during computation become exit code 2
/// for invalid input (parse, precondition) and 1 otherwise; the message is
/// recorded in the report.
RunResult run(const JobSpec& job);

/// Writes the end-to-end narrative for a catalog model; returns an exit code.
int printPipeline(const std::string& model, std::ostream& out);

/// Full command-line entry point (argv as given to main).
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace symlie::cli
