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

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "symlie/cli.hpp"

namespace symlie::cli {

int main(int argc, char** argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Lie symmetry toolkit for evolution equations u_t = A u_xx + B u_x + C u"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string jobPath, outPath, model;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  app.add_option("--job", jobPath, "JSON job file");
  app.add_option("--seed", seed, "sampling seed");
  app.add_option("--out", outPath, "report path (default: standard output)");
  app.add_option("--tolerance", tolerance, "pass threshold");
  app.add_option("--model", model, "registry model name");

  std::string pipelineModel;
  for (const char* name : {"invariance", "determining", "family-check", "reduce", "characteristics",
                           "verify-solution", "fd-solve", "convergence", "pipeline"}) {
    CLI::App* sub = app.add_subcommand(name);
    if (std::string(name) == "pipeline") sub->add_option("model", pipelineModel, "fokker-planck or backward-kolmogorov");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInvalid;
  }

  Json j = Json::object();
  if (!jobPath.empty()) {
    std::ifstream is(jobPath);
    if (!is) {
      err << "cannot read " << jobPath << "\n";
      return kIoError;
    }
    try {
      j = Json::parse(is);
    } catch (const nlohmann::json::exception& e) {
      err << "malformed job file: " << e.what() << "\n";
      return kInvalid;
    }
    if (!j.is_object()) {
      err << "job file must hold an object\n";
      return kInvalid;
    }
  }
  if (!app.get_subcommands().empty()) j["command"] = app.get_subcommands().front()->get_name();
  if (!j.contains("command")) {
    err << "no command given\n" << app.help();
    return kInvalid;
  }
  if (!model.empty()) j["model"] = model;
  if (!pipelineModel.empty()) j["model"] = pipelineModel;
  if (seed) j["sampling"]["seed"] = *seed;
  if (tolerance) j["sampling"]["tolerance"] = *tolerance;
  if (!outPath.empty()) j["output"] = outPath;

  JobSpec job;
  try {
    job = parseJob(j);
  } catch (const Error& e) {
    err << "invalid job: " << e.what() << "\n";
    return kInvalid;
  }

  const RunResult r = run(job);
  if (!r.summary.empty()) out << r.summary << (r.summary.back() == '\n' ? "" : "\n");
  const std::string body = r.report.dump(2) + "\n";
  if (job.output.empty()) {
    if (job.command != Command::pipeline) out << body;
  } else {
    std::ofstream os(job.output);
    os << body;
    if (!os) {
      err << "cannot write " << job.output << "\n";
      return kIoError;
    }
  }
  return r.exitCode;
}

}  // namespace symlie::cli
