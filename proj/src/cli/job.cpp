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

#include <set>

#include "symlie/cli.hpp"
#include "symlie/models.hpp"
#include "symlie/parse.hpp"

namespace symlie::cli {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 9> kCommands = {{
    {Command::invariance, "invariance"},
    {Command::determining, "determining"},
    {Command::familyCheck, "family-check"},
    {Command::reduce, "reduce"},
    {Command::characteristics, "characteristics"},
    {Command::verifySolution, "verify-solution"},
    {Command::fdSolve, "fd-solve"},
    {Command::convergence, "convergence"},
    {Command::pipeline, "pipeline"},
}};

void requireKeys(const Json& j, const std::set<std::string>& allowed, const std::string& where)
{
  if (!j.is_object()) throw InvalidJob(where + " must be an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw InvalidJob("unknown key \"" + k + "\" in " + where);
}

template <typename T>
T get(const Json& j, const std::string& what)
{
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidJob("bad value for " + what + ": " + j.dump());
  }
}

// Expression fields accept strings or numbers.
std::string exprText(const Json& j, const std::string& what)
{
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number()) return j.dump();
  throw InvalidJob("expected an expression for " + what);
}

std::array<std::string, 3> triple(const Json& j, const std::array<const char*, 3>& names, const std::string& what)
{
  std::array<std::string, 3> out;
  if (j.is_array()) {
    if (j.size() != 3) throw InvalidJob(what + " needs three entries");
    for (std::size_t k = 0; k < 3; ++k) out[k] = exprText(j[k], what);
    return out;
  }
  requireKeys(j, {names[0], names[1], names[2], "domain"}, what);
  for (std::size_t k = 0; k < 3; ++k) {
    if (!j.contains(names[k])) throw InvalidJob(what + " lacks \"" + names[k] + "\"");
    out[k] = exprText(j.at(names[k]), what);
  }
  return out;
}

void checkExpr(const std::string& text, const std::string& what)
{
  try {
    (void)parse(text);
  } catch (const ParseError& e) {
    throw InvalidJob("cannot parse " + what + " \"" + text + "\": " + e.what());
  }
}

Domain parseDomain(const Json& j)
{
  if (!j.is_object()) throw InvalidJob("domain must be an object");
  Domain d;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_array() || v.size() != 2) throw InvalidJob("domain entry " + k + " must be [lo, hi]");
    const double lo = get<double>(v[0], "domain " + k), hi = get<double>(v[1], "domain " + k);
    if (!(lo <= hi)) throw InvalidJob("domain entry " + k + " has lo > hi");
    d[k] = {lo, hi};
  }
  return d;
}

bool isRegistryModel(const std::string& name)
{
  try {
    (void)modelByName(name);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

std::string_view toString(Command c)
{
  for (const auto& [k, n] : kCommands)
    if (k == c) return n;
  return "?";
}

std::optional<Command> commandFromName(std::string_view name)
{
  for (const auto& [k, n] : kCommands)
    if (n == name) return k;
  return std::nullopt;
}

JobSpec parseJob(const Json& j)
{
  requireKeys(j,
              {"command", "model", "operator", "family", "instances", "sampling", "grid", "levels", "solution",
               "characteristics", "output", "csv"},
              "job");
  JobSpec job;
  if (!j.contains("command")) throw InvalidJob("job lacks \"command\"");
  const auto cmd = commandFromName(get<std::string>(j.at("command"), "command"));
  if (!cmd) throw InvalidJob("unknown command " + j.at("command").dump());
  job.command = *cmd;

  if (j.contains("model")) {
    const Json& m = j.at("model");
    if (m.is_string()) {
      job.model = m.get<std::string>();
      if (job.model != "abstract" && !isRegistryModel(job.model)) throw InvalidJob("unknown model: " + job.model);
    } else {
      job.model = "inline";
      job.inlineModel = triple(m, {"A", "B", "C"}, "model");
      if (m.is_object() && m.contains("domain")) job.domain = parseDomain(m.at("domain"));
    }
  }
  if (j.contains("operator")) {
    const Json& o = j.at("operator");
    if (o.is_string()) {
      job.op = o.get<std::string>();
      if (job.op == "paper") job.op = "exponential";  // accepted alias
      if (job.op != "exponential" && job.op != "abstract") throw InvalidJob("unknown operator: " + job.op);
    } else {
      job.op = "inline";
      job.inlineOperator = triple(o, {"xi", "phi", "eta"}, "operator");
    }
  }
  if (job.model == "abstract" || job.op == "abstract")
    if (job.command != Command::determining)
      throw InvalidJob("abstract models and operators are only valid for the determining command");

  if (j.contains("family")) {
    const Json& f = j.at("family");
    if (!f.is_array() || f.size() != 3) throw InvalidJob("family must be [f, g, h]");
    for (std::size_t k = 0; k < 3; ++k) job.family[k] = get<double>(f[k], "family");
  }
  if (j.contains("instances")) {
    job.instances = get<std::vector<std::string>>(j.at("instances"), "instances");
    for (const auto& id : job.instances)
      if (!isRegistryModel("family:" + id)) throw InvalidJob("unknown family instance: " + id);
  }
  if (j.contains("sampling")) {
    const Json& s = j.at("sampling");
    requireKeys(s, {"seed", "samples", "tolerance", "domain"}, "sampling");
    if (s.contains("seed")) job.seed = get<std::uint64_t>(s.at("seed"), "seed");
    if (s.contains("samples")) job.samples = get<std::size_t>(s.at("samples"), "samples");
    if (s.contains("tolerance")) job.tolerance = get<double>(s.at("tolerance"), "tolerance");
    if (s.contains("domain")) job.domain = parseDomain(s.at("domain"));
    if (job.samples && *job.samples == 0) throw InvalidJob("samples must be positive");
    if (job.tolerance && !(*job.tolerance >= 0.0)) throw InvalidJob("tolerance must be non-negative");
  }
  if (j.contains("grid")) {
    const Json& g = j.at("grid");
    requireKeys(g, {"xMin", "xMax", "nx", "tEnd", "nt"}, "grid");
    Grid grid;
    if (g.contains("xMin")) grid.xMin = get<double>(g.at("xMin"), "grid.xMin");
    if (g.contains("xMax")) grid.xMax = get<double>(g.at("xMax"), "grid.xMax");
    if (g.contains("nx")) grid.nx = get<int>(g.at("nx"), "grid.nx");
    if (g.contains("tEnd")) grid.tEnd = get<double>(g.at("tEnd"), "grid.tEnd");
    if (g.contains("nt")) grid.nt = get<int>(g.at("nt"), "grid.nt");
    try {
      grid.validate();
    } catch (const PreconditionError& e) {
      throw InvalidJob(e.what());
    }
    job.grid = grid;
  }
  if (j.contains("levels")) {
    job.levels = get<int>(j.at("levels"), "levels");
    if (job.levels < 3) throw InvalidJob("levels must be >= 3");
  }
  if (j.contains("solution")) {
    const Json& s = j.at("solution");
    requireKeys(s, {"name", "u", "constants"}, "solution");
    job.solution = {};
    if (s.contains("name")) job.solution.name = get<std::string>(s.at("name"), "solution.name");
    if (s.contains("u")) job.solution.u = exprText(s.at("u"), "solution.u");
    if (s.contains("constants"))
      job.solution.constants = get<std::map<std::string, double>>(s.at("constants"), "solution.constants");
    if (job.solution.name.empty() == job.solution.u.empty())
      throw InvalidJob("solution needs exactly one of \"name\" and \"u\"");
    if (!job.solution.name.empty() && job.solution.name != "fokker-planck" &&
        job.solution.name != "backward-kolmogorov")
      throw InvalidJob("unknown solution: " + job.solution.name);
    if (!job.solution.u.empty()) checkExpr(job.solution.u, "solution.u");
  }
  if (j.contains("characteristics")) {
    const Json& c = j.at("characteristics");
    requireKeys(c, {"start", "sSpan", "step", "tStop", "tCap"}, "characteristics");
    auto& cs = job.characteristics;
    if (c.contains("start")) {
      const auto st = get<std::vector<double>>(c.at("start"), "characteristics.start");
      if (st.size() != 3) throw InvalidJob("characteristics.start must be [t0, x0, u0]");
      cs.start = {st[0], st[1], st[2]};
    }
    if (c.contains("sSpan")) cs.sSpan = get<double>(c.at("sSpan"), "characteristics.sSpan");
    if (c.contains("step")) cs.step = get<double>(c.at("step"), "characteristics.step");
    if (c.contains("tStop"))
      cs.tStop = c.at("tStop").is_null() ? std::nullopt
                                         : std::optional<double>(get<double>(c.at("tStop"), "characteristics.tStop"));
    if (c.contains("tCap")) cs.tCap = get<double>(c.at("tCap"), "characteristics.tCap");
  }
  if (j.contains("output")) job.output = get<std::string>(j.at("output"), "output");
  if (j.contains("csv")) job.csv = get<std::string>(j.at("csv"), "csv");

  if (job.inlineModel)
    for (std::size_t k = 0; k < 3; ++k) checkExpr((*job.inlineModel)[k], std::string("model.") + "ABC"[k]);
  if (job.inlineOperator)
    for (std::size_t k = 0; k < 3; ++k) checkExpr((*job.inlineOperator)[k], "operator component");
  return job;
}

Json toJson(const JobSpec& job)
{
  Json j;
  j["command"] = std::string(toString(job.command));
  if (job.inlineModel) {
    const auto& m = *job.inlineModel;
    j["model"] = {{"A", m[0]}, {"B", m[1]}, {"C", m[2]}};
  } else {
    j["model"] = job.model;
  }
  if (job.inlineOperator) {
    const auto& o = *job.inlineOperator;
    j["operator"] = {{"xi", o[0]}, {"phi", o[1]}, {"eta", o[2]}};
  } else {
    j["operator"] = job.op;
  }
  j["family"] = job.family;
  if (!job.instances.empty()) j["instances"] = job.instances;
  Json s;
  s["seed"] = job.seed;
  if (job.samples) s["samples"] = *job.samples;
  if (job.tolerance) s["tolerance"] = *job.tolerance;
  if (job.domain) {
    Json d = Json::object();
    for (const auto& [k, v] : *job.domain) d[k] = {v.lo, v.hi};
    s["domain"] = d;
  }
  j["sampling"] = s;
  if (job.grid) {
    const Grid& g = *job.grid;
    j["grid"] = {{"xMin", g.xMin}, {"xMax", g.xMax}, {"nx", g.nx}, {"tEnd", g.tEnd}, {"nt", g.nt}};
  }
  j["levels"] = job.levels;
  Json sol;
  if (!job.solution.name.empty()) sol["name"] = job.solution.name;
  if (!job.solution.u.empty()) sol["u"] = job.solution.u;
  sol["constants"] = job.solution.constants;
  j["solution"] = sol;
  const auto& c = job.characteristics;
  j["characteristics"] = {{"start", c.start},
                          {"sSpan", c.sSpan},
                          {"step", c.step},
                          {"tStop", c.tStop ? Json(*c.tStop) : Json()},
                          {"tCap", c.tCap}};
  if (!job.output.empty()) j["output"] = job.output;
  if (!job.csv.empty()) j["csv"] = job.csv;
  return j;
}

}  // namespace symlie::cli
