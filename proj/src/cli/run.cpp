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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "symlie/cli.hpp"
#include "symlie/determining.hpp"
#include "symlie/models.hpp"
#include "symlie/numerics.hpp"
#include "symlie/parse.hpp"
#include "symlie/similarity.hpp"

namespace symlie::cli {

namespace {

class IoFailure : public Error {
 public:
  using Error::Error;
};

std::string sci(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

Json pointJson(const std::map<std::string, double>& p)
{
  Json j = Json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

Json gridJson(const Grid& g)
{
  return {{"xMin", g.xMin}, {"xMax", g.xMax}, {"nx", g.nx}, {"tEnd", g.tEnd}, {"nt", g.nt}};
}

Json invarianceJson(const InvarianceReport& r)
{
  return {{"pass", r.pass},
          {"maxResidual", r.maxResidual},
          {"tolerance", r.tolerance},
          {"seed", r.seed},
          {"nSamples", r.nSamples},
          {"worstPoint", pointJson(r.worstPoint)},
          {"maxScaledResidual", r.maxScaledResidual},
          {"domainNote", r.domainNote}};
}

Json residualJson(const ResidualReport& r)
{
  return {{"pass", r.pass},
          {"maxResidual", r.maxResidual},
          {"tolerance", r.tolerance},
          {"seed", r.seed},
          {"nSamples", r.nSamples},
          {"worstPoint", pointJson(r.worstPoint)}};
}

void applySampling(const JobSpec& job, SamplingConfig& cfg)
{
  cfg.seed = job.seed;
  if (job.samples) cfg.samples = *job.samples;
  if (job.tolerance) cfg.tolerance = *job.tolerance;
  if (job.domain)
    for (const auto& [k, v] : *job.domain) cfg.domain[k] = v;
}

EvolutionPDE resolvePde(const JobSpec& job)
{
  const std::vector<Expr> xtu = {var(JetCoord::x), var(JetCoord::t), var(JetCoord::u)};
  if (job.model == "abstract") {
    EvolutionPDE p;
    p.name = "abstract";
    p.A = func("A", xtu);
    p.B = func("B", xtu);
    p.C = func("C", xtu);
    return p;
  }
  if (job.inlineModel) {
    EvolutionPDE p;
    p.name = "inline";
    p.A = parse((*job.inlineModel)[0]);
    p.B = parse((*job.inlineModel)[1]);
    p.C = parse((*job.inlineModel)[2]);
    p.domain = {{"x", {0.5, 2.0}}, {"t", {0.0, 1.0}}, {"u", {0.1, 2.0}}};
    if (job.domain)
      for (const auto& [k, v] : *job.domain) p.domain[k] = v;
    return p;
  }
  return modelByName(job.model);
}

SymmetryOperator resolveOperator(const JobSpec& job)
{
  const std::vector<Expr> xtu = {var(JetCoord::x), var(JetCoord::t), var(JetCoord::u)};
  if (job.op == "abstract") return {func("xi", xtu), func("phi", xtu), func("eta", xtu)};
  if (job.inlineOperator) {
    const auto& o = *job.inlineOperator;
    return {parse(o[0]), parse(o[1]), parse(o[2])};
  }
  return exponentialOperator();
}

AnalyticSolution resolveSolution(const JobSpec& job)
{
  const SolutionSpec& s = job.solution;
  const auto c = [&](const char* k) { return s.constants.count(k) ? s.constants.at(k) : 1.0; };
  if (s.name == "fokker-planck") return analyticFP(c("c1"), c("c2"));
  if (s.name == "backward-kolmogorov") return analyticBK(c("c3"), c("c4"));
  return {"inline", parse(s.u), s.constants, job.model, {}};
}

template <typename Writer>
void writeFile(const std::string& path, Writer&& w)
{
  std::ofstream os(path);
  if (!os) throw IoFailure("cannot open " + path + " for writing");
  w(os);
  if (!os) throw IoFailure("failed writing " + path);
}

struct Outcome {
  bool pass = true;
  Json result;
  std::string summary;
};

Outcome runInvariance(const JobSpec& job)
{
  SamplingConfig cfg = defaultInvarianceConfig();
  applySampling(job, cfg);
  const InvarianceReport r = checkInvariance(resolveOperator(job), resolvePde(job), cfg);
  return {r.pass, invarianceJson(r),
          std::string("invariance: ") + verdict(r.pass) + ", max residual " + sci(r.maxResidual) + " over " +
              std::to_string(r.nSamples) + " samples (seed " + std::to_string(r.seed) + ")"};
}

Outcome runDetermining(const JobSpec& job)
{
  const EvolutionPDE pde = resolvePde(job);
  const DeterminingSystem sys = generateDeterminingSystem(resolveOperator(job), pde);
  SamplingConfig cfg;
  cfg.domain = {{"x", {0.5, 2.0}}, {"t", {0.0, 1.0}}, {"u", {0.1, 2.0}}};
  applySampling(job, cfg);

  Json eqs = Json::array();
  for (const auto& e : sys.equations) {
    Json v;
    try {
      v = equalNumeric(e.lhs, 0, cfg, pde.bindings()).pass;
    } catch (const Error&) {
      v = nullptr;  // not evaluable (abstract symbols)
    }
    eqs.push_back({{"monomial", e.source.toString()}, {"lhs", toString(e.lhs)}, {"vanishes", v}});
  }
  return {true, {{"count", sys.equations.size()}, {"equations", eqs}},
          "determining: " + std::to_string(sys.equations.size()) + " equations"};
}

Outcome runFamilyCheck(const JobSpec& job)
{
  std::vector<CoefficientFamily> fams;
  if (job.instances.empty())
    fams = familyRegistry();
  else
    for (const auto& id : job.instances) fams.push_back(familyById(id));
  SamplingConfig cfg = defaultFamilyConfig();
  applySampling(job, cfg);
  const FamilyReport r = checkFamilySolvesSystem(fams, cfg);

  Json inst = Json::array();
  std::string summary = std::string("family-check: ") + verdict(r.pass);
  for (const auto& i : r.instances) {
    inst.push_back({{"id", i.id},
                    {"pass", i.pass()},
                    {"maxResidual", i.maxResidual},
                    {"systemPass", i.systemPass},
                    {"invariance", invarianceJson(i.invariance)}});
    summary += "\n  " + i.id + ": " + verdict(i.pass()) + ", system residuals " + sci(i.maxResidual[0]) + ", " +
               sci(i.maxResidual[1]) + ", " + sci(i.maxResidual[2]);
  }
  return {r.pass,
          {{"pass", r.pass},
           {"tolerance", r.tolerance},
           {"seed", r.seed},
           {"nSamples", r.nSamples},
           {"instances", inst}},
          summary};
}

Outcome runReduce(const JobSpec& job)
{
  const ReducedODE ode = reduce(job.family[0], job.family[1], job.family[2]);
  Json res{{"f", ode.f}, {"g", ode.g}, {"h", ode.h}, {"ode", ode.toString()}};
  std::string summary = "reduced equation: " + ode.toString();
  try {
    const auto [r1, r2] = indicialRoots(ode);
    res["roots"] = {r1, r2};
    const std::string prof = profileToString(solveReducedAnalytic(ode, named("k1"), named("k2")));
    res["solution"] = prof;
    summary += "\nprofile: " + prof;
  } catch (const UnsupportedError& e) {
    res["roots"] = nullptr;
    res["solution"] = nullptr;
    res["note"] = e.what();
    summary += std::string("\nprofile: ") + e.what();
  }
  return {true, res, summary};
}

Outcome runCharacteristics(const JobSpec& job)
{
  const auto& c = job.characteristics;
  CharOptions opt;
  opt.sSpan = c.sSpan;
  opt.step = c.step;
  opt.tStop = c.tStop;
  opt.tCap = c.tCap;
  const CharTrajectory tr = integrateCharacteristics(resolveOperator(job), c.start[0], c.start[1], c.start[2], opt);
  const double bound = job.tolerance.value_or(1e-6);
  const bool pass = !tr.truncated && tr.maxDriftZ <= bound && tr.maxDriftPhi <= bound;
  if (!job.csv.empty()) writeFile(job.csv, [&](std::ostream& os) { tr.writeCsv(os); });
  const CharPoint& last = tr.samples.back();
  return {pass,
          {{"pass", pass},
           {"method", tr.method},
           {"stepSize", tr.stepSize},
           {"nPoints", tr.samples.size()},
           {"truncated", tr.truncated},
           {"final", {{"s", last.s}, {"t", last.t}, {"x", last.x}, {"u", last.u}}},
           {"maxDriftZ", tr.maxDriftZ},
           {"maxDriftPhi", tr.maxDriftPhi},
           {"driftBound", bound}},
          std::string("characteristics: ") + verdict(pass) + ", " + std::to_string(tr.samples.size()) +
              " points, drift z " + sci(tr.maxDriftZ) + ", phi " + sci(tr.maxDriftPhi)};
}

Outcome runVerifySolution(const JobSpec& job)
{
  SamplingConfig cfg = defaultSolutionConfig();
  applySampling(job, cfg);
  const AnalyticSolution sol = resolveSolution(job);
  const ResidualReport r = verifySolution(resolvePde(job), sol, cfg);
  Json res = residualJson(r);
  res["u"] = toString(sol.u);
  return {r.pass, res,
          std::string("verify-solution: ") + verdict(r.pass) + ", max residual " + sci(r.maxResidual) + " over " +
              std::to_string(r.nSamples) + " samples"};
}

Outcome runFdSolve(const JobSpec& job)
{
  const Grid grid = job.grid.value_or(Grid{});
  const AnalyticSolution sol = resolveSolution(job);
  const FDSolution fd = solveFD(resolvePde(job), boundaryFrom(sol, grid.xMin, grid.xMax), grid);
  const ErrorReport e = compare(fd, sol);
  const double tol = job.tolerance.value_or(1e-4);
  const bool pass = e.maxNorm <= tol;
  if (!job.csv.empty()) writeFile(job.csv, [&](std::ostream& os) { fd.writeCsv(os); });
  return {pass,
          {{"pass", pass},
           {"maxNorm", e.maxNorm},
           {"l2", e.l2},
           {"grid", gridJson(grid)},
           {"tolerance", tol},
           {"scheme", fd.scheme},
           {"minDiagonalMargin", fd.diagnostics.minDiagonalMargin},
           {"perSlice", e.perSlice}},
          std::string("fd-solve: ") + verdict(pass) + ", max-norm error " + sci(e.maxNorm) + ", l2 " + sci(e.l2)};
}

Outcome runConvergence(const JobSpec& job)
{
  const Grid base = job.grid.value_or(Grid{0.2, 3.0, 49, 1.0, 50});
  const ConvergenceReport r = convergenceStudy(resolvePde(job), resolveSolution(job), base, job.levels);
  bool pass = true;
  for (double q : r.ratios) pass = pass && q >= 3.2 && q <= 4.8;

  Json levels = Json::array();
  std::string summary = "convergence:";
  for (const auto& l : r.levels) {
    levels.push_back({{"grid", gridJson(l.grid)}, {"h", l.h}, {"dt", l.dt}, {"maxNorm", l.maxNorm}, {"l2", l.l2}});
    summary += "\n  nx=" + std::to_string(l.grid.nx) + " nt=" + std::to_string(l.grid.nt) + " error " + sci(l.maxNorm);
  }
  for (std::size_t k = 0; k < r.ratios.size(); ++k) summary += "\n  ratio " + sci(r.ratios[k]);
  summary += std::string("\n  ") + verdict(pass);
  const ConvergenceLevel& fine = r.levels.back();
  return {pass,
          {{"pass", pass},
           {"maxNorm", fine.maxNorm},
           {"l2", fine.l2},
           {"grid", gridJson(fine.grid)},
           {"orders", r.orders},
           {"ratios", r.ratios},
           {"levels", levels}},
          summary};
}

Outcome runPipeline(const JobSpec& job)
{
  std::ostringstream os;
  const int code = printPipeline(job.model, os);
  if (code == kInvalid) throw InvalidJob(os.str());
  std::vector<std::string> lines;
  std::istringstream is(os.str());
  for (std::string l; std::getline(is, l);) lines.push_back(l);
  return {code == kPass, {{"pass", code == kPass}, {"lines", lines}}, os.str()};
}

}  // namespace

RunResult run(const JobSpec& job)
{
  RunResult rr;
  rr.report["command"] = std::string(toString(job.command));
  rr.report["job"] = toJson(job);
  try {
    Outcome o;
    switch (job.command) {
      case Command::invariance: o = runInvariance(job); break;
      case Command::determining: o = runDetermining(job); break;
      case Command::familyCheck: o = runFamilyCheck(job); break;
      case Command::reduce: o = runReduce(job); break;
      case Command::characteristics: o = runCharacteristics(job); break;
      case Command::verifySolution: o = runVerifySolution(job); break;
      case Command::fdSolve: o = runFdSolve(job); break;
      case Command::convergence: o = runConvergence(job); break;
      case Command::pipeline: o = runPipeline(job); break;
    }
    rr.exitCode = o.pass ? kPass : kFail;
    rr.report["pass"] = o.pass;
    rr.report["result"] = std::move(o.result);
    rr.summary = std::move(o.summary);
  } catch (const IoFailure& e) {
    rr.exitCode = kIoError;
    rr.report["pass"] = false;
    rr.report["error"] = e.what();
    rr.summary = std::string("error: ") + e.what();
  } catch (const Error& e) {
    const bool invalid = dynamic_cast<const InvalidJob*>(&e) || dynamic_cast<const ParseError*>(&e) ||
                         dynamic_cast<const PreconditionError*>(&e) || dynamic_cast<const UnsupportedError*>(&e) ||
                         dynamic_cast<const JetOrderError*>(&e);
    rr.exitCode = invalid ? kInvalid : kFail;
    rr.report["pass"] = false;
    rr.report["error"] = e.what();
    rr.summary = std::string("error: ") + e.what();
  }
  return rr;
}

}  // namespace symlie::cli
