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

#include "symlie/similarity.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "symlie/errors.hpp"

namespace symlie {

namespace {

const Expr X = var(JetCoord::x);
const Expr T = var(JetCoord::t);
const Expr U = var(JetCoord::u);

std::string formatCoefficient(double c)
{
  Rational r;
  if (Rational::fromDouble(c, 1000, 1e-12, r)) return r.toString();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", c);
  return buf;
}

}  // namespace

SimilarityMap SimilarityMap::standard()
{
  return {X * exp(-T), U * exp(pow(X, 2) / 2), T - ln(X)};
}

Expr SimilarityMap::reconstruct(const Expr& profile) const
{
  return substitute(profile, JetCoord::x, zOf) * exp(-pow(X, 2) / 2);
}

std::string profileToString(const Expr& profile) { return toString(profile, {{{JetCoord::x, "z"}}}); }

std::string ReducedODE::toString() const
{
  const int common = h != 0.0 ? 0 : (g != 0.0 ? 1 : 2);
  const std::array<std::pair<double, int>, 3> terms = {{{f, 2}, {g, 1}, {h, 0}}};
  const char* derivs[] = {"phi''", "phi'", "phi"};

  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto [c, zp] = terms[k];
    if (c == 0.0) continue;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const double mag = std::abs(c);
    if (mag != 1.0) out += formatCoefficient(mag) + "*";
    const int p = zp - common;
    if (p == 1) out += "z*";
    if (p > 1) out += "z^" + std::to_string(p) + "*";
    out += derivs[k];
  }
  return out + " = 0";
}

ReducedODE reduce(double f, double g, double h)
{
  if (f == 0.0) throw PreconditionError("reduced equation needs f != 0");
  return {f, g, h};
}

std::pair<double, double> indicialRoots(const ReducedODE& ode)
{
  const double b = ode.g - ode.f;
  const double disc = b * b - 4.0 * ode.f * ode.h;
  const double scale = b * b + std::abs(4.0 * ode.f * ode.h);
  if (std::abs(disc) <= 1e-12 * std::max(1.0, scale))
    throw UnsupportedError("repeated indicial root: " + ode.toString());
  if (disc < 0) throw UnsupportedError("complex indicial roots: " + ode.toString());
  const double sq = std::sqrt(disc);
  // Numerically stable pair.
  const double q = -0.5 * (b + std::copysign(sq, b == 0.0 ? 1.0 : b));
  double r1 = q / ode.f;
  double r2 = q != 0.0 ? ode.h / q : -b / ode.f - r1;
  if (r1 > r2) std::swap(r1, r2);
  return {r1, r2};
}

Expr solveReducedAnalytic(const ReducedODE& ode, const Expr& k1, const Expr& k2)
{
  const auto [r1, r2] = indicialRoots(ode);
  Rational q1, q2;
  if (!Rational::fromDouble(r1, 1000, 1e-10, q1) || !Rational::fromDouble(r2, 1000, 1e-10, q2))
    throw UnsupportedError("irrational indicial roots: " + ode.toString());
  return k1 * pow(X, q1) + k2 * pow(X, q2);
}

std::vector<OdeSample> solveReducedNumeric(const ReducedODE& ode, double z0, double phi0, double dphi0, double z1,
                                           double step)
{
  if (ode.f == 0.0) throw PreconditionError("reduced equation needs f != 0");
  if (!(z0 > 0.0) || !(z1 > 0.0)) throw PreconditionError("z must stay positive");
  if (!(step > 0.0)) throw PreconditionError("step must be positive");

  const auto rhs = [&](double z, double p, double dp) { return -(ode.g * z * dp + ode.h * p) / (ode.f * z * z); };
  const double dir = z1 >= z0 ? 1.0 : -1.0;

  std::vector<OdeSample> out{{z0, phi0, dphi0}};
  double z = z0, p = phi0, dp = dphi0;
  while (dir * (z1 - z) > 1e-14 * std::max(1.0, std::abs(z1))) {
    const double hs = dir * std::min(step, std::abs(z1 - z));
    const double k1p = dp, k1d = rhs(z, p, dp);
    const double k2p = dp + 0.5 * hs * k1d, k2d = rhs(z + 0.5 * hs, p + 0.5 * hs * k1p, k2p);
    const double k3p = dp + 0.5 * hs * k2d, k3d = rhs(z + 0.5 * hs, p + 0.5 * hs * k2p, k3p);
    const double k4p = dp + hs * k3d, k4d = rhs(z + hs, p + hs * k3p, k4p);
    p += hs / 6.0 * (k1p + 2 * k2p + 2 * k3p + k4p);
    dp += hs / 6.0 * (k1d + 2 * k2d + 2 * k3d + k4d);
    z = std::abs(z1 - (z + hs)) < 1e-14 * std::max(1.0, std::abs(z1)) ? z1 : z + hs;
    if (!(z > 0.0)) throw NumericalError("step crosses z = 0");
    out.push_back({z, p, dp});
  }
  return out;
}

void CharTrajectory::writeCsv(std::ostream& os) const
{
  os << "s,t,x,u,z,phi\n";
  char buf[256];
  for (const CharPoint& c : samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", c.s, c.t, c.x, c.u,
                  c.x * std::exp(-c.t), c.u * std::exp(c.x * c.x / 2));
    os << buf;
  }
}

CharTrajectory integrateCharacteristics(const SymmetryOperator& op, double t0, double x0, double u0,
                                        const CharOptions& opt)
{
  if (!(x0 > 0.0)) throw PreconditionError("characteristics start at x0 > 0");
  if (!(opt.step > 0.0)) throw PreconditionError("step must be positive");

  CharTrajectory tr;
  tr.stepSize = opt.step;
  tr.samples.push_back({0.0, t0, x0, u0});
  if (op.xi().isZero() && op.phi().isZero() && op.eta().isZero()) return tr;

  using State = std::array<double, 3>;  // t, x, u
  const auto field = [&](const State& y) {
    Assignment a;
    a.set(JetCoord::t, y[0]).set(JetCoord::x, y[1]).set(JetCoord::u, y[2]);
    return State{eval(op.phi(), a), eval(op.xi(), a), eval(op.eta(), a)};
  };
  const auto axpy = [](const State& y, double h, const State& k) {
    return State{y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2]};
  };
  const auto z = [](const State& y) { return y[1] * std::exp(-y[0]); };
  const auto phi = [](const State& y) { return y[2] * std::exp(y[1] * y[1] / 2); };

  State y{t0, x0, u0};
  const double z0 = z(y), phi0 = phi(y);
  double s = 0.0;
  while (s < opt.sSpan - 1e-15) {
    double h = std::min(opt.step, opt.sSpan - s);
    const State k1 = field(y);
    if (opt.tStop && k1[0] > 0.0 && y[0] + h * k1[0] > *opt.tStop) {
      // Shorten the final step so t lands near tStop (first-order estimate).
      h = std::max(0.0, (*opt.tStop - y[0]) / k1[0]);
      if (h <= 0.0) break;
    }
    const State k2 = field(axpy(y, h / 2, k1));
    const State k3 = field(axpy(y, h / 2, k2));
    const State k4 = field(axpy(y, h, k3));
    for (std::size_t i = 0; i < 3; ++i) y[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    s += h;
    if (!std::isfinite(y[0]) || !std::isfinite(y[1]) || !std::isfinite(y[2]) || y[0] > opt.tCap) {
      tr.truncated = true;
      break;
    }
    tr.samples.push_back({s, y[0], y[1], y[2]});
    tr.maxDriftZ = std::max(tr.maxDriftZ, std::abs(z(y) - z0) / std::abs(z0));
    if (phi0 != 0.0) tr.maxDriftPhi = std::max(tr.maxDriftPhi, std::abs(phi(y) - phi0) / std::abs(phi0));
    if (opt.tStop && y[0] >= *opt.tStop - 1e-12) break;
  }
  return tr;
}

SamplingConfig defaultPushForwardConfig()
{
  SamplingConfig cfg;
  cfg.domain = {{"x", {0.2, 3.0}}, {"t", {0.0, 1.0}}};
  cfg.samples = 200;
  cfg.tolerance = 1e-10;
  return cfg;
}

PushForwardReport pushForward(const Expr& u, const SimilarityMap& map, const SamplingConfig& cfg,
                              const Assignment& base)
{
  const CoordMask allowed = maskOf(JetCoord::x) | maskOf(JetCoord::t);
  if ((u.coords() & ~allowed).any()) throw PreconditionError("pushForward expects u(x, t): " + toString(u));

  const Expr phi = combineExponentials(substitute(map.phiOf, JetCoord::u, u));
  PushForwardReport rep;
  rep.tolerance = cfg.tolerance;
  // At t = 0 the similarity variable coincides with x.
  rep.profile = combineExponentials(expand(substitute(phi, JetCoord::t, Expr(0))));

  const Expr atZ = substitute(rep.profile, JetCoord::x, map.zOf);
  const SampleSet s = drawSamples(cfg.domain, cfg.samples, cfg.seed);
  const auto v = kernels::evaluateSamples(s.size(), [&](std::size_t i) {
    const Assignment a = s.assignment(i, base);
    return std::abs(eval(phi, a) - eval(atZ, a));
  });
  if (!v.empty()) {
    const std::size_t w = kernels::argMax(v);
    rep.spread = v[w];
    rep.worstPoint = s.point(w);
  }
  rep.selfSimilar = rep.spread <= cfg.tolerance;
  return rep;
}

}  // namespace symlie
