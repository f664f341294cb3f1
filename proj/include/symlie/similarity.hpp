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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symlie/identity.hpp"
#include "symlie/jet.hpp"

namespace symlie {

/// z = x e^{-t}, phi = u e^{x^2/2}. Univariate profiles Phi(z) are Exprs
/// in the coordinate x standing for z; print them with profileToString.
struct SimilarityMap {
  Expr zOf;       // in (x, t)
  Expr phiOf;     // in (x, u)
  Expr zTildeOf;  // t - ln x, equal to -ln z

  static SimilarityMap standard();

  /// u(x, t) = Phi(x e^{-t}) e^{-x^2/2}.
  Expr reconstruct(const Expr& profile) const;
};

std::string profileToString(const Expr& profile);

/// z^2 f phi'' + z g phi' + h phi = 0 with constant f, g, h.
struct ReducedODE {
  double f = 1.0;
  double g = 0.0;
  double h = 0.0;

  /// Display form; common powers of z are divided out, e.g. "z*phi'' - phi' = 0".
  std::string toString() const;
};

/// Throws PreconditionError when f == 0.
ReducedODE reduce(double f, double g, double h);

/// Roots r1 < r2 of f r^2 + (g - f) r + h. Throws UnsupportedError for
/// repeated or complex roots.
std::pair<double, double> indicialRoots(const ReducedODE& ode);

/// k1 z^{r1} + k2 z^{r2} with r1 < r2, as a profile in z. Roots must be
/// rational (denominator <= 1000); otherwise UnsupportedError.
Expr solveReducedAnalytic(const ReducedODE& ode, const Expr& k1, const Expr& k2);

struct OdeSample {
  double z;
  double phi;
  double dphi;
};

/// RK4 for phi'' = -(g z phi' + h phi) / (f z^2) from z0 to z1 (either
/// direction); the last step is shortened to land on z1. Requires z0, z1 > 0.
std::vector<OdeSample> solveReducedNumeric(const ReducedODE& ode, double z0, double phi0, double dphi0, double z1,
                                           double step);

struct CharPoint {
  double s, t, x, u;
};

struct CharOptions {
  double sSpan = 1.0;
  double step = 1e-3;
  /// Stop once t reaches this value (the last step is shortened).
  std::optional<double> tStop;
  /// Truncate when t exceeds this value (growth of e^{2t}).
  double tCap = 20.0;
};

struct CharTrajectory {
  std::vector<CharPoint> samples;
  double stepSize = 0.0;
  std::string method = "rk4";
  bool truncated = false;
  /// Largest relative change of z and phi against the start point.
  double maxDriftZ = 0.0;
  double maxDriftPhi = 0.0;

  /// Columns s,t,x,u,z,phi.
  void writeCsv(std::ostream& os) const;
};

/// Integrates dt/ds = phi, dx/ds = xi, du/ds = eta from (t0, x0, u0).
/// Requires x0 > 0 and step > 0. The zero operator yields the start point only.
CharTrajectory integrateCharacteristics(const SymmetryOperator& op, double t0, double x0, double u0,
                                        const CharOptions& opt);

struct PushForwardReport {
  Expr profile;  // in z
  /// Largest |phi(x, t) - Phi(x e^{-t})| over the samples.
  double spread = 0.0;
  double tolerance = 0.0;
  bool selfSimilar = false;
  std::map<std::string, double> worstPoint;
};

/// x in [0.2, 3], t in [0, 1]; 200 samples; tolerance 1e-10.
SamplingConfig defaultPushForwardConfig();

/// Profile Phi with u = Phi(z) e^{-x^2/2}, read off at t = 0, plus the spread
/// of phi over points sharing the same z. `base` supplies named constants.
PushForwardReport pushForward(const Expr& u, const SimilarityMap& map,
                              const SamplingConfig& cfg = defaultPushForwardConfig(), const Assignment& base = {});

}  // namespace symlie
