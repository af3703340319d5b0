#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lvl/constants.hpp"
#include "lvl/level_set.hpp"

namespace lvl {

struct Witness {
  double epsilon = 0.0;
  std::vector<Point2> points;
  double value = 0.0;
  std::string what;
};

/// Measurements taken at one scheduled epsilon.
struct EpsOutcome {
  double epsilon = 0.0;
  LevelClass classification = LevelClass::empty;
  int components = 0;
  std::vector<Point2> branch_points;
  std::vector<std::pair<std::string, double>> measures;
  bool ok = true;
  std::string note;
};

struct VerificationReport {
  std::string suite;
  std::string curve_id;
  std::vector<double> eps_schedule;
  std::vector<EpsOutcome> outcomes;
  std::vector<std::pair<std::string, double>> summary;
  bool pass = true;
  std::optional<Witness> witness;  // set whenever pass is false
};

/// diam * 2^-k for k = kmin..kmax, each as +eps then -eps.
std::vector<double> default_schedule(const JordanCurve& curve, int kmin = 3, int kmax = 10);

struct VerifyOptions {
  Sampler sampler;
  std::optional<double> bound;  // overrides the default uniformity bound
  std::optional<double> r0;     // scale for the chordal estimate (default: diameter)
  double trend_factor = 1.2;    // lqc: this many-fold growth ...
  int trend_run = 3;            // ... over this many consecutive steps fails the suite
  Exec exec = Exec::parallel;
};

VerificationReport verify_ljc(const JordanCurve& curve, const std::vector<double>& schedule,
                              const VerifyOptions& opts = {});
VerificationReport verify_lqc(const JordanCurve& curve, const std::vector<double>& schedule,
                              const VerifyOptions& opts = {});
VerificationReport verify_lca(const JordanCurve& curve, const std::vector<double>& schedule,
                              const VerifyOptions& opts = {});
VerificationReport verify_bounds(const JordanCurve& curve, double r0, const VerifyOptions& opts = {});
VerificationReport verify_local_lemmas(const JordanCurve& curve, const std::vector<double>& schedule,
                                       const VerifyOptions& opts = {});

struct BranchCheck {
  Point2 point;
  int nearest = 0;
  bool continuum = false;
  double collinearity_defect = 0.0;  // |pi - angle(q1 - p, q2 - p)| when nearest == 2
  bool ok = false;
};

/// A branch point is certified by exactly two antipodal nearest curve points.
BranchCheck check_branch_point(const JordanCurve& curve, Point2 p, double max_defect = 1e-6);

// Individual local checks, exposed for tests.

/// Longest run of level arcs of radius |eps| centred on the curve; within pi |eps| when it holds.
double longest_centred_arc(const JordanCurve& curve, const LevelSetResult& level);
/// Largest angular span of nearest-point sets sampled along the level chains.
double max_nearest_span(const JordanCurve& curve, const LevelSetResult& level, int samples_per_edge = 3);
/// Deterministic probe subarcs: `count` arcs of length fraction `frac` spread along the curve.
std::vector<Subarc> probe_subarcs(const JordanCurve& curve, int count, double frac);

}  // namespace lvl
