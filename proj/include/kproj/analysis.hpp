#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kproj/projection.hpp"

namespace kproj {

// Difference quotient of the projection along the probe circle |z| = 2,
// anchored at theta = 0 where the projection is exactly (1,0).
struct QuotientSample {
  double theta = 0.0;
  Point2 projected;
  Point2 quotient;  // (proj(2 e^{i theta/2}) - (1,0)) / theta
  bool truncation_safe = false;
};

// Engine route: runs the projection solver. Loses relative precision once
// the projected point is within ~1e-8 of (1,0); use the closed forms below
// for deep indices.
QuotientSample quotient(const BoundaryModel& model, double theta);

// Closed-form quotients at the special parameters t_n and s_n. The
// numerators are offsets from (1,0) evaluated without cancellation, so these
// stay exact down to the index cap.
Point2 quotient_at_t(const AlphaSequence& seq, int n);  // D(t_n)
Point2 quotient_at_s(const AlphaSequence& seq, int n);  // D(s_n)

// Velocity of the projected point across segment piece n-1 (from parameter
// s_n up to t_{n-1}); the direction (pi + t_{n-1})/2 is exact.
Point2 chord_speed(const AlphaSequence& seq, int n);

// Average velocity across arc piece n (parameters t_n to s_n).
Point2 arc_speed(const AlphaSequence& seq, int n);

// 2(alpha_n - alpha_{n+1}) / (alpha_{n-1} + 2 alpha_n - 3 alpha_{n+1}),
// the limit expression the arc-speed magnitude tracks.
double arc_speed_target(const AlphaSequence& seq, int n);

// || proj(2 e^{i theta/2}) - proj((2,0) + theta*(0,1)) || / theta  and its
// a-priori bound ||2 e^{i theta/2} - 2 - i theta|| / theta.
double tangent_vs_circle_gap(const BoundaryModel& model, double theta);
double tangent_gap_bound(double theta);

// Worst residual of the two telescoping decompositions
//   D(t_{n-1}) = w1*chord + w2*arc + w3*D(t_n)   (three-term)
//   D(s_n)     = u1*arc + u2*D(t_n)              (two-term)
// with the natural parameter weights. These are identities, not limits.
double weighted_mean_residual(const AlphaSequence& seq, int n);

// Tail acceptance for limit claims: values are clamped up to `floor`
// (numeric noise), the last one must be <= tol, and the final third must be
// nonincreasing up to 10% slack.
bool monotone_tail(const std::vector<double>& values, double tol,
                   double floor = 1e-14);

struct LemmaReport {
  std::string lemma;
  int n0 = 0;
  int n1 = 0;
  std::vector<double> observed;  // per-index values, in index order
  double target = 0.0;
  double tolerance = 0.0;
  double max_deviation = 0.0;
  bool pass = false;
  std::string notes;
};

// (f-g)/(f-h) -> 1 under the hypotheses g ~ h and |f/h - 1| >= c.
// Hypothesis violations are reported in `notes`, never silently passed.
LemmaReport asympt_equiv_check(const std::function<double(int)>& f,
                               const std::function<double(int)>& g,
                               const std::function<double(int)>& h, double c,
                               int n0, int n1, double tol);

struct OscillationReport {
  std::vector<int> indices;
  std::vector<Point2> at_t;    // D(t_n)
  std::vector<Point2> at_s;    // D(s_n)
  std::vector<double> gaps;    // |D(t_n) - D(s_n)|
  Point2 cluster_t;            // mean over the final third
  Point2 cluster_s;
  double min_tail_gap = 0.0;
  double threshold = 0.0;      // half the predicted sub-limit gap, floored
  std::string verdict;         // "nonconvergent" or "no gap detected"
};

// Predicted gap between the two sub-limits of D: 0 for family A,
// (1/2 - 2l/(3l+1)) * (1-l)(1+3l)/(1+4l-l^2) for family B, 1/2 for family C.
double predicted_quotient_gap(const AlphaSequence& seq);

OscillationReport oscillation_report(const AlphaSequence& seq, int n0, int n1);

struct LipschitzReport {
  std::vector<int> indices;        // arc index at each window edge
  std::vector<double> window_top;  // y_k = Im T_{n_k}
  std::vector<double> bound;       // curvature (1+x'^2)^(3/2)/r at the edge
  std::string classification;      // "C1,1", "not C1,1", or "inconclusive"
};

// Local second-derivative bound over a family of shrinking windows
// [-y_k, y_k]; classified C^{1,1} when the bounds stabilize and not C^{1,1}
// when they grow >= 10x at every shrink.
LipschitzReport lipschitz_diagnostics(const BoundaryModel& model,
                                      const std::vector<int>& edge_indices);
std::vector<int> default_lipschitz_windows(Case family);

// Boundary slope diagnostics at the ordinates y_n = Im T_n: secant
// s(y_n) = (x(y_n) - x(0))/y_n and derivative x'(y_n), both -> 0, with
// x'(y_n) checked against -tan((alpha_n + alpha_{n+1})/2).
LemmaReport slope_limit_check(const BoundaryModel& model, int n0, int n1);

// Named verifier registry used by the CLI and the acceptance suite. The ids:
// radius-limit, radius-gap, slope-limit, lipschitz, chord-speed, arc-speed,
// tangent-line, asympt-equiv, weighted-mean, nonexistence, nonexpansive.
std::vector<std::string> lemma_ids();
LemmaReport run_lemma(const std::string& id, const BoundaryModel& model,
                      int n0, int n1);

}  // namespace kproj
