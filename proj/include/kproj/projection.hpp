#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kproj/geometry.hpp"

namespace kproj {

// Closest point of the closed segment to p.
Point2 project_segment(Point2 p, const SegmentPiece& seg);

// Closest point of the closed arc to p. `tie` is set when p coincides with
// the center, where every arc point is equidistant (an endpoint is returned).
struct ArcProjection {
  Point2 point;
  bool tie = false;
};
ArcProjection project_arc(Point2 p, const ArcPiece& arc);

struct ProjectionResult {
  Point2 point;            // nearest point of the truncated body
  double distance = 0.0;   // 0 for interior queries
  int piece_index = -1;    // -1 for interior queries
  bool truncation_safe = false;  // result unaffected by the build depth
};

// Exact metric projection onto the truncated convex body. Queries are folded
// into the first quadrant by the model's mirror symmetries and the answer is
// reflected back. Each boundary piece owns the wedge of queries lying in its
// normal fan; ownership is resolved by angle/parameter membership (robust at
// angle scales far below 1e-9, where raw distance comparisons tie in
// binary64). Queries claimed by no fan sit over a corner and fall back to the
// nearest clamped per-piece candidate.
ProjectionResult project(const BoundaryModel& model, Point2 query);

bool is_interior(const BoundaryModel& model, Point2 query);

// Polar parameters of the probe circle of radius 2: the probe point at polar
// angle t/2 projects exactly onto the arc midpoint T_n, and the one at s/2
// onto the tangency point S_n.
double param_t(const AlphaSequence& seq, int n);  // alpha_n + alpha_{n+1}
double param_s(const AlphaSequence& seq, int n);  // via the normal at S_n

// Largest value of |proj(p)-proj(q)| - |p-q| over the given pairs.
// Nonexpansiveness means this never exceeds rounding noise.
double nonexpansiveness_check(
    const BoundaryModel& model,
    const std::vector<std::pair<Point2, Point2>>& pairs);

// Same, over `pairs` pseudo-random query pairs drawn from the annulus
// 1.5 <= |p| <= 3 (deterministic in `seed`).
double max_expansion_gap(const BoundaryModel& model, int pairs,
                         std::uint64_t seed);

}  // namespace kproj
