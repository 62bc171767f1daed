#include "kproj/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace kproj {

namespace {

double clamp01(double t) { return std::clamp(t, 0.0, 1.0); }

bool piece_is_safe(const BoundaryModel& model, const Piece& p, Point2 query) {
  // Queries on the real axis project to the corner (1,0) at every depth, so
  // they are depth-independent even though (1,0) sits on the closure chord.
  if (query.y == 0.0) return true;
  return p.kind != PieceKind::closure && p.index() <= model.depth - 2;
}

ProjectionResult finish(const BoundaryModel& model, const Piece& piece,
                        Point2 query, Point2 pt, double distance, double sx,
                        double sy) {
  ProjectionResult r;
  r.point = {sx * pt.x, sy * pt.y};
  r.distance = std::max(distance, 0.0);
  r.piece_index = piece.index();
  r.truncation_safe = piece_is_safe(model, piece, query);
  return r;
}

}  // namespace

Point2 project_segment(Point2 p, const SegmentPiece& seg) {
  const Point2 d = seg.to - seg.from;
  const double tau = clamp01(dot(p - seg.from, d) / dot(d, d));
  return seg.from + tau * d;
}

ArcProjection project_arc(Point2 p, const ArcPiece& arc) {
  const Point2 rel = p - arc.center;
  if (rel.x == 0.0 && rel.y == 0.0)
    return {arc.center + arc.radius * unit_at(arc.end_angle), true};
  const double phi =
      std::clamp(std::atan2(rel.y, rel.x), arc.end_angle, arc.start_angle);
  return {arc.center + arc.radius * unit_at(phi), false};
}

bool is_interior(const BoundaryModel& model, Point2 query) {
  const Point2 p{std::fabs(query.x), std::fabs(query.y)};
  if (p.y > model.top_y()) return false;
  return p.x <= boundary_x(model, p.y);
}

ProjectionResult project(const BoundaryModel& model, Point2 query) {
  const double sx = query.x < 0.0 ? -1.0 : 1.0;
  const double sy = query.y < 0.0 ? -1.0 : 1.0;
  const Point2 p{std::fabs(query.x), std::fabs(query.y)};

  if (is_interior(model, query)) return {query, 0.0, -1, true};

  // Ownership pass: walk the chain and test membership in each piece's
  // normal fan. Arc fans are angle windows seen from the arc center; segment
  // fans are perpendicular strips over the segment.
  for (const Piece& piece : model.pieces) {
    if (piece.kind == PieceKind::arc) {
      const ArcPiece& a = piece.arc;
      const double phi = std::atan2(p.y - a.center.y, p.x - a.center.x);
      const double tol = 1e-9 * (a.start_angle - a.end_angle);
      if (phi < a.end_angle - tol || phi > a.start_angle + tol) continue;
      const double rad = dist(p, a.center);
      if (rad < a.radius * (1.0 - 1e-9)) continue;  // not this fan
      const double phic = std::clamp(phi, a.end_angle, a.start_angle);
      const Point2 pt = a.center + a.radius * unit_at(phic);
      return finish(model, piece, p, pt, rad - a.radius, sx, sy);
    }
    const SegmentPiece& s = piece.seg;
    const Point2 d = s.to - s.from;
    const Point2 rel = p - s.from;
    const double len2 = dot(d, d);
    const double tau = dot(rel, d) / len2;
    if (tau < -1e-9 || tau > 1.0 + 1e-9) continue;
    // outward normal of the chain (interior lies to the left of travel)
    const Point2 out{-d.y, d.x};
    if (dot(rel, out) < -1e-12 * std::sqrt(len2)) continue;
    const Point2 pt = s.from + clamp01(tau) * d;
    return finish(model, piece, p, pt, dist(p, pt), sx, sy);
  }

  // Corner fallback: the query sits over a vertex of the chain (the
  // truncation corner at (1,0), or the top vertex when min_index > 1).
  // Take the nearest clamped candidate; ties go to the later piece, which
  // makes axis queries beyond (1,0) land exactly on the corner.
  const Piece* best_piece = nullptr;
  Point2 best_pt;
  double best_dist = 0.0;
  for (const Piece& piece : model.pieces) {
    const Point2 pt = piece.kind == PieceKind::arc
                          ? project_arc(p, piece.arc).point
                          : project_segment(p, piece.seg);
    const double dd = dist(p, pt);
    if (best_piece == nullptr || dd <= best_dist) {
      best_piece = &piece;
      best_pt = pt;
      best_dist = dd;
    }
  }
  return finish(model, *best_piece, p, best_pt, best_dist, sx, sy);
}

double param_t(const AlphaSequence& seq, int n) {
  return seq.alpha(n) + seq.alpha(n + 1);
}

double param_s(const AlphaSequence& seq, int n) {
  // Cast the outward normal ray from S_n to the probe circle |z| = 2.
  const Point2 s = tangency_S(seq, n);
  const Point2 u = unit_at((seq.alpha(n - 1) + seq.alpha(n)) / 2.0);
  const double su = dot(s, u);
  const double mu = -su + std::sqrt(su * su + 4.0 - dot(s, s));
  const Point2 hit = s + mu * u;
  return 2.0 * std::atan2(hit.y, hit.x);
}

double nonexpansiveness_check(
    const BoundaryModel& model,
    const std::vector<std::pair<Point2, Point2>>& pairs) {
  double worst = 0.0;
  for (const auto& [p, q] : pairs) {
    const double gap =
        dist(project(model, p).point, project(model, q).point) - dist(p, q);
    worst = std::max(worst, gap);
  }
  return worst;
}

double max_expansion_gap(const BoundaryModel& model, int pairs,
                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(1.5, 3.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<std::pair<Point2, Point2>> batch;
  batch.reserve(static_cast<size_t>(pairs));
  for (int i = 0; i < pairs; ++i) {
    batch.emplace_back(radius(rng) * unit_at(angle(rng)),
                       radius(rng) * unit_at(angle(rng)));
  }
  return nonexpansiveness_check(model, batch);
}

}  // namespace kproj
