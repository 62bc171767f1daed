#include "kproj/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kproj {

namespace {
constexpr double kPi = std::numbers::pi;

void require_index(const AlphaSequence& seq, int n, int lowest) {
  if (n < lowest)
    throw std::invalid_argument("index below the sequence's valid range");
  (void)seq;
}

// 1 - cos(a) at full relative precision
double versine(double a) {
  const double s = std::sin(a / 2.0);
  return 2.0 * s * s;
}
}  // namespace

Point2 vertex_A(const AlphaSequence& seq, int n) {
  require_index(seq, n, seq.min_index());
  return unit_at(seq.alpha(n));
}

Point2 midpoint_T(const AlphaSequence& seq, int n) {
  require_index(seq, n, seq.min_index());
  const double half = seq.alpha_diff(n, n + 1) / 2.0;
  const double mid = (seq.alpha(n) + seq.alpha(n + 1)) / 2.0;
  return std::cos(half) * unit_at(mid);
}

Point2 tangency_S(const AlphaSequence& seq, int n) {
  require_index(seq, n, seq.min_index() + 1);
  const double reach = std::sin(seq.alpha_diff(n, n + 1) / 2.0);
  const double chord = 2.0 * std::sin(seq.alpha_diff(n - 1, n) / 2.0);
  if (reach > chord)
    throw std::domain_error("tangency point would leave its segment");
  // direction from A_n toward A_{n-1} along the chord
  const double mid = (seq.alpha(n - 1) + seq.alpha(n)) / 2.0;
  const Point2 toward{-std::sin(mid), std::cos(mid)};
  return vertex_A(seq, n) + reach * toward;
}

KiteAngles kite_angles(const AlphaSequence& seq, int n) {
  require_index(seq, n, seq.min_index() + 1);
  const double phi = 2.0 * kPi - seq.alpha_diff(n - 1, n + 1);
  return {phi, phi / 2.0};
}

double arc_radius(const AlphaSequence& seq, int n) {
  require_index(seq, n, seq.min_index() + 1);
  return std::sin(seq.alpha_diff(n, n + 1) / 2.0) /
         std::tan(seq.alpha_diff(n - 1, n + 1) / 4.0);
}

Point2 arc_center(const AlphaSequence& seq, int n) {
  require_index(seq, n, seq.min_index() + 1);
  const double r = arc_radius(seq, n);
  const double t_norm = std::cos(seq.alpha_diff(n, n + 1) / 2.0);
  if (r >= t_norm) throw std::domain_error("degenerate arc: r >= |T_n|");
  const double mid = (seq.alpha(n) + seq.alpha(n + 1)) / 2.0;
  return (t_norm - r) * unit_at(mid);
}

double radius_asymptotic_gap(const AlphaSequence& seq, int n) {
  const double ratio =
      2.0 * seq.alpha_diff(n, n + 1) / seq.alpha_diff(n - 1, n + 1);
  return std::fabs(arc_radius(seq, n) - ratio);
}

double half_chord(const AlphaSequence& seq, int n) {
  return std::sin(seq.alpha_diff(n, n + 1) / 2.0);
}

double arc_span(const AlphaSequence& seq, int n) {
  return seq.alpha_diff(n - 1, n + 1) / 2.0;
}

double chord_gap(const AlphaSequence& seq, int n) {
  // sin(A) - sin(B) = 2 cos((A+B)/2) sin((A-B)/2) with
  // A = (alpha_{n-1}-alpha_n)/2, B = (alpha_n-alpha_{n+1})/2
  const double sum_half = seq.alpha_diff(n - 1, n + 1) / 4.0;
  const double diff_half = seq.second_diff(n) / 4.0;
  return 2.0 * std::cos(sum_half) * std::sin(diff_half);
}

double arc_chord(const AlphaSequence& seq, int n) {
  return 2.0 * arc_radius(seq, n) * std::sin(arc_span(seq, n) / 2.0);
}

Point2 midpoint_T_offset(const AlphaSequence& seq, int n) {
  const double a0 = seq.alpha(n);
  const double a1 = seq.alpha(n + 1);
  return {-(versine(a0) + versine(a1)) / 2.0,
          (std::sin(a0) + std::sin(a1)) / 2.0};
}

Point2 tangency_S_offset(const AlphaSequence& seq, int n) {
  const double a = seq.alpha(n);
  const double reach = std::sin(seq.alpha_diff(n, n + 1) / 2.0);
  const double mid = (seq.alpha(n - 1) + a) / 2.0;
  return {-versine(a) - reach * std::sin(mid),
          std::sin(a) + reach * std::cos(mid)};
}

double BoundaryModel::top_y() const {
  const Piece& lead = pieces.front();
  return lead.kind == PieceKind::arc ? lead.arc.center.y + lead.arc.radius
                                     : lead.seg.from.y;
}

BoundaryModel build_boundary(const AlphaSequence& seq, int depth) {
  const int n_min = seq.min_index();
  if (depth < n_min + 2)
    throw std::invalid_argument("build depth must be at least min_index + 2");
  if (depth > seq.index_cap())
    throw std::out_of_range("build depth exceeds the sequence index cap");

  BoundaryModel model{seq, depth, {}, true, true};
  model.pieces.reserve(2 * static_cast<size_t>(depth - n_min) + 2);

  if (n_min == 1) {
    // The top corner is smoothed symmetrically about the imaginary axis;
    // the mirror construction forces the lead arc's center to the origin
    // and its radius to |T_1|. Only the first-quadrant half is stored.
    Piece lead;
    lead.kind = PieceKind::arc;
    lead.arc = {{0.0, 0.0},
                std::cos(seq.alpha_diff(1, 2) / 2.0),
                kPi / 2.0,
                (seq.alpha(1) + seq.alpha(2)) / 2.0,
                1};
    model.pieces.push_back(lead);
  }

  for (int n = n_min + 1; n <= depth; ++n) {
    Piece seg;
    seg.kind = PieceKind::segment;
    const Point2 from = (n == n_min + 1 && n_min > 1)
                            ? vertex_A(seq, n_min)
                            : midpoint_T(seq, n - 1);
    seg.seg = {from, tangency_S(seq, n), n - 1};
    model.pieces.push_back(seg);

    Piece arc;
    arc.kind = PieceKind::arc;
    const double t_half = (seq.alpha(n) + seq.alpha(n + 1)) / 2.0;
    arc.arc = {arc_center(seq, n), arc_radius(seq, n),
               t_half + arc_span(seq, n), t_half, n};
    model.pieces.push_back(arc);
  }

  Piece closure;
  closure.kind = PieceKind::closure;
  closure.seg = {midpoint_T(seq, depth), {1.0, 0.0}, depth};
  model.pieces.push_back(closure);
  return model;
}

namespace {

struct PieceSpan {
  double y_lo = 0.0;
  double y_hi = 0.0;
};

PieceSpan piece_span(const Piece& p) {
  if (p.kind == PieceKind::arc) {
    return {p.arc.center.y + p.arc.radius * std::sin(p.arc.end_angle),
            p.arc.center.y + p.arc.radius * std::sin(p.arc.start_angle)};
  }
  return {p.seg.to.y, p.seg.from.y};
}

const Piece& piece_at_ordinate(const BoundaryModel& model, double ay) {
  for (const Piece& p : model.pieces) {
    // Junction ordinates computed through different closed forms can differ
    // by a few ulps; the slack hands them to the upper piece (the arc), whose
    // evaluation stays fully accurate at its endpoints.
    const PieceSpan span = piece_span(p);
    if (ay >= span.y_lo - 1e-12 * (span.y_hi - span.y_lo)) return p;
  }
  return model.pieces.back();
}

}  // namespace

double boundary_x(const BoundaryModel& model, double y) {
  double ay = std::fabs(y);
  const double top = model.top_y();
  if (ay > top) {
    if (ay > top * (1.0 + 1e-12))
      throw std::domain_error("ordinate above the boundary's top point");
    ay = top;
  }
  const Piece& p = piece_at_ordinate(model, ay);
  if (p.kind == PieceKind::arc) {
    const double u = ay - p.arc.center.y;
    const double w = p.arc.radius * p.arc.radius - u * u;
    return p.arc.center.x + std::sqrt(std::max(w, 0.0));
  }
  const Point2 d = p.seg.to - p.seg.from;
  return p.seg.from.x + (ay - p.seg.from.y) * d.x / d.y;
}

double boundary_x_prime(const BoundaryModel& model, double y) {
  if (y == 0.0) return 0.0;  // mirror symmetry across the real axis
  const double ay = std::fabs(y);
  if (ay > model.top_y() * (1.0 + 1e-12))
    throw std::domain_error("ordinate above the boundary's top point");
  const Piece& p = piece_at_ordinate(model, ay);
  double slope;
  if (p.kind == PieceKind::arc) {
    const double u = ay - p.arc.center.y;
    const double w = p.arc.radius * p.arc.radius - u * u;
    slope = -u / std::sqrt(std::max(w, 0.0));
  } else {
    const Point2 d = p.seg.to - p.seg.from;
    slope = d.x / d.y;
  }
  return y > 0.0 ? slope : -slope;
}

std::optional<double> boundary_x_second(const BoundaryModel& model, double y) {
  const double ay = std::fabs(y);
  if (ay > model.top_y() * (1.0 + 1e-12))
    throw std::domain_error("ordinate above the boundary's top point");
  const Piece& p = piece_at_ordinate(model, ay);
  const PieceSpan span = piece_span(p);
  if (ay == span.y_lo || ay == span.y_hi) return std::nullopt;
  if (p.kind != PieceKind::arc) return 0.0;
  const double u = ay - p.arc.center.y;
  const double r2 = p.arc.radius * p.arc.radius;
  const double w = r2 - u * u;
  return -r2 / (w * std::sqrt(w));
}

}  // namespace kproj
