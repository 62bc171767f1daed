#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "kproj/sequences.hpp"

namespace kproj {

// Plane point, identified with a complex number x + iy.
struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline Point2 operator/(Point2 p, double s) { return {p.x / s, p.y / s}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 unit_at(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

// Circular arc, angles measured counterclockwise from +x as seen from the
// center. Along the boundary the arc is traversed from start_angle (the
// high-polar-angle tangency) down to end_angle.
struct ArcPiece {
  Point2 center;
  double radius = 0.0;
  double start_angle = 0.0;  // angle of the upper endpoint (toward S_n)
  double end_angle = 0.0;    // angle of the lower endpoint (at T_n)
  int index = 0;
};

struct SegmentPiece {
  Point2 from;  // T_n
  Point2 to;    // S_{n+1}
  int index = 0;
};

enum class PieceKind { arc, segment, closure };

struct Piece {
  PieceKind kind = PieceKind::segment;
  ArcPiece arc;      // valid when kind == arc
  SegmentPiece seg;  // valid otherwise
  int index() const { return kind == PieceKind::arc ? arc.index : seg.index; }
};

// Per-index construction data (all closed forms in the angle sequence).
Point2 vertex_A(const AlphaSequence& seq, int n);     // e^{i alpha_n}
Point2 midpoint_T(const AlphaSequence& seq, int n);   // chord midpoint
Point2 tangency_S(const AlphaSequence& seq, int n);   // on A_{n-1}A_n

struct KiteAngles {
  double phi = 0.0;  // central angle of the tangency kite
  double psi = 0.0;  // vertex angle, psi = phi/2
};
KiteAngles kite_angles(const AlphaSequence& seq, int n);

double arc_radius(const AlphaSequence& seq, int n);
Point2 arc_center(const AlphaSequence& seq, int n);

// |r_n - 2(alpha_n - alpha_{n+1}) / (alpha_{n-1} - alpha_{n+1})|
double radius_asymptotic_gap(const AlphaSequence& seq, int n);

// Cancellation-safe kernels shared with the analysis module. All keep full
// relative precision down to subnormal angle scales.
double half_chord(const AlphaSequence& seq, int n);  // |A_n - T_n|
double arc_span(const AlphaSequence& seq, int n);    // arc central angle
double chord_gap(const AlphaSequence& seq, int n);   // |T_{n-1} - S_n|
double arc_chord(const AlphaSequence& seq, int n);   // |S_n - T_n|
Point2 midpoint_T_offset(const AlphaSequence& seq, int n);  // T_n - (1,0)
Point2 tangency_S_offset(const AlphaSequence& seq, int n);  // S_n - (1,0)

// Truncated first-quadrant boundary chain, ordered by strictly decreasing
// polar angle: a leading arc that smooths the top corner symmetrically about
// the imaginary axis (when min_index()==1), then alternating segments and
// arcs down to arc `depth`, closed by a chord to (1,0). The other quadrants
// are represented by the mirror flags, not by duplicated pieces.
struct BoundaryModel {
  AlphaSequence seq;
  int depth = 0;
  std::vector<Piece> pieces;
  bool mirror_real_axis = true;  // reflection across the real axis
  bool mirror_imag_axis = true;  // reflection across the imaginary axis

  // Ordinate of the topmost boundary point (the lead arc's radius).
  double top_y() const;
};

BoundaryModel build_boundary(const AlphaSequence& seq, int depth);

// Boundary graph x(y) on the half plane x >= 0 and its derivatives.
// Defined for |y| <= top_y(); the second derivative is absent exactly at
// piece junctions. x'(0) = 0 by the model's mirror symmetry.
double boundary_x(const BoundaryModel& model, double y);
double boundary_x_prime(const BoundaryModel& model, double y);
std::optional<double> boundary_x_second(const BoundaryModel& model, double y);

}  // namespace kproj
