#include "kproj/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kproj/io.hpp"

namespace kproj {

namespace {

// Everything is emitted in screen coordinates (y pointing down), so math
// points are written with their ordinate negated.
std::string xy(Point2 p) {
  return format_double(p.x) + " " + format_double(-p.y);
}

Point2 arc_point(const ArcPiece& a, double angle) {
  return a.center + a.radius * unit_at(angle);
}

void emit_piece(std::ostringstream& out, const Piece& p) {
  if (p.kind == PieceKind::arc) {
    const Point2 from = arc_point(p.arc, p.arc.start_angle);
    const Point2 to = arc_point(p.arc, p.arc.end_angle);
    const std::string r = format_double(p.arc.radius);
    // decreasing math angle flips to the positive sweep after the y-flip
    out << "  <path class=\"arc\" d=\"M " << xy(from) << " A " << r << " "
        << r << " 0 0 1 " << xy(to) << "\"/>\n";
    return;
  }
  const char* cls = p.kind == PieceKind::closure ? "closure" : "segment";
  out << "  <path class=\"" << cls << "\" d=\"M " << xy(p.seg.from) << " L "
      << xy(p.seg.to) << "\"/>\n";
}

void emit_marker(std::ostringstream& out, const char* cls, Point2 p,
                 const std::string& label) {
  out << "  <circle class=\"" << cls << "\" cx=\"" << format_double(p.x)
      << "\" cy=\"" << format_double(-p.y) << "\" r=\"0.008\"/>\n";
  out << "  <text class=\"" << cls << "\" x=\"" << format_double(p.x + 0.01)
      << "\" y=\"" << format_double(-p.y - 0.01)
      << "\" font-size=\"0.03\">" << label << "</text>\n";
}

}  // namespace

std::string boundary_svg(const BoundaryModel& model, int n0, int n1) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" "
         "viewBox=\"-1.25 -1.25 2.5 2.5\">\n";
  out << "<style>.arc{stroke:#c22;fill:none;stroke-width:0.006}"
         ".segment{stroke:#226;fill:none;stroke-width:0.006}"
         ".closure{stroke:#999;fill:none;stroke-width:0.003;"
         "stroke-dasharray:0.02}"
         "circle{fill:#222}text{fill:#222}</style>\n";
  out << "<g id=\"chain\">\n";
  for (const Piece& p : model.pieces) emit_piece(out, p);
  out << "</g>\n";
  if (model.mirror_imag_axis)
    out << "<use href=\"#chain\" transform=\"scale(-1,1)\"/>\n";
  if (model.mirror_real_axis)
    out << "<use href=\"#chain\" transform=\"scale(1,-1)\"/>\n";
  if (model.mirror_imag_axis && model.mirror_real_axis)
    out << "<use href=\"#chain\" transform=\"scale(-1,-1)\"/>\n";

  const AlphaSequence& seq = model.seq;
  const int lo = std::max(n0, seq.min_index());
  for (int n = lo; n <= std::min(n1, model.depth); ++n) {
    const std::string idx = std::to_string(n);
    emit_marker(out, "vertex", vertex_A(seq, n), "A" + idx);
    emit_marker(out, "midpoint", midpoint_T(seq, n), "T" + idx);
    if (n >= seq.min_index() + 1) {
      emit_marker(out, "tangency", tangency_S(seq, n), "S" + idx);
      emit_marker(out, "center", arc_center(seq, n), "O" + idx);
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string quotient_svg(const std::vector<QuotientSample>& samples,
                         const std::vector<double>& t_marks,
                         const std::vector<double>& s_marks) {
  // plot window: x = log2(theta) in [xmin, 1], y = Im D in [0, 0.6]
  double xmin = -1.0;
  for (const QuotientSample& s : samples)
    xmin = std::min(xmin, std::log2(s.theta));
  for (double t : t_marks) xmin = std::min(xmin, std::log2(t));
  for (double s : s_marks) xmin = std::min(xmin, std::log2(s));
  xmin -= 1.0;
  const double w = 640.0, h = 400.0;
  const auto px = [&](double theta) {
    return w * (std::log2(theta) - xmin) / (1.0 - xmin);
  };
  const auto py = [&](double v) { return h - v * (h / 0.6); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
      << format_double(w) << " " << format_double(h) << "\">\n";
  out << "<style>.sample{fill:#226}.t-mark{stroke:#c22;stroke-width:0.5}"
         ".s-mark{stroke:#2a2;stroke-width:0.5}"
         ".axis{stroke:#444;stroke-width:1}</style>\n";
  out << "<line class=\"axis\" x1=\"0\" y1=\"" << format_double(py(0.0))
      << "\" x2=\"" << format_double(w) << "\" y2=\""
      << format_double(py(0.0)) << "\"/>\n";
  for (double t : t_marks)
    out << "<line class=\"t-mark\" x1=\"" << format_double(px(t))
        << "\" y1=\"0\" x2=\"" << format_double(px(t)) << "\" y2=\""
        << format_double(h) << "\"/>\n";
  for (double s : s_marks)
    out << "<line class=\"s-mark\" x1=\"" << format_double(px(s))
        << "\" y1=\"0\" x2=\"" << format_double(px(s)) << "\" y2=\""
        << format_double(h) << "\"/>\n";
  for (const QuotientSample& s : samples)
    out << "<circle class=\"sample\" cx=\"" << format_double(px(s.theta))
        << "\" cy=\"" << format_double(py(s.quotient.y))
        << "\" r=\"2\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace kproj
