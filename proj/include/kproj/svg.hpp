#pragma once

#include <string>
#include <vector>

#include "kproj/analysis.hpp"

namespace kproj {

// Outline of the whole body (the stored first-quadrant chain plus its three
// mirror images), one styled <path> per piece, with the construction points
// A_n, T_n, S_n, O_n marked for indices in [n0, n1].
std::string boundary_svg(const BoundaryModel& model, int n0, int n1);

// Scatter of Im D(theta) against log2(theta), with vertical markers at the
// t_n and s_n abscissae.
std::string quotient_svg(const std::vector<QuotientSample>& samples,
                         const std::vector<double>& t_marks,
                         const std::vector<double>& s_marks);

}  // namespace kproj
