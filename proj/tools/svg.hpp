#pragma once

#include <string>

#include "quadft/solver.hpp"

namespace quadft::cli {

/// Canvas size in pixels; the configuration is fitted inside a 50 px margin.
inline constexpr double kCanvasPx = 1000.0;
inline constexpr double kMarginPx = 50.0;

/// Maps problem coordinates to canvas pixels (y axis flipped).
struct Viewport {
  double xmin = 0.0;
  double ymax = 0.0;
  double px_per_unit = 1.0;

  double px(Point p) const { return kMarginPx + (p.x - xmin) * px_per_unit; }
  double py(Point p) const { return kMarginPx + (ymax - p.y) * px_per_unit; }
};

Viewport fit_viewport(const QuadProblem& qp, Point solution);

/// SVG 1.1 drawing: quadrilateral (class "quad"), both diagonals
/// (class "diagonal"), the solution (circle class "solution") and one unit
/// vector arrow per vertex other than the solution (class "arrow").
std::string render_svg(const QuadProblem& qp, const Solution& solution, const std::string& label);

}  // namespace quadft::cli
