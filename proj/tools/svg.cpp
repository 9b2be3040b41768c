#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace quadft::cli {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

Viewport fit_viewport(const QuadProblem& qp, Point solution) {
  double xmin = solution.x, xmax = solution.x, ymin = solution.y, ymax = solution.y;
  for (const Point& p : qp.vertices()) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double extent = std::max(xmax - xmin, ymax - ymin);
  return Viewport{xmin, ymax, (kCanvasPx - 2.0 * kMarginPx) / extent};
}

std::string render_svg(const QuadProblem& qp, const Solution& solution, const std::string& label) {
  const Viewport vp = fit_viewport(qp, solution.location);
  const auto& v = qp.vertices();
  const Point a0 = solution.location;
  // Arrow length: 12% of the drawable width.
  const double arrow_units = 0.12 * (kCanvasPx - 2.0 * kMarginPx) / vp.px_per_unit;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvasPx
     << "\" height=\"" << kCanvasPx << "\" viewBox=\"0 0 " << kCanvasPx << ' ' << kCanvasPx << "\">\n";
  if (!label.empty()) os << "  <title>" << escape(label) << "</title>\n";
  os << "  <defs>\n"
     << "    <marker id=\"arrowhead\" markerWidth=\"10\" markerHeight=\"7\" refX=\"10\" refY=\"3.5\" "
        "orient=\"auto\">\n"
     << "      <polygon points=\"0 0, 10 3.5, 0 7\" fill=\"#c0392b\"/>\n"
     << "    </marker>\n"
     << "  </defs>\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  os << "  <polygon class=\"quad\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < 4; ++i) os << (i ? " " : "") << fmt(vp.px(v[i])) << ',' << fmt(vp.py(v[i]));
  os << "\"/>\n";

  for (auto [i, j] : {std::pair{0, 2}, std::pair{1, 3}}) {
    os << "  <line class=\"diagonal\" x1=\"" << fmt(vp.px(v[i])) << "\" y1=\"" << fmt(vp.py(v[i]))
       << "\" x2=\"" << fmt(vp.px(v[j])) << "\" y2=\"" << fmt(vp.py(v[j]))
       << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
  }

  for (std::size_t i = 0; i < 4; ++i) {
    if (v[i] == a0) continue;
    const Point tip = a0 + arrow_units * unit_vector(a0, v[i]);
    os << "  <line class=\"arrow\" x1=\"" << fmt(vp.px(a0)) << "\" y1=\"" << fmt(vp.py(a0)) << "\" x2=\""
       << fmt(vp.px(tip)) << "\" y2=\"" << fmt(vp.py(tip))
       << "\" stroke=\"#c0392b\" stroke-width=\"2\" marker-end=\"url(#arrowhead)\"/>\n";
  }

  for (std::size_t i = 0; i < 4; ++i) {
    os << "  <text x=\"" << fmt(vp.px(v[i]) + 8) << "\" y=\"" << fmt(vp.py(v[i]) - 8)
       << "\" font-family=\"sans-serif\" font-size=\"18\">A" << i + 1 << " (" << fmt(qp.weights()[i])
       << ")</text>\n";
  }
  os << "  <circle class=\"solution\" cx=\"" << fmt(vp.px(a0)) << "\" cy=\"" << fmt(vp.py(a0))
     << "\" r=\"6\" fill=\"#2471a3\"/>\n"
     << "  <text x=\"" << fmt(vp.px(a0) + 10) << "\" y=\"" << fmt(vp.py(a0) + 22)
     << "\" font-family=\"sans-serif\" font-size=\"18\">A0 " << to_string(solution.method) << "</text>\n"
     << "</svg>\n";
  return os.str();
}

}  // namespace quadft::cli
