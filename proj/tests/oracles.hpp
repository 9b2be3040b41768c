#pragma once

// Test-only reference computations. Nothing here calls into the solver
// paths it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "quadft/geom.hpp"
#include "quadft/quartic.hpp"

namespace oracle {

/// Golden-section minimiser of a unimodal f on [lo, hi].
inline double golden_section(const std::function<double(double)>& f, double lo, double hi,
                             double tol = 1e-13) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol * std::max(1.0, std::abs(a) + std::abs(b))) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

/// On-axis objective of the symmetric square, written out independently.
inline double square_axis_objective(double a, double b1, double b4, double y) {
  const double h = a / 2;
  return b1 * std::sqrt(h * h + (h - y) * (h - y)) + b4 * std::sqrt(h * h + (h + y) * (h + y));
}

/// Monic quartic with the given roots.
inline quadft::QuarticPoly from_roots(const std::array<double, 4>& r, double lead = 1.0) {
  // Elementary symmetric polynomials.
  const double e1 = r[0] + r[1] + r[2] + r[3];
  const double e2 = r[0] * r[1] + r[0] * r[2] + r[0] * r[3] + r[1] * r[2] + r[1] * r[3] + r[2] * r[3];
  const double e3 = r[0] * r[1] * r[2] + r[0] * r[1] * r[3] + r[0] * r[2] * r[3] + r[1] * r[2] * r[3];
  const double e4 = r[0] * r[1] * r[2] * r[3];
  return {lead, -lead * e1, lead * e2, -lead * e3, lead * e4};
}

/// Sign-change scan on a uniform grid over [lo, hi] followed by bisection.
/// Misses roots of even multiplicity by construction.
inline std::vector<double> bisection_roots(const std::function<double(double)>& f, double lo, double hi,
                                           int cells) {
  std::vector<double> out;
  double x0 = lo, f0 = f(lo);
  for (int i = 1; i <= cells; ++i) {
    const double x1 = lo + (hi - lo) * i / cells;
    const double f1 = f(x1);
    if (f0 == 0.0) {
      out.push_back(x0);
    } else if ((f0 < 0) != (f1 < 0) && f1 != 0.0) {
      double a = x0, b = x1, fa = f0;
      for (int k = 0; k < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++k) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if ((fm < 0) == (fa < 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      out.push_back(0.5 * (a + b));
    }
    x0 = x1;
    f0 = f1;
  }
  return out;
}

/// Weighted sum of distances, independent of the library's objective().
inline double weighted_sum(const std::vector<quadft::Point>& pts, const std::vector<double>& w, quadft::Point x) {
  double s = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) s += w[i] * std::hypot(x.x - pts[i].x, x.y - pts[i].y);
  return s;
}

/// Derivative-free minimiser: compass search with shrinking step. Slow but
/// shares no code with Weiszfeld.
inline quadft::Point compass_search(const std::vector<quadft::Point>& pts, const std::vector<double>& w,
                                    quadft::Point start, double step, double tol) {
  quadft::Point x = start;
  double fx = weighted_sum(pts, w, x);
  const std::array<std::pair<double, double>, 8> dirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1},
                                                       {0.7071067811865476, 0.7071067811865476},
                                                       {-0.7071067811865476, 0.7071067811865476},
                                                       {0.7071067811865476, -0.7071067811865476},
                                                       {-0.7071067811865476, -0.7071067811865476}}};
  // Vertices are candidate minimisers where the objective is not smooth.
  for (const auto& p : pts) {
    const double fp = weighted_sum(pts, w, p);
    if (fp < fx) {
      fx = fp;
      x = p;
    }
  }
  while (step > tol) {
    bool improved = false;
    for (auto [dx, dy] : dirs) {
      const quadft::Point c{x.x + step * dx, x.y + step * dy};
      const double fc = weighted_sum(pts, w, c);
      if (fc < fx) {
        fx = fc;
        x = c;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  return x;
}

/// Random strictly convex quadrilateral: four sorted angles on a jittered
/// ellipse, each consecutive gap below pi.
inline quadft::Quad random_convex_quad(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    std::array<double, 4> ang{};
    for (double& a : ang) a = 2.0 * M_PI * u(rng);
    std::sort(ang.begin(), ang.end());
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
      const double gap = i < 3 ? ang[i + 1] - ang[i] : ang[0] + 2.0 * M_PI - ang[3];
      if (gap < 0.3 || gap > M_PI - 0.3) ok = false;
    }
    if (!ok) continue;
    const double rx = 1.0 + 3.0 * u(rng);
    const double ry = 1.0 + 3.0 * u(rng);
    const double cx = -5.0 + 10.0 * u(rng);
    const double cy = -5.0 + 10.0 * u(rng);
    quadft::Quad q;
    for (std::size_t i = 0; i < 4; ++i) q[i] = {cx + rx * std::cos(ang[i]), cy + ry * std::sin(ang[i])};
    return q;
  }
}

}  // namespace oracle
