#include "quadft/quartic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "quadft/error.hpp"

namespace quadft {

namespace {

constexpr int kMaxNewton = 50;
constexpr double kMergeTol = 1e-7;
constexpr double kEps = 2.220446049250313e-16;

// Newton on the caller's coefficients, evaluated in extended precision so
// that clustered roots are not limited by rounding in P(y). Keeps a step only
// if |P| shrinks.
double polish(const QuarticPoly& p, double y) {
  using ld = long double;
  const auto value = [&](ld x) {
    return (((ld{p.c4} * x + ld{p.c3}) * x + ld{p.c2}) * x + ld{p.c1}) * x + ld{p.c0};
  };
  const auto slope = [&](ld x) {
    return ((4.0L * ld{p.c4} * x + 3.0L * ld{p.c3}) * x + 2.0L * ld{p.c2}) * x + ld{p.c1};
  };
  ld x = y;
  ld fx = std::abs(value(x));
  for (int i = 0; i < kMaxNewton && fx > 0.0L; ++i) {
    const ld dp = slope(x);
    if (dp == 0.0L || !std::isfinite(dp)) break;
    const ld next = x - value(x) / dp;
    const ld fnext = std::abs(value(next));
    if (!(fnext < fx)) break;
    x = next;
    fx = fnext;
  }
  return static_cast<double>(x);
}

// Roots of x^2 + b x + c appended to out. A discriminant that is negative
// only at rounding level is treated as a double root.
void quadratic_roots(double b, double c, std::vector<double>& out) {
  const double disc = b * b - 4.0 * c;
  const double slack = 16.0 * kEps * (b * b + 4.0 * std::abs(c));
  if (disc < -slack) return;
  if (disc <= 0.0) {
    out.push_back(-0.5 * b);
    out.push_back(-0.5 * b);
    return;
  }
  const double sq = std::sqrt(disc);
  // Avoid cancellation: compute the larger-magnitude root first.
  const double q = -0.5 * (b + std::copysign(sq, b));
  if (q == 0.0) {
    out.push_back(0.0);
    out.push_back(0.0);
    return;
  }
  out.push_back(q);
  out.push_back(c / q);
}

double cbrt_real(double v) { return std::cbrt(v); }

}  // namespace

int RealRoots::count() const {
  int n = 0;
  for (const auto& r : roots) n += r.multiplicity;
  return n;
}

std::vector<double> RealRoots::values() const {
  std::vector<double> out;
  for (const auto& r : roots) out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value);
  return out;
}

double evaluate(const QuarticPoly& p, double y) {
  return (((p.c4 * y + p.c3) * y + p.c2) * y + p.c1) * y + p.c0;
}

double evaluate_derivative(const QuarticPoly& p, double y) {
  return ((4.0 * p.c4 * y + 3.0 * p.c3) * y + 2.0 * p.c2) * y + p.c1;
}

double scaled_residual(const QuarticPoly& p, double y) {
  const double ay = std::abs(y);
  const double scale = (((std::abs(p.c4) * ay + std::abs(p.c3)) * ay + std::abs(p.c2)) * ay +
                        std::abs(p.c1)) * ay + std::abs(p.c0);
  if (scale == 0.0) return 0.0;
  return std::abs(evaluate(p, y)) / scale;
}

std::vector<double> solve_real_cubic(double b, double c, double d) {
  // Depress: x = t - b/3, t^3 + p t + q = 0.
  const double shift = b / 3.0;
  const double p = c - b * b / 3.0;
  const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  std::vector<double> roots;
  const double half_q = 0.5 * q;
  const double third_p = p / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;
  if (disc > 0.0) {
    const double sq = std::sqrt(disc);
    // u = cbrt(-q/2 + sqrt(disc)) picked on the non-cancelling side.
    const double u = cbrt_real(-half_q - std::copysign(sq, half_q));
    const double v = u != 0.0 ? -third_p / u : 0.0;
    roots.push_back(u + v - shift);
  } else if (p == 0.0) {
    roots.assign(3, -shift);
  } else {
    const double m = 2.0 * std::sqrt(-third_p);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) {
      roots.push_back(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) - shift);
    }
  }
  // One Newton step each on the undepressed cubic.
  for (double& x : roots) {
    const double f = ((x + b) * x + c) * x + d;
    const double df = (3.0 * x + 2.0 * b) * x + c;
    if (df != 0.0) {
      const double nx = x - f / df;
      const double fn = ((nx + b) * nx + c) * nx + d;
      if (std::abs(fn) < std::abs(f)) x = nx;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RealRoots solve_real_quartic(const QuarticPoly& poly) {
  const std::array<double, 5> coeffs{poly.c4, poly.c3, poly.c2, poly.c1, poly.c0};
  double cmax = 0.0;
  for (double c : coeffs) {
    if (!std::isfinite(c)) {
      throw Error(ErrorKind::InvalidInput, "solve_real_quartic: non-finite coefficient");
    }
    cmax = std::max(cmax, std::abs(c));
  }
  if (poly.c4 == 0.0) {
    throw Error(ErrorKind::InvalidInput, "solve_real_quartic: leading coefficient is zero");
  }
  const QuarticPoly scaled{poly.c4 / cmax, poly.c3 / cmax, poly.c2 / cmax, poly.c1 / cmax,
                           poly.c0 / cmax};

  // Monic form y^4 + b y^3 + c y^2 + d y + e.
  const double b = scaled.c3 / scaled.c4;
  const double c = scaled.c2 / scaled.c4;
  const double d = scaled.c1 / scaled.c4;
  const double e = scaled.c0 / scaled.c4;

  // Depressed: y = x - b/4, x^4 + p x^2 + q x + r.
  const double shift = 0.25 * b;
  const double b2 = b * b;
  const double p = c - 3.0 * b2 / 8.0;
  const double q = b2 * b / 8.0 - b * c / 2.0 + d;
  const double r = -3.0 * b2 * b2 / 256.0 + b2 * c / 16.0 - b * d / 4.0 + e;

  std::vector<double> xs;
  const double qscale = std::abs(p) + std::abs(r) + 1.0;
  if (std::abs(q) <= 1e-14 * qscale) {
    // Biquadratic: z = x^2, z^2 + p z + r = 0.
    std::vector<double> zs;
    quadratic_roots(p, r, zs);
    for (double z : zs) {
      if (z >= 0.0) {
        const double s = std::sqrt(z);
        xs.push_back(-s);
        xs.push_back(s);
      }
    }
  } else {
    // (x^2 + m)^2 = (2m - p) x^2 - q x + (m^2 - r) is a perfect square when
    // 8m^3 - 4p m^2 - 8r m + (4pr - q^2) = 0. The largest root has 2m - p > 0.
    const auto ms = solve_real_cubic(-0.5 * p, -r, 0.5 * p * r - q * q / 8.0);
    const double m = ms.back();
    const double s2 = 2.0 * m - p;
    if (s2 > 0.0) {
      const double s = std::sqrt(s2);
      const double k = q / (2.0 * s);
      quadratic_roots(-s, m + k, xs);
      quadratic_roots(s, m - k, xs);
    }
  }

  std::vector<double> ys;
  ys.reserve(xs.size());
  for (double x : xs) ys.push_back(polish(poly, x - shift));
  std::sort(ys.begin(), ys.end());

  double root_scale = 1.0;
  for (double y : ys) root_scale = std::max(root_scale, std::abs(y));

  RealRoots out;
  for (double y : ys) {
    if (!out.roots.empty() && y - out.roots.back().value < kMergeTol * root_scale) {
      auto& last = out.roots.back();
      // Running mean keeps merged clusters centred.
      last.value = (last.value * last.multiplicity + y) / (last.multiplicity + 1);
      ++last.multiplicity;
    } else {
      out.roots.push_back({y, 1});
    }
  }
  return out;
}

}  // namespace quadft
