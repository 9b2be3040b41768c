#include "quadft/square.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "quadft/error.hpp"
#include "quadft/solver.hpp"

namespace quadft {

namespace {

constexpr double kPatternTol = 1e-12;

bool same_magnitude(double x, double y) {
  return std::abs(std::abs(x) - std::abs(y)) <= kPatternTol * std::max(std::abs(x), std::abs(y));
}

}  // namespace

void validate(const SquareProblem& sp) {
  if (!(std::isfinite(sp.a) && sp.a > 0.0)) {
    throw Error(ErrorKind::InvalidInput, "square: side length must be finite and positive");
  }
  if (!std::isfinite(sp.B1) || !std::isfinite(sp.B4) || sp.B1 == 0.0 || sp.B4 == 0.0) {
    throw Error(ErrorKind::InvalidInput, "square: weights must be finite and nonzero");
  }
}

Quad canonical_vertices(double a) {
  const double h = 0.5 * a;
  return {Point{h, h}, Point{-h, h}, Point{-h, -h}, Point{h, -h}};
}

QuarticPoly equilibrium_quartic(const SquareProblem& sp) {
  validate(sp);
  if (same_magnitude(sp.B1, sp.B4)) {
    throw Error(ErrorKind::DegenerateCoefficients,
                "equilibrium_quartic: |B1| == |B4| reduces the equation to linear");
  }
  const double a = sp.a;
  const double b1 = sp.B1 * sp.B1;
  const double b4 = sp.B4 * sp.B4;
  const double diff = b1 - b4;
  return QuarticPoly{8.0 * diff, 0.0, -2.0 * a * a * diff, -2.0 * a * a * a * (b1 + b4),
                     a * a * a * a * diff};
}

double objective_on_axis(const SquareProblem& sp, double y) {
  const double h = 0.5 * sp.a;
  return sp.B1 * std::hypot(h, h - y) + sp.B4 * std::hypot(h, h + y);
}

double objective_on_axis_derivative(const SquareProblem& sp, double y) {
  const double h = 0.5 * sp.a;
  return -sp.B1 * (h - y) / std::hypot(h, h - y) + sp.B4 * (h + y) / std::hypot(h, h + y);
}

double solve_square_ft(const SquareProblem& sp) {
  validate(sp);
  if (sp.B1 < 0.0 || sp.B4 < 0.0) {
    throw Error(ErrorKind::InvalidInput,
                "solve_square_ft: weights must be positive; use the complementary solver for "
                "signed weights");
  }
  const QuadProblem frame(canonical_vertices(sp.a), {sp.B1, sp.B1, sp.B4, sp.B4});
  if (const CaseTag tag = classify(frame); tag.absorbed()) {
    throw NotFloatingError(tag.vertex, "solve_square_ft: optimum absorbed at vertex A" +
                                           std::to_string(tag.vertex));
  }
  if (same_magnitude(sp.B1, sp.B4)) return 0.0;
  if (sp.B4 > sp.B1) return -solve_square_ft({sp.a, sp.B4, sp.B1});

  const double h = 0.5 * sp.a;
  const RealRoots roots = solve_real_quartic(equilibrium_quartic(sp));
  double best = std::numeric_limits<double>::quiet_NaN();
  double best_f = std::numeric_limits<double>::infinity();
  for (const RealRoot& r : roots.roots) {
    if (r.value < 0.0 || r.value >= h) continue;
    const double f = objective_on_axis(sp, r.value);
    if (f < best_f) {
      best_f = f;
      best = r.value;
    }
  }
  if (std::isnan(best)) {
    throw Error(ErrorKind::InternalInconsistency,
                "solve_square_ft: no root of the equilibrium quartic in [0, a/2)");
  }
  return best;
}

double solve_square_complementary(const SquareProblem& sp) {
  validate(sp);
  if ((sp.B1 < 0.0) == (sp.B4 < 0.0)) {
    throw Error(ErrorKind::InvalidInput,
                "solve_square_complementary: weights must have mixed signs; same-sign weights "
                "share the location of the ordinary optimum");
  }
  const double m1 = std::abs(sp.B1);
  const double m4 = std::abs(sp.B4);
  if (!(m1 > m4) || same_magnitude(m1, m4)) {
    throw Error(ErrorKind::InvalidInput, "solve_square_complementary: requires |B1| > |B4|");
  }
  const double h = 0.5 * sp.a;
  const RealRoots roots = solve_real_quartic(equilibrium_quartic({sp.a, m1, m4}));
  double best = std::numeric_limits<double>::quiet_NaN();
  double best_g = std::numeric_limits<double>::infinity();
  for (const RealRoot& r : roots.roots) {
    if (r.value <= h) continue;
    // Squaring admits roots of either sign pattern; keep the one where the
    // signed first-order condition actually vanishes.
    const double g = std::abs(objective_on_axis_derivative(sp, r.value));
    if (g < best_g) {
      best_g = g;
      best = r.value;
    }
  }
  if (std::isnan(best)) {
    throw Error(ErrorKind::InternalInconsistency,
                "solve_square_complementary: no root of the equilibrium quartic beyond a/2");
  }
  return best;
}

AngleSet angles_from_y(const SquareProblem& sp, double y) {
  validate(sp);
  const double h = 0.5 * sp.a;
  if (!(y >= 0.0 && y < h)) {
    throw Error(ErrorKind::InvalidInput, "angles_from_y: y must lie in [0, a/2)");
  }
  AngleSet s;
  s.alpha102 = 2.0 * std::acos((h - y) / std::hypot(h, h - y));
  double arg = (sp.B1 / sp.B4) * std::cos(0.5 * s.alpha102);
  if (arg > 1.0) {
    if (arg - 1.0 > 1e-12) {
      throw NotFloatingError(0, "angles_from_y: configuration outside the floating regime");
    }
    arg = 1.0;
  }
  s.alpha304 = 2.0 * std::acos(arg);
  s.alpha401 = std::numbers::pi - 0.5 * s.alpha102 - 0.5 * s.alpha304;
  s.alpha203 = s.alpha401;
  return s;
}

RadicalSolution square_ft_radical(const SquareProblem& sp) {
  validate(sp);
  if (!(sp.B1 > sp.B4 && sp.B4 > 0.0)) {
    throw Error(ErrorKind::InvalidInput, "square_ft_radical: requires B1 > B4 > 0");
  }
  const double a = sp.a;
  const double a2 = a * a;
  const double a3 = a2 * a;
  const double a4 = a2 * a2;
  const double a6 = a3 * a3;
  const double b1 = sp.B1 * sp.B1;
  const double b4 = sp.B4 * sp.B4;
  const double diff = b1 - b4;
  const double cbrt2 = std::cbrt(2.0);

  FerrariIntermediates aux;
  aux.t = 2000.0 * a6 * b1 * b1 * b1 - 2544.0 * a6 * b1 * b1 * b4 + 2544.0 * a6 * b1 * b4 * b4 -
          2000.0 * a6 * b4 * b4 * b4 +
          192.0 * std::sqrt(3.0) *
              std::sqrt(a6 * a6 * b1 * b4 * diff * diff *
                        (125.0 * b1 * b1 - 142.0 * b1 * b4 + 125.0 * b4 * b4));
  aux.p = a4 * b1 * b1 - 2.0 * a4 * b1 * b4 + a4 * b4 * b4;
  aux.q = b1 * b1 * b1 - 3.0 * b1 * b1 * b4 + 3.0 * b1 * b4 * b4 - b4 * b4 * b4;

  const double ct = std::cbrt(aux.t);
  const double cq = std::cbrt(aux.q);
  const double term1 = ct / (24.0 * cbrt2 * cq);
  const double term2 = 25.0 * aux.p * cq / (3.0 * cbrt2 * cbrt2 * ct * diff * diff);
  const double term3 = (a2 * b1 - a2 * b4) / (12.0 * diff);
  aux.r = term1 + term2 - term3;

  const double outer = std::sqrt(a2 / 4.0 + aux.r);
  const double inner =
      a2 / 4.0 - term1 - term2 + term3 - (-a3 * b1 - a3 * b4) / (2.0 * outer * diff);
  return {0.5 * outer - 0.5 * std::sqrt(inner), aux};
}

std::optional<ComplementaryRadical> square_complementary_radical(const SquareProblem& sp) {
  validate(sp);
  const double a = sp.a;
  const double a2 = a * a;
  const double a3 = a2 * a;
  const double a4 = a2 * a2;
  const double b1 = sp.B1 * sp.B1;
  const double b4 = sp.B4 * sp.B4;
  const double diff = b1 - b4;
  if (!(diff > 0.0)) return std::nullopt;
  const double cbrt2 = std::cbrt(2.0);

  const double e = -a * b1 + a2 * b1 + a * b4 - a2 * b4;
  const double f = 2.0 * a3 * b1 + a4 * b1 - 2.0 * a3 * b4 - a4 * b4;
  const double g = a2 * b1 + a2 * b4;

  ComplementaryIntermediates aux;
  aux.z = -1024.0 * e * e * e + 27648.0 * diff * g * g + 9216.0 * diff * e * f;
  aux.w = 64.0 * e * e + 192.0 * diff * f;
  aux.s = -4.0 * aux.w * aux.w * aux.w + aux.z * aux.z;
  if (aux.s < 0.0) return std::nullopt;

  const double croot = std::cbrt(std::sqrt(aux.s) + aux.z);
  if (croot == 0.0) return std::nullopt;
  aux.d = 0.5 * (-a + a2) + aux.w / (24.0 * cbrt2 * cbrt2 * croot * diff) +
          croot / (48.0 * cbrt2 * diff) - e / (6.0 * diff);
  if (!(aux.d > 0.0)) return std::nullopt;
  const double sd = std::sqrt(aux.d);
  const double numer = 2.0 * cbrt2 * aux.w / croot + cbrt2 * cbrt2 * croot +
                       32.0 * a * (2.0 + a * (-2.0 - 3.0 / sd)) * b1 +
                       32.0 * a * (-2.0 + 2.0 * a - 3.0 * a / sd) * b4;
  const double radicand = -numer / (96.0 * diff);
  if (radicand < 0.0) return std::nullopt;
  return ComplementaryRadical{0.5 * sd + 0.5 * std::sqrt(radicand), aux};
}

}  // namespace quadft
