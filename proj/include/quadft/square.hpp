#pragma once

#include <optional>

#include "quadft/geom.hpp"
#include "quadft/quartic.hpp"

namespace quadft {

/// Square of side `a` with weight B1 at A1 and A2, B4 at A3 and A4.
///
/// Canonical frame: A1=(a/2, a/2), A2=(-a/2, a/2), A3=(-a/2, -a/2),
/// A4=(a/2, -a/2), centre O at the origin. Solutions lie on the vertical
/// axis at (0, y), y positive toward the edge A1A2.
struct SquareProblem {
  double a = 1.0;
  double B1 = 1.0;
  double B4 = 1.0;
};

/// Validates a > 0 and finite nonzero weights; throws InvalidInput.
void validate(const SquareProblem& sp);

Quad canonical_vertices(double a);

struct FerrariIntermediates {
  double t = 0.0;
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;
};

struct ComplementaryIntermediates {
  double z = 0.0;
  double w = 0.0;
  double s = 0.0;
  double d = 0.0;
};

/// Angles at the optimum between the rays to consecutive vertices.
struct AngleSet {
  double alpha102 = 0.0;
  double alpha203 = 0.0;
  double alpha304 = 0.0;
  double alpha401 = 0.0;
};

/// Stationarity condition of the on-axis objective after squaring:
/// 8(B1^2-B4^2) y^4 + 2a^2(B4^2-B1^2) y^2 - 2a^3(B1^2+B4^2) y + a^4(B1^2-B4^2).
/// Throws DegenerateCoefficients when |B1| == |B4|.
QuarticPoly equilibrium_quartic(const SquareProblem& sp);

/// B1 * |(0,y) - A1| + B4 * |(0,y) - A4|, half the full weighted sum on the axis.
double objective_on_axis(const SquareProblem& sp, double y);

/// Analytic derivative of objective_on_axis with respect to y.
double objective_on_axis_derivative(const SquareProblem& sp, double y);

/// Location y of the weighted Fermat-Torricelli point for positive weights.
///
/// Roots of equilibrium_quartic are filtered to the half-open interval
/// toward the heavier edge and the one with the smallest objective wins.
/// B1 == B4 gives 0; B4 > B1 is solved mirrored and negated.
/// Throws InvalidInput for nonpositive weights and NotFloatingError if the
/// canonical square is in the absorbed regime.
double solve_square_ft(const SquareProblem& sp);

/// Stationary point of the mixed-sign problem (exactly one of B1, B4
/// negative, |B1| > |B4|). It is the real root of the quartic built from the
/// magnitudes that lies beyond a/2, outside the square.
double solve_square_complementary(const SquareProblem& sp);

/// Angles at (0, y) from the half-angle relations of the symmetric
/// configuration. Requires 0 <= y < a/2; throws NotFloatingError when
/// (B1/B4) cos(alpha102/2) exceeds 1.
AngleSet angles_from_y(const SquareProblem& sp, double y);

/// Independent verification path: the nested-radical closed form for the
/// floating optimum, B1 > B4 > 0. Returns the location and its auxiliary
/// quantities.
struct RadicalSolution {
  double y = 0.0;
  FerrariIntermediates aux;
};
RadicalSolution square_ft_radical(const SquareProblem& sp);

/// Nested-radical closed form for the complementary root. The expression is
/// only dimensionally consistent at a = 2; nullopt when the cube-root
/// argument would be complex (s < 0) or a radicand is negative.
struct ComplementaryRadical {
  double y = 0.0;
  ComplementaryIntermediates aux;
};
std::optional<ComplementaryRadical> square_complementary_radical(const SquareProblem& sp);

}  // namespace quadft
