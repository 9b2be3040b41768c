#pragma once

#include <vector>

namespace quadft {

/// c4*y^4 + c3*y^3 + c2*y^2 + c1*y + c0.
struct QuarticPoly {
  double c4 = 0.0;
  double c3 = 0.0;
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  friend bool operator==(const QuarticPoly&, const QuarticPoly&) = default;
};

struct RealRoot {
  double value = 0.0;
  int multiplicity = 1;
};

/// Real roots in ascending order. Roots closer than 1e-7 of the root scale
/// are merged and carry a multiplicity.
struct RealRoots {
  std::vector<RealRoot> roots;

  /// Total multiplicity (0, 2 or 4 for a genuine quartic).
  int count() const;
  /// Roots expanded by multiplicity, ascending.
  std::vector<double> values() const;
};

/// Horner evaluation.
double evaluate(const QuarticPoly& p, double y);

/// Derivative P'(y).
double evaluate_derivative(const QuarticPoly& p, double y);

/// Backward-error style residual |P(y)| / sum_i |c_i| |y|^i.
double scaled_residual(const QuarticPoly& p, double y);

/// Real roots of a quartic with c4 != 0 by Ferrari's method.
///
/// Coefficients are normalised by their largest magnitude and made monic.
/// The depressed quartic is split into two real quadratics through the
/// largest root of the resolvent cubic; each real root is then polished
/// with Newton steps on the original polynomial (accepted only while |P|
/// decreases, at most 50).
///
/// Throws InvalidInput on non-finite coefficients or c4 == 0.
RealRoots solve_real_quartic(const QuarticPoly& p);

/// Real roots of the monic cubic x^3 + b x^2 + c x + d, ascending, without
/// multiplicity merging. Cardano's real branch when the discriminant gives
/// one real root, the trigonometric form for three.
std::vector<double> solve_real_cubic(double b, double c, double d);

}  // namespace quadft
