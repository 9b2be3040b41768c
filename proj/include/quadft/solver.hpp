#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>

#include "quadft/geom.hpp"
#include "quadft/square.hpp"

namespace quadft {

/// Four ordered vertices A1..A4 with signed weights B1..B4.
///
/// Construction rejects non-finite data, coincident vertices, four
/// collinear vertices and zero weights. Immutable afterwards.
class QuadProblem {
 public:
  QuadProblem(const Quad& vertices, const std::array<double, 4>& weights);

  const Quad& vertices() const noexcept { return vertices_; }
  const std::array<double, 4>& weights() const noexcept { return weights_; }
  Point vertex(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }
  double weight(int i) const { return weights_.at(static_cast<std::size_t>(i)); }

  bool all_positive() const noexcept;
  /// Sum of |B_i|.
  double weight_sum() const noexcept;
  /// Diagonal of the bounding box; the length scale for tolerances.
  double scale() const noexcept;

  /// Same vertices, weights multiplied by `factor`.
  QuadProblem with_scaled_weights(double factor) const;

 private:
  Quad vertices_;
  std::array<double, 4> weights_;
};

struct CaseTag {
  enum class Kind { Floating, Absorbed };
  Kind kind = Kind::Floating;
  /// 1-based absorbing vertex, 0 when floating.
  int vertex = 0;

  bool absorbed() const noexcept { return kind == Kind::Absorbed; }
  static CaseTag floating() { return {}; }
  static CaseTag absorbed_at(int v) { return {Kind::Absorbed, v}; }
  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

std::string to_string(const CaseTag& tag);

enum class Method { ClosedFormSquare, AngleTransfer, Diagonal, Weiszfeld, Absorbed };

std::string to_string(Method m);

struct Solution {
  Point location;
  CaseTag case_tag;
  Method method = Method::Weiszfeld;
  /// Equilibrium norm for floating solutions; B_i - R_i slack when absorbed.
  double residual = 0.0;
  double objective = 0.0;
  /// Set when a closed form was attempted and Weiszfeld took over.
  bool fallback = false;
};

/// R_i = |sum_{j != i} B_j u(A_i, A_j)| for each vertex.
std::array<double, 4> vertex_resultants(const QuadProblem& qp);

/// Floating, or AbsorbedAt(i) for the vertex with R_i <= B_i. Requires
/// positive weights. Throws InconsistencyError if two vertices qualify.
CaseTag classify(const QuadProblem& qp);

/// |sum_i B_i u(x, A_i)|, signed weights allowed. Throws DegenerateInput if
/// x is a vertex.
double equilibrium_residual(const QuadProblem& qp, Point x);

/// sum_i B_i |x - A_i|, signed weights allowed.
double objective(const QuadProblem& qp, Point x);

struct WeiszfeldOptions {
  double tol = 1e-10;
  int max_iter = 10000;
};

/// Weighted geometric median by the Weiszfeld fixed-point iteration.
///
/// Starts at the weighted centroid. An iterate within 1e-12 of the scale of a
/// vertex is snapped onto it; if the absorbed inequality holds there the
/// vertex is returned, otherwise the iteration steps off along the descent
/// direction (the Vardi-Zhang modified update). Stops when successive
/// iterates differ by less than `tol`. Throws NonConvergenceError after
/// `max_iter` iterations.
Point weiszfeld(std::span<const Point> points, std::span<const double> weights,
                const WeiszfeldOptions& options = {});

/// Convex quadrilateral with B1 = B3 and B2 = B4: the diagonals' crossing.
/// Also accepts all four weights negative. Throws WrongCase otherwise.
Solution solve_diagonal_case(const QuadProblem& qp);

/// Convex quadrilateral with B1 = B2 > B3 = B4 > 0 (or the pattern rotated
/// by two labels), by transferring the vertex angles of the symmetric
/// square solution. Falls back to Weiszfeld when the construction leaves the
/// triangle A1A2A3 or fails the residual check.
Solution solve_pair_case(const QuadProblem& qp);

/// Closed-form route for a floating, convex instance with one of the
/// recognised weight patterns: diagonal crossing, square closed form, or
/// angle transfer (which may come back with `fallback` set). nullopt when
/// no closed form applies, including the absorbed case.
std::optional<Solution> solve_closed_form(const QuadProblem& qp);

/// Classify, then dispatch to the absorbed vertex, the diagonal case, the
/// pair case (closed form on an actual square) or Weiszfeld.
Solution solve(const QuadProblem& qp, const WeiszfeldOptions& options = {});

/// Solution through Weiszfeld regardless of the weight pattern.
Solution solve_weiszfeld(const QuadProblem& qp, const WeiszfeldOptions& options = {});

/// Weight pattern predicates, relative tolerance 1e-12.
bool has_diagonal_pattern(const QuadProblem& qp);
bool has_pair_pattern(const QuadProblem& qp);

/// Angles at x between rays to consecutive vertices; nullopt unless x is
/// strictly inside the quadrilateral (angles then sum to 2 pi).
std::optional<AngleSet> angles_at_point(const QuadProblem& qp, Point x);

}  // namespace quadft
