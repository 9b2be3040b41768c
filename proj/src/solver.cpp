#include "quadft/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "quadft/error.hpp"

namespace quadft {

namespace {

constexpr double kPatternTol = 1e-12;
constexpr double kFloatingResidualTol = 1e-6;
constexpr double kDiagonalResidualTol = 1e-9;

bool rel_equal(double x, double y) {
  return std::abs(x - y) <= kPatternTol * std::max(std::abs(x), std::abs(y));
}

Solution finish(const QuadProblem& qp, Point location, Method method) {
  Solution s;
  s.location = location;
  s.case_tag = CaseTag::floating();
  s.method = method;
  s.residual = equilibrium_residual(qp, location);
  s.objective = objective(qp, location);
  return s;
}

Solution absorbed_solution(const QuadProblem& qp, int vertex, Method method) {
  const auto resultants = vertex_resultants(qp);
  const auto i = static_cast<std::size_t>(vertex - 1);
  Solution s;
  s.location = qp.vertices()[i];
  s.case_tag = CaseTag::absorbed_at(vertex);
  s.method = method;
  s.residual = qp.weights()[i] - resultants[i];
  s.objective = objective(qp, s.location);
  return s;
}

// Four equal sides and equal diagonals.
bool is_square(const Quad& v) {
  const double s0 = distance(v[0], v[1]);
  for (int i = 1; i < 4; ++i) {
    if (!rel_equal(s0, distance(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>((i + 1) % 4)]))) {
      return false;
    }
  }
  return rel_equal(distance(v[0], v[2]), distance(v[1], v[3]));
}

bool strictly_inside_triangle(Point p, Point a, Point b, Point c) {
  const double o1 = cross(b - a, p - a);
  const double o2 = cross(c - b, p - b);
  const double o3 = cross(a - c, p - c);
  return (o1 > 0 && o2 > 0 && o3 > 0) || (o1 < 0 && o2 < 0 && o3 < 0);
}

void require_positive(const QuadProblem& qp, const char* who) {
  if (!qp.all_positive()) {
    throw Error(ErrorKind::InvalidInput, std::string(who) + ": all weights must be positive");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// QuadProblem

QuadProblem::QuadProblem(const Quad& vertices, const std::array<double, 4>& weights)
    : vertices_(vertices), weights_(weights) {
  for (const Point& p : vertices_) {
    if (!is_finite(p)) throw Error(ErrorKind::InvalidInput, "QuadProblem: non-finite vertex");
  }
  for (double w : weights_) {
    if (!std::isfinite(w) || w == 0.0) {
      throw Error(ErrorKind::InvalidInput, "QuadProblem: weights must be finite and nonzero");
    }
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (vertices_[i] == vertices_[j]) {
        throw Error(ErrorKind::DegenerateInput,
                    "QuadProblem: vertices A" + std::to_string(i + 1) + " and A" +
                        std::to_string(j + 1) + " coincide");
      }
    }
  }
  const double s = scale();
  double max_cross = 0.0;
  for (std::size_t j = 1; j < 4; ++j) {
    for (std::size_t k = j + 1; k < 4; ++k) {
      max_cross = std::max(max_cross, std::abs(cross(vertices_[j] - vertices_[0], vertices_[k] - vertices_[0])));
    }
  }
  if (max_cross <= 1e-12 * s * s) {
    throw Error(ErrorKind::DegenerateInput, "QuadProblem: all four vertices are collinear");
  }
}

bool QuadProblem::all_positive() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](double w) { return w > 0.0; });
}

double QuadProblem::weight_sum() const noexcept {
  double s = 0.0;
  for (double w : weights_) s += std::abs(w);
  return s;
}

double QuadProblem::scale() const noexcept {
  double xmin = vertices_[0].x, xmax = xmin, ymin = vertices_[0].y, ymax = ymin;
  for (const Point& p : vertices_) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  return std::hypot(xmax - xmin, ymax - ymin);
}

QuadProblem QuadProblem::with_scaled_weights(double factor) const {
  std::array<double, 4> w = weights_;
  for (double& x : w) x *= factor;
  return QuadProblem(vertices_, w);
}

// ---------------------------------------------------------------------------
// Tags and evaluators

std::string to_string(const CaseTag& tag) {
  if (tag.absorbed()) return "AbsorbedAt(" + std::to_string(tag.vertex) + ")";
  return "Floating";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::ClosedFormSquare: return "closed-form-square";
    case Method::AngleTransfer: return "angle-transfer";
    case Method::Diagonal: return "diagonal";
    case Method::Weiszfeld: return "weiszfeld";
    case Method::Absorbed: return "absorbed";
  }
  return "unknown";
}

std::array<double, 4> vertex_resultants(const QuadProblem& qp) {
  std::array<double, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    PlanarVector sum{};
    for (std::size_t j = 0; j < 4; ++j) {
      if (j == i) continue;
      sum = sum + qp.weights()[j] * unit_vector(qp.vertices()[i], qp.vertices()[j]);
    }
    out[i] = norm(sum);
  }
  return out;
}

CaseTag classify(const QuadProblem& qp) {
  require_positive(qp, "classify");
  const auto r = vertex_resultants(qp);
  int found = 0;
  for (int i = 0; i < 4; ++i) {
    if (r[static_cast<std::size_t>(i)] <= qp.weight(i)) {
      if (found != 0) {
        throw InconsistencyError({found, i + 1},
                                 "classify: absorbed inequality holds at A" + std::to_string(found) +
                                     " and A" + std::to_string(i + 1));
      }
      found = i + 1;
    }
  }
  return found == 0 ? CaseTag::floating() : CaseTag::absorbed_at(found);
}

double equilibrium_residual(const QuadProblem& qp, Point x) {
  PlanarVector sum{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (x == qp.vertices()[i]) {
      throw Error(ErrorKind::DegenerateInput, "equilibrium_residual: point coincides with a vertex");
    }
    sum = sum + qp.weights()[i] * unit_vector(x, qp.vertices()[i]);
  }
  return norm(sum);
}

double objective(const QuadProblem& qp, Point x) {
  double f = 0.0;
  for (std::size_t i = 0; i < 4; ++i) f += qp.weights()[i] * distance(x, qp.vertices()[i]);
  return f;
}

bool has_diagonal_pattern(const QuadProblem& qp) {
  const auto& w = qp.weights();
  return rel_equal(w[0], w[2]) && rel_equal(w[1], w[3]);
}

bool has_pair_pattern(const QuadProblem& qp) {
  const auto& w = qp.weights();
  return rel_equal(w[0], w[1]) && rel_equal(w[2], w[3]);
}

std::optional<AngleSet> angles_at_point(const QuadProblem& qp, Point x) {
  const auto& v = qp.vertices();
  if (std::find(v.begin(), v.end(), x) != v.end()) return std::nullopt;
  AngleSet s;
  s.alpha102 = angle_at(x, v[0], v[1]);
  s.alpha203 = angle_at(x, v[1], v[2]);
  s.alpha304 = angle_at(x, v[2], v[3]);
  s.alpha401 = angle_at(x, v[3], v[0]);
  const double total = s.alpha102 + s.alpha203 + s.alpha304 + s.alpha401;
  if (std::abs(total - 2.0 * std::numbers::pi) > 1e-9) return std::nullopt;
  return s;
}

// ---------------------------------------------------------------------------
// Weiszfeld

Point weiszfeld(std::span<const Point> points, std::span<const double> weights,
                const WeiszfeldOptions& options) {
  const std::size_t n = points.size();
  if (n < 3 || weights.size() != n) {
    throw Error(ErrorKind::InvalidInput, "weiszfeld: need at least three points with one weight each");
  }
  if (!(options.tol > 0.0) || options.max_iter <= 0) {
    throw Error(ErrorKind::InvalidInput, "weiszfeld: tol and max_iter must be positive");
  }
  double wsum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(ErrorKind::InvalidInput, "weiszfeld: weights must be positive");
    }
    wsum += w;
  }
  double xmin = points[0].x, xmax = xmin, ymin = points[0].y, ymax = ymin;
  for (const Point& p : points) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double scale = std::hypot(xmax - xmin, ymax - ymin);
  double max_cross = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      max_cross = std::max(max_cross, std::abs(cross(points[j] - points[0], points[k] - points[0])));
    }
  }
  if (max_cross <= 1e-12 * scale * scale) {
    throw Error(ErrorKind::DegenerateInput, "weiszfeld: points are collinear");
  }

  const double snap = 1e-12 * scale;

  // Pull toward the other points, excluding `skip` (npos for none).
  struct Pull {
    PlanarVector resultant;  // sum w_j u(x, p_j)
    Point target;            // weighted reciprocal-distance average
  };
  auto pull = [&](Point x, std::size_t skip) {
    PlanarVector res{};
    double sx = 0.0, sy = 0.0, sw = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == skip) continue;
      const double d = distance(x, points[j]);
      const double c = weights[j] / d;
      res = res + c * (points[j] - x);
      sx += c * points[j].x;
      sy += c * points[j].y;
      sw += c;
    }
    return Pull{res, Point{sx / sw, sy / sw}};
  };

  auto nearest = [&](Point x) {
    std::size_t k = 0;
    double best = distance(x, points[0]);
    for (std::size_t j = 1; j < n; ++j) {
      const double d = distance(x, points[j]);
      if (d < best) {
        best = d;
        k = j;
      }
    }
    return std::pair{k, best};
  };

  auto weighted_sum = [&](Point x) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += weights[j] * distance(x, points[j]);
    return s;
  };

  auto newton_step = [&](Point x) -> std::optional<Point> {
    double gx = 0.0, gy = 0.0, hxx = 0.0, hxy = 0.0, hyy = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const PlanarVector d = x - points[j];
      const double r = norm(d);
      if (r <= snap) return std::nullopt;
      const double ux = d.dx / r, uy = d.dy / r, c = weights[j] / r;
      gx += weights[j] * ux;
      gy += weights[j] * uy;
      hxx += c * (1.0 - ux * ux);
      hxy -= c * ux * uy;
      hyy += c * (1.0 - uy * uy);
    }
    const double det = hxx * hyy - hxy * hxy;
    if (!(det > 0.0) || !std::isfinite(det)) return std::nullopt;
    const Point nx{x.x - (hyy * gx - hxy * gy) / det, x.y - (hxx * gy - hxy * gx) / det};
    if (!is_finite(nx) || nearest(nx).second <= snap) return std::nullopt;
    return nx;
  };

  Point x{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    x.x += weights[i] * points[i].x / wsum;
    x.y += weights[i] * points[i].y / wsum;
  }

  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  for (int iter = 0; iter < options.max_iter; ++iter) {
    Point next;
    const auto [k, dk] = nearest(x);
    if (dk <= snap) {
      x = points[k];
      const Pull p = pull(x, k);
      const double r = norm(p.resultant);
      if (r <= weights[k]) return x;
      const double lambda = weights[k] / r;
      next = Point{(1.0 - lambda) * p.target.x + lambda * x.x, (1.0 - lambda) * p.target.y + lambda * x.y};
    } else {
      next = pull(x, npos).target;
      // Safeguarded Newton step. Plain Weiszfeld crawls when the optimum
      // sits close to a vertex; keep whichever candidate is lower.
      if (const auto nx = newton_step(x)) {
        // Near the optimum the objective is too flat to compare; the
        // resultant still is.
        const double fn = weighted_sum(*nx), fw = weighted_sum(next);
        if (fn < fw || (fn <= fw * (1.0 + 1e-12) &&
                        norm(pull(*nx, npos).resultant) < norm(pull(next, npos).resultant))) {
          next = *nx;
        }
      }
    }
    const double step = distance(x, next);
    x = next;
    if (step < options.tol) {
      const auto [kk, dd] = nearest(x);
      if (dd <= 1e-6 * scale) {
        const double r = norm(pull(points[kk], kk).resultant);
        if (r <= weights[kk]) return points[kk];
      }
      return x;
    }
  }

  PlanarVector res{};
  bool at_vertex = false;
  for (std::size_t j = 0; j < n; ++j) {
    if (x == points[j]) at_vertex = true;
  }
  if (!at_vertex) res = pull(x, npos).resultant;
  throw NonConvergenceError(x, norm(res),
                            "weiszfeld: no convergence within " + std::to_string(options.max_iter) +
                                " iterations");
}

Solution solve_weiszfeld(const QuadProblem& qp, const WeiszfeldOptions& options) {
  require_positive(qp, "solve_weiszfeld");
  const CaseTag tag = classify(qp);
  WeiszfeldOptions scaled = options;
  scaled.tol = options.tol * qp.scale();
  const Point x = weiszfeld(qp.vertices(), qp.weights(), scaled);
  if (tag.absorbed()) {
    Solution s = absorbed_solution(qp, tag.vertex, Method::Weiszfeld);
    s.location = x;
    s.objective = objective(qp, x);
    return s;
  }
  return finish(qp, x, Method::Weiszfeld);
}

// ---------------------------------------------------------------------------
// Closed-form cases

Solution solve_diagonal_case(const QuadProblem& qp) {
  if (!has_diagonal_pattern(qp)) {
    throw Error(ErrorKind::WrongCase, "solve_diagonal_case: requires B1 = B3 and B2 = B4");
  }
  const auto& w = qp.weights();
  const bool all_neg = std::all_of(w.begin(), w.end(), [](double x) { return x < 0.0; });
  if (!qp.all_positive() && !all_neg) {
    throw Error(ErrorKind::WrongCase, "solve_diagonal_case: weights must share one sign");
  }
  const auto& v = qp.vertices();
  if (!is_convex_quad(v)) {
    throw Error(ErrorKind::WrongCase, "solve_diagonal_case: quadrilateral is not convex");
  }
  // Negating every weight flips every term of the equilibrium sum, so the
  // stationary point is shared with the positive problem.
  const QuadProblem positive = all_neg ? qp.with_scaled_weights(-1.0) : qp;
  if (const CaseTag tag = classify(positive); tag.absorbed()) {
    throw NotFloatingError(tag.vertex, "solve_diagonal_case: optimum absorbed at A" +
                                           std::to_string(tag.vertex));
  }
  const auto crossing = segment_intersection(v[0], v[2], v[1], v[3]);
  if (!crossing) {
    throw Error(ErrorKind::InternalInconsistency, "solve_diagonal_case: diagonals do not cross");
  }
  Solution s = finish(qp, *crossing, Method::Diagonal);
  if (s.residual > kDiagonalResidualTol * qp.weight_sum()) {
    throw Error(ErrorKind::InternalInconsistency,
                "solve_diagonal_case: residual at the diagonal crossing exceeds tolerance");
  }
  return s;
}

namespace {

// Angle transfer on a relabelled problem with B1 = B2 > B3 = B4 > 0.
// Returns nullopt when the construction is not applicable.
std::optional<Point> angle_transfer(const Quad& v, double heavy, double light) {
  const AngleSet angles = angles_from_y({1.0, heavy, light}, solve_square_ft({1.0, heavy, light}));

  const double denom = light * std::sin(angles.alpha401) - heavy * std::sin(angles.alpha102);
  const double cot_far =
      (heavy + heavy * std::cos(angles.alpha102) + light * std::cos(angles.alpha401));
  if (std::abs(denom) <= 1e-12 * (heavy + light)) return std::nullopt;
  const double cot_phi = cot_far / denom;  // cot(alpha304 + alpha401)

  const double beta = angle_at(v[0], v[1], v[2]);  // angle A2' A1' A3'
  const double ratio = distance(v[0], v[2]) / distance(v[0], v[1]);
  const double cot102 = 1.0 / std::tan(angles.alpha102);
  const double num = std::sin(beta) - std::cos(beta) * cot102 - ratio * cot_phi;
  const double den = ratio - std::sin(beta) * cot102 - std::cos(beta);
  if (std::abs(den) <= 1e-14 * (std::abs(num) + 1.0)) return std::nullopt;
  // The right-hand side is cot(alpha013'); invert onto (0, pi).
  const double theta = 0.5 * std::numbers::pi - std::atan(num / den);
  if (!(theta > 0.0 && theta < beta)) return std::nullopt;

  const double alpha120 = std::numbers::pi - angles.alpha102 - (beta - theta);
  if (!(alpha120 > 0.0)) return std::nullopt;
  const double a12 = distance(v[0], v[1]);
  const double a01 = a12 * std::sin(alpha120) / std::sin(angles.alpha102);

  const double side = cross(v[2] - v[0], v[1] - v[0]) > 0.0 ? 1.0 : -1.0;
  const PlanarVector dir = rotate(unit_vector(v[0], v[2]), side * theta);
  const Point a0 = v[0] + a01 * dir;
  if (!strictly_inside_triangle(a0, v[0], v[1], v[2])) return std::nullopt;
  return a0;
}

}  // namespace

Solution solve_pair_case(const QuadProblem& qp) {
  require_positive(qp, "solve_pair_case");
  if (!has_pair_pattern(qp) || rel_equal(qp.weight(0), qp.weight(2))) {
    throw Error(ErrorKind::WrongCase, "solve_pair_case: requires B1 = B2 and B3 = B4 with B1 != B3");
  }
  if (!is_convex_quad(qp.vertices())) {
    throw Error(ErrorKind::WrongCase, "solve_pair_case: quadrilateral is not convex");
  }
  if (const CaseTag tag = classify(qp); tag.absorbed()) {
    throw NotFloatingError(tag.vertex, "solve_pair_case: optimum absorbed at A" +
                                           std::to_string(tag.vertex));
  }
  // Heavier pair first: relabel A3 A4 A1 A2 when B3 = B4 > B1 = B2.
  const std::size_t shift = qp.weight(0) > qp.weight(2) ? 0 : 2;
  Quad v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = qp.vertices()[(i + shift) % 4];
  const double heavy = qp.weights()[shift];
  const double light = qp.weights()[(shift + 2) % 4];

  if (const auto a0 = angle_transfer(v, heavy, light)) {
    Solution s = finish(qp, *a0, Method::AngleTransfer);
    if (s.residual <= kFloatingResidualTol * qp.weight_sum()) return s;
  }
  Solution s = solve_weiszfeld(qp);
  s.fallback = true;
  return s;
}

std::optional<Solution> solve_closed_form(const QuadProblem& qp) {
  require_positive(qp, "solve_closed_form");
  if (classify(qp).absorbed()) return std::nullopt;
  const auto& v = qp.vertices();
  if (!is_convex_quad(v)) return std::nullopt;
  if (has_diagonal_pattern(qp)) return solve_diagonal_case(qp);
  if (!has_pair_pattern(qp)) return std::nullopt;
  if (is_square(v)) {
    const Point centre{0.5 * (v[0].x + v[2].x), 0.5 * (v[0].y + v[2].y)};
    const Point mid12{0.5 * (v[0].x + v[1].x), 0.5 * (v[0].y + v[1].y)};
    const double y = solve_square_ft({distance(v[0], v[1]), qp.weight(0), qp.weight(2)});
    return finish(qp, centre + y * unit_vector(centre, mid12), Method::ClosedFormSquare);
  }
  return solve_pair_case(qp);
}

Solution solve(const QuadProblem& qp, const WeiszfeldOptions& options) {
  require_positive(qp, "solve");
  const CaseTag tag = classify(qp);
  if (tag.absorbed()) return absorbed_solution(qp, tag.vertex, Method::Absorbed);
  if (auto s = solve_closed_form(qp)) return *s;
  return solve_weiszfeld(qp, options);
}

}  // namespace quadft
