#include "quadft/geom.hpp"

#include <algorithm>

#include "quadft/error.hpp"

namespace quadft {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::DegenerateCoefficients: return "degenerate-coefficients";
    case ErrorKind::NotFloating: return "not-floating";
    case ErrorKind::WrongCase: return "wrong-case";
    case ErrorKind::NonConvergence: return "non-convergence";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

namespace {

constexpr double kOrientationTol = 1e-12;

// Sign of cross(u, v) with a relative dead zone.
int orientation(PlanarVector u, PlanarVector v) {
  const double c = cross(u, v);
  if (std::abs(c) <= kOrientationTol * norm(u) * norm(v)) return 0;
  return c > 0 ? 1 : -1;
}

}  // namespace

PlanarVector unit_vector(Point from, Point to) {
  const PlanarVector d = to - from;
  const double len = norm(d);
  if (!(len > 0.0)) {
    throw Error(ErrorKind::DegenerateInput, "unit_vector: coincident points");
  }
  return {d.dx / len, d.dy / len};
}

double angle_at(Point vertex, Point p, Point q) {
  if (p == vertex || q == vertex) {
    throw Error(ErrorKind::DegenerateInput, "angle_at: ray endpoint coincides with vertex");
  }
  const PlanarVector u = unit_vector(vertex, p);
  const PlanarVector v = unit_vector(vertex, q);
  // atan2 form of arccos(u.v); accurate near 0 and pi.
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

std::optional<Point> segment_intersection(Point a, Point b, Point c, Point d) {
  if (a == b || c == d) {
    throw Error(ErrorKind::DegenerateInput, "segment_intersection: zero-length segment");
  }
  const PlanarVector ab = b - a;
  const PlanarVector cd = d - c;
  const int o1 = orientation(ab, c - a);
  const int o2 = orientation(ab, d - a);
  const int o3 = orientation(cd, a - c);
  const int o4 = orientation(cd, b - c);

  if (o1 == 0 && o2 == 0) {
    // Collinear: project onto ab and compare parameter intervals.
    const double len2 = dot(ab, ab);
    double t0 = dot(c - a, ab) / len2;
    double t1 = dot(d - a, ab) / len2;
    if (t0 > t1) std::swap(t0, t1);
    const double lo = std::max(0.0, t0);
    const double hi = std::min(1.0, t1);
    if (lo > hi) return std::nullopt;
    if (lo == hi) return a + lo * ab;
    throw Error(ErrorKind::DegenerateInput, "segment_intersection: collinear overlap");
  }
  if (o1 * o2 > 0 || o3 * o4 > 0) return std::nullopt;

  // Parameter along ab from the signed areas of c and d.
  const double sc = cross(ab, c - a);
  const double sd = cross(ab, d - a);
  if (o1 == 0) return c;
  if (o2 == 0) return d;
  if (o3 == 0) return a;
  if (o4 == 0) return b;
  const double s = sc / (sc - sd);
  return c + s * cd;
}

PlanarVector rotate(PlanarVector v, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * v.dx - s * v.dy, s * v.dx + c * v.dy};
}

bool is_convex_quad(const Quad& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j]) {
        throw Error(ErrorKind::DegenerateInput, "is_convex_quad: repeated vertex");
      }
    }
  }
  int sign = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const PlanarVector e0 = vertices[(i + 1) % 4] - vertices[i];
    const PlanarVector e1 = vertices[(i + 2) % 4] - vertices[(i + 1) % 4];
    const int o = orientation(e0, e1);
    if (o == 0) return false;
    if (sign == 0) sign = o;
    if (o != sign) return false;
  }
  return true;
}

double signed_area(const Quad& vertices) {
  double twice = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const Point& p = vertices[i];
    const Point& q = vertices[(i + 1) % 4];
    twice += p.x * q.y - q.x * p.y;
  }
  return 0.5 * twice;
}

}  // namespace quadft
