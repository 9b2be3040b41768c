#pragma once

#include <array>
#include <cmath>
#include <optional>

namespace quadft {

struct PlanarVector {
  double dx = 0.0;
  double dy = 0.0;

  friend constexpr PlanarVector operator+(PlanarVector a, PlanarVector b) {
    return {a.dx + b.dx, a.dy + b.dy};
  }
  friend constexpr PlanarVector operator-(PlanarVector a, PlanarVector b) {
    return {a.dx - b.dx, a.dy - b.dy};
  }
  friend constexpr PlanarVector operator-(PlanarVector a) { return {-a.dx, -a.dy}; }
  friend constexpr PlanarVector operator*(double s, PlanarVector v) {
    return {s * v.dx, s * v.dy};
  }
  friend constexpr bool operator==(PlanarVector, PlanarVector) = default;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr PlanarVector operator-(Point a, Point b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend constexpr Point operator+(Point p, PlanarVector v) {
    return {p.x + v.dx, p.y + v.dy};
  }
  friend constexpr bool operator==(Point, Point) = default;
};

using Quad = std::array<Point, 4>;

constexpr double dot(PlanarVector a, PlanarVector b) { return a.dx * b.dx + a.dy * b.dy; }

/// z-component of the 3-D cross product; positive when b is counterclockwise of a.
constexpr double cross(PlanarVector a, PlanarVector b) { return a.dx * b.dy - a.dy * b.dx; }

inline double norm(PlanarVector v) { return std::hypot(v.dx, v.dy); }
inline double distance(Point a, Point b) { return norm(b - a); }

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }
inline bool is_finite(PlanarVector v) { return std::isfinite(v.dx) && std::isfinite(v.dy); }

/// Unit vector pointing from `from` toward `to`. Throws on coincident points.
PlanarVector unit_vector(Point from, Point to);

/// Angle between the rays vertex->p and vertex->q, in [0, pi].
double angle_at(Point vertex, Point p, Point q);

/// Intersection of the closed segments [a,b] and [c,d].
///
/// Returns nullopt when the segments are disjoint (including parallel
/// disjoint segments). A collinear overlap has no unique answer and throws
/// a DegenerateInput error. Orientation tests treat cross products below
/// 1e-12 of the product of the operand lengths as zero.
std::optional<Point> segment_intersection(Point a, Point b, Point c, Point d);

/// Counterclockwise rotation by `theta` radians.
PlanarVector rotate(PlanarVector v, double theta);

/// True iff consecutive edge turns all share a strict sign, i.e. the
/// vertices form a simple, strictly convex polygon in the given order.
bool is_convex_quad(const Quad& vertices);

/// Signed area of a polygon traversed in the given order (positive = ccw).
double signed_area(const Quad& vertices);

}  // namespace quadft
