#pragma once

#include <array>
#include <cmath>
#include <random>

#include "quadft/geom.hpp"
#include "quadft/square.hpp"

namespace construct {

struct Similarity {
  double angle = 0.0;
  double scale = 1.0;
  quadft::PlanarVector shift{};

  quadft::Point operator()(quadft::Point p) const {
    const quadft::PlanarVector r = quadft::rotate({p.x, p.y}, angle);
    return quadft::Point{scale * r.dx + shift.dx, scale * r.dy + shift.dy};
  }
};

inline Similarity random_similarity(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return Similarity{2.0 * M_PI * u(rng), 0.2 + 5.0 * u(rng), {-10.0 + 20.0 * u(rng), -10.0 + 20.0 * u(rng)}};
}

struct RayInstance {
  quadft::Quad vertices;
  quadft::Point optimum;
};

/// Pushes each vertex of the canonical square along the ray from the
/// floating optimum (0, y) through it by the given factor. Moving vertices
/// along those rays preserves every unit vector at the optimum, so the
/// optimum itself stays put.
inline RayInstance push_along_rays(double a, double y, const std::array<double, 4>& factors,
                                   const Similarity& sim = {}) {
  const quadft::Quad sq = quadft::canonical_vertices(a);
  const quadft::Point a0{0.0, y};
  RayInstance out;
  for (std::size_t i = 0; i < 4; ++i) out.vertices[i] = sim(a0 + factors[i] * (sq[i] - a0));
  out.optimum = sim(a0);
  return out;
}

}  // namespace construct
