#include "embsum/instances.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "embsum/curve_resolver.hpp"
#include "embsum/errors.hpp"

namespace embsum::instances {

TorusCurve geodesic(const std::string& id, long long p, long long q, Vec2 base, int pieces) {
  if (pieces < 1) throw DomainError("geodesic needs at least one piece");
  const Vec2 K{static_cast<double>(p), static_cast<double>(q)};
  std::vector<Vec2> lift;
  for (int k = 0; k <= pieces; ++k) lift.push_back(base + (static_cast<double>(k) / pieces) * K);
  return TorusCurve(id, std::move(lift));
}

TorusCurve wavy_geodesic(const std::string& id, long long p, long long q, Vec2 base, double amplitude, int freq,
                         double phase, int vertices) {
  const Vec2 K{static_cast<double>(p), static_cast<double>(q)};
  const Vec2 normal = Vec2{-K.y(), K.x()} / K.norm();
  std::vector<Vec2> lift;
  for (int k = 0; k <= vertices; ++k) {
    const double s = static_cast<double>(k) / vertices;
    lift.push_back(base + s * K + amplitude * std::sin(2.0 * std::numbers::pi * freq * s + phase) * normal);
  }
  return TorusCurve(id, std::move(lift));
}

TorusCurve small_polygon(const std::string& id, Vec2 centre, double radius, int n, double rotation) {
  std::vector<Vec2> lift;
  for (int k = 0; k <= n; ++k) {
    const double a = rotation + 2.0 * std::numbers::pi * (k % n) / n;
    lift.push_back(centre + radius * Vec2{std::cos(a), std::sin(a)});
  }
  return TorusCurve(id, std::move(lift));
}

std::pair<TorusCurve, TorusCurve> zigzag_pair() {
  TorusCurve c1("zigzag", {{0.0, 0.1}, {0.7, 0.1}, {0.3, 0.4}, {0.8, 0.7}, {1.0, 0.1}});
  return {c1, geodesic("vertical", 0, 1, {0.5, 0.0})};
}

TorusCurve random_curve(std::mt19937_64& rng, const std::string& id) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    try {
      const Vec2 base{unit(rng), unit(rng)};
      if (unit(rng) < 0.15) {
        std::uniform_int_distribution<int> sides(3, 7);
        const TorusCurve c = small_polygon(id, base, 0.05 + 0.15 * unit(rng), sides(rng), 2.0 * std::numbers::pi * unit(rng));
        return unit(rng) < 0.5 ? c : c.reversed();
      }
      std::uniform_int_distribution<long long> coord(-3, 3);
      const long long p = coord(rng), q = coord(rng);
      if (std::gcd(p, q) != 1) continue;
      const double len = std::hypot(static_cast<double>(p), static_cast<double>(q));
      std::uniform_int_distribution<int> freq(1, 3), verts(5, 14);
      return wavy_geodesic(id, p, q, base, 0.35 * unit(rng) / len, freq(rng), 2.0 * std::numbers::pi * unit(rng),
                           verts(rng));
    } catch (const GeometryError&) {
    }
  }
}

std::pair<TorusCurve, TorusCurve> random_transversal_pair(std::mt19937_64& rng) {
  for (;;) {
    TorusCurve c1 = random_curve(rng, "Y1");
    TorusCurve c2 = random_curve(rng, "Y2");
    try {
      resolver::find_intersections(c1, c2);
      return {std::move(c1), std::move(c2)};
    } catch (const NonTransversalError&) {
    }
  }
}

}  // namespace embsum::instances
