#pragma once

// Torus curve fixtures and a seeded generator of transversal pairs.

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "embsum/torus_curve.hpp"

namespace embsum::instances {

using torus::TorusCurve;
using torus::Vec2;

// Straight closed geodesic of class (p, q) through `base`, with `pieces`
// segments along it.
TorusCurve geodesic(const std::string& id, long long p, long long q, Vec2 base, int pieces = 1);

// Graph of `amplitude * sin(2 pi freq s + phase)` over the geodesic of class
// (p, q); embedded when amplitude < 0.5 / |(p, q)|.
TorusCurve wavy_geodesic(const std::string& id, long long p, long long q, Vec2 base, double amplitude,
                         int freq, double phase, int vertices);

// Convex n-gon around `centre`.
TorusCurve small_polygon(const std::string& id, Vec2 centre, double radius, int n, double rotation);

// A (1, 0) curve meeting the line u = 0.5 three times with signs (+, -, +).
std::pair<TorusCurve, TorusCurve> zigzag_pair();

// Random transversal pair: wavy geodesics of primitive classes with
// coordinates in [-3, 3], occasionally a small contractible polygon. Retries
// until the pair is transversal and resolvable.
std::pair<TorusCurve, TorusCurve> random_transversal_pair(std::mt19937_64& rng);

// Random closed embedded curve of the same families.
TorusCurve random_curve(std::mt19937_64& rng, const std::string& id);

}  // namespace embsum::instances
