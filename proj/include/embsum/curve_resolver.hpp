#pragma once

// Transversal crossings of two oriented curves on the torus and their oriented
// resolution: at each crossing both strands are cut at distance `chamfer` and
// the incoming end of each strand is joined to the outgoing end of the other.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "embsum/homology_bounds.hpp"
#include "embsum/torus_curve.hpp"

namespace embsum::resolver {

using torus::H1Class;
using torus::Shift;
using torus::TorusCurve;
using torus::Vec2;

inline constexpr double kAngleMin = 1e-3;

struct Crossing {
  Vec2 point;        // in [0, 1)^2
  Vec2 lift1;        // the crossing on curve 1's lift
  std::size_t seg1;
  std::size_t seg2;
  double param1;     // position along seg1 in [0, 1]
  double param2;
  Shift shift;       // curve 2's segment seg2, shifted by this, passes through lift1
  int sign;          // sign of det(tangent1, tangent2)
  double sin_angle;
};

// Ordered by (seg1, param1). Throws NonTransversalError for tangential,
// vertex or overlapping contacts.
std::vector<Crossing> find_intersections(const TorusCurve& c1, const TorusCurve& c2, double angle_min = kAngleMin);

H1Class homology_class(const TorusCurve& c);

enum class VertexSource { curve1, curve2, cut };

struct ResolvedDiagram {
  std::vector<TorusCurve> curves;
  std::vector<std::vector<VertexSource>> provenance;  // per curve, per lift vertex
  double chamfer = 0.0;                               // 0 when there was nothing to resolve
};

// Largest radius r such that the open r-ball around each crossing meets only
// the two crossing segments; infinity without crossings.
double max_admissible_chamfer(const TorusCurve& c1, const TorusCurve& c2, std::span<const Crossing> crossings);

// min(0.25 * minimum crossing separation, 0.5 * admissible radius).
double default_chamfer(const TorusCurve& c1, const TorusCurve& c2, std::span<const Crossing> crossings);

// Throws GeometryError if chamfer is not below the admissible radius.
ResolvedDiagram resolve(const TorusCurve& c1, const TorusCurve& c2, std::optional<double> chamfer = std::nullopt);

std::size_t count_components(const ResolvedDiagram& d);
H1Class total_class(std::span<const TorusCurve> curves);

struct OrientationReport {
  bool compatible;
  std::vector<int> signs;
};
OrientationReport orientation_compat(const TorusCurve& c1, const TorusCurve& c2);

// floor(|a|/2) pairs of normal offsets at +-eps_j, plus the curve itself for
// odd a; all reversed for a < 0.
std::vector<TorusCurve> offset_copies(const TorusCurve& c, long long a, std::span<const double> eps_schedule);

// Arc incidences of the crossing data: arcs of curve i are the pieces between
// consecutive crossings along it; the geometric resolution is always `crossed`.
struct ArcData {
  bounds::GraphInput input;
  std::vector<std::optional<bounds::Pairing>> choices;
};
ArcData arc_data(std::span<const Crossing> crossings);

}  // namespace embsum::resolver
