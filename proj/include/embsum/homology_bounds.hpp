#pragma once

// Divisibility, the Meeks component count C(alpha), the intersection graphs
// G and G', and the lower bounds on |Y_1 cap Y_2| derived from them.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace embsum::bounds {

// gcd of the coordinates; 0 for the zero vector.
long long div(std::span<const long long> v);

// alpha = t(alpha) in a fixed basis of the free quotient F, plus the torsion
// summand sigma (only possible when the ambient manifold is non-orientable).
struct ClassRep {
  std::vector<long long> free;
  bool sigma = false;
  bool ambient_orientable = true;

  // Throws InputError if sigma is set on an orientable ambient manifold.
  void validate() const;
};

// Throws InputError on dimension or orientability mismatch.
ClassRep operator+(const ClassRep& a, const ClassRep& b);
ClassRep scaled(long long k, const ClassRep& a);

long long meeks_C(const ClassRep& rep);

// C([Y1] + [Y2]) - 1 when C([Y1] + [Y2]) >= 3.
std::optional<long long> lb1_bound(const ClassRep& class1, const ClassRep& class2);

struct Rational {
  long long num;
  long long den;
  long long ceiling;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// (C - min(|a|, |b|)) / |ab| in lowest terms when C > |a| + |b|; throws
// InputError for a = 0 or b = 0.
std::optional<Rational> lb2_from_C(long long C, long long a, long long b);
std::optional<Rational> lb2_bound(long long a, long long b, const ClassRep& class1, const ClassRep& class2);

// One side of a crossing component m: the arcs of Y_i \ T adjacent to m. A
// special side has a single adjacent arc (non-trivial normal bundle).
struct SideIncidence {
  bool special = false;
  std::array<std::size_t, 2> arcs{};  // (incoming, outgoing); equal for special
};

struct CrossingIncidence {
  SideIncidence side1;
  SideIncidence side2;
};

struct GraphInput {
  std::size_t side1_arcs = 0;
  std::size_t side2_arcs = 0;
  std::vector<CrossingIncidence> crossings;
};

struct GraphEdge {
  std::size_t m_id;
  std::size_t a;
  std::size_t b;
  bool special;
};

// G: vertices are arcs, one edge per crossing component on each side.
struct IntersectionGraph {
  std::size_t side1_vertices = 0;
  std::size_t side2_vertices = 0;
  std::vector<GraphEdge> side1_edges;
  std::vector<GraphEdge> side2_edges;
};

IntersectionGraph build_G(const GraphInput& input);

// Reconnection for a crossing whose two side-edges are non-special:
// straight = x1y1 and x2y2, crossed = x1y2 and x2y1, with x1, x2 (y1, y2) the
// incoming and outgoing arcs.
enum class Pairing { straight, crossed };

// Vertices 0..n1-1 are side-1 arcs, n1..n1+n2-1 are side-2 arcs.
struct GPrime {
  std::size_t vertex_count = 0;
  std::size_t side1_vertices = 0;
  std::vector<std::array<std::size_t, 2>> edges;
  std::size_t components = 0;
};

// choices[m] must be set exactly when both sides of crossing m are non-special.
GPrime build_G_prime(const IntersectionGraph& g, std::span<const std::optional<Pairing>> choices);

std::size_t connected_components(std::size_t vertex_count, std::span<const std::array<std::size_t, 2>> edges);

// Abstract graph instance: {"schema":1, "side1_vertices":n, "side2_vertices":n,
// "crossings":[{"side1":[a,b] | {"special":a}, "side2":..., "choice":"straight"|"crossed"}]}.
struct GraphInstance {
  GraphInput input;
  std::vector<std::optional<Pairing>> choices;
};
GraphInstance graph_instance_from_json(const nlohmann::json& j);

std::string to_string(Pairing p);

}  // namespace embsum::bounds
