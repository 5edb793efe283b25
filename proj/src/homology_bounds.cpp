#include "embsum/homology_bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "embsum/disjoint_set.hpp"
#include "embsum/errors.hpp"

namespace embsum::bounds {

long long div(std::span<const long long> v) {
  long long g = 0;
  for (long long c : v) g = std::gcd(g, c);
  return g;
}

void ClassRep::validate() const {
  if (sigma && ambient_orientable) {
    throw InputError("class has a torsion summand but the ambient manifold is orientable");
  }
}

ClassRep operator+(const ClassRep& a, const ClassRep& b) {
  a.validate();
  b.validate();
  if (a.free.size() != b.free.size()) throw InputError("class vectors have different lengths");
  if (a.ambient_orientable != b.ambient_orientable) throw InputError("classes disagree on ambient orientability");
  ClassRep s{a.free, a.sigma != b.sigma, a.ambient_orientable};
  for (std::size_t i = 0; i < s.free.size(); ++i) s.free[i] += b.free[i];
  return s;
}

ClassRep scaled(long long k, const ClassRep& a) {
  a.validate();
  ClassRep s{a.free, a.sigma && (k % 2 != 0), a.ambient_orientable};
  for (long long& c : s.free) c *= k;
  return s;
}

long long meeks_C(const ClassRep& rep) {
  rep.validate();
  const long long d = div(rep.free);
  if (rep.ambient_orientable) return d;
  // k beta + sigma = k (beta + sigma) for odd k, and beta + sigma is primitive.
  const bool sigma = rep.sigma && d % 2 == 0;
  return sigma ? d / 2 + 1 : d / 2;
}

std::optional<long long> lb1_bound(const ClassRep& class1, const ClassRep& class2) {
  const long long c = meeks_C(class1 + class2);
  if (c >= 3) return c - 1;
  return std::nullopt;
}

std::optional<Rational> lb2_from_C(long long C, long long a, long long b) {
  if (a == 0 || b == 0) throw InputError("lb2 needs nonzero multipliers a and b");
  const long long aa = std::llabs(a), bb = std::llabs(b);
  if (C <= aa + bb) return std::nullopt;
  long long num = C - std::min(aa, bb);
  long long den = aa * bb;
  const long long g = std::gcd(num, den);
  num /= g;
  den /= g;
  return Rational{num, den, (num + den - 1) / den};
}

std::optional<Rational> lb2_bound(long long a, long long b, const ClassRep& class1, const ClassRep& class2) {
  if (a == 0 || b == 0) throw InputError("lb2 needs nonzero multipliers a and b");
  return lb2_from_C(meeks_C(scaled(a, class1) + scaled(b, class2)), a, b);
}

namespace {

void check_side(const SideIncidence& s, std::size_t arc_count, std::size_t m, const char* side) {
  const auto where = [&] { return std::string(side) + " of crossing " + std::to_string(m); };
  if (s.arcs[0] >= arc_count || s.arcs[1] >= arc_count) throw InputError(where() + " references a missing arc");
  if (s.special && s.arcs[0] != s.arcs[1]) throw InputError(where() + " is special but has two distinct arcs");
}

}  // namespace

IntersectionGraph build_G(const GraphInput& input) {
  IntersectionGraph g;
  g.side1_vertices = input.side1_arcs;
  g.side2_vertices = input.side2_arcs;
  for (std::size_t m = 0; m < input.crossings.size(); ++m) {
    const CrossingIncidence& c = input.crossings[m];
    check_side(c.side1, input.side1_arcs, m, "side 1");
    check_side(c.side2, input.side2_arcs, m, "side 2");
    g.side1_edges.push_back({m, c.side1.arcs[0], c.side1.arcs[1], c.side1.special});
    g.side2_edges.push_back({m, c.side2.arcs[0], c.side2.arcs[1], c.side2.special});
  }
  return g;
}

GPrime build_G_prime(const IntersectionGraph& g, std::span<const std::optional<Pairing>> choices) {
  const std::size_t n = g.side1_edges.size();
  if (g.side2_edges.size() != n) throw InputError("G has unequal edge counts on the two sides");
  if (choices.size() != n) throw InputError("need one choice slot per crossing component");

  GPrime out;
  out.side1_vertices = g.side1_vertices;
  out.vertex_count = g.side1_vertices + g.side2_vertices;
  const auto y = [&](std::size_t arc) { return g.side1_vertices + arc; };

  for (std::size_t m = 0; m < n; ++m) {
    const GraphEdge& e1 = g.side1_edges[m];
    const GraphEdge& e2 = g.side2_edges[m];
    if (e1.m_id != m || e2.m_id != m) throw InputError("G edges are not indexed by crossing component");
    const bool plain = !e1.special && !e2.special;
    if (plain != choices[m].has_value()) {
      throw InputError("crossing " + std::to_string(m) + (plain ? ": missing pairing choice" : ": unexpected pairing choice"));
    }
    if (plain) {
      if (*choices[m] == Pairing::straight) {
        out.edges.push_back({e1.a, y(e2.a)});
        out.edges.push_back({e1.b, y(e2.b)});
      } else {
        out.edges.push_back({e1.a, y(e2.b)});
        out.edges.push_back({e1.b, y(e2.a)});
      }
    } else if (e1.special && e2.special) {
      out.edges.push_back({e1.a, y(e2.a)});
    } else if (e1.special) {
      out.edges.push_back({e1.a, y(e2.a)});
      out.edges.push_back({e1.a, y(e2.b)});
    } else {
      out.edges.push_back({e1.a, y(e2.a)});
      out.edges.push_back({e1.b, y(e2.a)});
    }
  }
  out.components = connected_components(out.vertex_count, out.edges);
  return out;
}

std::size_t connected_components(std::size_t vertex_count, std::span<const std::array<std::size_t, 2>> edges) {
  DisjointSet ds(vertex_count);
  for (const auto& e : edges) {
    if (e[0] >= vertex_count || e[1] >= vertex_count) throw InputError("edge references a missing vertex");
    ds.unite(e[0], e[1]);
  }
  return ds.sets();
}

namespace {

SideIncidence parse_side(const nlohmann::json& j) {
  SideIncidence s;
  if (j.is_object()) {
    const auto a = j.at("special").get<std::size_t>();
    s.special = true;
    s.arcs = {a, a};
  } else if (j.is_array() && j.size() == 2) {
    s.arcs = {j[0].get<std::size_t>(), j[1].get<std::size_t>()};
  } else {
    throw InputError("crossing side must be [in, out] or {\"special\": arc}");
  }
  return s;
}

}  // namespace

GraphInstance graph_instance_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema").get<int>() != 1) throw InputError("unsupported graph schema version");
    GraphInstance g;
    g.input.side1_arcs = j.at("side1_vertices").get<std::size_t>();
    g.input.side2_arcs = j.at("side2_vertices").get<std::size_t>();
    for (const auto& c : j.at("crossings")) {
      g.input.crossings.push_back({parse_side(c.at("side1")), parse_side(c.at("side2"))});
      if (c.contains("choice")) {
        const auto name = c.at("choice").get<std::string>();
        if (name == "straight") {
          g.choices.emplace_back(Pairing::straight);
        } else if (name == "crossed") {
          g.choices.emplace_back(Pairing::crossed);
        } else {
          throw InputError("unknown pairing choice '" + name + "'");
        }
      } else {
        g.choices.emplace_back(std::nullopt);
      }
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed graph instance: ") + e.what());
  }
}

std::string to_string(Pairing p) { return p == Pairing::straight ? "straight" : "crossed"; }

}  // namespace embsum::bounds
