#include "embsum/curve_resolver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "embsum/errors.hpp"

namespace embsum::resolver {

using torus::HitKind;
using torus::Segment;
using torus::to_vec;

namespace {

// The chamfer ball must not wrap onto itself on the torus.
constexpr double kChamferCap = 0.25;

std::string fmt(const Vec2& p) {
  std::ostringstream os;
  os.precision(6);
  os << "(" << p.x() << ", " << p.y() << ")";
  return os.str();
}

Vec2 unit(const Vec2& v) { return v / v.norm(); }
Vec2 left_normal(const Vec2& d) { return Vec2{-d.y(), d.x()}; }

// A crossing seen from one of the two curves.
struct StrandStop {
  std::size_t crossing;
  std::size_t seg;
  double param;
  Vec2 point;  // in this curve's lift coordinates
};

std::vector<StrandStop> stops_along(std::span<const Crossing> xs, int curve) {
  std::vector<StrandStop> stops;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const Crossing& x = xs[k];
    if (curve == 0) {
      stops.push_back({k, x.seg1, x.param1, x.lift1});
    } else {
      stops.push_back({k, x.seg2, x.param2, x.lift1 - to_vec(x.shift)});
    }
  }
  std::sort(stops.begin(), stops.end(), [](const StrandStop& a, const StrandStop& b) {
    return a.seg != b.seg ? a.seg < b.seg : a.param < b.param;
  });
  return stops;
}

struct Piece {
  int curve;
  std::vector<Vec2> points;
  std::size_t start_crossing;
  Vec2 start_point;
  std::size_t end_crossing;
  Vec2 end_point;
};

std::vector<Piece> cut_pieces(const TorusCurve& c, int curve, std::span<const StrandStop> stops, double chamfer) {
  const auto& lift = c.lift();
  const std::size_t n = c.segment_count();
  const Vec2 K = to_vec(c.displacement());
  const std::size_t m = stops.size();
  std::vector<Piece> pieces;
  for (std::size_t r = 0; r < m; ++r) {
    const StrandStop& a = stops[r];
    const StrandStop& b = stops[(r + 1) % m];
    const bool wraps = r + 1 == m;
    Piece p{curve, {}, a.crossing, a.point, b.crossing, b.point};
    p.points.push_back(a.point + chamfer * unit(c.segment(a.seg).direction()));
    const Vec2 in = b.point - chamfer * unit(c.segment(b.seg).direction());
    if (!wraps) {
      for (std::size_t i = a.seg + 1; i <= b.seg; ++i) p.points.push_back(lift[i]);
      p.points.push_back(in);
    } else {
      for (std::size_t i = a.seg + 1; i <= n; ++i) p.points.push_back(lift[i]);
      for (std::size_t i = 1; i <= b.seg; ++i) p.points.push_back(lift[i] + K);
      p.points.push_back(in + K);
      p.end_point = b.point + K;
    }
    pieces.push_back(std::move(p));
  }
  return pieces;
}

Vec2 rounded(const Vec2& v) { return {std::round(v.x()), std::round(v.y())}; }

}  // namespace

std::vector<Crossing> find_intersections(const TorusCurve& c1, const TorusCurve& c2, double angle_min) {
  const double sin_min = std::sin(angle_min);
  std::vector<Crossing> out;
  for (std::size_t i = 0; i < c1.segment_count(); ++i) {
    const Segment si = c1.segment(i);
    for (std::size_t j = 0; j < c2.segment_count(); ++j) {
      const Segment sj = c2.segment(j);
      for (const Shift& k : torus::candidate_shifts(si, sj)) {
        const auto h = torus::intersect_segments(si, sj.shifted(k), sin_min);
        if (h.kind == HitKind::none) continue;
        const Vec2 at = torus::wrap(h.point);
        if (h.kind != HitKind::proper) {
          const char* why = h.kind == HitKind::tangential ? "tangential intersection"
                            : h.kind == HitKind::overlap  ? "overlapping segments"
                                                          : "intersection at a vertex";
          throw NonTransversalError(std::string("non-transversal input: ") + why + " at " + fmt(at),
                                    {at.x(), at.y()});
        }
        const int sign = torus::cross(si.direction(), sj.direction()) > 0.0 ? 1 : -1;
        out.push_back({at, h.point, i, j, h.u, h.w, k, sign, h.sin_angle});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) {
    return a.seg1 != b.seg1 ? a.seg1 < b.seg1 : a.param1 < b.param1;
  });
  return out;
}

H1Class homology_class(const TorusCurve& c) { return torus::homology_class(c.lift()); }

double max_admissible_chamfer(const TorusCurve& c1, const TorusCurve& c2, std::span<const Crossing> crossings) {
  double r = std::numeric_limits<double>::infinity();
  if (crossings.empty()) return r;
  r = kChamferCap;
  for (std::size_t a = 0; a < crossings.size(); ++a) {
    for (std::size_t b = a + 1; b < crossings.size(); ++b) {
      r = std::min(r, 0.5 * torus::torus_distance(crossings[a].point, crossings[b].point));
    }
  }
  for (const Crossing& x : crossings) {
    const Vec2 P = x.lift1;
    const double l1 = c1.segment(x.seg1).length();
    const double l2 = c2.segment(x.seg2).length();
    r = std::min({r, x.param1 * l1, (1.0 - x.param1) * l1, x.param2 * l2, (1.0 - x.param2) * l2});
    const auto clearance = [&](const TorusCurve& c, std::size_t carrier, const Shift& carrier_shift) {
      for (std::size_t j = 0; j < c.segment_count(); ++j) {
        const Segment s = c.segment(j);
        for (const Shift& k : torus::candidate_shifts(Segment{P, P}, s, 1.0)) {
          if (j == carrier && k == carrier_shift) continue;
          r = std::min(r, torus::point_segment_distance(P, s.shifted(k)));
        }
      }
    };
    clearance(c1, x.seg1, Shift{0, 0});
    clearance(c2, x.seg2, x.shift);
  }
  return r;
}

double default_chamfer(const TorusCurve& c1, const TorusCurve& c2, std::span<const Crossing> crossings) {
  double separation = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < crossings.size(); ++a) {
    for (std::size_t b = a + 1; b < crossings.size(); ++b) {
      separation = std::min(separation, torus::torus_distance(crossings[a].point, crossings[b].point));
    }
  }
  return std::min(0.25 * separation, 0.5 * max_admissible_chamfer(c1, c2, crossings));
}

ResolvedDiagram resolve(const TorusCurve& c1, const TorusCurve& c2, std::optional<double> chamfer) {
  const auto crossings = find_intersections(c1, c2);
  if (crossings.empty()) {
    return {{c1, c2},
            {std::vector<VertexSource>(c1.lift().size(), VertexSource::curve1),
             std::vector<VertexSource>(c2.lift().size(), VertexSource::curve2)},
            0.0};
  }

  const double admissible = max_admissible_chamfer(c1, c2, crossings);
  const double ch = chamfer.value_or(default_chamfer(c1, c2, crossings));
  if (!(ch > 0.0)) throw DomainError("chamfer must be positive");
  if (ch >= admissible) {
    std::ostringstream os;
    os << "chamfer " << ch << " is not below the admissible radius " << admissible
       << " (it would reach another strand or crossing)";
    throw GeometryError(os.str());
  }

  std::vector<Piece> pieces = cut_pieces(c1, 0, stops_along(crossings, 0), ch);
  for (Piece& p : cut_pieces(c2, 1, stops_along(crossings, 1), ch)) pieces.push_back(std::move(p));

  // starting_at[curve][crossing] = piece leaving that crossing along that curve.
  std::vector<std::vector<std::size_t>> starting_at(2, std::vector<std::size_t>(crossings.size()));
  for (std::size_t i = 0; i < pieces.size(); ++i) starting_at[pieces[i].curve][pieces[i].start_crossing] = i;

  ResolvedDiagram d;
  d.chamfer = ch;
  std::vector<bool> used(pieces.size(), false);
  for (std::size_t start = 0; start < pieces.size(); ++start) {
    if (used[start]) continue;
    std::vector<Vec2> verts;
    std::vector<VertexSource> tags;
    std::size_t cur = start;
    Vec2 offset = Vec2::Zero();
    for (;;) {
      used[cur] = true;
      const Piece& p = pieces[cur];
      const VertexSource own = p.curve == 0 ? VertexSource::curve1 : VertexSource::curve2;
      for (std::size_t i = 0; i < p.points.size(); ++i) {
        verts.push_back(p.points[i] + offset);
        tags.push_back(i == 0 || i + 1 == p.points.size() ? VertexSource::cut : own);
      }
      // Incoming end of one strand joins the outgoing end of the other.
      const std::size_t next = starting_at[1 - p.curve][p.end_crossing];
      offset = rounded(p.end_point + offset - pieces[next].start_point);
      if (next == start) break;
      if (used[next]) throw IntegrityError("resolution trace revisited a piece");
      cur = next;
    }
    verts.push_back(verts.front() + offset);
    tags.push_back(VertexSource::cut);
    const bool oriented = c1.oriented() && c2.oriented();
    d.curves.emplace_back("resolved" + std::to_string(d.curves.size()), std::move(verts), oriented);
    d.provenance.push_back(std::move(tags));
  }
  if (!torus::is_embedded_family(d.curves)) throw GeometryError("resolved curves intersect each other");
  return d;
}

std::size_t count_components(const ResolvedDiagram& d) { return d.curves.size(); }

H1Class total_class(std::span<const TorusCurve> curves) {
  H1Class s{0, 0};
  for (const TorusCurve& c : curves) {
    s[0] += c.displacement()[0];
    s[1] += c.displacement()[1];
  }
  return s;
}

OrientationReport orientation_compat(const TorusCurve& c1, const TorusCurve& c2) {
  OrientationReport r{true, {}};
  for (const Crossing& x : find_intersections(c1, c2)) r.signs.push_back(x.sign);
  r.compatible = std::adjacent_find(r.signs.begin(), r.signs.end(), std::not_equal_to<>()) == r.signs.end();
  return r;
}

namespace {

TorusCurve normal_offset(const TorusCurve& c, double eps, const std::string& id) {
  const auto& lift = c.lift();
  const std::size_t n = c.segment_count();
  const Vec2 K = to_vec(c.displacement());
  std::vector<Vec2> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 prev = i == 0 ? lift[n - 1] - K : lift[i - 1];
    const Vec2 n_in = left_normal(unit(lift[i] - prev));
    const Vec2 n_out = left_normal(unit(lift[i + 1] - lift[i]));
    const double denom = 1.0 + n_in.dot(n_out);
    if (denom < 1e-6) throw GeometryError("offset of '" + c.id() + "' is undefined at a hairpin vertex");
    out.push_back(lift[i] + eps * (n_in + n_out) / denom);
  }
  out.push_back(out.front() + K);
  try {
    return TorusCurve(id, std::move(out), c.oriented());
  } catch (const GeometryError& e) {
    throw GeometryError(std::string("offset copies collide: ") + e.what());
  }
}

}  // namespace

std::vector<TorusCurve> offset_copies(const TorusCurve& c, long long a, std::span<const double> eps_schedule) {
  if (a == 0) throw DomainError("offset_copies needs a nonzero multiplier");
  const long long pairs = std::llabs(a) / 2;
  if (static_cast<long long>(eps_schedule.size()) < pairs) {
    throw InputError("offset schedule has " + std::to_string(eps_schedule.size()) + " entries, need " +
                     std::to_string(pairs));
  }
  std::vector<TorusCurve> out;
  for (long long j = 0; j < pairs; ++j) {
    const double e = eps_schedule[static_cast<std::size_t>(j)];
    if (!(e > 0.0)) throw DomainError("offset distances must be positive");
    out.push_back(normal_offset(c, e, c.id() + "+" + std::to_string(j)));
    out.push_back(normal_offset(c, -e, c.id() + "-" + std::to_string(j)));
  }
  if (std::llabs(a) % 2 == 1) out.push_back(c);
  if (a < 0) {
    for (TorusCurve& t : out) t = t.reversed();
  }
  if (!torus::is_embedded_family(out)) throw GeometryError("offset copies collide");
  return out;
}

ArcData arc_data(std::span<const Crossing> crossings) {
  ArcData d;
  const std::size_t m = crossings.size();
  d.input.side1_arcs = m == 0 ? 1 : m;
  d.input.side2_arcs = m == 0 ? 1 : m;
  d.input.crossings.resize(m);
  for (int curve = 0; curve < 2; ++curve) {
    const auto stops = stops_along(crossings, curve);
    for (std::size_t r = 0; r < m; ++r) {
      bounds::SideIncidence side{false, {(r + m - 1) % m, r}};
      auto& inc = d.input.crossings[stops[r].crossing];
      (curve == 0 ? inc.side1 : inc.side2) = side;
    }
  }
  d.choices.assign(m, bounds::Pairing::crossed);
  return d;
}

}  // namespace embsum::resolver
