#include "embsum/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "embsum/disjoint_set.hpp"
#include "embsum/errors.hpp"

namespace embsum::oracle {

void VerificationReport::fail(std::string what, std::size_t keep) {
  if (failures.size() < keep) {
    failures.push_back(std::move(what));
  } else {
    ++dropped_;
  }
}

nlohmann::json VerificationReport::to_json() const {
  return {{"name", name},
          {"samples", samples},
          {"max_residual", max_residual},
          {"min_margin", min_margin},
          {"pass", pass()},
          {"failures", failures},
          {"failures_not_listed", dropped_}};
}

namespace {

// Pieces of a segment between consecutive integer grid lines, each translated
// into the closed unit square.
std::vector<Strand> wrapped_pieces(const Vec2& a, const Vec2& b) {
  std::vector<double> cuts{0.0, 1.0};
  const Vec2 d = b - a;
  for (int axis = 0; axis < 2; ++axis) {
    if (d[axis] == 0.0) continue;
    const double lo = std::min(a[axis], b[axis]), hi = std::max(a[axis], b[axis]);
    for (double n = std::floor(lo) + 1.0; n < hi; n += 1.0) cuts.push_back((n - a[axis]) / d[axis]);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<Strand> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] <= 0.0) continue;
    const Vec2 p = a + cuts[i] * d, q = a + cuts[i + 1] * d;
    const Vec2 mid = 0.5 * (p + q);
    const Vec2 shift{std::floor(mid.x()), std::floor(mid.y())};
    out.push_back({p - shift, q - shift});
  }
  return out;
}

Vec2 unit(const Vec2& v) { return v / v.norm(); }

}  // namespace

H1Class class_via_crossings(const TorusCurve& c, Vec2 axis_offset) {
  std::vector<Strand> pieces;
  for (std::size_t i = 0; i < c.segment_count(); ++i) {
    const auto s = c.segment(i);
    for (const Strand& p : wrapped_pieces(s.a, s.b)) pieces.push_back(p);
  }
  constexpr double kClear = 1e-12;
  for (int attempt = 0; attempt < 32; ++attempt) {
    const Vec2 o = torus::wrap(axis_offset + attempt * Vec2{0.0137174211248285, 0.0091463414634146});
    long long nx = 0, ny = 0;
    bool degenerate = false;
    for (const Strand& p : pieces) {
      const double ax = p.a.x() - o.x(), bx = p.b.x() - o.x();
      const double ay = p.a.y() - o.y(), by = p.b.y() - o.y();
      if (std::abs(ax) < kClear || std::abs(bx) < kClear || std::abs(ay) < kClear || std::abs(by) < kClear) {
        degenerate = true;
        break;
      }
      if (ax * bx < 0.0) nx += bx > 0.0 ? 1 : -1;
      if (ay * by < 0.0) ny += by > 0.0 ? 1 : -1;
    }
    if (!degenerate) return {nx, ny};
  }
  throw IntegrityError("class_via_crossings: no generic axis position found");
}

std::vector<Strand> strand_soup(const TorusCurve& c1, const TorusCurve& c2,
                                std::span<const resolver::Crossing> crossings, double chamfer) {
  std::vector<Strand> soup;
  const auto cut_curve = [&](const TorusCurve& c, bool first) {
    for (std::size_t i = 0; i < c.segment_count(); ++i) {
      const auto s = c.segment(i);
      const double half = chamfer / s.length();
      std::vector<double> at;
      for (const auto& x : crossings) {
        if ((first ? x.seg1 : x.seg2) == i) at.push_back(first ? x.param1 : x.param2);
      }
      std::sort(at.begin(), at.end());
      double prev = 0.0;
      for (double u : at) {
        if (u - half < prev || u + half > 1.0) throw DomainError("strand_soup: chamfer exceeds the segment room");
        if (u - half > prev) soup.push_back({s.at(prev), s.at(u - half)});
        prev = u + half;
      }
      if (prev < 1.0) soup.push_back({s.at(prev), s.b});
    }
  };
  cut_curve(c1, true);
  cut_curve(c2, false);
  for (const auto& x : crossings) {
    const Vec2 d1 = unit(c1.segment(x.seg1).direction());
    const Vec2 d2 = unit(c2.segment(x.seg2).direction());
    soup.push_back({x.point - chamfer * d1, x.point + chamfer * d2});
    soup.push_back({x.point - chamfer * d2, x.point + chamfer * d1});
  }
  return soup;
}

std::size_t trace_components(std::span<const Strand> strands, double merge_tol) {
  std::vector<Vec2> ends;
  for (const Strand& s : strands) {
    ends.push_back(s.a);
    ends.push_back(s.b);
  }
  // Cluster endpoints that coincide on the torus.
  std::vector<std::size_t> cluster(ends.size(), std::numeric_limits<std::size_t>::max());
  std::vector<std::size_t> degree;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (cluster[i] != std::numeric_limits<std::size_t>::max()) continue;
    cluster[i] = degree.size();
    degree.push_back(1);
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      if (cluster[j] == std::numeric_limits<std::size_t>::max() && torus::torus_distance(ends[i], ends[j]) < merge_tol) {
        cluster[j] = cluster[i];
        ++degree.back();
      }
    }
  }
  for (std::size_t k = 0; k < degree.size(); ++k) {
    if (degree[k] != 2) {
      throw IntegrityError("strand endpoint of degree " + std::to_string(degree[k]) + ": open chain or branching");
    }
  }
  DisjointSet ds(degree.size());
  for (std::size_t s = 0; s < strands.size(); ++s) ds.unite(cluster[2 * s], cluster[2 * s + 1]);
  return ds.sets();
}

VerificationReport collision_search(const std::string& name, const PointMap& map, const Sampler& sample,
                                    std::size_t n, double out_tol, double in_tol) {
  if (n < 2) throw DomainError("collision_search needs at least two samples");
  std::vector<std::vector<double>> in(n), out(n);
  for (std::size_t i = 0; i < n; ++i) {
    in[i] = sample(i);
    out[i] = map(in[i]);
  }
  const std::size_t dim = out[0].size();
  std::vector<double> dir(dim);
  for (std::size_t k = 0; k < dim; ++k) dir[k] = 0.5 + std::fmod(0.6180339887498949 * (k + 1), 1.0);
  const double norm = std::sqrt(std::inner_product(dir.begin(), dir.end(), dir.begin(), 0.0));
  for (double& w : dir) w /= norm;

  std::vector<double> proj(n);
  for (std::size_t i = 0; i < n; ++i) proj[i] = std::inner_product(dir.begin(), dir.end(), out[i].begin(), 0.0);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return proj[a] < proj[b]; });

  const auto dist = [](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
    return std::sqrt(s);
  };

  VerificationReport r;
  r.name = name;
  r.samples = n;
  r.min_margin = out_tol;
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t i = order[a];
    for (std::size_t b = a + 1; b < n && proj[order[b]] - proj[i] < out_tol; ++b) {
      const std::size_t j = order[b];
      const double dout = dist(out[i], out[j]);
      if (dout >= out_tol || dist(in[i], in[j]) <= in_tol) continue;
      r.min_margin = std::min(r.min_margin, dout);
      r.fail("samples " + std::to_string(i) + " and " + std::to_string(j) + " collide (output distance " +
             std::to_string(dout) + ")");
    }
  }
  return r;
}

std::size_t sign_change_roots(std::span<const double> coeffs, double lo, double hi, std::size_t grid) {
  if (grid < 2) throw DomainError("sign_change_roots needs a grid of at least two points");
  const auto eval = [&](double x) {
    double v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
    return v;
  };
  std::size_t changes = 0;
  int last = 0;
  for (std::size_t i = 0; i < grid; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid - 1);
    const double v = eval(x);
    const int s = v > 0.0 ? 1 : v < 0.0 ? -1 : 0;
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace embsum::oracle
