#include "embsum/torus_curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "embsum/errors.hpp"

namespace embsum::torus {

namespace {

constexpr double kClosureTol = 1e-9;
constexpr double kParallelSin = 1e-12;

std::string fmt(const Vec2& p) {
  std::ostringstream os;
  os.precision(6);
  os << "(" << p.x() << ", " << p.y() << ")";
  return os.str();
}

double segment_segment_distance(const Segment& s, const Segment& t) {
  return std::min({point_segment_distance(s.a, t), point_segment_distance(s.b, t),
                   point_segment_distance(t.a, s), point_segment_distance(t.b, s)});
}

SegmentHit touch_at_nearest(const Segment& s, const Segment& t) {
  // Report the nearest endpoint pair as the contact location.
  SegmentHit h;
  h.kind = HitKind::endpoint;
  double best = point_segment_distance(s.a, t);
  h.point = s.a;
  h.u = 0.0;
  const auto consider = [&](const Vec2& p, double u) {
    const double d = point_segment_distance(p, t);
    if (d < best) {
      best = d;
      h.point = p;
      h.u = u;
    }
  };
  consider(s.b, 1.0);
  for (const Vec2& p : {t.a, t.b}) {
    const double d = point_segment_distance(p, s);
    if (d < best) {
      best = d;
      h.point = p;
    }
  }
  return h;
}

}  // namespace

SegmentHit intersect_segments(const Segment& s, const Segment& t, double sin_min, double tol) {
  const Vec2 r = s.direction();
  const Vec2 q = t.direction();
  const double lr = r.norm();
  const double lq = q.norm();
  const double denom = cross(r, q);
  const double sin_angle = std::abs(denom) / (lr * lq);
  const Vec2 st = t.a - s.a;

  if (sin_angle < kParallelSin) {
    if (std::abs(cross(st, r)) / lr > tol) return {};
    const double p0 = st.dot(r) / (lr * lr);
    const double p1 = (t.b - s.a).dot(r) / (lr * lr);
    const double lo = std::max(0.0, std::min(p0, p1));
    const double hi = std::min(1.0, std::max(p0, p1));
    const double slack = tol / lr;
    if (hi - lo < -slack) return {};
    SegmentHit h;
    h.kind = (hi - lo) * lr > tol ? HitKind::overlap : HitKind::endpoint;
    h.u = 0.5 * (lo + hi);
    h.point = s.at(h.u);
    return h;
  }

  const double u = cross(st, q) / denom;
  const double w = cross(st, r) / denom;
  const double eu = tol / lr;
  const double ew = tol / lq;
  if (u < -eu || u > 1.0 + eu || w < -ew || w > 1.0 + ew) {
    if (segment_segment_distance(s, t) <= tol) return touch_at_nearest(s, t);
    return {};
  }
  SegmentHit h;
  h.u = u;
  h.w = w;
  h.point = s.at(u);
  h.sin_angle = sin_angle;
  if (u <= eu || u >= 1.0 - eu || w <= ew || w >= 1.0 - ew) {
    h.kind = HitKind::endpoint;
  } else if (sin_angle < sin_min) {
    h.kind = HitKind::tangential;
  } else {
    h.kind = HitKind::proper;
  }
  return h;
}

std::vector<Shift> candidate_shifts(const Segment& s, const Segment& t, double pad) {
  const auto range = [&](int axis) {
    const double smin = std::min(s.a[axis], s.b[axis]), smax = std::max(s.a[axis], s.b[axis]);
    const double tmin = std::min(t.a[axis], t.b[axis]), tmax = std::max(t.a[axis], t.b[axis]);
    return std::pair{static_cast<long long>(std::ceil(smin - tmax - pad)),
                     static_cast<long long>(std::floor(smax - tmin + pad))};
  };
  const auto [x0, x1] = range(0);
  const auto [y0, y1] = range(1);
  std::vector<Shift> out;
  for (long long kx = x0; kx <= x1; ++kx) {
    for (long long ky = y0; ky <= y1; ++ky) out.push_back({kx, ky});
  }
  return out;
}

double point_segment_distance(const Vec2& p, const Segment& s) {
  const Vec2 r = s.direction();
  const double len2 = r.squaredNorm();
  const double u = len2 > 0.0 ? std::clamp((p - s.a).dot(r) / len2, 0.0, 1.0) : 0.0;
  return (p - s.at(u)).norm();
}

double torus_point_segment_distance(const Vec2& p, const Segment& s) {
  double best = std::numeric_limits<double>::infinity();
  for (const Shift& k : candidate_shifts(Segment{p, p}, s, 1.0)) {
    best = std::min(best, point_segment_distance(p, s.shifted(k)));
  }
  return best;
}

double torus_distance(const Vec2& a, const Vec2& b) {
  Vec2 d = a - b;
  d.x() -= std::round(d.x());
  d.y() -= std::round(d.y());
  return d.norm();
}

Vec2 wrap(const Vec2& p) {
  Vec2 w{p.x() - std::floor(p.x()), p.y() - std::floor(p.y())};
  if (w.x() >= 1.0) w.x() = 0.0;
  if (w.y() >= 1.0) w.y() = 0.0;
  return w;
}

H1Class homology_class(std::span<const Vec2> lift) {
  if (lift.size() < 2) throw GeometryError("polyline needs at least two vertices");
  const Vec2 d = lift.back() - lift.front();
  const Vec2 k{std::round(d.x()), std::round(d.y())};
  if ((d - k).cwiseAbs().maxCoeff() > kClosureTol) {
    throw GeometryError("open polyline: end minus start " + fmt(d) + " is not an integer vector");
  }
  return {static_cast<long long>(k.x()), static_cast<long long>(k.y())};
}

TorusCurve::TorusCurve(std::string id, std::vector<Vec2> lift, bool oriented)
    : id_(std::move(id)), lift_(std::move(lift)), oriented_(oriented), displacement_(homology_class(lift_)) {
  lift_.back() = lift_.front() + to_vec(displacement_);
  const bool closed_loop = displacement_ == H1Class{0, 0};
  if (closed_loop && lift_.size() < 4) {
    throw GeometryError("curve '" + id_ + "': a contractible loop needs at least three distinct vertices");
  }
  for (std::size_t i = 0; i + 1 < lift_.size(); ++i) {
    if ((lift_[i + 1] - lift_[i]).norm() <= kGeomTol) {
      throw GeometryError("curve '" + id_ + "': repeated vertex at " + fmt(lift_[i]));
    }
  }
  check_embedded(*this);
}

double TorusCurve::length() const {
  double l = 0.0;
  for (std::size_t i = 0; i < segment_count(); ++i) l += segment(i).length();
  return l;
}

TorusCurve TorusCurve::reversed() const {
  std::vector<Vec2> rev(lift_.rbegin(), lift_.rend());
  return TorusCurve(id_, std::move(rev), oriented_);
}

TorusCurve TorusCurve::translated(const Vec2& offset) const {
  std::vector<Vec2> moved = lift_;
  for (Vec2& v : moved) v += offset;
  return TorusCurve(id_, std::move(moved), oriented_);
}

bool TorusCurve::adjacent(std::size_t i, std::size_t j, const Shift& k) const {
  const std::size_t m = segment_count();
  const Shift zero{0, 0};
  const Shift K = displacement_;
  const Shift minus_K{-K[0], -K[1]};
  const bool forward = j == (i + 1) % m && k == (i == m - 1 ? K : zero);
  const bool backward = i == (j + 1) % m && k == (j == m - 1 ? minus_K : zero);
  return forward || backward;
}

void check_embedded(const TorusCurve& c) {
  const std::size_t m = c.segment_count();
  for (std::size_t i = 0; i < m; ++i) {
    const Segment si = c.segment(i);
    for (std::size_t j = i; j < m; ++j) {
      const Segment sj = c.segment(j);
      for (const Shift& k : candidate_shifts(si, sj)) {
        if (i == j && k == Shift{0, 0}) continue;
        const SegmentHit h = intersect_segments(si, sj.shifted(k), 0.0);
        if (h.kind == HitKind::none) continue;
        if (c.adjacent(i, j, k) && h.kind != HitKind::overlap) continue;
        throw GeometryError("curve '" + c.id() + "' is not embedded: segments " + std::to_string(i) + " and " +
                            std::to_string(j) + " meet near " + fmt(wrap(h.point)));
      }
    }
  }
}

std::vector<Contact> contacts(const TorusCurve& c1, const TorusCurve& c2, double tol) {
  std::vector<Contact> out;
  for (std::size_t i = 0; i < c1.segment_count(); ++i) {
    const Segment si = c1.segment(i);
    for (std::size_t j = 0; j < c2.segment_count(); ++j) {
      const Segment sj = c2.segment(j);
      for (const Shift& k : candidate_shifts(si, sj, tol)) {
        const SegmentHit h = intersect_segments(si, sj.shifted(k), 0.0, tol);
        if (h.kind != HitKind::none) out.push_back({i, j, k, h});
      }
    }
  }
  return out;
}

bool is_embedded_family(std::span<const TorusCurve> curves) {
  try {
    for (const TorusCurve& c : curves) check_embedded(c);
  } catch (const GeometryError&) {
    return false;
  }
  for (std::size_t a = 0; a < curves.size(); ++a) {
    for (std::size_t b = a + 1; b < curves.size(); ++b) {
      if (!contacts(curves[a], curves[b]).empty()) return false;
    }
  }
  return true;
}

}  // namespace embsum::torus
