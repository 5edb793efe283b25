#pragma once

// Oriented closed polylines on the flat torus R^2 / Z^2, stored as a lift.
//
// A curve is the list v_0, ..., v_n in R^2 with v_n - v_0 in Z^2; segment i
// runs from v_i to v_{i+1}. All geometry is done on lifts: two segments meet on
// the torus iff one meets an integer translate of the other.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace embsum::torus {

using Vec2 = Eigen::Vector2d;
using H1Class = std::array<long long, 2>;
using Shift = std::array<long long, 2>;

inline constexpr double kGeomTol = 1e-9;

inline double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }
inline Vec2 to_vec(const Shift& k) { return {static_cast<double>(k[0]), static_cast<double>(k[1])}; }

struct Segment {
  Vec2 a;
  Vec2 b;

  Vec2 direction() const { return b - a; }
  double length() const { return (b - a).norm(); }
  Vec2 at(double s) const { return a + s * (b - a); }
  Segment shifted(const Shift& k) const { return {a + to_vec(k), b + to_vec(k)}; }
};

enum class HitKind { none, proper, endpoint, tangential, overlap };

struct SegmentHit {
  HitKind kind = HitKind::none;
  double u = 0.0;  // parameter on the first segment
  double w = 0.0;  // parameter on the second segment
  Vec2 point = Vec2::Zero();
  double sin_angle = 0.0;
};

// Classifies the contact of two segments. `tol` is a length; hits within tol
// of an endpoint are `endpoint`, crossings with |sin angle| < sin_min are
// `tangential`.
SegmentHit intersect_segments(const Segment& s, const Segment& t, double sin_min, double tol = kGeomTol);

// Integer shifts k with bbox(s) and bbox(t + k) overlapping (inflated by pad).
std::vector<Shift> candidate_shifts(const Segment& s, const Segment& t, double pad = kGeomTol);

double point_segment_distance(const Vec2& p, const Segment& s);

// Distance on the torus between the projections of a point and a segment.
double torus_point_segment_distance(const Vec2& p, const Segment& s);
double torus_distance(const Vec2& a, const Vec2& b);

// Representative of p in [0, 1)^2.
Vec2 wrap(const Vec2& p);

// Integer displacement of a closed lift; throws GeometryError for an open one.
H1Class homology_class(std::span<const Vec2> lift);

class TorusCurve {
public:
  // Validates closedness, distinct consecutive vertices and embeddedness; the
  // closing vertex is snapped to v_0 + (v_n - v_0) rounded.
  TorusCurve(std::string id, std::vector<Vec2> lift, bool oriented = true);

  const std::string& id() const { return id_; }
  bool oriented() const { return oriented_; }
  const std::vector<Vec2>& lift() const { return lift_; }
  std::size_t segment_count() const { return lift_.size() - 1; }
  Segment segment(std::size_t i) const { return {lift_[i], lift_[i + 1]}; }
  H1Class displacement() const { return displacement_; }
  double length() const;

  TorusCurve reversed() const;
  TorusCurve translated(const Vec2& offset) const;

  // True if segment i of this curve and segment j shifted by k share an
  // endpoint by construction (consecutive segments of the closed curve).
  bool adjacent(std::size_t i, std::size_t j, const Shift& k) const;

private:
  std::string id_;
  std::vector<Vec2> lift_;
  bool oriented_;
  H1Class displacement_;
};

// Throws GeometryError (with the location in the message) if the curve meets
// itself anywhere except at shared vertices of consecutive segments.
void check_embedded(const TorusCurve& c);

// First contact of any kind between two curves on the torus, if any.
struct Contact {
  std::size_t seg1;
  std::size_t seg2;
  Shift shift;
  SegmentHit hit;
};
std::vector<Contact> contacts(const TorusCurve& c1, const TorusCurve& c2, double tol = kGeomTol);

// True iff the curves are pairwise disjoint on the torus and each is embedded.
bool is_embedded_family(std::span<const TorusCurve> curves);

}  // namespace embsum::torus
