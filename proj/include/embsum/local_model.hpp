#pragma once

// Fiberwise local models replacing the crossing pair of disks.
//
// The complex model V = {2xy = 1 - |x|^2 - |y|^2} in D^4 is the zero set of
// v : R^4 -> R^2 written in the real coordinates (x1, x2, y1, y2). The filled
// model ~V = {|x| + |y| <= 1} is inserted over the locus where the bundle has
// no reduced structure. In the real case V splits into the two segments of
// (x + y - 1)(x + y + 1) = 0 and its mirror image V2.

#include <array>
#include <utility>

#include <Eigen/Core>

#include "embsum/types.hpp"

namespace embsum::local_model {

inline constexpr double kOnVTolerance = 1e-9;
inline constexpr double kConstructedTolerance = 1e-12;

enum class BoundaryTag { B1, B2, none };

using Jacobian24 = Eigen::Matrix<double, 2, 4>;
using Vec4 = Eigen::Vector4d;

std::array<double, 2> v_case2(const FiberPoint4& p);

// Analytic derivative of v_case2, columns ordered (x1, x2, y1, y2).
Jacobian24 jac_v(const FiberPoint4& p);

bool on_V(const FiberPoint4& p, double tol = kOnVTolerance);

// (r e^{i phi}, (1 - r) e^{-i phi}); throws DomainError unless 0 <= r <= 1.
FiberPoint4 param_V(double r, double phi);

struct Case1Value {
  double expanded;
  double factored;
};

Case1Value v_case1(const RealFiberPoint& p);

bool in_tilde_V(const FiberPoint4& p);

// The equivalent product form 2|xy| <= 1 - |x|^2 - |y|^2.
bool in_tilde_V_product_form(const FiberPoint4& p, double tol = 0.0);

// Radial homeomorphism D^4 -> ~V. `direction` must be a unit vector.
FiberPoint4 tilde_v_homeo(const FiberPoint4& direction, double t);

BoundaryTag boundary_tag(const FiberPoint4& p, double tol = kOnVTolerance);

// Co-orientation of V at p: the vectors (x + conj y, y + conj x) and
// (i conj y, i conj x) in real coordinates. They are the rows of jac_v(p)
// scaled by 1/2. Throws DomainError if p is not on V.
std::pair<Vec4, Vec4> coorientation_frame(const FiberPoint4& p);

// Determinant of the frame projected to the (y1, y2) plane (at B1 points) or
// to the (x1, x2) plane (at B2 points).
double frame_projection_det_y(const FiberPoint4& p);
double frame_projection_det_x(const FiberPoint4& p);

// Case 1 model selection.
enum class RealModel { V1, V2 };
enum class Case1Mode { oriented, cooriented };

// Semantics of the signs (fiber coordinates: x along Y1, y along Y2):
//   oriented:   Y1 runs along sign1 * e_x, Y2 along sign2 * e_y;
//   cooriented: Y1 has normal sign1 * e_y, Y2 has normal sign2 * e_x.
// Returns the unique model among V1 = {x + y = +-1} and V2 = {x - y = +-1}
// whose orientation (resp. co-orientation) matches both strands.
RealModel case1_choice(int sign1, int sign2, Case1Mode mode);

}  // namespace embsum::local_model
