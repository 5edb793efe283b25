#include "embsum/local_model.hpp"

#include <cmath>
#include <string>

#include "embsum/errors.hpp"

namespace embsum::local_model {

std::array<double, 2> v_case2(const FiberPoint4& p) {
  const double x1 = p.x.real(), x2 = p.x.imag();
  const double y1 = p.y.real(), y2 = p.y.imag();
  return {2.0 * x1 * y1 - 2.0 * x2 * y2 - 1.0 + x1 * x1 + x2 * x2 + y1 * y1 + y2 * y2,
          2.0 * x1 * y2 + 2.0 * x2 * y1};
}

Jacobian24 jac_v(const FiberPoint4& p) {
  const double x1 = p.x.real(), x2 = p.x.imag();
  const double y1 = p.y.real(), y2 = p.y.imag();
  Jacobian24 j;
  j << y1 + x1, -y2 + x2, x1 + y1, -x2 + y2,
       y2,      y1,       x2,      x1;
  return 2.0 * j;
}

bool on_V(const FiberPoint4& p, double tol) {
  const auto v = v_case2(p);
  return std::hypot(v[0], v[1]) <= tol;
}

FiberPoint4 param_V(double r, double phi) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("param_V: r must lie in [0, 1], got " + std::to_string(r));
  }
  return {std::polar(r, phi), std::polar(1.0 - r, -phi)};
}

Case1Value v_case1(const RealFiberPoint& p) {
  const double s = p.x + p.y;
  return {2.0 * p.x * p.y - 1.0 + p.x * p.x + p.y * p.y, (s - 1.0) * (s + 1.0)};
}

bool in_tilde_V(const FiberPoint4& p) { return std::abs(p.x) + std::abs(p.y) <= 1.0; }

bool in_tilde_V_product_form(const FiberPoint4& p, double tol) {
  return 2.0 * std::abs(p.x * p.y) <= 1.0 - p.norm2() + tol;
}

FiberPoint4 tilde_v_homeo(const FiberPoint4& direction, double t) {
  if (std::abs(std::sqrt(direction.norm2()) - 1.0) > 1e-9) {
    throw DomainError("tilde_v_homeo: direction must be a unit vector");
  }
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("tilde_v_homeo: t must lie in [0, 1]");
  }
  const double scale = t / std::sqrt(1.0 + 2.0 * std::abs(direction.x * direction.y));
  return scale * direction;
}

BoundaryTag boundary_tag(const FiberPoint4& p, double tol) {
  const double ax = std::abs(p.x), ay = std::abs(p.y);
  if (std::abs(ax - 1.0) <= tol && ay <= tol) return BoundaryTag::B1;
  if (ax <= tol && std::abs(ay - 1.0) <= tol) return BoundaryTag::B2;
  return BoundaryTag::none;
}

std::pair<Vec4, Vec4> coorientation_frame(const FiberPoint4& p) {
  if (!on_V(p, kOnVTolerance)) {
    throw DomainError("coorientation_frame: point is not on V");
  }
  const Complex i{0.0, 1.0};
  const Complex a1 = p.x + std::conj(p.y), b1 = p.y + std::conj(p.x);
  const Complex a2 = i * std::conj(p.y), b2 = i * std::conj(p.x);
  return {Vec4{a1.real(), a1.imag(), b1.real(), b1.imag()},
          Vec4{a2.real(), a2.imag(), b2.real(), b2.imag()}};
}

double frame_projection_det_y(const FiberPoint4& p) {
  const auto [n1, n2] = coorientation_frame(p);
  return n1[2] * n2[3] - n1[3] * n2[2];
}

double frame_projection_det_x(const FiberPoint4& p) {
  const auto [n1, n2] = coorientation_frame(p);
  return n1[0] * n2[1] - n1[1] * n2[0];
}

RealModel case1_choice(int sign1, int sign2, Case1Mode mode) {
  if ((sign1 != 1 && sign1 != -1) || (sign2 != 1 && sign2 != -1)) {
    throw DomainError("case1_choice: signs must be +1 or -1");
  }
  // Oriented: the arc leaving the incoming end (-sign1, 0) of Y1 must reach the
  // outgoing end (0, sign2) of Y2; that chord lies on x + y = +-1 iff the two
  // intercepts agree, i.e. sign1 == -sign2.
  // Co-oriented: V1 has normal +-(1, 1), V2 has normal +-(1, -1).
  const int product = sign1 * sign2;
  if (mode == Case1Mode::oriented) return product < 0 ? RealModel::V1 : RealModel::V2;
  return product > 0 ? RealModel::V1 : RealModel::V2;
}

}  // namespace embsum::local_model
