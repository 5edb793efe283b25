#pragma once

// The smoothing family near the locus N: a ramp l(t), the radial maps d_L that
// move level sets of 2x(theta)y / (1 - |x|^2 - |y|^2), and the defining map w
// of the chart model {2xy = conj(g)(1 - |x|^2 - |y|^2)} over D^2 x D^4.

#include <array>
#include <optional>

#include <Eigen/Core>

#include "embsum/types.hpp"

namespace embsum::fiber_family {

// l(t) = t on [0, eps1], 1 on [eps2, 1], quintic Hermite blend in between
// (value and slope matched at both joins, zero curvature at both joins).
class RampFn {
public:
  RampFn(double eps1 = 0.25, double eps2 = 0.75);

  double eps1() const { return eps1_; }
  double eps2() const { return eps2_; }

  double operator()(double t) const;
  double derivative(double t) const;

private:
  double eps1_;
  double eps2_;
};

double ramp(const RampFn& fn, double t);

// g = t * theta in the unit disk.
struct GluingParam {
  Complex g;

  double t() const { return std::abs(g); }
  // Unit direction; only meaningful for t() > 0.
  Complex theta() const { return g / std::abs(g); }
};

struct Level {
  explicit Level(double value);
  double value;
};

// sqrt(L / (1 - (1 - L)(|x|^2 + |y|^2))) * (x, y)
FiberPoint4 d_L(const FiberPoint4& p, Level level);

// 2 x theta y / (1 - |x|^2 - |y|^2); empty on the unit sphere.
std::optional<Complex> level_of(const FiberPoint4& p, Complex theta);

// Real components of 2xy - conj(g)(1 - |x|^2 - |y|^2).
std::array<double, 2> w_case2(const GluingParam& g, const FiberPoint4& p);

// Columns ordered (g1, g2, x1, x2, y1, y2).
using Jacobian26 = Eigen::Matrix<double, 2, 6>;
Jacobian26 jac_w(const GluingParam& g, const FiberPoint4& p);

// Real chart model w(g, x, y) = 2xy - g(1 - x^2 - y^2) and its gradient in
// (g, x, y).
double w_case1(double g, double x, double y);
std::array<double, 3> grad_w_case1(double g, double x, double y);

// Membership in the smoothed family: 2x theta y = l(t)(1 - |x|^2 - |y|^2) for
// t > 0, xy = 0 for t = 0.
bool w2_member(const GluingParam& g, const FiberPoint4& p, const RampFn& ramp, double tol);
double w2_residual(const GluingParam& g, const FiberPoint4& p, const RampFn& ramp);

// Membership in the model {2xy = conj(z)(1 - |x|^2 - |y|^2)}.
bool w0_member(Complex z, const FiberPoint4& p, double tol);
double w0_residual(Complex z, const FiberPoint4& p);

// The point of {2x theta y = s(1 - |x|^2 - |y|^2)} obtained by pushing the
// level-one point (r e^{i phi}, (1 - r) e^{-i phi} conj(theta)) through d_s.
// For s = 0 this lands on xy = 0 only at r in {0, 1}; use it for s > 0.
FiberPoint4 level_point(double s, Complex theta, double r, double phi);

}  // namespace embsum::fiber_family
