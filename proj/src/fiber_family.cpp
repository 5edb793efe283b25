#include "embsum/fiber_family.hpp"

#include <cmath>
#include <string>

#include "embsum/errors.hpp"

namespace embsum::fiber_family {

namespace {

// Quintic Hermite basis on [0, 1] for value and first derivative; the second
// derivative terms vanish because both neighbouring pieces are affine.
double blend(double y0, double y1, double m0, double m1, double s) {
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
  const double h0 = 1.0 - 10.0 * s3 + 15.0 * s4 - 6.0 * s5;
  const double h1 = 10.0 * s3 - 15.0 * s4 + 6.0 * s5;
  const double h2 = s - 6.0 * s3 + 8.0 * s4 - 3.0 * s5;
  const double h3 = -4.0 * s3 + 7.0 * s4 - 3.0 * s5;
  return y0 * h0 + y1 * h1 + m0 * h2 + m1 * h3;
}

double blend_derivative(double y0, double y1, double m0, double m1, double s) {
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  const double h0 = -30.0 * s2 + 60.0 * s3 - 30.0 * s4;
  const double h2 = 1.0 - 18.0 * s2 + 32.0 * s3 - 15.0 * s4;
  const double h3 = -12.0 * s2 + 28.0 * s3 - 15.0 * s4;
  return y0 * h0 - y1 * h0 + m0 * h2 + m1 * h3;
}

}  // namespace

RampFn::RampFn(double eps1, double eps2) : eps1_(eps1), eps2_(eps2) {
  if (!(0.0 < eps1 && eps1 < eps2 && eps2 < 1.0)) {
    throw DomainError("RampFn: need 0 < eps1 < eps2 < 1");
  }
}

double RampFn::operator()(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("ramp: t must lie in [0, 1], got " + std::to_string(t));
  }
  if (t <= eps1_) return t;
  if (t >= eps2_) return 1.0;
  const double h = eps2_ - eps1_;
  return blend(eps1_, 1.0, h, 0.0, (t - eps1_) / h);
}

double RampFn::derivative(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("ramp: t must lie in [0, 1]");
  }
  if (t <= eps1_) return 1.0;
  if (t >= eps2_) return 0.0;
  const double h = eps2_ - eps1_;
  return blend_derivative(eps1_, 1.0, h, 0.0, (t - eps1_) / h) / h;
}

double ramp(const RampFn& fn, double t) { return fn(t); }

Level::Level(double v) : value(v) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("Level must be a positive finite real");
}

FiberPoint4 d_L(const FiberPoint4& p, Level level) {
  const double L = level.value;
  const double denom = 1.0 - (1.0 - L) * p.norm2();
  return std::sqrt(L / denom) * p;
}

std::optional<Complex> level_of(const FiberPoint4& p, Complex theta) {
  const double gap = 1.0 - p.norm2();
  if (gap <= 0.0) return std::nullopt;
  return 2.0 * p.x * theta * p.y / gap;
}

std::array<double, 2> w_case2(const GluingParam& g, const FiberPoint4& p) {
  const Complex w = 2.0 * p.x * p.y - std::conj(g.g) * (1.0 - p.norm2());
  return {w.real(), w.imag()};
}

Jacobian26 jac_w(const GluingParam& g, const FiberPoint4& p) {
  const double g1 = g.g.real(), g2 = g.g.imag();
  const double x1 = p.x.real(), x2 = p.x.imag();
  const double y1 = p.y.real(), y2 = p.y.imag();
  const double gap = 1.0 - p.norm2();
  Jacobian26 j;
  j << -gap, 0.0, 2 * y1 + 2 * g1 * x1, -2 * y2 + 2 * g1 * x2, 2 * x1 + 2 * g1 * y1, -2 * x2 + 2 * g1 * y2,
       0.0,  gap, 2 * y2 - 2 * g2 * x1,  2 * y1 - 2 * g2 * x2, 2 * x2 - 2 * g2 * y1,  2 * x1 - 2 * g2 * y2;
  return j;
}

double w_case1(double g, double x, double y) { return 2.0 * x * y - g * (1.0 - x * x - y * y); }

std::array<double, 3> grad_w_case1(double g, double x, double y) {
  return {-(1.0 - x * x - y * y), 2.0 * y + 2.0 * g * x, 2.0 * x + 2.0 * g * y};
}

double w2_residual(const GluingParam& g, const FiberPoint4& p, const RampFn& ramp) {
  const double t = g.t();
  if (t == 0.0) return std::abs(2.0 * p.x * p.y);
  return std::abs(2.0 * p.x * g.theta() * p.y - ramp(t) * (1.0 - p.norm2()));
}

bool w2_member(const GluingParam& g, const FiberPoint4& p, const RampFn& ramp, double tol) {
  return w2_residual(g, p, ramp) <= tol;
}

double w0_residual(Complex z, const FiberPoint4& p) {
  return std::abs(2.0 * p.x * p.y - std::conj(z) * (1.0 - p.norm2()));
}

bool w0_member(Complex z, const FiberPoint4& p, double tol) { return w0_residual(z, p) <= tol; }

FiberPoint4 level_point(double s, Complex theta, double r, double phi) {
  const FiberPoint4 unit{std::polar(r, phi), std::polar(1.0 - r, -phi) * std::conj(theta)};
  return d_L(unit, Level(s));
}

}  // namespace embsum::fiber_family
