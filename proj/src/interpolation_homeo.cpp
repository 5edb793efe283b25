#include "embsum/interpolation_homeo.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>

#include "embsum/errors.hpp"

namespace embsum::homeo {

namespace {

// Points with 1 - |x|^2 - |y|^2 below this are treated as lying on the sphere,
// where both maps are the identity on (x, y).
constexpr double kSphereGap = 1e-14;

double shrink_coefficient(double t, double modulus) {
  return (1.0 - t) * (1.0 - modulus) * (modulus * modulus - 1.0) + 1.0;
}

double tilde_coefficient(double own, double other) {
  return (1.0 + other * other - own * own) / 2.0 * (own * own - 1.0) + 1.0;
}

ModelPoint with_forced_z(Complex a, Complex b) {
  const double gap = 1.0 - std::norm(a) - std::norm(b);
  return {2.0 * std::conj(a * b) / gap, {a, b}};
}

}  // namespace

Complex map_a(const GluingParam& g, const FiberPoint4& p) {
  return shrink_coefficient(g.t(), std::abs(p.x)) * p.x;
}

Complex map_b(const GluingParam& g, const FiberPoint4& p) {
  return shrink_coefficient(g.t(), std::abs(p.y)) * p.y;
}

ModelPoint i_prime(const GluingParam& g, const FiberPoint4& p) {
  if (1.0 - p.norm2() <= kSphereGap) return {g.g, p};
  return with_forced_z(map_a(g, p), map_b(g, p));
}

Complex map_c(const FiberPoint4& p) {
  return tilde_coefficient(std::abs(p.x), std::abs(p.y)) * p.x;
}

Complex map_d(const FiberPoint4& p) {
  return tilde_coefficient(std::abs(p.y), std::abs(p.x)) * p.y;
}

ModelPoint i_doubleprime(const FiberPoint4& p) {
  if (1.0 - p.norm2() <= kSphereGap) return {Complex{}, p};
  return with_forced_z(map_c(p), map_d(p));
}

bool is_wprime_closure_point(const GluingParam& g, const FiberPoint4& p, double tol) {
  const double t = g.t();
  if (t > 1.0 + tol || p.norm2() > 1.0 + tol) return false;
  if (t == 0.0) return std::abs(std::abs(p.x) + std::abs(p.y) - 1.0) <= tol;
  return std::abs(2.0 * p.x * g.theta() * p.y - (1.0 - p.norm2())) <= tol;
}

bool is_tilde_v_point(const FiberPoint4& p, double tol) {
  return std::abs(p.x) + std::abs(p.y) <= 1.0 + tol;
}

ModelPoint i_combined(const WFiberPoint& q) {
  if (const auto* w = std::get_if<WPrimeClosurePoint>(&q)) {
    if (!is_wprime_closure_point(w->g, w->p)) {
      throw DomainError("i_combined: point is not in the closure of W'");
    }
    return i_prime(w->g, w->p);
  }
  const auto& v = std::get<TildeVPoint>(q);
  if (!is_tilde_v_point(v.p)) throw DomainError("i_combined: point is not in ~V");
  return i_doubleprime(v.p);
}

ModelPoint i_combined(const GluingParam& g, const FiberPoint4& p, double tol) {
  if (g.t() == 0.0 && is_tilde_v_point(p, tol)) return i_doubleprime(p);
  if (g.t() > 0.0 && is_wprime_closure_point(g, p, tol)) return i_prime(g, p);
  throw DomainError("i_combined: point lies neither in ~V nor in the closure of W'");
}

std::array<double, 2> astar_bstar(double t, double x) {
  return {((1.0 - t) * (1.0 - x) * (x * x - 1.0) + 1.0) * x,
          ((1.0 - t) * x * ((1.0 - x) * (1.0 - x) - 1.0) + 1.0) * (1.0 - x)};
}

std::array<double, 4> injectivity_cubic(double A, double B) {
  return {1.0 - B, 2.0 * A - 1.0, B - A - 3.0, 2.0};
}

std::optional<TX> invert_astar_bstar(double A, double B) {
  if (!(A > 0.0 && A < 1.0 && B > 0.0 && B < 1.0)) return std::nullopt;
  const auto c = injectivity_cubic(A, B);
  const auto cubic = [&c](double x) { return ((c[3] * x + c[2]) * x + c[1]) * x + c[0]; };

  // p(0) = 1 - B > 0 and p(1) = A - 1 < 0: a single simple root in between.
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (cubic(mid) > 0.0 ? lo : hi) = mid;
  }
  const double x = 0.5 * (lo + hi);
  // Solve for 1 - t from whichever coordinate has the larger denominator.
  const double den_a = (1.0 - x) * (x * x - 1.0) * x;
  const double den_b = x * ((1.0 - x) * (1.0 - x) - 1.0);
  const double one_minus_t = std::abs(den_a) >= std::abs(den_b) ? (A - x) / den_a : (B / (1.0 - x) - 1.0) / den_b;
  double t = 1.0 - one_minus_t;
  constexpr double slack = 1e-12;
  if (t < -slack || t > 1.0 + slack) return std::nullopt;
  t = std::clamp(t, 0.0, 1.0);
  return TX{t, x};
}

std::array<double, 2> cstar_dstar(double x, double y) {
  return {tilde_coefficient(x, y) * x, tilde_coefficient(y, x) * y};
}

Matrix2 D_matrix(double x, double y) {
  const double x2 = x * x, y2 = y * y;
  Matrix2 d;
  d << (1.0 + 6.0 * x2 - 5.0 * x2 * x2 + (3.0 * x2 - 1.0) * y2) / 2.0, x * (x2 - 1.0) * y,
       y * (y2 - 1.0) * x, (1.0 + 6.0 * y2 - 5.0 * y2 * y2 + (3.0 * y2 - 1.0) * x2) / 2.0;
  return d;
}

Matrix2 D_symmetric(double x, double y) {
  const Matrix2 d = D_matrix(x, y);
  return 0.5 * (d + d.transpose());
}

double min_eigenvalue(const Matrix2& s) {
  const double mean = 0.5 * (s(0, 0) + s(1, 1));
  const double half_diff = 0.5 * (s(0, 0) - s(1, 1));
  return mean - std::hypot(half_diff, s(0, 1));
}

LineIntegral verify_injectivity_line_integral(std::array<double, 2> p1, std::array<double, 2> p2) {
  const auto inside = [](std::array<double, 2> q) {
    constexpr double tol = 1e-12;
    return q[0] >= -tol && q[1] >= -tol && q[0] + q[1] <= 1.0 + tol;
  };
  if (!inside(p1) || !inside(p2)) {
    throw DomainError("line integral: endpoints must lie in the triangle x, y >= 0, x + y <= 1");
  }
  const Eigen::Vector2d delta{p2[0] - p1[0], p2[1] - p1[1]};
  if (delta.norm() == 0.0) throw DomainError("line integral: endpoints coincide");

  const auto integrand = [&](double s) {
    const Matrix2 d = D_matrix(p1[0] + s * delta[0], p1[1] + s * delta[1]);
    return delta.dot(d * delta);
  };
  using boost::math::quadrature::gauss;
  return {gauss<double, 64>::integrate(integrand, 0.0, 1.0),
          gauss<double, 32>::integrate(integrand, 0.0, 1.0)};
}

std::array<double, 6> embed(const WFiberPoint& q) {
  if (const auto* w = std::get_if<WPrimeClosurePoint>(&q)) {
    return {w->g.g.real(), w->g.g.imag(), w->p.x.real(), w->p.x.imag(), w->p.y.real(), w->p.y.imag()};
  }
  const auto& v = std::get<TildeVPoint>(q).p;
  return {0.0, 0.0, v.x.real(), v.x.imag(), v.y.real(), v.y.imag()};
}

std::array<double, 6> embed(const ModelPoint& m) {
  return {m.z.real(), m.z.imag(), m.p.x.real(), m.p.x.imag(), m.p.y.real(), m.p.y.imag()};
}

}  // namespace embsum::homeo
