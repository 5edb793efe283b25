#pragma once

// Explicit homeomorphism between the topological fiber model W over a disk
// G ~ D^2 (the closure of W' over G \ {0} glued to ~V over the centre) and the
// smooth model W''_0 = {(z, x, y) : 2xy = conj(z)(1 - |x|^2 - |y|^2)}.
//
// On the closure of W' the map is i'(t theta, x, y) = (z, a, b), on ~V it is
// i''(x, y) = (z, c, d), where (a, b) and (c, d) are radial shrinkings and z is
// forced by the model equation. The two pieces agree on the seam
// |x| + |y| = 1, t = 0, and both fix the boundary.

#include <array>
#include <optional>
#include <utility>
#include <variant>

#include <Eigen/Core>

#include "embsum/fiber_family.hpp"
#include "embsum/types.hpp"

namespace embsum::homeo {

using fiber_family::GluingParam;

// A point of the closure of W' over G: either t > 0 and 2x theta y = 1 - |x|^2 - |y|^2,
// or t = 0 and |x| + |y| = 1.
struct WPrimeClosurePoint {
  GluingParam g;
  FiberPoint4 p;
};

// A point of ~V in the central fiber.
struct TildeVPoint {
  FiberPoint4 p;
};

// A point (z, x, y) of W''_0.
struct ModelPoint {
  Complex z;
  FiberPoint4 p;
};

// Points of the topological model, in the coordinates of G x D^4.
using WFiberPoint = std::variant<WPrimeClosurePoint, TildeVPoint>;

inline constexpr double kModelTolerance = 1e-9;

Complex map_a(const GluingParam& g, const FiberPoint4& p);
Complex map_b(const GluingParam& g, const FiberPoint4& p);
ModelPoint i_prime(const GluingParam& g, const FiberPoint4& p);

Complex map_c(const FiberPoint4& p);
Complex map_d(const FiberPoint4& p);
ModelPoint i_doubleprime(const FiberPoint4& p);

// Membership tests used by i_combined; tol applies to the defining equations.
bool is_wprime_closure_point(const GluingParam& g, const FiberPoint4& p, double tol = 1e-9);
bool is_tilde_v_point(const FiberPoint4& p, double tol = 1e-12);

ModelPoint i_combined(const WFiberPoint& q);

// Classifies a raw (g, x, y) triple and dispatches; throws DomainError when the
// triple lies in neither piece.
ModelPoint i_combined(const GluingParam& g, const FiberPoint4& p, double tol = 1e-9);

// Moduli of (a, b) on the closure of W', as functions of (t, |x|) with |y| = 1 - |x|.
std::array<double, 2> astar_bstar(double t, double x);

// The cubic 2x^3 + (B - A - 3)x^2 + (2A - 1)x + (1 - B) whose root in (0, 1)
// recovers |x|; coefficients listed from the constant term up.
std::array<double, 4> injectivity_cubic(double A, double B);

struct TX {
  double t;
  double x;
};

// Inverse of (a*, b*) by bisection on the cubic; empty if the recovered t is
// outside [0, 1] or (A, B) is outside (0, 1)^2.
std::optional<TX> invert_astar_bstar(double A, double B);

// Moduli of (c, d) on ~V as functions of (|x|, |y|).
std::array<double, 2> cstar_dstar(double x, double y);

using Matrix2 = Eigen::Matrix2d;
Matrix2 D_matrix(double x, double y);
Matrix2 D_symmetric(double x, double y);
double min_eigenvalue(const Matrix2& sym);

struct LineIntegral {
  double value;        // 64-point Gauss-Legendre
  double coarse_value; // 32-point rule, for the Richardson-style consistency check
};

// Integral of <Delta, D(gamma(s)) Delta> along the segment from p1 to p2 in
// the triangle {x, y >= 0, x + y <= 1}. Throws DomainError if p1 == p2 or
// either point lies outside the triangle.
LineIntegral verify_injectivity_line_integral(std::array<double, 2> p1, std::array<double, 2> p2);

// Euclidean coordinates of inputs and outputs in G x D^4 = R^6, ordered
// (g1, g2, x1, x2, y1, y2).
std::array<double, 6> embed(const WFiberPoint& q);
std::array<double, 6> embed(const ModelPoint& m);

}  // namespace embsum::homeo
