#pragma once

#include <complex>

namespace embsum {

using Complex = std::complex<double>;

// A point (x, y) of the fiber disk D^4 inside C^2.
struct FiberPoint4 {
  Complex x;
  Complex y;

  double norm2() const { return std::norm(x) + std::norm(y); }
};

inline FiberPoint4 operator*(double s, const FiberPoint4& p) { return {s * p.x, s * p.y}; }

// A point of the real fiber D^2 (Case 1).
struct RealFiberPoint {
  double x = 0.0;
  double y = 0.0;
};

// Real coordinates (x1, x2, y1, y2) used by all Jacobians.
inline double coord(const FiberPoint4& p, int i) {
  switch (i) {
    case 0: return p.x.real();
    case 1: return p.x.imag();
    case 2: return p.y.real();
    default: return p.y.imag();
  }
}

}  // namespace embsum
