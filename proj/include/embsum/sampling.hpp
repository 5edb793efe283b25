#pragma once

// Deterministic samplers: additive-recurrence (R_d) low-discrepancy points in
// [0, 1)^d with a seeded starting offset, and domain maps built on them.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "embsum/types.hpp"

namespace embsum::sampling {

class LowDiscrepancy {
public:
  LowDiscrepancy(int dim, std::uint64_t seed);

  std::vector<double> next();
  int dim() const { return static_cast<int>(alpha_.size()); }

private:
  std::vector<double> alpha_;
  std::vector<double> state_;
};

// Uniform point of the closed unit ball in C^2 = R^4, from a [0,1)^4 draw.
FiberPoint4 ball_point(const std::vector<double>& u);

// Unit vector of C^2 from a [0,1)^3 draw (Hopf coordinates, uniform on S^3).
FiberPoint4 sphere_point(const std::vector<double>& u);

// Point of the open unit disk, uniform in area, from a [0,1)^2 draw.
Complex disk_point(double u, double v);

}  // namespace embsum::sampling
