#include "embsum/sampling.hpp"

#include <numbers>

#include "embsum/errors.hpp"

namespace embsum::sampling {

LowDiscrepancy::LowDiscrepancy(int dim, std::uint64_t seed) {
  if (dim < 1) throw DomainError("sampler dimension must be positive");
  // phi_d is the positive root of x^(d+1) = x + 1.
  double phi = 2.0;
  for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / (dim + 1));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> start(0.0, 1.0);
  for (int i = 0; i < dim; ++i) {
    alpha_.push_back(std::fmod(std::pow(1.0 / phi, i + 1), 1.0));
    state_.push_back(start(rng));
  }
}

std::vector<double> LowDiscrepancy::next() {
  for (std::size_t i = 0; i < state_.size(); ++i) {
    state_[i] += alpha_[i];
    state_[i] -= std::floor(state_[i]);
  }
  return state_;
}

FiberPoint4 sphere_point(const std::vector<double>& u) {
  const double a = std::sqrt(u[0]);
  const double b = std::sqrt(1.0 - u[0]);
  const double two_pi = 2.0 * std::numbers::pi;
  return {std::polar(a, two_pi * u[1]), std::polar(b, two_pi * u[2])};
}

FiberPoint4 ball_point(const std::vector<double>& u) {
  const double radius = std::pow(u[3], 0.25);
  return radius * sphere_point(u);
}

Complex disk_point(double u, double v) { return std::polar(std::sqrt(u), 2.0 * std::numbers::pi * v); }

}  // namespace embsum::sampling
