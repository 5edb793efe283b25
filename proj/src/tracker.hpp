#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "embsum/oracle.hpp"

namespace embsum::verify {

class Tracker {
public:
  explicit Tracker(std::string name) {
    r_.name = std::move(name);
    r_.min_margin = std::numeric_limits<double>::infinity();
  }

  void sample() { ++r_.samples; }

  // value <= limit
  void at_most(double value, double limit, const std::string& what) {
    r_.max_residual = std::max(r_.max_residual, value);
    r_.min_margin = std::min(r_.min_margin, limit - value);
    if (!(value <= limit)) r_.fail(what + ": " + std::to_string(value) + " > " + std::to_string(limit));
  }

  // value >= limit
  void at_least(double value, double limit, const std::string& what) {
    r_.min_margin = std::min(r_.min_margin, value - limit);
    if (!(value >= limit)) r_.fail(what + ": " + std::to_string(value) + " < " + std::to_string(limit));
  }

  void require(bool ok, const std::string& what) {
    if (!ok) r_.fail(what);
  }

  oracle::VerificationReport done() {
    if (!std::isfinite(r_.min_margin)) r_.min_margin = 0.0;
    return r_;
  }

private:
  oracle::VerificationReport r_;
};

}  // namespace embsum::verify
