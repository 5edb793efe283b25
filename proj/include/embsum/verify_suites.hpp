#pragma once

// Named invariant suites run by `embsum verify`, and the run configuration
// shared by all commands.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "embsum/oracle.hpp"

namespace embsum::verify {

struct RunConfig {
  double eps1 = 0.25;
  double eps2 = 0.75;
  std::optional<double> chamfer;
  std::uint64_t seed = 20260101;
  double tol = 1e-12;                  // tight residual bound
  std::size_t samples = 10000;         // per sampled invariant
  std::size_t collision_samples = 100000;
  std::size_t covering_images = 20000;
  std::size_t covering_probes = 2000;
  std::size_t curve_pairs = 100;

  // Throws InputError unless 0 < eps1 < eps2 < 1, tol > 0, chamfer > 0 and
  // all counts are positive.
  void validate() const;

  // Unknown keys are rejected.
  static RunConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct SuiteResult {
  std::string suite;
  std::vector<oracle::VerificationReport> checks;

  bool pass() const;
  nlohmann::json to_json() const;
};

// local-model, fiber-family, homeo, curves, bounds.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);  // also accepts "all"

// Throws InputError for an unknown name.
std::vector<SuiteResult> run_suites(const std::string& name, const RunConfig& cfg);

}  // namespace embsum::verify
