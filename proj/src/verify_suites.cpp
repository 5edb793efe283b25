#include "embsum/verify_suites.hpp"

#include <algorithm>
#include <set>

#include "embsum/errors.hpp"
#include "embsum/fiber_family.hpp"
#include "embsum/verify_checks.hpp"

namespace embsum::verify {

void RunConfig::validate() const {
  if (!(0.0 < eps1 && eps1 < eps2 && eps2 < 1.0)) throw InputError("config: need 0 < eps1 < eps2 < 1");
  if (!(tol > 0.0)) throw InputError("config: tol must be positive");
  if (chamfer && !(*chamfer > 0.0)) throw InputError("config: chamfer must be positive");
  if (samples == 0 || collision_samples < 2 || covering_images < 2 || covering_probes == 0 || curve_pairs == 0) {
    throw InputError("config: sample counts must be positive");
  }
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  static const std::set<std::string> known{"schema", "eps1", "eps2", "chamfer", "seed", "tol", "samples",
                                           "collision_samples", "covering_images", "covering_probes", "curve_pairs"};
  if (!j.is_object()) throw InputError("config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!known.contains(key)) throw InputError("config: unknown key '" + key + "'");
  }
  RunConfig c;
  try {
    if (j.contains("schema") && j.at("schema").get<int>() != 1) throw InputError("config: unsupported schema");
    c.eps1 = j.value("eps1", c.eps1);
    c.eps2 = j.value("eps2", c.eps2);
    if (j.contains("chamfer") && !j.at("chamfer").is_null()) c.chamfer = j.at("chamfer").get<double>();
    c.seed = j.value("seed", c.seed);
    c.tol = j.value("tol", c.tol);
    c.samples = j.value("samples", c.samples);
    c.collision_samples = j.value("collision_samples", c.collision_samples);
    c.covering_images = j.value("covering_images", c.covering_images);
    c.covering_probes = j.value("covering_probes", c.covering_probes);
    c.curve_pairs = j.value("curve_pairs", c.curve_pairs);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

nlohmann::json RunConfig::to_json() const {
  return {{"schema", 1},
          {"eps1", eps1},
          {"eps2", eps2},
          {"chamfer", chamfer ? nlohmann::json(*chamfer) : nlohmann::json(nullptr)},
          {"seed", seed},
          {"tol", tol},
          {"samples", samples},
          {"collision_samples", collision_samples},
          {"covering_images", covering_images},
          {"covering_probes", covering_probes},
          {"curve_pairs", curve_pairs}};
}

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass(); });
}

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json j{{"suite", suite}, {"pass", pass()}, {"checks", nlohmann::json::array()}};
  for (const auto& c : checks) j["checks"].push_back(c.to_json());
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"local-model", "fiber-family", "homeo", "curves", "bounds"};
  return names;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

namespace {

SuiteResult run_one(const std::string& name, const RunConfig& c) {
  const std::uint64_t s = c.seed;
  SuiteResult r{name, {}};
  auto& out = r.checks;
  if (name == "local-model") {
    out.push_back(check_v_regularity(c.samples, s + 1, c.tol));
    out.push_back(check_critical_values(c.samples, s + 2, c.tol));
    out.push_back(check_boundary_coorientation(c.samples, c.tol));
    out.push_back(check_tilde_v(c.samples, s + 3, c.tol));
  } else if (name == "fiber-family") {
    const fiber_family::RampFn ramp(c.eps1, c.eps2);
    out.push_back(check_ramp(ramp));
    out.push_back(check_dL_inversion(c.samples, s + 11, c.tol));
    out.push_back(check_level_law(c.samples, s + 12, 1e-10));
    out.push_back(check_w_complex_regularity(c.samples, s + 13, c.tol, ramp));
    out.push_back(check_w_real_regularity(c.samples, s + 14, c.tol));
  } else if (name == "homeo") {
    out.push_back(check_seam(c.samples, s + 21, c.tol));
    out.push_back(check_boundary_fixing(c.samples, s + 22, c.tol));
    out.push_back(check_codomain(c.samples, s + 23, 1e-9));
    out.push_back(check_linear_homotopy(c.samples, s + 24));
    out.push_back(check_image_separation(c.samples, s + 25));
    out.push_back(check_injectivity(c.collision_samples, s + 26, 1e-8, 1e-6));
    out.push_back(check_covering(c.covering_images, c.covering_probes, s + 27));
    out.push_back(check_continuity(1e-6));
    out.push_back(check_cubic_criterion(100, 1e-8));
    out.push_back(check_astar_roundtrip(100, 1e-8));
    out.push_back(check_positive_definite(400, 1e-3, 1e-9));
    out.push_back(check_line_integrals(1000, s + 28));
    out.push_back(check_astar_injectivity(c.samples, s + 29));
    out.push_back(check_cstar_injectivity(c.samples, s + 30));
  } else if (name == "curves") {
    out.push_back(check_curve_fixtures());
    out.push_back(check_curve_pairs(c.curve_pairs, s + 41));
    out.push_back(check_class_oracle(1000, s + 42));
  } else if (name == "bounds") {
    out.push_back(check_meeks_table());
    out.push_back(check_basis_independence(1000, s + 51));
  } else {
    throw InputError("unknown suite '" + name + "'");
  }
  return r;
}

}  // namespace

std::vector<SuiteResult> run_suites(const std::string& name, const RunConfig& cfg) {
  cfg.validate();
  if (!is_suite(name)) throw InputError("unknown suite '" + name + "'");
  std::vector<SuiteResult> out;
  if (name == "all") {
    for (const auto& n : suite_names()) out.push_back(run_one(n, cfg));
  } else {
    out.push_back(run_one(name, cfg));
  }
  return out;
}

}  // namespace embsum::verify
