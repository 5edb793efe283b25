// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.
// Usage: embsum_acceptance [path-to-embsum]
// Without the executable path criterion 11 runs `verify all` in process.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "embsum/cli_commands.hpp"
#include "embsum/curve_resolver.hpp"
#include "embsum/fiber_family.hpp"
#include "embsum/homology_bounds.hpp"
#include "embsum/instances.hpp"
#include "embsum/verify_checks.hpp"
#include "embsum/verify_suites.hpp"

namespace {

using namespace embsum;
using verify::VerificationReport;

// Pinned tolerances, sample counts and time limits.
constexpr std::uint64_t kSeed = 20260101;
constexpr std::size_t kSamples = 10000;
constexpr std::size_t kCollisionSamples = 100000;
constexpr std::size_t kCoveringImages = 20000;
constexpr std::size_t kCoveringProbes = 2000;
constexpr std::size_t kCurvePairs = 100;
constexpr double kTight = 1e-12;
constexpr double kLevelLaw = 1e-10;
constexpr double kCodomain = 1e-9;
constexpr double kCollisionOut = 1e-8;
constexpr double kCollisionIn = 1e-6;
constexpr double kContinuity = 1e-6;
constexpr std::size_t kCubicGrid = 100;
constexpr double kRoundTrip = 1e-8;
constexpr std::size_t kTriangleGrid = 400;
constexpr double kCornerRadius = 1e-3;
constexpr double kCornerDet = 1e-9;
constexpr double kLimitC1 = 5.0;   // seconds
constexpr double kLimitC8 = 10.0;
constexpr double kLimitC11 = 60.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Criterion {
public:
  void add(const VerificationReport& r) {
    std::ostringstream s;
    s << r.name << " [n=" << r.samples << ", max residual " << r.max_residual << ", margin " << r.min_margin << "]";
    parts_.push_back(s.str());
    if (!r.pass()) {
      pass_ = false;
      for (const auto& f : r.failures) failures_.push_back(r.name + ": " + f);
    }
  }
  void require(bool ok, const std::string& what) {
    parts_.push_back(what + (ok ? "" : " (violated)"));
    if (!ok) {
      pass_ = false;
      failures_.push_back(what);
    }
  }
  Outcome outcome() const {
    std::string d;
    for (std::size_t i = 0; i < parts_.size(); ++i) d += (i ? "; " : "") + parts_[i];
    for (const auto& f : failures_) d += "\n    " + f;
    return {pass_, d};
  }

private:
  bool pass_ = true;
  std::vector<std::string> parts_;
  std::vector<std::string> failures_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void timed(Criterion& c, double limit, const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  const double s = seconds_since(t0);
  std::ostringstream msg;
  msg << "runtime " << s << " s < " << limit << " s";
  c.require(s < limit, msg.str());
}

Outcome c1() {
  Criterion c;
  timed(c, kLimitC1, [&] { c.add(verify::check_v_regularity(kSamples, kSeed + 1, kTight)); });
  return c.outcome();
}

Outcome c2() {
  Criterion c;
  c.add(verify::check_critical_values(kSamples, kSeed + 2, kTight));
  return c.outcome();
}

Outcome c3() {
  Criterion c;
  c.add(verify::check_dL_inversion(kSamples, kSeed + 11, kTight));
  c.add(verify::check_level_law(kSamples, kSeed + 12, kLevelLaw));
  return c.outcome();
}

Outcome c4() {
  Criterion c;
  c.add(verify::check_w_complex_regularity(kSamples, kSeed + 13, kTight, fiber_family::RampFn()));
  c.add(verify::check_w_real_regularity(kSamples, kSeed + 14, kTight));
  return c.outcome();
}

Outcome c5() {
  Criterion c;
  c.add(verify::check_seam(kSamples, kSeed + 21, kTight));
  c.add(verify::check_boundary_fixing(kSamples, kSeed + 22, kTight));
  c.add(verify::check_codomain(kSamples, kSeed + 23, kCodomain));
  c.add(verify::check_injectivity(kCollisionSamples, kSeed + 26, kCollisionOut, kCollisionIn));
  c.add(verify::check_covering(kCoveringImages, kCoveringProbes, kSeed + 27));
  c.add(verify::check_continuity(kContinuity));
  return c.outcome();
}

Outcome c6() {
  Criterion c;
  c.add(verify::check_cubic_criterion(kCubicGrid, kRoundTrip));
  c.add(verify::check_astar_roundtrip(kCubicGrid, kRoundTrip));
  return c.outcome();
}

Outcome c7() {
  Criterion c;
  c.add(verify::check_positive_definite(kTriangleGrid, kCornerRadius, kCornerDet));
  return c.outcome();
}

Outcome c8() {
  Criterion c;
  timed(c, kLimitC8, [&] {
    std::mt19937_64 rng(kSeed + 41);
    std::size_t additive = 0, determinant = 0;
    for (std::size_t i = 0; i < kCurvePairs; ++i) {
      const auto [c1, c2] = instances::random_transversal_pair(rng);
      const auto xs = resolver::find_intersections(c1, c2);
      const auto k1 = c1.displacement(), k2 = c2.displacement();
      long long signed_sum = 0;
      for (const auto& x : xs) signed_sum += x.sign;
      if (signed_sum == k1[0] * k2[1] - k1[1] * k2[0]) ++determinant;
      const auto total = resolver::total_class(resolver::resolve(c1, c2).curves);
      if (total == torus::H1Class{k1[0] + k2[0], k1[1] + k2[1]}) ++additive;
    }
    c.require(additive == kCurvePairs, "class additivity on " + std::to_string(additive) + "/" + std::to_string(kCurvePairs) + " pairs");
    c.require(determinant == kCurvePairs,
              "signed crossings = det on " + std::to_string(determinant) + "/" + std::to_string(kCurvePairs) + " pairs");
  });
  return c.outcome();
}

Outcome c9() {
  Criterion c;
  // Random instances: the pair check compares G' components with the resolver.
  c.add(verify::check_curve_pairs(kCurvePairs, kSeed + 41));
  const auto components_of = [](const std::vector<resolver::Crossing>& xs) {
    const auto data = resolver::arc_data(xs);
    return bounds::build_G_prime(bounds::build_G(data.input), data.choices).components;
  };
  const auto rep = [](long long p, long long q) { return bounds::ClassRep{{p, q}, false, true}; };
  {
    const auto a = instances::geodesic("a", 1, 2, {0.1, 0.05});
    const auto b = instances::geodesic("b", 2, 1, {0.37, 0.61});
    const auto xs = resolver::find_intersections(a, b);
    const auto d = resolver::resolve(a, b);
    const auto lb = bounds::lb1_bound(rep(1, 2), rep(2, 1));
    c.require(xs.size() == 3, "(1,2)x(2,1): |M| = " + std::to_string(xs.size()) + " (want 3)");
    c.require(bounds::meeks_C(rep(1, 2) + rep(2, 1)) == 3, "(1,2)x(2,1): C = 3");
    c.require(lb && *lb == 2 && static_cast<long long>(xs.size()) >= *lb, "(1,2)x(2,1): lb1 bound 2 satisfied");
    c.require(components_of(xs) == resolver::count_components(d), "(1,2)x(2,1): components(G') = resolved components");
  }
  {
    const auto a = instances::geodesic("a", 1, 4, {0.1, 0.05});
    const auto b = instances::geodesic("b", 4, 1, {0.37, 0.61});
    const auto xs = resolver::find_intersections(a, b);
    const auto d = resolver::resolve(a, b);
    const auto lb = bounds::lb1_bound(rep(1, 4), rep(4, 1));
    c.require(xs.size() == 15, "(1,4)x(4,1): |M| = " + std::to_string(xs.size()) + " (want 15)");
    c.require(lb && *lb == 4 && static_cast<long long>(xs.size()) >= *lb, "(1,4)x(4,1): |M| >= lb1 bound 4");
    c.require(components_of(xs) == resolver::count_components(d), "(1,4)x(4,1): components(G') = resolved components");
  }
  return c.outcome();
}

Outcome c10() {
  Criterion c;
  bool orientable_ok = true;
  for (long long k = 0; k <= 12; ++k) orientable_ok = orientable_ok && bounds::meeks_C({{2 * k, 3 * k}, false, true}) == k;
  c.require(orientable_ok, "orientable div-k -> k for k = 0..12");
  c.require(bounds::meeks_C({{5, 0}, false, false}) == 2, "non-orientable (5, no sigma) -> 2");
  c.require(bounds::meeks_C({{4, 0}, true, false}) == 3, "non-orientable (4, sigma) -> 3");
  return c.outcome();
}

Outcome c11(const char* exe) {
  Criterion c;
  int code = -1;
  timed(c, kLimitC11, [&] {
    if (exe) {
      const std::string cmd = std::string("\"") + exe + "\" verify all > /dev/null";
      const int status = std::system(cmd.c_str());
      code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    } else {
      std::ostringstream sink;
      code = cli::cmd_verify("all", verify::RunConfig{}, sink);
    }
  });
  c.require(code == 0, "verify all exit code " + std::to_string(code));
  return c.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  const char* exe = argc > 1 ? argv[1] : nullptr;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"regularity of V", c1},
      {"unique critical value", c2},
      {"d_L inversion and level law", c3},
      {"regularity of the smoothed family", c4},
      {"homeomorphism suite", c5},
      {"cubic criterion", c6},
      {"positive definiteness", c7},
      {"class additivity and signed crossings", c8},
      {"graph and geometry agreement", c9},
      {"component count table", c10},
      {"verify all", [exe] { return c11(exe); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
