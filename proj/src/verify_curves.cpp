#include <array>
#include <random>
#include <string>
#include <vector>

#include "embsum/curve_resolver.hpp"
#include "embsum/errors.hpp"
#include "embsum/homology_bounds.hpp"
#include "embsum/instances.hpp"
#include "embsum/verify_checks.hpp"
#include "tracker.hpp"

namespace embsum::verify {

namespace {

using resolver::VertexSource;
using torus::H1Class;
using torus::TorusCurve;
using torus::Vec2;

std::string cls(const H1Class& k) { return "(" + std::to_string(k[0]) + ", " + std::to_string(k[1]) + ")"; }

bounds::ClassRep rep(const H1Class& k) { return {{k[0], k[1]}, false, true}; }

std::size_t g_prime_components(std::span<const resolver::Crossing> xs) {
  const auto data = resolver::arc_data(xs);
  return bounds::build_G_prime(bounds::build_G(data.input), data.choices).components;
}

double distance_to_curve(const Vec2& p, const TorusCurve& c) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < c.segment_count(); ++i) best = std::min(best, torus::torus_point_segment_distance(p, c.segment(i)));
  return best;
}

// Every resolved segment either runs along an input curve or is a
// reconnecting chord inside a chamfer ball.
void check_locality(Tracker& t, const TorusCurve& c1, const TorusCurve& c2, std::span<const resolver::Crossing> xs,
                    const resolver::ResolvedDiagram& d, const std::string& label) {
  for (std::size_t k = 0; k < d.curves.size(); ++k) {
    const TorusCurve& c = d.curves[k];
    for (std::size_t i = 0; i < c.segment_count(); ++i) {
      const auto s = c.segment(i);
      const bool both_cut = d.provenance[k][i] == VertexSource::cut && d.provenance[k][i + 1] == VertexSource::cut;
      const Vec2 mid = s.at(0.5);
      const double along = std::min(distance_to_curve(mid, c1), distance_to_curve(mid, c2));
      if (along <= 1e-9) continue;
      bool in_ball = false;
      for (const auto& x : xs) in_ball = in_ball || torus::torus_distance(mid, x.point) <= d.chamfer * (1.0 + 1e-9);
      t.require(both_cut && in_ball, label + ": resolved segment leaves the inputs outside the chamfer balls");
    }
  }
}

void check_pair(Tracker& t, const TorusCurve& c1, const TorusCurve& c2, const std::string& label) {
  const auto xs = resolver::find_intersections(c1, c2);
  const H1Class k1 = resolver::homology_class(c1), k2 = resolver::homology_class(c2);
  long long signed_sum = 0;
  for (const auto& x : xs) signed_sum += x.sign;
  const long long det = k1[0] * k2[1] - k1[1] * k2[0];
  t.require(signed_sum == det, label + ": signed crossings " + std::to_string(signed_sum) + " != det " + std::to_string(det));

  const auto d = resolver::resolve(c1, c2);
  const H1Class total = resolver::total_class(d.curves);
  t.require(total == H1Class{k1[0] + k2[0], k1[1] + k2[1]},
            label + ": resolved class " + cls(total) + " != " + cls(k1) + " + " + cls(k2));
  t.require(torus::is_embedded_family(d.curves), label + ": resolved curves are not disjoint and embedded");
  for (const auto& c : d.curves) {
    t.require(oracle::class_via_crossings(c) == c.displacement(), label + ": crossing-count class disagrees");
  }
  const std::size_t n = resolver::count_components(d);
  if (xs.empty()) {
    t.require(n == 2, label + ": disjoint pair did not pass through");
  } else {
    const auto soup = oracle::strand_soup(c1, c2, xs, d.chamfer);
    t.require(oracle::trace_components(soup) == n, label + ": strand trace disagrees with the resolver");
    check_locality(t, c1, c2, xs, d, label);
  }
  t.require(g_prime_components(xs) == n, label + ": components of G' != resolved components");
  if (const auto lb = bounds::lb1_bound(rep(k1), rep(k2))) {
    t.require(static_cast<long long>(xs.size()) >= *lb, label + ": |M| below the lb1 bound");
  }
}

}  // namespace

VerificationReport check_curve_pairs(std::size_t pairs, std::uint64_t seed) {
  Tracker t("resolution of random pairs");
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto [c1, c2] = instances::random_transversal_pair(rng);
    t.sample();
    try {
      check_pair(t, c1, c2, "pair " + std::to_string(i));
    } catch (const std::exception& e) {
      t.require(false, "pair " + std::to_string(i) + ": " + e.what());
    }
  }
  return t.done();
}

VerificationReport check_curve_fixtures() {
  Tracker t("curve fixtures");
  const auto expect = [&](bool ok, const std::string& what) {
    t.sample();
    t.require(ok, what);
  };
  try {
    {
      const auto h = instances::geodesic("h", 1, 0, {0.0, 0.25});
      const auto v = instances::geodesic("v", 0, 1, {0.25, 0.0});
      const auto xs = resolver::find_intersections(h, v);
      expect(xs.size() == 1 && torus::torus_distance(xs[0].point, {0.25, 0.25}) < 1e-12, "(1,0) x (0,1): one crossing at (0.25, 0.25)");
      const auto d = resolver::resolve(h, v);
      expect(d.curves.size() == 1 && d.curves[0].displacement() == H1Class{1, 1}, "(1,0) x (0,1): one component of class (1,1)");
      expect(resolver::orientation_compat(h, v).compatible, "(1,0) x (0,1): orientation compatible");
      check_pair(t, h, v, "(1,0) x (0,1)");
    }
    {
      const auto a = instances::geodesic("a", 1, 2, {0.1, 0.05});
      const auto b = instances::geodesic("b", 2, 1, {0.37, 0.61});
      const auto xs = resolver::find_intersections(a, b);
      const auto d = resolver::resolve(a, b);
      const auto lb = bounds::lb1_bound(rep({1, 2}), rep({2, 1}));
      expect(xs.size() == 3, "(1,2) x (2,1): |M| = 3");
      expect(d.curves.size() == 3, "(1,2) x (2,1): 3 components");
      expect(bounds::meeks_C(rep({3, 3})) == 3, "C((3,3)) = 3");
      expect(lb && *lb == 2 && xs.size() >= 2, "(1,2) x (2,1): lb1 bound 2 satisfied");
      check_pair(t, a, b, "(1,2) x (2,1)");
    }
    {
      const auto a = instances::geodesic("a", 1, 4, {0.1, 0.05});
      const auto b = instances::geodesic("b", 4, 1, {0.37, 0.61});
      const auto xs = resolver::find_intersections(a, b);
      const auto lb = bounds::lb1_bound(rep({1, 4}), rep({4, 1}));
      expect(xs.size() == 15, "(1,4) x (4,1): |M| = 15");
      expect(lb && *lb == 4 && xs.size() >= 4, "(1,4) x (4,1): lb1 bound 4 satisfied");
      check_pair(t, a, b, "(1,4) x (4,1)");
    }
    {
      const auto [z, v] = instances::zigzag_pair();
      const auto r = resolver::orientation_compat(z, v);
      expect(r.signs == std::vector<int>{1, -1, 1} && !r.compatible, "zigzag: signs (+,-,+), not compatible");
      check_pair(t, z, v, "zigzag");
    }
    {
      const auto a = instances::geodesic("a", 1, 0, {0.0, 0.2});
      const auto b = instances::geodesic("b", 1, 0, {0.0, 0.7});
      const auto d = resolver::resolve(a, b);
      expect(d.curves.size() == 2 && d.curves[0].lift() == a.lift() && d.curves[1].lift() == b.lift(),
             "parallel loops pass through unchanged");
      expect(resolver::orientation_compat(a, b).compatible, "disjoint curves are vacuously compatible");
    }
    {
      const auto c = instances::geodesic("c", 1, 0, {0.0, 0.5});
      const std::array<double, 2> eps{0.1, 0.2};
      const auto two = resolver::offset_copies(c, 2, eps);
      expect(two.size() == 2 && resolver::total_class(two) == H1Class{2, 0}, "offset a = 2: class (2,0)");
      const auto three = resolver::offset_copies(c, -3, eps);
      expect(three.size() == 3 && resolver::total_class(three) == H1Class{-3, 0}, "offset a = -3: class (-3,0)");
    }
  } catch (const std::exception& e) {
    t.require(false, std::string("fixture threw: ") + e.what());
  }
  return t.done();
}

VerificationReport check_class_oracle(std::size_t n, std::uint64_t seed) {
  Tracker t("homology class oracle");
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = instances::random_curve(rng, "c");
    t.sample();
    t.require(oracle::class_via_crossings(c) == resolver::homology_class(c), "crossing count disagrees with displacement");
  }
  return t.done();
}

VerificationReport check_meeks_table() {
  Tracker t("Meeks component count");
  const auto expect = [&](const bounds::ClassRep& r, long long want, const std::string& what) {
    t.sample();
    const long long got = bounds::meeks_C(r);
    t.require(got == want, what + ": got " + std::to_string(got) + ", want " + std::to_string(want));
  };
  for (long long k = 0; k <= 12; ++k) expect({{2 * k, 3 * k}, false, true}, k, "orientable div " + std::to_string(k));
  expect({{5, 0}, false, false}, 2, "non-orientable div 5");
  expect({{4, 0}, true, false}, 3, "non-orientable div 4 with sigma");
  expect({{3, 0}, true, false}, 1, "non-orientable div 3 with sigma (rewritten)");
  expect({{0, 0}, true, false}, 1, "non-orientable sigma alone");
  return t.done();
}

VerificationReport check_basis_independence(std::size_t n, std::uint64_t seed) {
  Tracker t("basis independence of div and C");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> coef(-6, 6), step(0, 3);
  for (std::size_t i = 0; i < n; ++i) {
    std::array<long long, 3> v{coef(rng), coef(rng), coef(rng)};
    const long long before = bounds::div(v);
    // Random product of elementary unimodular moves.
    for (int m = 0; m < 6; ++m) {
      const auto a = static_cast<std::size_t>(step(rng) % 3), b = (a + 1 + static_cast<std::size_t>(step(rng) % 2)) % 3;
      switch (step(rng)) {
        case 0: v[a] += v[b]; break;
        case 1: v[a] -= v[b]; break;
        case 2: std::swap(v[a], v[b]); break;
        default: v[a] = -v[a]; break;
      }
    }
    t.sample();
    t.require(bounds::div(v) == before, "div changed under a unimodular change of basis");
  }
  return t.done();
}

}  // namespace embsum::verify
