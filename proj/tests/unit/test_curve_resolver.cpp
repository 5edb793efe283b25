#include <array>
#include <random>
#include <vector>

#include <doctest.h>

#include "embsum/curve_resolver.hpp"
#include "embsum/errors.hpp"
#include "embsum/instances.hpp"
#include "embsum/oracle.hpp"

using namespace embsum;
using namespace embsum::resolver;

TEST_CASE("(1,0) x (0,1): one positive crossing, resolved into one (1,1) curve") {
  const auto h = instances::geodesic("h", 1, 0, {0.0, 0.25});
  const auto v = instances::geodesic("v", 0, 1, {0.25, 0.0});
  const auto xs = find_intersections(h, v);
  REQUIRE(xs.size() == 1);
  CHECK(xs[0].sign == 1);
  CHECK(xs[0].point[0] == doctest::Approx(0.25));
  CHECK(xs[0].point[1] == doctest::Approx(0.25));
  const auto d = resolve(h, v);
  REQUIRE(d.curves.size() == 1);
  CHECK(d.curves[0].displacement() == H1Class{1, 1});
  CHECK(d.curves[0].id() == "resolved0");
  CHECK(d.chamfer > 0.0);
  CHECK(count_components(d) == 1);
}

TEST_CASE("geodesic pairs: |M| = |det| and the component count") {
  const auto a = instances::geodesic("a", 1, 2, {0.1, 0.05});
  const auto b = instances::geodesic("b", 2, 1, {0.37, 0.61});
  CHECK(find_intersections(a, b).size() == 3);
  const auto d = resolve(a, b);
  CHECK(d.curves.size() == 3);
  CHECK(total_class(d.curves) == H1Class{3, 3});
  for (const auto& c : d.curves) CHECK(c.displacement() == H1Class{1, 1});

  const auto p = instances::geodesic("p", 1, 4, {0.1, 0.05});
  const auto q = instances::geodesic("q", 4, 1, {0.37, 0.61});
  CHECK(find_intersections(p, q).size() == 15);
  CHECK(total_class(resolve(p, q).curves) == H1Class{5, 5});
}

TEST_CASE("signs and orientation compatibility") {
  const auto [z, v] = instances::zigzag_pair();
  const auto r = orientation_compat(z, v);
  CHECK(r.signs == std::vector<int>{1, -1, 1});
  CHECK_FALSE(r.compatible);
  CHECK(total_class(resolve(z, v).curves) == H1Class{1, 1});
  CHECK(orientation_compat(z.reversed(), v).signs == std::vector<int>{-1, 1, -1});
}

TEST_CASE("non-transversal contacts are rejected with a location") {
  const auto line = instances::geodesic("l", 1, 0, {0.0, 0.5});
  const TorusCurve vee("vee", {{0.0, 0.7}, {0.5, 0.5}, {1.0, 0.7}});
  try {
    (void)find_intersections(line, vee);
    FAIL("expected NonTransversalError");
  } catch (const NonTransversalError& e) {
    CHECK(e.location()[0] == doctest::Approx(0.5));
    CHECK(e.location()[1] == doctest::Approx(0.5));
  }
  const TorusCurve shallow("shallow", {{0.0, 0.3}, {0.2, 0.49997}, {0.8, 0.50003}, {1.0, 0.3}});
  CHECK_THROWS_AS(find_intersections(line, shallow), NonTransversalError);
  CHECK_THROWS_AS(find_intersections(line, line), NonTransversalError);
}

TEST_CASE("chamfer validation") {
  const auto h = instances::geodesic("h", 1, 0, {0.0, 0.25});
  const auto v = instances::geodesic("v", 0, 1, {0.25, 0.0});
  const auto xs = find_intersections(h, v);
  const double admissible = max_admissible_chamfer(h, v, xs);
  CHECK(default_chamfer(h, v, xs) < admissible);
  CHECK_NOTHROW(resolve(h, v, 0.5 * admissible));
  CHECK_THROWS_AS(resolve(h, v, admissible), GeometryError);
  CHECK_THROWS_AS(resolve(h, v, 0.0), DomainError);
}

TEST_CASE("disjoint curves pass through unchanged") {
  const auto a = instances::geodesic("a", 1, 0, {0.0, 0.2});
  const auto b = instances::geodesic("b", 1, 0, {0.0, 0.7});
  const auto d = resolve(a, b);
  REQUIRE(d.curves.size() == 2);
  CHECK(d.chamfer == 0.0);
  CHECK(d.curves[0].lift() == a.lift());
  CHECK(d.provenance[1].front() == VertexSource::curve2);
}

TEST_CASE("offset copies: |a| components of total class a[c]") {
  const auto c = instances::wavy_geodesic("c", 1, 1, {0.1, 0.3}, 0.05, 2, 0.3, 12);
  const std::array<double, 3> eps{0.02, 0.04, 0.06};
  for (long long a : {1LL, 2LL, 3LL, -2LL, 5LL}) {
    const auto copies = offset_copies(c, a, eps);
    CHECK(copies.size() == static_cast<std::size_t>(std::llabs(a)));
    CHECK(total_class(copies) == H1Class{a, a});
    CHECK(torus::is_embedded_family(copies));
  }
  CHECK_THROWS_AS(offset_copies(c, 0, eps), DomainError);
  CHECK_THROWS_AS(offset_copies(c, 9, eps), InputError);
  // Offsets at +-0.5 of a (1, 0) loop land on the same loop.
  const std::array<double, 1> half{0.5};
  CHECK_THROWS_AS(offset_copies(instances::geodesic("h", 1, 0, {0.0, 0.5}), 2, half), GeometryError);
}

TEST_CASE("arc data: every crossing is a crossed reconnection of two plain sides") {
  const auto a = instances::geodesic("a", 1, 2, {0.1, 0.05});
  const auto b = instances::geodesic("b", 2, 1, {0.37, 0.61});
  const auto data = arc_data(find_intersections(a, b));
  CHECK(data.input.side1_arcs == 3);
  CHECK(data.input.side2_arcs == 3);
  for (const auto& c : data.choices) CHECK(c == bounds::Pairing::crossed);
  const auto none = arc_data({});
  CHECK(none.input.side1_arcs == 1);
  CHECK(none.input.crossings.empty());
}

TEST_CASE("property: random transversal pairs obey additivity and the determinant law") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    const auto [c1, c2] = instances::random_transversal_pair(rng);
    const auto xs = find_intersections(c1, c2);
    long long signed_sum = 0;
    for (const auto& x : xs) signed_sum += x.sign;
    const auto k1 = c1.displacement(), k2 = c2.displacement();
    CHECK(signed_sum == k1[0] * k2[1] - k1[1] * k2[0]);
    const auto d = resolve(c1, c2);
    CHECK(total_class(d.curves) == H1Class{k1[0] + k2[0], k1[1] + k2[1]});
    CHECK(torus::is_embedded_family(d.curves));
    if (!xs.empty()) CHECK(oracle::trace_components(oracle::strand_soup(c1, c2, xs, d.chamfer)) == d.curves.size());
  }
}
