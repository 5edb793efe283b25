#include <array>
#include <vector>

#include <doctest.h>

#include "embsum/errors.hpp"
#include "embsum/homology_bounds.hpp"

using namespace embsum;
using namespace embsum::bounds;

namespace {
ClassRep orientable(std::vector<long long> v) { return {std::move(v), false, true}; }
ClassRep nonorientable(std::vector<long long> v, bool sigma) { return {std::move(v), sigma, false}; }
}  // namespace

TEST_CASE("div is the gcd of the coordinates") {
  const std::array<long long, 2> a{6, -9};
  const std::array<long long, 3> b{0, 0, 0};
  const std::array<long long, 3> c{4, 0, 10};
  CHECK(div(a) == 3);
  CHECK(div(b) == 0);
  CHECK(div(c) == 2);
}

TEST_CASE("Meeks component count: the three cases") {
  CHECK(meeks_C(orientable({2, 3})) == 1);
  CHECK(meeks_C(orientable({6, 9})) == 3);
  CHECK(meeks_C(orientable({0, 0})) == 0);
  CHECK(meeks_C(nonorientable({5, 0}, false)) == 2);
  CHECK(meeks_C(nonorientable({4, 0}, true)) == 3);
  // Odd div with sigma: the class can be rewritten without the torsion summand.
  CHECK(meeks_C(nonorientable({3, 0}, true)) == meeks_C(nonorientable({3, 0}, false)));
  CHECK(meeks_C(nonorientable({0, 0}, true)) == 1);
  CHECK_THROWS_AS(meeks_C({{1, 0}, true, true}), InputError);
}

TEST_CASE("class arithmetic") {
  const auto s = orientable({1, 2}) + orientable({2, 1});
  CHECK(s.free == std::vector<long long>{3, 3});
  const auto t = nonorientable({1, 0}, true) + nonorientable({1, 0}, true);
  CHECK_FALSE(t.sigma);
  CHECK(scaled(3, nonorientable({1, 1}, true)).sigma);
  CHECK_FALSE(scaled(2, nonorientable({1, 1}, true)).sigma);
  CHECK_THROWS_AS(orientable({1, 2}) + orientable({1, 2, 3}), InputError);
  CHECK_THROWS_AS(orientable({1, 2}) + nonorientable({1, 2}, false), InputError);
}

TEST_CASE("first bound: C - 1 when C >= 3") {
  const auto lb = lb1_bound(orientable({1, 2}), orientable({2, 1}));
  REQUIRE(lb);
  CHECK(*lb == 2);
  CHECK(lb1_bound(orientable({1, 4}), orientable({4, 1})) == 4);
  CHECK_FALSE(lb1_bound(orientable({1, 0}), orientable({0, 1})).has_value());
  CHECK_FALSE(lb1_bound(orientable({1, 0}), orientable({1, 0})).has_value());
}

TEST_CASE("second bound: exact rational and its ceiling") {
  // 2 (3, 0) + 1 (0, 6) = (6, 6): C = 6 > 3, bound (6 - 1) / 2.
  const auto r = lb2_bound(2, 1, orientable({3, 0}), orientable({0, 6}));
  REQUIRE(r);
  CHECK(r->num == 5);
  CHECK(r->den == 2);
  CHECK(r->ceiling == 3);
  CHECK(r->value() == 2.5);
  const auto q = lb2_from_C(8, 2, -2);
  REQUIRE(q);
  CHECK(q->num == 3);
  CHECK(q->den == 2);
  CHECK(q->ceiling == 2);
  CHECK_FALSE(lb2_from_C(4, 2, 2).has_value());
  CHECK_THROWS_AS(lb2_from_C(5, 0, 1), InputError);
}

TEST_CASE("G and G': the three reconnection cases") {
  GraphInput in;
  in.side1_arcs = 3;
  in.side2_arcs = 3;
  in.crossings.push_back({{false, {0, 1}}, {false, {0, 1}}});
  in.crossings.push_back({{true, {2, 2}}, {false, {1, 2}}});
  const auto g = build_G(in);
  CHECK(g.side1_edges.size() == 2);
  const std::vector<std::optional<Pairing>> choices{Pairing::crossed, std::nullopt};
  const auto gp = build_G_prime(g, choices);
  // Edges 0-4, 1-3 (crossed) and 2-4, 2-5 (special side 1): {0, 2, 4, 5}, {1, 3}.
  CHECK(gp.vertex_count == 6);
  CHECK(gp.edges.size() == 4);
  CHECK(gp.components == 2);

  const std::vector<std::optional<Pairing>> straight{Pairing::straight, std::nullopt};
  CHECK(build_G_prime(g, straight).components == 2);
  const std::vector<std::optional<Pairing>> missing{std::nullopt, std::nullopt};
  CHECK_THROWS_AS(build_G_prime(g, missing), InputError);
  const std::vector<std::optional<Pairing>> extra{Pairing::crossed, Pairing::crossed};
  CHECK_THROWS_AS(build_G_prime(g, extra), InputError);

  GraphInput bad = in;
  bad.crossings[0].side1.arcs = {0, 7};
  CHECK_THROWS_AS(build_G(bad), InputError);
}

TEST_CASE("graph instances from JSON") {
  const auto j = nlohmann::json::parse(R"({
    "schema": 1, "side1_vertices": 2, "side2_vertices": 2,
    "crossings": [
      {"side1": [0, 1], "side2": [0, 1], "choice": "crossed"},
      {"side1": [1, 0], "side2": [1, 0], "choice": "straight"}
    ]})");
  const auto inst = graph_instance_from_json(j);
  const auto gp = build_G_prime(build_G(inst.input), inst.choices);
  // 0-3, 1-2, 1-3, 0-2: a single cycle.
  CHECK(gp.components == 1);
  CHECK_THROWS_AS(graph_instance_from_json(nlohmann::json::parse(R"({"schema": 2})")), InputError);
  CHECK_THROWS_AS(graph_instance_from_json(nlohmann::json::parse(R"({"schema": 1, "side1_vertices": "x"})")), InputError);
}
