#include <cmath>

#include <doctest.h>

#include "embsum/errors.hpp"
#include "embsum/fiber_family.hpp"
#include "embsum/local_model.hpp"

using namespace embsum;
using namespace embsum::fiber_family;

TEST_CASE("ramp: frozen interior values from the quintic oracle") {
  const RampFn l;  // eps1 = 0.25, eps2 = 0.75
  CHECK(l(0.4) == doctest::Approx(0.470065).epsilon(1e-14));
  CHECK(l(0.5) == doctest::Approx(0.703125).epsilon(1e-14));
  CHECK(l.derivative(0.5) == doctest::Approx(2.375).epsilon(1e-14));
}

TEST_CASE("ramp: identity below eps1, one above eps2, monotone and C1 across the joins") {
  const RampFn l(0.2, 0.6);
  CHECK(l(0.0) == 0.0);
  CHECK(l(0.1) == 0.1);
  CHECK(l(0.2) == 0.2);
  CHECK(l(0.6) == 1.0);
  CHECK(l(1.0) == 1.0);
  double prev = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double t = i / 1000.0;
    CHECK(l(t) >= prev);
    if (t > 0.2 && t < 0.6) CHECK(l.derivative(t) > 0.0);
    prev = l(t);
  }
  const double h = 1e-7;
  CHECK(l.derivative(0.2 + h) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(l.derivative(0.6 - h) == doctest::Approx(0.0).epsilon(1e-6));
  CHECK_THROWS_AS(RampFn(0.5, 0.4), DomainError);
  CHECK_THROWS_AS(RampFn(0.0, 0.4), DomainError);
  CHECK_THROWS_AS(l(1.5), DomainError);
}

TEST_CASE("d_L: frozen image and the level law") {
  const FiberPoint4 p{{0.3, 0.1}, {-0.2, 0.4}};
  const auto q = d_L(p, Level(2.0));
  CHECK(q.x.real() == doctest::Approx(0.37210420376762537).epsilon(1e-15));
  CHECK(q.x.imag() == doctest::Approx(0.12403473458920846).epsilon(1e-15));
  CHECK(q.y.real() == doctest::Approx(-0.24806946917841691).epsilon(1e-15));
  CHECK(q.y.imag() == doctest::Approx(0.49613893835683382).epsilon(1e-15));

  const Complex theta = std::polar(1.0, 0.3);
  const auto before = level_of(p, theta);
  const auto after = level_of(q, theta);
  REQUIRE(before);
  REQUIRE(after);
  CHECK(before->real() == doctest::Approx(-0.35738762736769874).epsilon(1e-14));
  CHECK(before->imag() == doctest::Approx(0.18851893784693327).epsilon(1e-14));
  CHECK(after->real() == doctest::Approx(-0.71477525473539748).epsilon(1e-14));
  CHECK(after->imag() == doctest::Approx(0.37703787569386654).epsilon(1e-14));

  const auto back = d_L(q, Level(0.5));
  CHECK(std::abs(back.x - p.x) + std::abs(back.y - p.y) <= 1e-15);
  CHECK_FALSE(level_of({{1.0, 0.0}, {0.0, 0.0}}, theta).has_value());
  CHECK_THROWS_AS(Level(0.0), DomainError);
}

TEST_CASE("level_point lies on the requested level set") {
  const Complex theta = std::polar(1.0, -1.2);
  for (double s : {0.05, 0.5, 1.0}) {
    for (double r : {0.1, 0.5, 0.9}) {
      const auto p = level_point(s, theta, r, 0.4);
      const auto lv = level_of(p, theta);
      REQUIRE(lv);
      CHECK(std::abs(*lv - s) <= 1e-13);
    }
  }
}

TEST_CASE("w and its Jacobian") {
  const GluingParam g{std::polar(0.4, 0.9)};
  const auto p = level_point(g.t(), g.theta(), 0.3, 1.1);
  const auto w = w_case2(g, p);
  CHECK(std::hypot(w[0], w[1]) <= 1e-15);
  CHECK(w0_residual(g.g, p) <= 1e-15);

  const auto j = jac_w(g, p);
  const double h = 1e-6;
  for (int c = 0; c < 6; ++c) {
    GluingParam ga = g, gb = g;
    FiberPoint4 a = p, b = p;
    const Complex step = c % 2 == 0 ? Complex{h, 0.0} : Complex{0.0, h};
    if (c < 2) {
      ga.g += step;
      gb.g -= step;
    } else if (c < 4) {
      a.x += step;
      b.x -= step;
    } else {
      a.y += step;
      b.y -= step;
    }
    const auto wa = w_case2(ga, a), wb = w_case2(gb, b);
    for (int r = 0; r < 2; ++r) CHECK(j(r, c) == doctest::Approx((wa[r] - wb[r]) / (2 * h)).epsilon(1e-8));
  }
}

TEST_CASE("real chart model: gradient matches differences and never vanishes on the zero set") {
  const double h = 1e-6;
  for (double g : {-0.8, 0.0, 0.3}) {
    for (double x : {-0.5, 0.1, 0.6}) {
      const double y = 0.2;
      const auto grad = grad_w_case1(g, x, y);
      CHECK(grad[0] == doctest::Approx((w_case1(g + h, x, y) - w_case1(g - h, x, y)) / (2 * h)).epsilon(1e-8));
      CHECK(grad[1] == doctest::Approx((w_case1(g, x + h, y) - w_case1(g, x - h, y)) / (2 * h)).epsilon(1e-8));
      CHECK(grad[2] == doctest::Approx((w_case1(g, x, y + h) - w_case1(g, x, y - h)) / (2 * h)).epsilon(1e-8));
    }
  }
  // g = 0: the zero set is the two axes; the origin is where they meet.
  const auto at0 = grad_w_case1(0.0, 0.0, 0.0);
  CHECK(std::hypot(at0[0], at0[1], at0[2]) == doctest::Approx(1.0));
}

TEST_CASE("smoothed family: membership over t = 0 and t > 0") {
  const RampFn l;
  CHECK(w2_member({0.0}, {{0.5, 0.2}, {0.0, 0.0}}, l, 1e-15));
  CHECK_FALSE(w2_member({0.0}, {{0.5, 0.2}, {0.1, 0.0}}, l, 1e-3));
  const GluingParam g{std::polar(0.5, 2.0)};
  const auto p = level_point(l(0.5), g.theta(), 0.35, -0.3);
  CHECK(w2_residual(g, p, l) <= 1e-15);
}

TEST_CASE("d_L and level_of on points of V and the axes") {
  const auto q = d_L({{0.5, 0.0}, {0.0, 0.0}}, Level(0.5));
  CHECK(q.x.real() == doctest::Approx(0.5 * std::sqrt(0.5 / 0.875)).epsilon(1e-15));
  CHECK(q.x.real() == doctest::Approx(0.37796).epsilon(1e-5));
  CHECK(q.y == Complex{0.0, 0.0});

  const FiberPoint4 on_sphere{std::polar(0.6, 0.2), std::polar(0.8, -1.0)};
  for (double L : {0.1, 0.5, 3.0}) {
    const auto s = d_L(on_sphere, Level(L));
    CHECK(std::abs(s.x - on_sphere.x) + std::abs(s.y - on_sphere.y) <= 1e-15);
  }
  const FiberPoint4 p{{0.3, -0.2}, {0.1, 0.4}};
  const auto id = d_L(p, Level(1.0));
  CHECK(std::abs(id.x - p.x) + std::abs(id.y - p.y) == 0.0);

  const auto pv = local_model::param_V(0.5, 0.0);
  REQUIRE(level_of(pv, 1.0));
  CHECK(std::abs(*level_of(pv, 1.0) - 1.0) <= 1e-15);
  REQUIRE(level_of(d_L(pv, Level(0.5)), 1.0));
  CHECK(std::abs(*level_of(d_L(pv, Level(0.5)), 1.0) - 0.5) <= 1e-15);
  CHECK(*level_of({{0.0, 0.0}, {0.5, 0.0}}, 1.0) == Complex{0.0, 0.0});
}

TEST_CASE("jac_w: g-columns inside the ball, x-columns over x = 0, |y| = 1") {
  const GluingParam g{std::polar(0.3, 0.7)};
  const FiberPoint4 p{{0.2, 0.1}, {-0.3, 0.25}};
  const double gap = 1.0 - std::norm(p.x) - std::norm(p.y);
  const auto j = jac_w(g, p);
  CHECK(j(0, 0) == doctest::Approx(-gap).epsilon(1e-15));
  CHECK(j(1, 0) == doctest::Approx(0.0));
  CHECK(j(0, 1) == doctest::Approx(0.0));
  CHECK(j(1, 1) == doctest::Approx(gap).epsilon(1e-15));

  const FiberPoint4 q{{0.0, 0.0}, std::polar(1.0, 1.3)};
  const auto k = jac_w(g, q);
  const Eigen::Vector2d c3 = k.col(2), c4 = k.col(3);
  CHECK(c3.norm() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(c4.norm() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::abs(c3.dot(c4)) <= 1e-15);
}

TEST_CASE("w0_member on the axes, on real V and by construction") {
  CHECK(w0_member(0.0, {{0.3, 0.0}, {0.0, 0.0}}, 1e-15));
  CHECK(w0_member(0.0, {{0.0, 0.0}, {0.0, 0.0}}, 1e-15));
  for (double r : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    CHECK(w0_member(1.0, local_model::param_V(r, 0.0), 1e-15));
  }
  const FiberPoint4 p{{0.2, -0.1}, {0.35, 0.3}};
  const Complex z = std::conj(2.0 * p.x * p.y) / (1.0 - std::norm(p.x) - std::norm(p.y));
  CHECK(w0_member(z, p, 1e-15));
  CHECK_FALSE(w0_member(z + 0.01, p, 1e-6));
}
