#include <cmath>
#include <numbers>

#include <doctest.h>

#include <Eigen/SVD>

#include "embsum/errors.hpp"
#include "embsum/local_model.hpp"

using namespace embsum;
using namespace embsum::local_model;

TEST_CASE("param_V lands on V and on the product structure |y| = 1 - |x|") {
  for (double r : {0.0, 0.1, 0.5, 0.93, 1.0}) {
    for (double phi : {0.0, 1.0, 2.5, 6.0}) {
      const auto p = param_V(r, phi);
      CHECK(on_V(p, 1e-15));
      CHECK(std::abs(p.y) == doctest::Approx(1.0 - std::abs(p.x)).epsilon(1e-15));
    }
  }
  CHECK_THROWS_AS(param_V(-0.1, 0.0), DomainError);
  CHECK_THROWS_AS(param_V(1.1, 0.0), DomainError);
}

TEST_CASE("jac_v matches central differences") {
  const FiberPoint4 p{{0.3, -0.2}, {0.1, 0.45}};
  const auto j = jac_v(p);
  const double h = 1e-6;
  for (int c = 0; c < 4; ++c) {
    FiberPoint4 a = p, b = p;
    Complex* ax = c < 2 ? &a.x : &a.y;
    Complex* bx = c < 2 ? &b.x : &b.y;
    const Complex step = c % 2 == 0 ? Complex{h, 0.0} : Complex{0.0, h};
    *ax += step;
    *bx -= step;
    const auto va = v_case2(a), vb = v_case2(b);
    for (int r = 0; r < 2; ++r) CHECK(j(r, c) == doctest::Approx((va[r] - vb[r]) / (2 * h)).epsilon(1e-8));
  }
}

TEST_CASE("singular values of jac_v at r = 1/2 match the high-precision oracle") {
  // Oracle: 2.8284271247461901, 1.414213562373095.
  const auto sv = Eigen::JacobiSVD<Jacobian24>(jac_v(param_V(0.5, 0.7))).singularValues();
  CHECK(sv[0] == doctest::Approx(2.8284271247461901).epsilon(1e-14));
  CHECK(sv[1] == doctest::Approx(1.414213562373095).epsilon(1e-14));
}

TEST_CASE("y = -conj(x) gives the critical value (-1, 0)") {
  for (const Complex x : {Complex{0.0, 0.0}, Complex{0.3, 0.4}, Complex{-0.5, 0.1}, Complex{0.0, -0.7}}) {
    const auto v = v_case2({x, -std::conj(x)});
    CHECK(v[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(std::abs(v[1]) <= 1e-15);
  }
}

TEST_CASE("real model: expanded and factored forms agree") {
  for (double x : {-0.9, -0.2, 0.0, 0.4, 1.0}) {
    for (double y : {-1.0, -0.3, 0.5, 0.8}) {
      const auto v = v_case1({x, y});
      CHECK(v.expanded == doctest::Approx(v.factored).epsilon(1e-14));
    }
  }
  CHECK(v_case1({0.25, 0.75}).factored == 0.0);
  CHECK(v_case1({-0.5, -0.5}).factored == 0.0);
}

TEST_CASE("filled model: both membership forms and the radial homeomorphism") {
  const FiberPoint4 inside{{0.3, 0.0}, {0.0, 0.5}};
  const FiberPoint4 outside{{0.6, 0.0}, {0.0, 0.5}};
  CHECK(in_tilde_V(inside));
  CHECK(in_tilde_V_product_form(inside));
  CHECK_FALSE(in_tilde_V(outside));
  CHECK_FALSE(in_tilde_V_product_form(outside));

  const double s = 1.0 / std::sqrt(2.0);
  const FiberPoint4 dir{{s, 0.0}, {0.0, s}};
  const auto b = tilde_v_homeo(dir, 1.0);
  CHECK(std::abs(b.x) + std::abs(b.y) == doctest::Approx(1.0).epsilon(1e-15));
  const auto h = tilde_v_homeo(dir, 0.5);
  CHECK(std::abs(h.x) + std::abs(h.y) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(tilde_v_homeo({{0.5, 0.0}, {0.0, 0.0}}, 0.5), DomainError);
  CHECK_THROWS_AS(tilde_v_homeo(dir, 1.5), DomainError);
}

TEST_CASE("boundary tags and co-orientation at B1 and B2") {
  const auto b1 = param_V(1.0, 0.8);
  const auto b2 = param_V(0.0, 0.8);
  CHECK(boundary_tag(b1) == BoundaryTag::B1);
  CHECK(boundary_tag(b2) == BoundaryTag::B2);
  CHECK(boundary_tag(param_V(0.5, 0.8)) == BoundaryTag::none);
  CHECK(frame_projection_det_y(b1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(frame_projection_det_x(b2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(coorientation_frame({{0.1, 0.0}, {0.1, 0.0}}), DomainError);
}

TEST_CASE("case 1: exactly one model matches, and the two modes disagree") {
  for (int s1 : {-1, 1}) {
    for (int s2 : {-1, 1}) {
      CHECK(case1_choice(s1, s2, Case1Mode::oriented) != case1_choice(s1, s2, Case1Mode::cooriented));
    }
  }
  CHECK(case1_choice(1, 1, Case1Mode::oriented) == RealModel::V2);
  CHECK(case1_choice(1, -1, Case1Mode::oriented) == RealModel::V1);
  CHECK_THROWS_AS(case1_choice(0, 1, Case1Mode::oriented), DomainError);
}
