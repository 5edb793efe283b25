#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "embsum/calibration.hpp"
#include "embsum/interpolation_homeo.hpp"
#include "embsum/local_model.hpp"
#include "embsum/sampling.hpp"
#include "embsum/verify_checks.hpp"
#include "tracker.hpp"

namespace embsum::verify {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <int Rows, int Cols>
double sigma_min(const Eigen::Matrix<double, Rows, Cols>& m) {
  return Eigen::JacobiSVD<Eigen::Matrix<double, Rows, Cols>>(m).singularValues()(Rows - 1);
}

double dist6(const std::array<double, 6>& a, const std::array<double, 6>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < 6; ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(s);
}

std::vector<double> as_vector(const std::array<double, 6>& a) { return {a.begin(), a.end()}; }

// A point of the topological fiber model from a [0,1)^5 draw: every eighth
// point on ~V, the rest on the closure of W' over g != 0.
homeo::WFiberPoint model_point(const std::vector<double>& u, bool tilde) {
  if (tilde) {
    const FiberPoint4 dir = sampling::sphere_point({u[0], u[1], u[2]});
    return homeo::TildeVPoint{local_model::tilde_v_homeo(dir, u[3])};
  }
  Complex g = sampling::disk_point(u[0], u[1]);
  if (std::abs(g) == 0.0) g = {1e-3, 0.0};
  const fiber_family::GluingParam gp{g};
  return homeo::WPrimeClosurePoint{gp, fiber_family::level_point(1.0, gp.theta(), u[2], kTwoPi * u[3])};
}

// A point of W''_0 with |z| < 1.
homeo::ModelPoint smooth_model_point(const std::vector<double>& u) {
  Complex z = sampling::disk_point(u[0], u[1]);
  if (std::abs(z) == 0.0) z = {1e-3, 0.0};
  return {z, fiber_family::level_point(std::abs(z), z / std::abs(z), u[2], kTwoPi * u[3])};
}

}  // namespace

VerificationReport check_v_regularity(std::size_t n, std::uint64_t seed, double residual_tol) {
  Tracker t("V regularity");
  sampling::LowDiscrepancy ld(2, seed);
  const double floor = calibration::kFloorMargin * calibration::kJacVFloor;
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = ld.next();
    const FiberPoint4 p = local_model::param_V(u[0], kTwoPi * u[1]);
    const auto v = local_model::v_case2(p);
    t.sample();
    t.at_most(std::hypot(v[0], v[1]), residual_tol, "residual of v on param_V");
    t.at_least(sigma_min(local_model::jac_v(p)), floor, "smallest singular value of jac_v");
  }
  return t.done();
}

VerificationReport check_critical_values(std::size_t n, std::uint64_t seed, double tol) {
  Tracker t("critical values");
  sampling::LowDiscrepancy ld(2, seed);
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = ld.next();
    const Complex x = std::numbers::sqrt2 / 2.0 * sampling::disk_point(u[0], u[1]);
    const FiberPoint4 p{x, -std::conj(x)};
    const auto v = local_model::v_case2(p);
    t.sample();
    t.at_most(std::hypot(v[0] + 1.0, v[1]), tol, "v at y = -conj(x) differs from (-1, 0)");
    t.at_most(sigma_min(local_model::jac_v(p)), tol, "jac_v has full rank at y = -conj(x)");
  }
  return t.done();
}

VerificationReport check_boundary_coorientation(std::size_t n, double tol) {
  Tracker t("boundary co-orientation");
  for (std::size_t i = 0; i < n; ++i) {
    const Complex e = std::polar(1.0, kTwoPi * static_cast<double>(i) / static_cast<double>(n));
    const FiberPoint4 b1{e, 0.0};
    const FiberPoint4 b2{0.0, e};
    t.sample();
    t.require(local_model::boundary_tag(b1) == local_model::BoundaryTag::B1, "B1 point not tagged B1");
    t.require(local_model::boundary_tag(b2) == local_model::BoundaryTag::B2, "B2 point not tagged B2");
    t.at_most(std::abs(local_model::frame_projection_det_y(b1) - 1.0), tol, "frame determinant at B1");
    t.at_most(std::abs(local_model::frame_projection_det_x(b2) - 1.0), tol, "frame determinant at B2");
  }
  return t.done();
}

VerificationReport check_tilde_v(std::size_t n, std::uint64_t seed, double tol) {
  Tracker t("filled model");
  sampling::LowDiscrepancy ld(4, seed);
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = ld.next();
    const FiberPoint4 dir = sampling::sphere_point(u);
    const FiberPoint4 p = local_model::tilde_v_homeo(dir, u[3]);
    const FiberPoint4 edge = local_model::tilde_v_homeo(dir, 1.0);
    t.sample();
    t.require(local_model::in_tilde_V(p), "radial image outside ~V");
    t.require(local_model::in_tilde_V_product_form(p, tol), "product form disagrees inside ~V");
    t.at_most(std::abs(std::abs(edge.x) + std::abs(edge.y) - 1.0), tol, "t = 1 image off |x| + |y| = 1");
  }
  return t.done();
}

VerificationReport check_ramp(const fiber_family::RampFn& ramp) {
  Tracker t("ramp");
  const std::size_t grid = 10000;
  double prev = ramp(0.0);
  t.at_most(std::abs(prev), 0.0, "l(0)");
  for (std::size_t i = 1; i <= grid; ++i) {
    const double s = static_cast<double>(i) / grid;
    const double v = ramp(s);
    t.sample();
    if (s <= ramp.eps1()) t.at_most(std::abs(v - s), 1e-15, "l(t) = t below eps1");
    if (s >= ramp.eps2()) t.at_most(std::abs(v - 1.0), 0.0, "l(t) = 1 above eps2");
    if (s <= ramp.eps2()) t.require(v > prev, "l not strictly increasing at t = " + std::to_string(s));
    prev = v;
  }
  constexpr double h = 1e-6;
  for (std::size_t i = 1; i < grid; ++i) {
    const double s = static_cast<double>(i) / grid;
    const double fd = (ramp(std::min(1.0, s + h)) - ramp(std::max(0.0, s - h))) / (std::min(1.0, s + h) - std::max(0.0, s - h));
    t.at_most(std::abs(fd - ramp.derivative(s)), 1e-6, "derivative vs central difference");
  }
  t.at_most(std::abs(ramp.derivative(ramp.eps1() + 1e-12) - 1.0), 1e-9, "slope jump at eps1");
  t.at_most(std::abs(ramp.derivative(ramp.eps2() - 1e-12)), 1e-9, "slope jump at eps2");
  return t.done();
}

namespace {

// Uniform in the ball of radius 0.99, where 1 / (1 - |x|^2 - |y|^2) <= 51.
FiberPoint4 inner_ball_point(const std::vector<double>& u) { return 0.99 * sampling::ball_point(u); }

constexpr std::array<double, 4> kLevels{0.1, 0.5, 2.0, 10.0};

}  // namespace

VerificationReport check_dL_inversion(std::size_t n, std::uint64_t seed, double tol) {
  Tracker t("d_L inversion");
  sampling::LowDiscrepancy ld(4, seed);
  for (std::size_t i = 0; i < n; ++i) {
    const FiberPoint4 p = sampling::ball_point(ld.next());
    for (double L : kLevels) {
      const FiberPoint4 q = fiber_family::d_L(fiber_family::d_L(p, fiber_family::Level(L)), fiber_family::Level(1.0 / L));
      t.sample();
      t.at_most(std::sqrt(std::norm(q.x - p.x) + std::norm(q.y - p.y)), tol, "d_{1/L}(d_L(p)) != p");
    }
  }
  return t.done();
}

VerificationReport check_level_law(std::size_t n, std::uint64_t seed, double tol) {
  Tracker t("level law");
  sampling::LowDiscrepancy ld(5, seed);
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = ld.next();
    const FiberPoint4 p = inner_ball_point(u);
    const Complex theta = std::polar(1.0, kTwoPi * u[4]);
    const Complex base = *fiber_family::level_of(p, theta);
    for (double L : kLevels) {
      const auto moved = fiber_family::level_of(fiber_family::d_L(p, fiber_family::Level(L)), theta);
      t.sample();
      t.require(moved.has_value(), "d_L(p) left the open ball");
      if (moved) t.at_most(std::abs(*moved - L * base), tol, "level(d_L p) != L level(p)");
    }
  }
  return t.done();
}

VerificationReport check_w_complex_regularity(std::size_t n, std::uint64_t seed, double residual_tol,
                                              const fiber_family::RampFn& ramp) {
  Tracker t("W regularity (complex)");
  sampling::LowDiscrepancy ld(4, seed);
  const double floor = calibration::kFloorMargin * calibration::kJacWFloor;
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = ld.next();
    fiber_family::GluingParam g{};
    FiberPoint4 p{};
    if (i % 10 == 0) {
      const Complex a = sampling::disk_point(u[0], u[1]);
      p = u[2] < 0.5 ? FiberPoint4{a, 0.0} : FiberPoint4{0.0, a};
    } else {
      g.g = sampling::disk_point(u[0], u[1]);
      if (std::abs(g.g) == 0.0) g.g = {1e-3, 0.0};
      p = fiber_family::level_point(g.t(), g.theta(), u[2], kTwoPi * u[3]);
    }
    const auto w = fiber_family::w_case2(g, p);
    t.sample();
    t.at_most(std::hypot(w[0], w[1]), residual_tol, "w off its zero set");
    t.at_least(sigma_min(fiber_family::jac_w(g, p)), floor, "smallest singular value of jac_w");
    if (g.t() <= ramp.eps1()) {
      t.at_most(fiber_family::w2_residual(g, p, ramp), residual_tol, "zero set of w differs from W2 in the chart");
    }
  }
  return t.done();
}

VerificationReport check_w_real_regularity(std::size_t n, std::uint64_t seed, double residual_tol) {
  Tracker t("W regularity (real)");
  sampling::LowDiscrepancy ld(2, seed);
  const double floor = calibration::kFloorMargin * calibration::kGradW1Floor;
  for (std::size_t accepted = 0; accepted < n;) {
    const auto u = ld.next();
    const double x = 2.0 * u[0] - 1.0, y = 2.0 * u[1] - 1.0;
    const double gap = 1.0 - x * x - y * y;
    if (gap <= 0.0) continue;
    const double g = 2.0 * x * y / gap;
    if (std::abs(g) > 1.0) continue;
    const auto grad = fiber_family::grad_w_case1(g, x, y);
    ++accepted;
    t.sample();
    t.at_most(std::abs(fiber_family::w_case1(g, x, y)), residual_tol, "real w off its zero set");
    t.at_least(std::sqrt(grad[0] * grad[0] + grad[1] * grad[1] + grad[2] * grad[2]), floor, "gradient of real w");
  }
  return t.done();
}

VerificationReport check_seam(std::size_t n, std::uint64_t seed, double tol) {
  Tracker t("seam agreement");
  sampling::LowDiscrepancy ld(3, seed);
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = ld.next();
    const FiberPoint4 p{std::polar(u[0], kTwoPi * u[1]), std::polar(1.0 - u[0], kTwoPi * u[2])};
    const auto a = homeo::embed(homeo::i_prime(fiber_family::GluingParam{}, p));
    const auto b = homeo::embed(homeo::i_doubleprime(p));
    t.sample();
    t.at_most(dist6(a, b), tol, "i'(0, p) != i''(p) on |x| + |y| = 1");
  }
  return t.done();
}

VerificationReport check_boundary_fixing(std::size_t n, std::uint64_t seed, double tol) {
  Tracker t("boundary fixing");
  sampling::LowDiscrepancy ld(3, seed);
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = ld.next();
    homeo::WFiberPoint q;
    switch (i % 3) {
      case 0: {
        const fiber_family::GluingParam g{std::polar(1.0, kTwoPi * u[0])};
        const double r = 1e-3 + (1.0 - 2e-3) * u[1];
        q = homeo::WPrimeClosurePoint{g, fiber_family::level_point(1.0, g.theta(), r, kTwoPi * u[2])};
        break;
      }
      case 1: {
        Complex g = sampling::disk_point(u[0], u[1]);
        if (std::abs(g) == 0.0) g = {1e-3, 0.0};
        const Complex e = std::polar(1.0, kTwoPi * u[2]);
        q = homeo::WPrimeClosurePoint{{g}, u[1] < 0.5 ? FiberPoint4{e, 0.0} : FiberPoint4{0.0, e}};
        break;
      }
      default: {
        const Complex e = std::polar(1.0, kTwoPi * u[2]);
        q = homeo::TildeVPoint{u[1] < 0.5 ? FiberPoint4{e, 0.0} : FiberPoint4{0.0, e}};
        break;
      }
    }
    t.sample();
    t.at_most(dist6(homeo::embed(homeo::i_combined(q)), homeo::embed(q)), tol, "boundary point moved");
  }
  return t.done();
}

VerificationReport check_codomain(std::size_t n, std::uint64_t seed, double tol) {
  Tracker t("codomain");
  sampling::LowDiscrepancy ld(4, seed);
  for (std::size_t i = 0; i < n; ++i) {
    const homeo::ModelPoint m = homeo::i_combined(model_point(ld.next(), i % 8 == 0));
    t.sample();
    t.at_most(fiber_family::w0_residual(m.z, m.p), tol, "output off W''_0");
  }
  return t.done();
}

VerificationReport check_linear_homotopy(std::size_t n, std::uint64_t seed) {
  Tracker t("linear homotopy");
  sampling::LowDiscrepancy ld(4, seed);
  constexpr double slack = 1e-12;
  for (std::size_t i = 0; i < n; ++i) {
    const homeo::WFiberPoint q = model_point(ld.next(), i % 8 == 0);
    const auto in = homeo::embed(q);
    const auto out = homeo::embed(homeo::i_combined(q));
    // D^2 x D^4 is convex, so the segment stays inside iff both ends do.
    for (const auto& e : {in, out}) {
      t.at_most(std::hypot(e[0], e[1]), 1.0 + slack, "|g| exceeds 1");
      t.at_most(e[2] * e[2] + e[3] * e[3] + e[4] * e[4] + e[5] * e[5], 1.0 + slack, "|x|^2 + |y|^2 exceeds 1");
    }
    t.sample();
  }
  return t.done();
}

VerificationReport check_image_separation(std::size_t n, std::uint64_t seed) {
  Tracker t("image separation");
  sampling::LowDiscrepancy ld(4, seed);
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = ld.next();
    const fiber_family::GluingParam g{std::polar(1.0, kTwoPi * u[0])};
    const FiberPoint4 p = fiber_family::level_point(1.0, g.theta(), u[1], kTwoPi * u[2]);
    t.at_most(std::abs(std::abs(homeo::map_a(g, p)) + std::abs(homeo::map_b(g, p)) - 1.0), 1e-12,
              "|a| + |b| != 1 at t = 1");
    const FiberPoint4 inner = local_model::tilde_v_homeo(sampling::sphere_point(u), u[3]);
    if (std::abs(inner.x) + std::abs(inner.y) < 1.0) {
      const double cd = std::abs(homeo::map_c(inner)) + std::abs(homeo::map_d(inner));
      t.require(cd < 1.0, "|c| + |d| >= 1 inside ~V");
    }
    t.sample();
  }
  return t.done();
}

VerificationReport check_injectivity(std::size_t n, std::uint64_t seed, double out_tol, double in_tol) {
  sampling::LowDiscrepancy ld(4, seed);
  std::size_t index = 0;
  const oracle::Sampler sample = [&](std::size_t) { return as_vector(homeo::embed(model_point(ld.next(), index++ % 8 == 0))); };
  const oracle::PointMap map = [](const std::vector<double>& e) {
    const Complex g{e[0], e[1]};
    const FiberPoint4 p{{e[2], e[3]}, {e[4], e[5]}};
    const homeo::WFiberPoint q = g == Complex{} ? homeo::WFiberPoint{homeo::TildeVPoint{p}}
                                                : homeo::WFiberPoint{homeo::WPrimeClosurePoint{{g}, p}};
    return as_vector(homeo::embed(homeo::i_combined(q)));
  };
  auto r = oracle::collision_search("injectivity of i", map, sample, n, out_tol, in_tol);
  return r;
}

namespace {

// Nearest-neighbour queries by a sweep over projections on a fixed axis.
class NearestIndex {
public:
  explicit NearestIndex(std::vector<std::array<double, 6>> pts) : pts_(std::move(pts)) {
    for (double w : {0.61, 0.37, 0.29, 0.43, 0.31, 0.35}) axis_.push_back(w);
    const double nrm = std::sqrt(std::inner_product(axis_.begin(), axis_.end(), axis_.begin(), 0.0));
    for (double& w : axis_) w /= nrm;
    order_.resize(pts_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    proj_.resize(pts_.size());
    for (std::size_t i = 0; i < pts_.size(); ++i) proj_[i] = project(pts_[i]);
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return proj_[a] < proj_[b]; });
    sorted_.resize(pts_.size());
    for (std::size_t k = 0; k < order_.size(); ++k) sorted_[k] = proj_[order_[k]];
  }

  // Distance to the nearest stored point other than `skip`.
  double nearest(const std::array<double, 6>& q, std::size_t skip = std::numeric_limits<std::size_t>::max()) const {
    const double pq = project(q);
    const auto start = static_cast<std::size_t>(std::lower_bound(sorted_.begin(), sorted_.end(), pq) - sorted_.begin());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = start; k < sorted_.size() && sorted_[k] - pq < best; ++k) {
      if (order_[k] != skip) best = std::min(best, dist6(q, pts_[order_[k]]));
    }
    for (std::size_t k = start; k-- > 0 && pq - sorted_[k] < best;) {
      if (order_[k] != skip) best = std::min(best, dist6(q, pts_[order_[k]]));
    }
    return best;
  }

  const std::vector<std::array<double, 6>>& points() const { return pts_; }

private:
  double project(const std::array<double, 6>& p) const {
    return std::inner_product(axis_.begin(), axis_.end(), p.begin(), 0.0);
  }

  std::vector<std::array<double, 6>> pts_;
  std::vector<double> axis_;
  std::vector<double> proj_;
  std::vector<double> sorted_;
  std::vector<std::size_t> order_;
};

}  // namespace

VerificationReport check_covering(std::size_t images, std::size_t probes, std::uint64_t seed) {
  Tracker t("surjectivity (sampled covering)");
  sampling::LowDiscrepancy ld(4, seed);
  std::vector<std::array<double, 6>> pts;
  for (std::size_t i = 0; i < images; ++i) pts.push_back(homeo::embed(homeo::i_combined(model_point(ld.next(), i % 8 == 0))));
  const NearestIndex index(std::move(pts));
  double spacing = 0.0;
  for (std::size_t i = 0; i < images; ++i) spacing = std::max(spacing, index.nearest(index.points()[i], i));
  const double delta = 2.0 * spacing;

  sampling::LowDiscrepancy probe_ld(4, seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < probes; ++i) {
    const auto m = smooth_model_point(probe_ld.next());
    t.sample();
    t.at_most(index.nearest(homeo::embed(m)), delta, "W''_0 point farther than delta from every image point");
  }
  auto r = t.done();
  r.name += " (delta = " + std::to_string(delta) + ")";
  return r;
}

VerificationReport check_continuity(double tol) {
  Tracker t("continuity at boundary limits");
  const auto run_ray = [&](const std::string& label, const auto& point_at, const std::array<double, 6>& limit) {
    std::vector<double> err;
    // Below eps = 1e-8 the forced z coordinate loses digits to cancellation in
    // its denominator, so the rays stop there.
    for (int k = 1; k <= 8; ++k) err.push_back(dist6(point_at(std::pow(10.0, -k)), limit));
    t.sample();
    t.at_most(err.back(), tol, label + ": limit not reached");
    for (std::size_t k = 1; k < err.size(); ++k) {
      t.require(err[k] < err[k - 1], label + ": distance to the limit does not decrease");
    }
  };
  const std::array<std::array<double, 3>, 3> rays{{{0.5, 0.3, 0.7}, {0.1, 2.0, 2.5}, {0.9, 4.0, 5.0}}};
  for (const auto& [tt, th, phi] : rays) {
    const fiber_family::GluingParam g{std::polar(tt, th)};
    const Complex e = std::polar(1.0, phi);
    const Complex f = std::polar(1.0, -phi) * std::conj(g.theta());
    run_ray("i' as |x| -> 1",
            [&](double eps) { return homeo::embed(homeo::i_prime(g, fiber_family::level_point(1.0, g.theta(), 1.0 - eps, phi))); },
            homeo::embed(homeo::ModelPoint{g.g, {e, 0.0}}));
    run_ray("i' as |y| -> 1",
            [&](double eps) { return homeo::embed(homeo::i_prime(g, fiber_family::level_point(1.0, g.theta(), eps, phi))); },
            homeo::embed(homeo::ModelPoint{g.g, {0.0, f}}));
    run_ray("i'' as |x| -> 1",
            [&](double eps) {
              const FiberPoint4 p{std::polar(1.0 - eps, phi), std::polar(tt * eps, th)};
              return homeo::embed(homeo::i_doubleprime(p));
            },
            homeo::embed(homeo::ModelPoint{0.0, {e, 0.0}}));
  }
  return t.done();
}

VerificationReport check_cubic_criterion(std::size_t grid, double roundtrip_tol) {
  Tracker t("cubic criterion");
  for (std::size_t i = 1; i <= grid; ++i) {
    for (std::size_t j = 1; j <= grid; ++j) {
      const double A = static_cast<double>(i) / (grid + 1), B = static_cast<double>(j) / (grid + 1);
      const auto c = homeo::injectivity_cubic(A, B);
      t.sample();
      t.at_least(c[0], 0.0, "p(0) <= 0");
      t.at_most(c[0] + c[1] + c[2] + c[3], 0.0, "p(1) >= 0");
      t.require(c[0] > 0.0 && c[0] + c[1] + c[2] + c[3] < 0.0, "endpoint signs of the cubic");
      t.require(oracle::sign_change_roots(c, 0.0, 1.0, 1001) == 1, "cubic does not change sign exactly once");
      if (const auto tx = homeo::invert_astar_bstar(A, B)) {
        const auto ab = homeo::astar_bstar(tx->t, tx->x);
        t.at_most(std::hypot(ab[0] - A, ab[1] - B), roundtrip_tol, "forward(invert(A, B)) != (A, B)");
      }
    }
  }
  return t.done();
}

VerificationReport check_astar_roundtrip(std::size_t grid, double tol) {
  Tracker t("(a*, b*) round trip");
  for (std::size_t i = 0; i < grid; ++i) {
    for (std::size_t j = 1; j <= grid; ++j) {
      const double tt = static_cast<double>(i) / (grid - 1), x = static_cast<double>(j) / (grid + 1);
      const auto ab = homeo::astar_bstar(tt, x);
      const auto back = homeo::invert_astar_bstar(ab[0], ab[1]);
      t.sample();
      t.require(back.has_value(), "inverse undefined on the image");
      if (back) t.at_most(std::hypot(back->t - tt, back->x - x), tol, "invert(forward(t, x)) != (t, x)");
    }
  }
  return t.done();
}

VerificationReport check_positive_definite(std::size_t grid, double corner_radius, double det_tol) {
  Tracker t("positive definiteness of D^S");
  const auto near_corner = [&](double x, double y) {
    return std::hypot(x - 1.0, y) < corner_radius || std::hypot(x, y - 1.0) < corner_radius;
  };
  const auto probe = [&](double x, double y) {
    if (x < 0.0 || y < 0.0 || x + y > 1.0 || near_corner(x, y)) return;
    t.sample();
    t.at_least(homeo::min_eigenvalue(homeo::D_symmetric(x, y)), 0.0, "D^S not positive definite");
    t.require(homeo::min_eigenvalue(homeo::D_symmetric(x, y)) > 0.0, "D^S singular away from the corners");
  };
  for (std::size_t i = 0; i <= grid; ++i) {
    for (std::size_t j = 0; i + j <= grid; ++j) probe(static_cast<double>(i) / grid, static_cast<double>(j) / grid);
  }
  // Rings around the two degenerate corners.
  for (double r : {1.0, 1.5, 2.0, 5.0, 10.0, 50.0}) {
    for (int k = 0; k <= 90; ++k) {
      const double a = std::numbers::pi / 2.0 * k / 90.0;
      probe(1.0 - r * corner_radius * std::cos(a), r * corner_radius * std::sin(a));
      probe(r * corner_radius * std::sin(a), 1.0 - r * corner_radius * std::cos(a));
    }
  }
  t.at_most(std::abs(homeo::D_symmetric(1.0, 0.0).determinant()), det_tol, "det D^S at (1, 0)");
  t.at_most(std::abs(homeo::D_symmetric(0.0, 1.0).determinant()), det_tol, "det D^S at (0, 1)");

  // D is the Jacobian of (c*, d*).
  constexpr double h = 1e-6;
  for (std::size_t i = 1; i < 20; ++i) {
    for (std::size_t j = 1; i + j < 20; ++j) {
      const double x = i / 20.0, y = j / 20.0;
      const auto px = homeo::cstar_dstar(x + h, y), mx = homeo::cstar_dstar(x - h, y);
      const auto py = homeo::cstar_dstar(x, y + h), my = homeo::cstar_dstar(x, y - h);
      const auto D = homeo::D_matrix(x, y);
      const double err = std::max({std::abs((px[0] - mx[0]) / (2 * h) - D(0, 0)), std::abs((py[0] - my[0]) / (2 * h) - D(0, 1)),
                                   std::abs((px[1] - mx[1]) / (2 * h) - D(1, 0)), std::abs((py[1] - my[1]) / (2 * h) - D(1, 1))});
      t.at_most(err, 1e-6, "D differs from the finite-difference Jacobian of (c*, d*)");
    }
  }
  return t.done();
}

VerificationReport check_line_integrals(std::size_t n, std::uint64_t seed) {
  Tracker t("line integral criterion");
  sampling::LowDiscrepancy ld(4, seed);
  const auto triangle = [](double a, double b) {
    return a + b > 1.0 ? std::array<double, 2>{1.0 - a, 1.0 - b} : std::array<double, 2>{a, b};
  };
  const auto check = [&](std::array<double, 2> p1, std::array<double, 2> p2) {
    const auto v = homeo::verify_injectivity_line_integral(p1, p2);
    t.sample();
    t.at_least(v.value, 0.0, "non-positive line integral");
    t.require(v.value > 0.0, "line integral is not positive");
    t.at_most(std::abs(v.value - v.coarse_value), 1e-10 * std::max(1.0, std::abs(v.value)), "quadrature rules disagree");
  };
  check({1.0, 0.0}, {0.0, 1.0});
  check({0.1, 0.1}, {0.4, 0.2});
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = ld.next();
    const auto p1 = triangle(u[0], u[1]), p2 = triangle(u[2], u[3]);
    if (p1 != p2) check(p1, p2);
  }
  return t.done();
}

VerificationReport check_astar_injectivity(std::size_t n, std::uint64_t seed) {
  sampling::LowDiscrepancy ld(2, seed);
  const oracle::Sampler sample = [&](std::size_t) { return ld.next(); };
  const oracle::PointMap map = [](const std::vector<double>& tx) {
    const auto ab = homeo::astar_bstar(tx[0], tx[1]);
    return std::vector<double>{ab[0], ab[1]};
  };
  return oracle::collision_search("injectivity of (a*, b*)", map, sample, n, 1e-8, 1e-6);
}

VerificationReport check_cstar_injectivity(std::size_t n, std::uint64_t seed) {
  sampling::LowDiscrepancy ld(2, seed);
  const oracle::Sampler sample = [&](std::size_t) {
    const auto u = ld.next();
    return u[0] + u[1] > 1.0 ? std::vector<double>{1.0 - u[0], 1.0 - u[1]} : u;
  };
  const oracle::PointMap map = [](const std::vector<double>& xy) {
    const auto cd = homeo::cstar_dstar(xy[0], xy[1]);
    return std::vector<double>{cd[0], cd[1]};
  };
  return oracle::collision_search("injectivity of (c*, d*)", map, sample, n, 1e-8, 1e-6);
}

}  // namespace embsum::verify
