#pragma once

// Brute-force verifiers that share no code path with the modules they check.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "embsum/curve_resolver.hpp"
#include "embsum/torus_curve.hpp"

namespace embsum::oracle {

using torus::H1Class;
using torus::TorusCurve;
using torus::Vec2;

struct VerificationReport {
  std::string name;
  std::size_t samples = 0;
  double max_residual = 0.0;
  double min_margin = 0.0;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
  void fail(std::string what, std::size_t keep = 20);
  nlohmann::json to_json() const;

private:
  std::size_t dropped_ = 0;
};

// Signed crossings with the axis loops {u = u0} and {v = v0} of the curve's
// pieces wrapped into the unit square. The offset moves off any vertex.
H1Class class_via_crossings(const TorusCurve& c, Vec2 axis_offset = {0.3183098861837907, 0.2718281828459045});

struct Strand {
  Vec2 a;
  Vec2 b;
};

// The resolved picture as loose strands: input segments with the chamfer
// intervals around each crossing removed, plus the two reconnecting segments
// per crossing (incoming of each strand to outgoing of the other).
std::vector<Strand> strand_soup(const TorusCurve& c1, const TorusCurve& c2,
                                std::span<const resolver::Crossing> crossings, double chamfer);

// Closed curves formed by the strands, by union-find over endpoints identified
// modulo Z^2. Throws IntegrityError if some endpoint does not have degree 2.
std::size_t trace_components(std::span<const Strand> strands, double merge_tol = 1e-8);

using PointMap = std::function<std::vector<double>(const std::vector<double>&)>;
using Sampler = std::function<std::vector<double>(std::size_t)>;

// Pairs with output distance < out_tol but input distance > in_tol. Sorted
// sweep along a fixed direction; min_margin is the smallest output distance
// among input-separated pairs inside the sweep window, or out_tol if none.
VerificationReport collision_search(const std::string& name, const PointMap& map, const Sampler& sample,
                                    std::size_t n, double out_tol, double in_tol);

// Strict sign changes of the polynomial (coefficients from the constant term
// up) on `grid` equispaced points of [lo, hi]; exact zeros are skipped.
std::size_t sign_change_roots(std::span<const double> coeffs, double lo, double hi, std::size_t grid);

}  // namespace embsum::oracle
