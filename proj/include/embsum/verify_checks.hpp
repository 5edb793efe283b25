#pragma once

// Individual invariant checks. Each returns a report whose min_margin is the
// smallest slack against its bound (negative only on failure).

#include <cstddef>
#include <cstdint>

#include "embsum/fiber_family.hpp"
#include "embsum/oracle.hpp"

namespace embsum::verify {

using oracle::VerificationReport;

// Local model.
VerificationReport check_v_regularity(std::size_t n, std::uint64_t seed, double residual_tol);
VerificationReport check_critical_values(std::size_t n, std::uint64_t seed, double tol);
VerificationReport check_boundary_coorientation(std::size_t n, double tol);
VerificationReport check_tilde_v(std::size_t n, std::uint64_t seed, double tol);

// Smoothing family.
VerificationReport check_ramp(const fiber_family::RampFn& ramp);
VerificationReport check_dL_inversion(std::size_t n, std::uint64_t seed, double tol);
VerificationReport check_level_law(std::size_t n, std::uint64_t seed, double tol);
VerificationReport check_w_complex_regularity(std::size_t n, std::uint64_t seed, double residual_tol,
                                              const fiber_family::RampFn& ramp);
VerificationReport check_w_real_regularity(std::size_t n, std::uint64_t seed, double residual_tol);

// Interpolation homeomorphism.
VerificationReport check_seam(std::size_t n, std::uint64_t seed, double tol);
VerificationReport check_boundary_fixing(std::size_t n, std::uint64_t seed, double tol);
VerificationReport check_codomain(std::size_t n, std::uint64_t seed, double tol);
VerificationReport check_linear_homotopy(std::size_t n, std::uint64_t seed);
VerificationReport check_image_separation(std::size_t n, std::uint64_t seed);
VerificationReport check_injectivity(std::size_t n, std::uint64_t seed, double out_tol, double in_tol);
VerificationReport check_covering(std::size_t images, std::size_t probes, std::uint64_t seed);
VerificationReport check_continuity(double tol);
VerificationReport check_cubic_criterion(std::size_t grid, double roundtrip_tol);
VerificationReport check_astar_roundtrip(std::size_t grid, double tol);
VerificationReport check_positive_definite(std::size_t grid, double corner_radius, double det_tol);
VerificationReport check_line_integrals(std::size_t n, std::uint64_t seed);
VerificationReport check_astar_injectivity(std::size_t n, std::uint64_t seed);
VerificationReport check_cstar_injectivity(std::size_t n, std::uint64_t seed);

// Curves on the torus and the component bounds.
VerificationReport check_curve_pairs(std::size_t pairs, std::uint64_t seed);
VerificationReport check_curve_fixtures();
VerificationReport check_class_oracle(std::size_t n, std::uint64_t seed);
VerificationReport check_meeks_table();
VerificationReport check_basis_independence(std::size_t n, std::uint64_t seed);

}  // namespace embsum::verify
