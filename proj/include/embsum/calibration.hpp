#pragma once

// Singular-value floors measured by a dense scan of each zero set; checks
// assert value >= kFloorMargin * floor.

namespace embsum::calibration {

inline constexpr double kFloorMargin = 0.9;

// jac_v on V: depends only on r by the U(1) symmetry, minimum at r = 1/2.
inline constexpr double kJacVFloor = 1.4142135623;

// jac_w on {2xy = conj(g)(1 - |x|^2 - |y|^2)} over D^2 x D^4, minimum at g = 0, p = 0.
inline constexpr double kJacWFloor = 1.0;

// Gradient of the real chart model on its zero set in [-1, 1] x D^2.
inline constexpr double kGradW1Floor = 1.0;

}  // namespace embsum::calibration
