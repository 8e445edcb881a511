#pragma once

#include <cstddef>

// Numerical thresholds shared across modules.
namespace lcpbound::tol {

// A pivot is treated as zero when |pivot| <= kPivotRelative * ||A||_inf.
inline constexpr double kPivotRelative = 1e-13;

// M-matrix check: inverse entries must be >= -kInverseNonnegSlack.
inline constexpr double kInverseNonnegSlack = 1e-10;

// Principal-minor enumeration is skipped above this dimension.
inline constexpr std::size_t kPMinorCap = 15;

// Complementarity / feasibility tolerance, scaled by (1 + ||q||_inf).
inline constexpr double kLcpFeasibility = 1e-9;

// Complementary-basis enumeration is 2^n; refuse beyond this.
inline constexpr std::size_t kLcpDimensionCap = 20;

// The box-vertex sweep of the max estimator runs only up to this n.
inline constexpr std::size_t kVertexSweepCap = 12;

// Additive slack in ||x - x*|| <= bound * ||r(x)|| + slack.
inline constexpr double kErrorBoundSlack = 1e-9;

// Residuals below this are excluded from the worst-ratio statistic.
inline constexpr double kResidualFloor = 1e-12;

}  // namespace lcpbound::tol
