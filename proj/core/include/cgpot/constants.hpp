#pragma once

#include <cmath>

namespace cgpot::constants {

/// Two-sided mean value constants for the cumulative distribution W_g:
/// c1 W'((t+x)/2) <= (W(t) - W(x))/(t - x) <= c2 W'((t+x)/2).
inline constexpr double kMeanLower = 0.25;
inline const double kMeanUpper = M_PI * std::sqrt(2.0);

/// Tighter upper constant for the flat (g == 1) case.
inline const double kMeanUpperFlat = M_PI / std::sqrt(2.0);
/// Lower constant for the linear case g(y) = 1 + y.
inline constexpr double kMeanLowerLinear = 0.5;

/// Left-cell comparison factor: 1 + (t_j + t_{j+1})/2 <= c5 (1 + t_j).
inline const double kLeftCellFactor = 0.75 * M_PI + 1.0;

/// Closed-form bounds on the three sums of the discretization error split,
/// and the integer caps they are rounded up to.
inline double sum1_bound() {
    const double c1 = kMeanLower, c2 = kMeanUpper;
    return c2 * c2 * M_PI * M_PI * (18.0 + M_PI * M_PI) / (6.0 * c1 * c1);
}
inline double sum2_bound() {
    const double c1 = kMeanLower, c2 = kMeanUpper, c5 = kLeftCellFactor;
    return 6.0 * c2 + std::log(6.0 * c2 * std::sqrt(c5) / c1);
}
inline double sum3_bound() {
    const double c1 = kMeanLower, c2 = kMeanUpper, c5 = kLeftCellFactor;
    return c2 * c2 * c5 * M_PI * M_PI / (12.0 * c1 * c1);
}

inline constexpr double kSum1Cap = 14479.0;
inline constexpr double kSum2Cap = 32.0;
inline constexpr double kSum3Cap = 872.0;

/// Universal constant of the sharpness statement: discretization error on
/// the support never exceeds kSum1Cap + kSum2Cap + kSum3Cap.
inline constexpr double kSharpnessConstant = 15383.0;

} // namespace cgpot::constants
