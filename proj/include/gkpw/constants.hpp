// constants.hpp
// Numerical constants shared by the lattice, squeezed-state and analysis code.

#pragma once

#include <numbers>

namespace gkpw {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kSqrtPi = 1.7724538509055160273;  // sqrt(pi)

// Phase-space lattice spacing of the ideal code (q = l * spacing, p = m * spacing).
inline constexpr double kLatticeSpacing = kSqrtPi / 2.0;
// Side of the unit cell holding 4x4 lattice sites.
inline constexpr double kCellSide = 2.0 * kSqrtPi;

// Weight of a single delta peak in the ideal Wigner comb, 1/(4 sqrt(pi)).
inline constexpr double kPeakWeight = 1.0 / (4.0 * kSqrtPi);

// Absolute tolerance for comparing coefficient fields and other O(1) quantities.
inline constexpr double kFieldTolerance = 1e-12;

// Tolerance on values when collecting degenerate extrema.
inline constexpr double kExtremumTolerance = 1e-9;

}  // namespace gkpw
