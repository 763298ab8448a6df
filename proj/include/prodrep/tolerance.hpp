#pragma once

namespace prodrep {

// Single tolerance knob for the whole library. Rank cutoffs use
// tol * sigma_max, zero tests tol * scale. Overridable via --tol on the CLI.
inline constexpr double kDefaultTol = 1e-8;

}  // namespace prodrep
