#pragma once

namespace kpos {

/// Single numerical reading of the exact comparisons in the theory.
///
/// A comparison `lhs >= rhs` becomes `margin >= -rel` where
/// `margin = (lhs - rhs) / scale` and `scale` is the natural magnitude of the
/// compared quantities. Strict positivity `x > 0` becomes `margin > rel`;
/// the band `|margin| <= rel` is the numerical boundary (or equality).
/// `abs` is a floor for scales that would otherwise vanish.
struct Tolerance {
  double abs = 1e-12;
  double rel = 1e-9;
};

inline constexpr Tolerance default_tolerance{};

}  // namespace kpos
