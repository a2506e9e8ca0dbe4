#pragma once

#include <cmath>
#include <numbers>

namespace treewave {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Wrap an angle to [0, 2pi). All phases in the library live in this range.
inline double wrap_phase(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // fmod can return exactly 2pi after the correction when phi is a tiny
  // negative number.
  if (w >= kTwoPi) w = 0.0;
  return w;
}

// Circular distance between two angles, in [0, pi].
inline double circular_distance(double a, double b) {
  double d = std::fabs(wrap_phase(a) - wrap_phase(b));
  return d > std::numbers::pi ? kTwoPi - d : d;
}

}  // namespace treewave
