#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace ucb {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduce to [0, 2π).
inline double wrap_2pi(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

/// Reduce to (−π, π].
inline double wrap_pi(double a) {
  double r = wrap_2pi(a);
  return r > kPi ? r - kTwoPi : r;
}

/// Distance from a to the nearest point of `target + period·ℤ`.
inline double periodic_distance(double a, double target, double period) {
  double r = std::fmod(a - target, period);
  if (r < 0.0) r += period;
  return std::min(r, period - r);
}

/// Principal argument in [0, 2π).
inline double arg_2pi(cplx z) { return wrap_2pi(std::arg(z)); }

inline cplx unit(double phi) { return {std::cos(phi), std::sin(phi)}; }

/// z^k by repeated squaring, k ≥ 0.
inline cplx ipow(cplx z, int k) {
  cplx acc{1.0, 0.0};
  while (k > 0) {
    if (k & 1) acc *= z;
    z *= z;
    k >>= 1;
  }
  return acc;
}

/// Opening angle 2π/(n−1) of the fundamental sector of the family.
inline double sector_angle(int n) { return kTwoPi / (n - 1); }

}  // namespace ucb
