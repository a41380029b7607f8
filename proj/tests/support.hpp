#pragma once

// Independent oracles shared by the unit and acceptance tests. Nothing here
// calls into the library's numerical kernels.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>

namespace testing_support {

using cplx = std::complex<double>;
inline constexpr double kPi = 3.14159265358979323846;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double a = 0.0, double b = 1.0) {
    return std::uniform_real_distribution<double>(a, b)(gen_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  // Uniform point of the disk of the given radius.
  cplx disk(double radius) {
    return std::polar(radius * std::sqrt(uniform()), uniform(0.0, 2.0 * kPi));
  }

 private:
  std::mt19937_64 gen_;
};

// ((z − w)/(1 − w̄z))^n through std::pow.
inline cplx blaschke_direct(int n, cplx w, cplx z) {
  return std::pow((z - w) / (1.0 - std::conj(w) * z), n);
}

inline cplx mobius_direct(double theta, cplx w, cplx z) {
  return std::polar(1.0, theta) * (z - w) / (1.0 - std::conj(w) * z);
}

// Five-point central difference of a holomorphic function.
inline cplx holo_derivative(const std::function<cplx(cplx)>& f, cplx z, double h = 1e-4) {
  return (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h)) / (12.0 * h);
}

inline double central_difference(const std::function<double(double)>& f, double x,
                                  double h = 1e-6) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Measure of {φ : |B′(e^{iφ})| ≤ 1} by midpoint sampling of the derivative
// written from scratch as |n (z − w)^{n−1} (1 − |w|²) / (1 − w̄z)^{n+1}|.
inline double contracting_measure(int n, cplx w, int samples) {
  int hits = 0;
  for (int k = 0; k < samples; ++k) {
    const cplx z = std::polar(1.0, 2.0 * kPi * (k + 0.5) / samples);
    const double d = n * std::pow(std::abs(z - w), n - 1) * (1.0 - std::norm(w)) /
                     std::pow(std::abs(1.0 - std::conj(w) * z), n + 1);
    if (d <= 1.0) ++hits;
  }
  return 2.0 * kPi * hits / samples;
}

// Total change of arg B along the arc [a, b], tracked in small steps.
inline double unwrapped_arg_change(int n, cplx w, double a, double b, int steps) {
  double total = 0.0;
  cplx prev = blaschke_direct(n, w, std::polar(1.0, a));
  for (int k = 1; k <= steps; ++k) {
    const cplx cur = blaschke_direct(n, w, std::polar(1.0, a + (b - a) * k / steps));
    total += std::arg(cur / prev);
    prev = cur;
  }
  return total;
}

// Critical-value orbit oracle: true if the orbit of 0 escapes to the circle.
// Returns 0 for interior attraction, 1 for boundary, −1 if undecided.
inline int orbit_escapes(int n, cplx w, long max_iter = 4'000'000) {
  cplx z = 0.0;
  int near_boundary = 0;
  for (long k = 0; k < max_iter; ++k) {
    const cplx next = blaschke_direct(n, w, z);
    const double step = std::abs(next - z) / std::abs(1.0 - std::conj(z) * next);
    z = next;
    if (1.0 - std::abs(z) < 1e-7) {
      if (++near_boundary > 50) return 1;
    } else {
      near_boundary = 0;
    }
    if (step < 1e-13 && 1.0 - std::abs(z) > 1e-4) return 0;
  }
  return -1;
}

}  // namespace testing_support
