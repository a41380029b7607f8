#pragma once

// Julia sets of the unicritical family on the unit circle: full circle vs
// Cantor set, inverse-iteration sampling, Fatou gaps and hyperbolic step.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ucb/ellipticity.hpp"
#include "ucb/unicritical.hpp"

namespace ucb {

enum class JuliaType { FullCircle, Cantor };

const char* to_string(JuliaType t);

inline constexpr double kSecondDerivativeZeroTol = 1e-8;
inline constexpr int kDefaultTransient = 64;
inline constexpr int kDefaultSampleCount = 10'000;

/// 64-bit LCG with the PCG multiplier/increment; branch choices use the top
/// 53 bits as a uniform double in [0, 1).
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  int branch(int n) {
    const int k = static_cast<int>(n * uniform());
    return k < n ? k : n - 1;
  }

 private:
  std::uint64_t state_;
};

struct JuliaSample {
  std::vector<double> angles;   // sorted, in [0, 2π)
  std::vector<double> parents;  // forward image angle of each sample point
  std::uint64_t seed = 0;
  int transient = 0;
  int count = 0;
};

JuliaType julia_type(const UnicriticalBlaschke& b);
JuliaType julia_type(const UnicriticalBlaschke& b, const BlaschkeClass& cls);

/// Random backward orbit from e^{i(ψ+1)}: each step picks one of the n
/// preimages uniformly with the seeded LCG. The first `transient` points are
/// discarded. Deterministic in (B, seed, transient, count).
JuliaSample backward_orbit(const UnicriticalBlaschke& b, std::uint64_t seed,
                           int transient = kDefaultTransient,
                           int count = kDefaultSampleCount);

/// Gaps between consecutive sample angles, including the wrap-around gap.
/// Entry k is the gap following angles[k].
std::vector<double> sample_gaps(const JuliaSample& sample);

/// Largest complementary arc of the sample as [phi1, phi2] with phi1 in
/// [0, 2π) and phi2 = phi1 + width. Throws PreconditionError when the Julia
/// set of B is the whole circle.
CircleArc fatou_gap(const UnicriticalBlaschke& b, const JuliaSample& sample);

struct StepProbe {
  double early = 0.0;  // d at k = 10⁵
  double late = 0.0;   // d at k = 2·10⁵
  double ratio() const { return late / early; }
};

inline constexpr long kStepProbeEarly = 100'000;
inline constexpr long kStepProbeLate = 200'000;
inline constexpr double kPositiveStepRatio = 0.9;
inline constexpr double kZeroStepRatio = 0.6;

/// Hyperbolic step d(B^k 0, B^{k+1} 0) at the two probe indices.
StepProbe probe_hyperbolic_step(const UnicriticalBlaschke& b);

/// Ratio test on the step probe. PreconditionError unless B is parabolic;
/// NumericError when the ratio falls between the two thresholds.
HyperbolicStepKind hyperbolic_step_kind(const UnicriticalBlaschke& b);
HyperbolicStepKind hyperbolic_step_kind(const UnicriticalBlaschke& b,
                                        const BlaschkeClass& cls);

/// CSV with header `angle` and one 17-significant-digit value per line.
void write_sample_csv(std::ostream& out, const JuliaSample& sample);
void write_sample_csv(const JuliaSample& sample, const std::string& path);

}  // namespace ucb
