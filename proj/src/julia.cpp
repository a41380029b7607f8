#include "ucb/julia.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>

#include "ucb/errors.hpp"
#include "ucb/normalization.hpp"

namespace ucb {

const char* to_string(JuliaType t) {
  return t == JuliaType::FullCircle ? "full_circle" : "cantor";
}

JuliaType julia_type(const UnicriticalBlaschke& b, const BlaschkeClass& cls) {
  switch (cls.kind) {
    case Dynamics::Elliptic: return JuliaType::FullCircle;
    case Dynamics::Hyperbolic: return JuliaType::Cantor;
    case Dynamics::Parabolic:
      return std::abs(second_derivative(b, cls.dw_point)) < kSecondDerivativeZeroTol
                 ? JuliaType::FullCircle
                 : JuliaType::Cantor;
  }
  return JuliaType::Cantor;
}

JuliaType julia_type(const UnicriticalBlaschke& b) {
  return julia_type(b, classify_unicritical(b.degree(), b.critical_point()));
}

JuliaSample backward_orbit(const UnicriticalBlaschke& b, std::uint64_t seed,
                           int transient, int count) {
  if (count <= 0) throw PreconditionError("backward_orbit: count must be > 0");
  if (transient < 0) throw PreconditionError("backward_orbit: transient must be >= 0");
  Lcg64 rng(seed);
  cplx q = unit(b.psi() + 1.0);
  std::vector<std::pair<double, double>> points;
  points.reserve(static_cast<std::size_t>(count));
  const int n = b.degree();
  for (int k = 0; k < transient + count; ++k) {
    const std::vector<cplx> pre = preimages(b, q);
    cplx next = pre[static_cast<std::size_t>(rng.branch(n))];
    next /= std::abs(next);
    if (k >= transient) points.emplace_back(arg_2pi(next), arg_2pi(q));
    q = next;
  }
  std::sort(points.begin(), points.end());
  JuliaSample out;
  out.seed = seed;
  out.transient = transient;
  out.count = count;
  out.angles.reserve(points.size());
  out.parents.reserve(points.size());
  for (const auto& [angle, parent] : points) {
    out.angles.push_back(angle);
    out.parents.push_back(parent);
  }
  return out;
}

std::vector<double> sample_gaps(const JuliaSample& sample) {
  const auto& a = sample.angles;
  std::vector<double> gaps(a.size());
  for (std::size_t k = 0; k + 1 < a.size(); ++k) gaps[k] = a[k + 1] - a[k];
  if (!a.empty()) gaps.back() = a.front() + kTwoPi - a.back();
  return gaps;
}

CircleArc fatou_gap(const UnicriticalBlaschke& b, const JuliaSample& sample) {
  if (julia_type(b) == JuliaType::FullCircle)
    throw PreconditionError("fatou_gap: the Julia set is the whole circle");
  if (sample.angles.empty()) throw PreconditionError("fatou_gap: empty sample");
  const std::vector<double> gaps = sample_gaps(sample);
  const auto k = static_cast<std::size_t>(
      std::distance(gaps.begin(), std::max_element(gaps.begin(), gaps.end())));
  const double start = sample.angles[k];
  return CircleArc::arc(start, start + gaps[k]);
}

StepProbe probe_hyperbolic_step(const UnicriticalBlaschke& b) {
  const StepSequence seq = hyperbolic_step_sequence(b, cplx{0.0, 0.0}, kStepProbeLate + 1);
  if (seq.truncated || static_cast<long>(seq.steps.size()) <= kStepProbeLate)
    throw NumericError("probe_hyperbolic_step: orbit reached the circle numerically");
  return {seq.steps[static_cast<std::size_t>(kStepProbeEarly)],
          seq.steps[static_cast<std::size_t>(kStepProbeLate)]};
}

HyperbolicStepKind hyperbolic_step_kind(const UnicriticalBlaschke& b,
                                        const BlaschkeClass& cls) {
  if (cls.kind != Dynamics::Parabolic)
    throw PreconditionError("hyperbolic_step_kind: map is not parabolic");
  const double r = probe_hyperbolic_step(b).ratio();
  if (r > kPositiveStepRatio) return HyperbolicStepKind::PositiveStep;
  if (r < kZeroStepRatio) return HyperbolicStepKind::ZeroStep;
  throw NumericError("hyperbolic_step_kind: step ratio inconclusive");
}

HyperbolicStepKind hyperbolic_step_kind(const UnicriticalBlaschke& b) {
  return hyperbolic_step_kind(b, classify_unicritical(b.degree(), b.critical_point()));
}

void write_sample_csv(std::ostream& out, const JuliaSample& sample) {
  out << "angle\n";
  char buf[40];
  for (double a : sample.angles) {
    std::snprintf(buf, sizeof buf, "%.17g\n", a);
    out << buf;
  }
}

void write_sample_csv(const JuliaSample& sample, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  write_sample_csv(f, sample);
  if (!f) throw IoError("write failed for " + path);
}

}  // namespace ucb
