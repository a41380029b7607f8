#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "ucb/errors.hpp"
#include "ucb/julia.hpp"

using namespace ucb;
using testing_support::blaschke_direct;
using testing_support::Rng;

namespace {

double max_gap(const JuliaSample& s) {
  const std::vector<double> g = sample_gaps(s);
  return *std::max_element(g.begin(), g.end());
}

UnicriticalBlaschke threshold_map(int n, double psi) {
  return UnicriticalBlaschke::from_polar(n, s_zero(n, psi).s0, psi);
}

}  // namespace

TEST_CASE("the LCG follows the documented recurrence") {
  Lcg64 g(0);
  CHECK(g.next() == 1442695040888963407ULL);
  CHECK(g.next() == 1442695040888963407ULL * 6364136223846793005ULL + 1442695040888963407ULL);
  Lcg64 h(42);
  for (int k = 0; k < 1000; ++k) {
    const double u = h.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  Lcg64 top(0);
  const std::uint64_t raw = Lcg64(0).next();
  CHECK(top.branch(4) == static_cast<int>((raw >> 11) * 0x1.0p-53 * 4));
}

TEST_CASE("julia type") {
  CHECK(julia_type({2, 0.0}) == JuliaType::FullCircle);
  CHECK(julia_type({2, -1.0 / 3.0}) == JuliaType::FullCircle);
  CHECK(julia_type(threshold_map(2, kPi / 2)) == JuliaType::Cantor);
  CHECK(julia_type({2, -0.5}) == JuliaType::Cantor);
  CHECK(std::string(to_string(JuliaType::FullCircle)) == "full_circle");
  CHECK(std::string(to_string(JuliaType::Cantor)) == "cantor");
}

TEST_CASE("backward orbit sampling") {
  const JuliaSample a = backward_orbit({2, 0.0}, 7);
  CHECK(a.angles.size() == static_cast<std::size_t>(kDefaultSampleCount));
  CHECK(std::is_sorted(a.angles.begin(), a.angles.end()));
  CHECK(a.angles.front() >= 0.0);
  CHECK(a.angles.back() < kTwoPi);
  CHECK(max_gap(a) < 0.05);

  const JuliaSample b = backward_orbit({2, 0.0}, 7);
  CHECK(a.angles == b.angles);
  CHECK(backward_orbit({2, 0.0}, 8).angles != a.angles);

  const JuliaSample small = backward_orbit({3, cplx(0.2, 0.1)}, 1, 10, 100);
  CHECK(small.count == 100);
  CHECK(small.transient == 10);
  CHECK(small.seed == 1u);
}

TEST_CASE("every sample maps forward onto its parent") {
  Rng rng(40);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = rng.integer(2, 6);
    const cplx w = rng.disk(0.9);
    const JuliaSample s = backward_orbit({n, w}, trial, 16, 500);
    REQUIRE(s.parents.size() == s.angles.size());
    for (std::size_t k = 0; k < s.angles.size(); ++k)
      CHECK(std::abs(blaschke_direct(n, w, unit(s.angles[k])) - unit(s.parents[k])) < 1e-10);
  }
}

TEST_CASE("sample gaps sum to the full circle") {
  const JuliaSample s = backward_orbit({3, 0.6}, 3, 64, 1000);
  const std::vector<double> g = sample_gaps(s);
  REQUIRE(g.size() == s.angles.size());
  double total = 0.0;
  for (double x : g) {
    CHECK(x >= 0.0);
    total += x;
  }
  CHECK(total == doctest::Approx(kTwoPi).epsilon(1e-12));
}

TEST_CASE("hyperbolic Fatou gap") {
  const UnicriticalBlaschke b(2, -0.5);
  const JuliaSample s = backward_orbit(b, 11);
  const CircleArc gap = fatou_gap(b, s);
  CHECK(gap.length() > 0.3);
  const cplx dw = classify_unicritical(2, -0.5).dw_point;
  CHECK(gap.contains(std::arg(dw)));
  // Only the two bounding samples lie on the closed gap.
  CHECK(std::count_if(s.angles.begin(), s.angles.end(), [&](double a) { return gap.contains(a); }) == 2);

  CHECK_THROWS_AS(fatou_gap({2, 0.0}, backward_orbit({2, 0.0}, 1, 64, 100)), PreconditionError);
}

TEST_CASE("the gap contains the Denjoy-Wolff point for random hyperbolic maps") {
  Rng rng(41);
  int tested = 0;
  while (tested < 50) {
    const int n = rng.integer(2, 6);
    const cplx w = rng.disk(0.97);
    const BlaschkeClass cls = classify_unicritical(n, w);
    if (cls.kind != Dynamics::Hyperbolic) continue;
    const UnicriticalBlaschke b(n, w);
    const JuliaSample s = backward_orbit(b, tested);
    CHECK(fatou_gap(b, s).contains(std::arg(cls.dw_point)));
    ++tested;
  }
}

TEST_CASE("the Fatou gap shrinks toward the threshold") {
  const double psi = kPi / 2;
  const double s0 = s_zero(2, psi).s0;
  double previous = kTwoPi;
  for (double frac : {0.8, 0.6, 0.4, 0.2, 0.1}) {
    const UnicriticalBlaschke b = UnicriticalBlaschke::from_polar(2, s0 + frac * (1.0 - s0), psi);
    const double width = fatou_gap(b, backward_orbit(b, 5)).length();
    CHECK(width < previous);
    previous = width;
  }
}

TEST_CASE("hyperbolic step kind") {
  CHECK(hyperbolic_step_kind({2, -1.0 / 3.0}) == HyperbolicStepKind::ZeroStep);
  CHECK(hyperbolic_step_kind({3, 0.5}) == HyperbolicStepKind::ZeroStep);
  CHECK(hyperbolic_step_kind(threshold_map(2, kPi / 2)) == HyperbolicStepKind::PositiveStep);
  CHECK_THROWS_AS(hyperbolic_step_kind({2, 0.1}), PreconditionError);

  const StepProbe p = probe_hyperbolic_step({2, -1.0 / 3.0});
  CHECK(p.ratio() == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("sample CSV") {
  JuliaSample s;
  s.angles = {0.1, 1.0 / 3.0};
  std::ostringstream out;
  write_sample_csv(out, s);
  CHECK(out.str() == "angle\n0.10000000000000001\n0.33333333333333331\n");
  CHECK_THROWS_AS(write_sample_csv(s, "/nonexistent-dir/x.csv"), IoError);
}
