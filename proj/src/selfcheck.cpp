#include "ucb/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <random>
#include <sstream>

#include "ucb/ellipticity.hpp"
#include "ucb/errors.hpp"
#include "ucb/julia.hpp"
#include "ucb/mobius.hpp"
#include "ucb/normalization.hpp"
#include "ucb/render.hpp"
#include "ucb/unicritical.hpp"

namespace ucb {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

struct Sampler {
  std::mt19937_64 gen;
  explicit Sampler(std::uint64_t seed) : gen(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(gen); }
  cplx disk(double r_max) { return std::polar(r_max * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, kTwoPi)); }
};

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

bool scaled(CheckLevel level) { return level == CheckLevel::Full; }
int pick(CheckLevel level, int quick, int full) { return scaled(level) ? full : quick; }

// Threshold on a ray, or 1 when the ray is elliptic all the way out.
double threshold_or_rim(int n, double psi) {
  try {
    const RayClassification r = s_zero(n, psi);
    return r.always_elliptic() ? 1.0 : r.s0;
  } catch (const NumericError&) {
    return 1.0;
  }
}

// ---- mobius ---------------------------------------------------------------

Outcome mobius_fixed_points(CheckLevel level) {
  Sampler rng(11);
  const int count = pick(level, 1000, 10000);
  int skipped = 0;
  for (int k = 0; k < count; ++k) {
    const DiskMobius a(rng.uniform(0.0, kTwoPi), rng.disk(0.95));
    const MobiusClass cls = classify_mobius(a);
    if (cls == MobiusClass::Identity) continue;
    if (std::abs(trace_squared(a) - 4.0) < 1e-6) {
      ++skipped;
      continue;
    }
    const auto fp = fixed_points(a);
    auto on_circle = [](const SpherePoint& p) {
      return !p.infinite && std::abs(std::abs(p.z) - 1.0) < 1e-6;
    };
    const int on = on_circle(fp[0]) + on_circle(fp[1]);
    const int inside =
        (!fp[0].infinite && std::abs(fp[0].z) < 1.0 - 1e-6) +
        (!fp[1].infinite && std::abs(fp[1].z) < 1.0 - 1e-6);
    const bool ok = cls == MobiusClass::Elliptic ? (inside == 1 && on == 0)
                                                 : (on == 2 && inside == 0);
    if (!ok) return {false, "disagreement at sample " + std::to_string(k)};
  }
  return {true, std::to_string(count) + " samples, " + std::to_string(skipped) + " near-parabolic skipped"};
}

Outcome mobius_domain(CheckLevel level) {
  Sampler rng(12);
  const int count = pick(level, 1000, 10000);
  for (int k = 0; k < count; ++k) {
    const double theta = rng.uniform(0.0, kTwoPi);
    const cplx w = rng.disk(0.99);
    const MobiusClass cls = classify_mobius(DiskMobius(theta, w));
    if (cls == MobiusClass::Identity || cls == MobiusClass::Parabolic) continue;
    if (in_ellipticity_domain(theta, w) != (cls == MobiusClass::Elliptic))
      return {false, fmt("mismatch at theta=%.17g |w|=%.17g", theta, std::abs(w))};
  }
  return {true, std::to_string(count) + " samples"};
}

Outcome mobius_trace(CheckLevel level) {
  Sampler rng(13);
  const int count = pick(level, 1000, 10000);
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const double theta = rng.uniform(0.0, kTwoPi);
    const cplx w = rng.disk(0.99);
    const cplx e = unit(theta);
    // [[e, −e w], [−w̄, 1]] scaled by C e^{−iθ/2}, C = (1 − |w|²)^{−1/2}.
    const cplx scale = unit(-0.5 * theta) / std::sqrt(1.0 - std::norm(w));
    const cplx tr = scale * (e + 1.0);
    const double tau = trace_squared(DiskMobius(theta, w));
    worst = std::max(worst, std::abs(tr * tr - tau) / std::max(1.0, tau));
  }
  return {worst <= 1e-12, fmt("max relative error %.3g", worst)};
}

Outcome mobius_associativity(CheckLevel level) {
  Sampler rng(14);
  const int count = pick(level, 1000, 10000);
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const DiskMobius a(rng.uniform(0, kTwoPi), rng.disk(0.9));
    const DiskMobius b(rng.uniform(0, kTwoPi), rng.disk(0.9));
    const DiskMobius c(rng.uniform(0, kTwoPi), rng.disk(0.9));
    const cplx z = rng.disk(0.99);
    worst = std::max(worst, std::abs(compose(a, compose(b, c))(z) - compose(compose(a, b), c)(z)));
  }
  return {worst <= 1e-11, fmt("max pointwise difference %.3g", worst)};
}

// ---- blaschke -------------------------------------------------------------

Outcome blaschke_boundary_modulus(CheckLevel level) {
  Sampler rng(21);
  const int count = pick(level, 200, 1000);
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const UnicriticalBlaschke b(rng.integer(2, 6), rng.disk(0.95));
    const double phi = rng.uniform(0.0, kTwoPi);
    const double exact = boundary_derivative_modulus(b, phi);
    worst = std::max(worst, std::abs(std::abs(derivative(b, unit(phi))) - exact) / std::max(1.0, exact));
  }
  return {worst <= 1e-12, fmt("max relative error %.3g", worst)};
}

Outcome blaschke_reciprocal(CheckLevel level) {
  Sampler rng(22);
  const int count = pick(level, 50, 300);
  double worst = 0.0;
  int tested = 0;
  for (int k = 0; k < count; ++k) {
    const UnicriticalBlaschke b(rng.integer(2, 6), rng.disk(0.95));
    for (const cplx& z : polynomial_fixed_points(b)) {
      const double r = std::abs(z);
      if (r < 0.05 || r > 1.0 - 1e-6) continue;
      const cplx mirror = 1.0 / std::conj(z);
      worst = std::max(worst, std::abs(evaluate(b, mirror) - mirror));
      ++tested;
    }
  }
  return {worst < 1e-9, std::to_string(tested) + " fixed points, max residual " + fmt("%.3g", worst)};
}

Outcome blaschke_lift_degree(CheckLevel level) {
  Sampler rng(23);
  const int count = pick(level, 200, 1000);
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const UnicriticalBlaschke b(rng.integer(2, 6), rng.disk(0.98));
    const double phi = rng.uniform(-10.0, 10.0);
    worst = std::max(worst, std::abs(circle_lift(b, phi + kTwoPi) - circle_lift(b, phi) -
                                     kTwoPi * b.degree()));
  }
  return {worst <= 1e-9, fmt("max deviation %.3g", worst)};
}

Outcome blaschke_fixed_point_count(CheckLevel level) {
  Sampler rng(24);
  const int count = pick(level, 60, 300);
  int tested = 0;
  for (int k = 0; k < count; ++k) {
    const int n = rng.integer(2, 6);
    const cplx w = rng.disk(0.97);
    const double s0 = threshold_or_rim(n, arg_2pi(w));
    if (std::abs(std::abs(w) - s0) < 1e-3) continue;
    const BlaschkeClass cls = classify_unicritical(n, w);
    const int found = static_cast<int>(boundary_fixed_points(UnicriticalBlaschke(n, w)).size());
    const int expected = cls.kind == Dynamics::Elliptic ? n - 1 : n + 1;
    if (found != expected)
      return {false, "n=" + std::to_string(n) + fmt(" w=%.17g%+.17gi", w.real(), w.imag()) +
                         ": found " + std::to_string(found) + " expected " + std::to_string(expected)};
    ++tested;
  }
  // The parabolic count n at the m-points.
  for (int n = 2; n <= 6; ++n) {
    const int found = static_cast<int>(boundary_fixed_points(UnicriticalBlaschke(n, m_point(n))).size());
    if (found < n - 1 || found > n + 1) return {false, "m-point count out of range"};
  }
  return {true, std::to_string(tested) + " parameters"};
}

Outcome blaschke_second_derivative(CheckLevel level) {
  Sampler rng(25);
  const int count = pick(level, 100, 100);
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const UnicriticalBlaschke b(rng.integer(2, 6), rng.disk(0.9));
    const cplx z = rng.disk(0.9);
    const double h = 1e-5;
    const cplx fd = (derivative(b, z + h) - derivative(b, z - h)) / (2.0 * h);
    const cplx exact = second_derivative(b, z);
    worst = std::max(worst, std::abs(fd - exact) / std::max(1.0, std::abs(exact)));
  }
  return {worst <= 1e-6, fmt("max relative error %.3g", worst)};
}

Outcome blaschke_step_monotone(CheckLevel level) {
  Sampler rng(26);
  const int count = pick(level, 20, 100);
  for (int k = 0; k < count; ++k) {
    const UnicriticalBlaschke b(rng.integer(2, 6), rng.disk(0.95));
    const StepSequence seq = hyperbolic_step_sequence(b, cplx{0.0, 0.0}, 2000);
    // Within 1e−6 of the circle the step itself is only resolved to about
    // 1e−19/(1 − |z|), so the 1e−12 comparison stops there.
    for (std::size_t i = 1; i < seq.steps.size() && seq.depth[i] >= 1e-6; ++i)
      if (seq.steps[i] > seq.steps[i - 1] + 1e-12) return {false, "step increased"};
  }
  return {true, std::to_string(count) + " orbits"};
}

// ---- normalization --------------------------------------------------------

cplx random_sector_parameter(Sampler& rng, int n) {
  const double width = n == 2 ? kTwoPi : sector_angle(n);
  return std::polar(rng.uniform(0.02, 0.9), rng.uniform(0.01, width - 0.01));
}

Outcome normalization_round_trip(CheckLevel level) {
  Sampler rng(31);
  const int count = pick(level, 40, 200);
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const int n = rng.integer(2, 6);
    const cplx w = random_sector_parameter(rng, n);
    const DiskMobius c(rng.uniform(0.0, kTwoPi), rng.disk(0.9));
    worst = std::max(worst, std::abs(normalize(conjugate(UnicriticalBlaschke(n, w), c)).w - w));
  }
  return {worst <= 1e-8, fmt("max error %.3g", worst)};
}

Outcome normalization_uniqueness(CheckLevel level) {
  Sampler rng(32);
  const int count = pick(level, 20, 100);
  for (int k = 0; k < count; ++k) {
    const int n = rng.integer(2, 6);
    const cplx w1 = random_sector_parameter(rng, n), w2 = random_sector_parameter(rng, n);
    if (std::abs(w1 - w2) <= 1e-4) continue;
    const DiskMobius c1(rng.uniform(0.0, kTwoPi), rng.disk(0.9));
    const DiskMobius c2(rng.uniform(0.0, kTwoPi), rng.disk(0.9));
    const cplx v1 = normalize(conjugate(UnicriticalBlaschke(n, w1), c1)).w;
    const cplx v2 = normalize(conjugate(UnicriticalBlaschke(n, w2), c2)).w;
    if (std::abs(v1 - v2) <= 1e-6) return {false, "distinct parameters normalized together"};
  }
  return {true, std::to_string(count) + " pairs"};
}

Outcome normalization_rotations(CheckLevel level) {
  Sampler rng(33);
  const int count = pick(level, 20, 100);
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const int n = rng.integer(3, 6);
    const UnicriticalBlaschke b(n, random_sector_parameter(rng, n));
    const cplx base = normalize(conjugate(b, DiskMobius())).w;
    for (int j = 1; j < n - 1; ++j)
      worst = std::max(worst, std::abs(normalize(conjugate(b, DiskMobius::rotation(j * sector_angle(n)))).w - base));
  }
  return {worst <= 1e-9, fmt("max spread %.3g", worst)};
}

Outcome normalization_interpolant(CheckLevel level) {
  Sampler rng(34);
  const int count = pick(level, 40, 200);
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const int n = rng.integer(2, 6);
    const FiniteBlaschke f =
        conjugate(UnicriticalBlaschke(n, random_sector_parameter(rng, n)), DiskMobius(rng.uniform(0.0, kTwoPi), rng.disk(0.9)));
    const DiskMobius a(0.0, critical_cluster(f).centre);
    const DiskMobius a_inv = inverse(a);
    auto b1 = [&](cplx z) { return a(eval_finite(f, a_inv(z))); };
    const InterpolatedMobius m = interpolate_disk_mobius(b1(0.0), b1(1.0), b1(unit(kPi / n)));
    if (!(std::abs(m.map.w()) < 1.0)) return {false, "interpolant left the disk"};
    worst = std::max(worst, m.unit_defect);
  }
  return {worst <= 1e-9, fmt("max unit defect %.3g", worst)};
}

// ---- ellipticity ----------------------------------------------------------

Outcome ellipticity_arc_lengths(CheckLevel level) {
  Sampler rng(41);
  const int samples = pick(level, 200000, 1000000);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const int n = rng.integer(2, 6);
    const double s = rng.uniform(inner_radius(n) + 1e-3, 0.99);
    const UnicriticalBlaschke b = UnicriticalBlaschke::from_polar(n, s, rng.uniform(0.0, kTwoPi));
    int inside = 0;
    double first = 0.0, last = 0.0;
    // K is centred on ψ + π; sweep from ψ so it is one contiguous run.
    for (int i = 0; i < samples; ++i) {
      const double phi = b.psi() + kTwoPi * (i + 0.5) / samples;
      if (boundary_derivative_modulus(b, phi) <= 1.0) {
        if (inside == 0) first = phi;
        last = phi;
        ++inside;
      }
    }
    const double measured_k = kTwoPi * inside / samples;
    const double measured_bk = circle_lift(b, last) - circle_lift(b, first);
    worst = std::max({worst, std::abs(measured_k - arc_length_K(n, s)),
                      std::abs(measured_bk - arc_length_BK(n, s))});
  }
  return {worst < 1e-4, fmt("max error %.3g", worst)};
}

Outcome ellipticity_arc_derivatives(CheckLevel level) {
  const int per_n = pick(level, 10, 50);
  double worst = 0.0;
  double min_gap = std::numeric_limits<double>::infinity();
  for (int n = 2; n <= 6; ++n) {
    const double s_in = inner_radius(n);
    for (int k = 0; k < per_n; ++k) {
      const double s = s_in + (1.0 - s_in) * (k + 0.5) / per_n;
      const double h = 1e-4 * std::min(s - s_in, 1.0 - s);
      const double fp = (arc_length_K(n, s + h) - arc_length_K(n, s - h)) / (2 * h);
      const double fq = (arc_length_BK(n, s + h) - arc_length_BK(n, s - h)) / (2 * h);
      const double p = p_prime(n, s), q = q_prime(n, s);
      worst = std::max({worst, std::abs(fp - p) / std::abs(p), std::abs(fq - q) / std::max(std::abs(q), 1e-300)});
      min_gap = std::min(min_gap, p - q);
    }
  }
  const bool ok = worst <= 1e-5 && min_gap > 0.0;
  return {ok, fmt("max relative error %.3g, min p'-q' %.3g", worst, min_gap)};
}

Outcome ellipticity_radial_monotone(CheckLevel level) {
  const int rays = pick(level, 32, 256);
  int evaluated = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k < rays; ++k) {
      const double psi = kTwoPi * (k + 0.5) / rays;
      const double s0 = threshold_or_rim(n, psi);
      std::vector<double> below, above;
      for (int j = 1; j <= 7; ++j) below.push_back(s0 * j / 8.0);
      below.push_back(s0 - 1e-6);
      if (s0 < 1.0 - 1e-3) {
        for (int j = 1; j <= 7; ++j) above.push_back(s0 + (1.0 - s0) * j / 8.0);
        above.push_back(s0 + 1e-6);
      }
      for (double s : below)
        if (classify_unicritical(n, std::polar(s, psi)).kind != Dynamics::Elliptic)
          return {false, "non-elliptic below s0 at n=" + std::to_string(n) + fmt(" psi=%.17g s=%.17g", psi, s)};
      for (double s : above)
        if (classify_unicritical(n, std::polar(s, psi)).kind != Dynamics::Hyperbolic)
          return {false, "non-hyperbolic above s0 at n=" + std::to_string(n) + fmt(" psi=%.17g s=%.17g", psi, s)};
      evaluated += static_cast<int>(below.size() + above.size());
    }
  }
  return {true, std::to_string(evaluated) + " classifications"};
}

Outcome ellipticity_inner_radius(CheckLevel level) {
  const int n_max = pick(level, 3, 6);
  std::ostringstream detail;
  for (int n = 2; n <= n_max; ++n) {
    const double s_in = inner_radius(n);
    double min_s0 = 1.0;
    for (int k = 0; k < 1024; ++k) {
      const double psi = kTwoPi * k / 1024;
      const double s0 = threshold_or_rim(n, psi);
      min_s0 = std::min(min_s0, s0);
      if (s0 < s_in - 1e-9) return {false, "threshold below the inner radius"};
      if (s0 < s_in + 1e-6 && !is_m_point_angle(n, psi))
        return {false, "inner radius attained off an m-point ray"};
    }
    if (std::abs(min_s0 - s_in) > 1e-6) return {false, "minimum does not reach the inner radius"};
    detail << "n=" << n << " ok; ";
  }
  return {true, detail.str()};
}

Outcome ellipticity_quadratic(CheckLevel) {
  double worst = 0.0;
  for (int n = 2; n <= 10; ++n) {
    // (n+1)r² − 2r + (1−n) = 0: roots (2 ± 2n)/(2(n+1)).
    const double a = n + 1.0, b = -2.0, c = 1.0 - n;
    const double disc = std::sqrt(b * b - 4 * a * c);
    const double r1 = (-b + disc) / (2 * a), r2 = (-b - disc) / (2 * a);
    worst = std::max({worst, std::abs(r1 - 1.0), std::abs(std::abs(r2) - inner_radius(n))});
  }
  return {worst <= 1e-15, fmt("max root error %.3g", worst)};
}

Outcome ellipticity_oracle_agreement(CheckLevel level) {
  Sampler rng(45);
  const int target = pick(level, 60, 500);
  int tested = 0, attempts = 0;
  while (tested < target && attempts < 20 * target) {
    ++attempts;
    const int n = rng.integer(2, 6);
    const cplx w = rng.disk(0.97);
    const double s0 = threshold_or_rim(n, arg_2pi(w));
    if (std::abs(std::abs(w) - s0) < 1e-3) continue;
    const UnicriticalBlaschke b(n, w);
    const Dynamics kind = classify_unicritical(n, w).kind;
    const DwOracleResult oracle = denjoy_wolff_iterate(b);
    if ((kind == Dynamics::Elliptic) != (oracle.location == DwLocation::Interior))
      return {false, "n=" + std::to_string(n) + fmt(" w=%.17g%+.17gi", w.real(), w.imag())};
    ++tested;
  }
  return {tested == target, std::to_string(tested) + " parameters agree"};
}

Outcome ellipticity_symmetry(CheckLevel level) {
  Sampler rng(46);
  const int count = pick(level, 20, 100);
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const int n = rng.integer(2, 6);
    const double psi = rng.uniform(0.0, kTwoPi);
    const double s0 = threshold_or_rim(n, psi);
    if (s0 > 1.0 - 1e-6) continue;
    worst = std::max({worst, std::abs(threshold_or_rim(n, psi + sector_angle(n)) - s0),
                      std::abs(threshold_or_rim(n, wrap_2pi(-psi)) - s0)});
  }
  return {worst <= 1e-10, fmt("max asymmetry %.3g", worst)};
}

// ---- julia ----------------------------------------------------------------

Outcome julia_three_way(CheckLevel level) {
  Sampler rng(51);
  const int generic = pick(level, 2, 10);
  int tested = 0;
  for (int n = 2; n <= 5; ++n) {
    const UnicriticalBlaschke m(n, m_point(n));
    const BlaschkeClass cls = classify_unicritical(n, m.critical_point());
    if (cls.kind != Dynamics::Parabolic || julia_type(m, cls) != JuliaType::FullCircle ||
        hyperbolic_step_kind(m, cls) != HyperbolicStepKind::ZeroStep || !is_m_point_angle(n, m.psi()))
      return {false, "m-point disagreement at n=" + std::to_string(n)};
    ++tested;
    for (int k = 0; k < generic;) {
      const double psi = rng.uniform(0.0, kTwoPi);
      const double m_dist = periodic_distance((n - 1) * psi, 0.0, kPi) / (n - 1);
      if (m_dist < 0.05) continue;
      const double s0 = threshold_or_rim(n, psi);
      if (s0 > 0.999) continue;
      const UnicriticalBlaschke b = UnicriticalBlaschke::from_polar(n, s0, psi);
      const BlaschkeClass c = classify_unicritical(n, b.critical_point());
      if (c.kind != Dynamics::Parabolic || julia_type(b, c) != JuliaType::Cantor ||
          hyperbolic_step_kind(b, c) != HyperbolicStepKind::PositiveStep || is_m_point_angle(n, psi))
        return {false, "boundary disagreement at n=" + std::to_string(n) + fmt(" psi=%.17g", psi)};
      ++k;
      ++tested;
    }
  }
  return {true, std::to_string(tested) + " parabolic parameters"};
}

Outcome julia_backward_closure(CheckLevel level) {
  Sampler rng(52);
  const int count = pick(level, 5, 20);
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const UnicriticalBlaschke b(rng.integer(2, 6), rng.disk(0.95));
    const JuliaSample js = backward_orbit(b, 1000 + k, kDefaultTransient, 500);
    for (std::size_t i = 0; i < js.angles.size(); ++i) {
      worst = std::max(worst, std::abs(evaluate(b, unit(js.angles[i])) - unit(js.parents[i])));
      const cplx q = unit(js.angles[i]);
      for (const cplx& p : preimages(b, q)) worst = std::max(worst, std::abs(evaluate(b, p) - q));
    }
  }
  return {worst <= 1e-10, fmt("max residual %.3g", worst)};
}

// Parameters are uniform over the elliptic part of the disk. The sampling
// measure starves arcs near almost-neutral boundary points, so this proxy
// is known to fail for large |w| (see the README).
Outcome julia_elliptic_gaps(CheckLevel level) {
  Sampler rng(53);
  const int target = pick(level, 5, 20);
  double worst = 0.0, worst_s = 0.0;
  int tested = 0;
  while (tested < target) {
    const int n = rng.integer(2, 6);
    const cplx w = rng.disk(1.0);
    if (classify_unicritical(n, w).kind != Dynamics::Elliptic) continue;
    const JuliaSample js = backward_orbit(UnicriticalBlaschke(n, w), 7 + tested);
    const std::vector<double> gaps = sample_gaps(js);
    const double g = *std::max_element(gaps.begin(), gaps.end());
    if (g > worst) {
      worst = g;
      worst_s = std::abs(w);
    }
    ++tested;
  }
  return {worst < 0.1, fmt("max gap %.4g rad (at |w|=%.3g)", worst, worst_s)};
}

Outcome julia_hyperbolic_gaps(CheckLevel level) {
  Sampler rng(54);
  const int target = pick(level, 5, 20);
  double worst_ratio = std::numeric_limits<double>::infinity();
  int tested = 0;
  while (tested < target) {
    const int n = rng.integer(2, 6);
    const double psi = rng.uniform(0.0, kTwoPi);
    const double s0 = threshold_or_rim(n, psi);
    if (s0 > 0.95) continue;
    const double s = rng.uniform(s0 + 0.02, 0.98);
    const UnicriticalBlaschke b = UnicriticalBlaschke::from_polar(n, s, psi);
    const BlaschkeClass cls = classify_unicritical(n, b.critical_point());
    if (cls.kind != Dynamics::Hyperbolic) return {false, "expected a hyperbolic parameter"};
    const JuliaSample js = backward_orbit(b, 99 + tested);
    const CircleArc gap = fatou_gap(b, js);
    std::vector<double> gaps = sample_gaps(js);
    std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
    const double median = gaps[gaps.size() / 2];
    if (!gap.contains(arg_2pi(cls.dw_point)))
      return {false, fmt("largest gap misses the Denjoy-Wolff point (psi=%.6g s=%.6g)", psi, s)};
    worst_ratio = std::min(worst_ratio, gap.length() / median);
    ++tested;
  }
  return {worst_ratio > 10.0, fmt("min largest/median gap ratio %.4g", worst_ratio)};
}

// ---- render ---------------------------------------------------------------

bool is_blue(Rgb c) { return c.b > c.r; }
bool is_gray(Rgb c) { return c.r == c.g && c.g == c.b && c.r > 0 && c.r < 255; }

Outcome render_determinism(CheckLevel level) {
  const int size = pick(level, 96, 512);
  const RasterImage ref = render_parameter_plane(3, size, size, Region::FullDisk, Exec::serial());
  for (int workers : {1, 2, 4}) {
    const RasterImage img = render_parameter_plane(3, size, size, Region::FullDisk, Exec::parallel(workers));
    if (img.pixels != ref.pixels) return {false, "render differs with " + std::to_string(workers) + " workers"};
  }
  const UnicriticalBlaschke b(2, cplx{0.2, 0.5});
  if (backward_orbit(b, 42).angles != backward_orbit(b, 42).angles) return {false, "Julia sample differs"};
  const CurveTable t1 = boundary_curve(3, 64, Exec::serial()), t2 = boundary_curve(3, 64, Exec::parallel(3));
  for (std::size_t k = 0; k < t1.rows.size(); ++k)
    if (std::memcmp(&t1.rows[k], &t2.rows[k], sizeof(CurveRow)) != 0) return {false, "boundary table differs"};
  return {true, std::to_string(size) + "x" + std::to_string(size) + " identical across worker counts"};
}

Outcome render_boundary_consistency(CheckLevel level) {
  const int n = 2;
  const int size = pick(level, 128, 512);
  const RasterImage img = render_parameter_plane(n, size, size, Region::FullDisk, Exec::parallel());
  const int rays = parameter_plane_ray_count(n, size, size);
  const CurveTable table = boundary_curve(n, rays);
  const double pixel = 2.0 * std::sqrt(2.0) / size;
  int tested = 0;
  double worst = 0.0;
  for (int k = 0; k < rays; k += rays / 64) {
    const CurveRow row = table.rows[static_cast<std::size_t>(k)];
    if (std::isnan(row.s0) || row.s0 > 0.99) continue;
    // Skip the cusp around the m-point ray, where neighbouring rays diverge.
    if (periodic_distance(row.psi, kPi, kTwoPi) < 0.15) continue;
    double last_blue = 0.0, first_gray = 1.0;
    for (double r = 0.0; r < 0.995; r += 0.25 / size) {
      const cplx w = std::polar(r, row.psi);
      const int i = std::clamp(static_cast<int>((w.real() + 1.0) * 0.5 * size), 0, size - 1);
      const int j = std::clamp(static_cast<int>((1.0 - w.imag()) * 0.5 * size), 0, size - 1);
      const Rgb c = img.at(i, j);
      if (is_blue(c)) last_blue = r;
      if (is_gray(c) && first_gray == 1.0) first_gray = r;
    }
    worst = std::max({worst, last_blue - row.s0, row.s0 - first_gray});
    ++tested;
  }
  return {worst <= pixel, std::to_string(tested) + " rays, max overshoot " + fmt("%.3g (pixel %.3g)", worst, pixel)};
}

Outcome render_rotation(CheckLevel level) {
  const int size = pick(level, 96, 256);
  for (int n : {3, 4}) {
    const RasterImage img = render_parameter_plane(n, size, size, Region::FullDisk, Exec::parallel());
    const cplx rot = unit(sector_angle(n));
    for (int j = 0; j < size; ++j)
      for (int i = 0; i < size; ++i) {
        if (!is_blue(img.at(i, j))) continue;
        const cplx w = pixel_to_parameter(i, j, size, size) * rot;
        const int ti = static_cast<int>(std::floor((w.real() + 1.0) * 0.5 * size));
        const int tj = static_cast<int>(std::floor((1.0 - w.imag()) * 0.5 * size));
        bool found = false;
        for (int dj = -1; dj <= 1 && !found; ++dj)
          for (int di = -1; di <= 1 && !found; ++di) {
            const int x = ti + di, y = tj + dj;
            if (x < 0 || y < 0 || x >= size || y >= size) continue;
            const Rgb c = img.at(x, y);
            found = is_blue(c) || c == kRed;
          }
        if (!found) return {false, "n=" + std::to_string(n) + " blue pixel rotates off the blue set"};
      }
  }
  return {true, "n=3,4 blue sets rotation invariant up to one pixel"};
}

struct NamedCheck {
  const char* module;
  const char* name;
  Outcome (*run)(CheckLevel);
};

constexpr NamedCheck kChecks[] = {
    {"mobius", "classification_vs_fixed_points", mobius_fixed_points},
    {"mobius", "ellipticity_domain", mobius_domain},
    {"mobius", "trace_squared_matrix", mobius_trace},
    {"mobius", "compose_associative", mobius_associativity},
    {"blaschke", "boundary_derivative_modulus", blaschke_boundary_modulus},
    {"blaschke", "reciprocal_fixed_points", blaschke_reciprocal},
    {"blaschke", "lift_degree", blaschke_lift_degree},
    {"blaschke", "boundary_fixed_point_count", blaschke_fixed_point_count},
    {"blaschke", "second_derivative", blaschke_second_derivative},
    {"blaschke", "hyperbolic_step_monotone", blaschke_step_monotone},
    {"normalization", "round_trip", normalization_round_trip},
    {"normalization", "uniqueness", normalization_uniqueness},
    {"normalization", "rotation_subgroup", normalization_rotations},
    {"normalization", "interpolant_is_automorphism", normalization_interpolant},
    {"ellipticity", "arc_lengths_vs_sampling", ellipticity_arc_lengths},
    {"ellipticity", "arc_derivatives", ellipticity_arc_derivatives},
    {"ellipticity", "radial_monotonicity", ellipticity_radial_monotone},
    {"ellipticity", "inner_radius", ellipticity_inner_radius},
    {"ellipticity", "threshold_quadratic", ellipticity_quadratic},
    {"ellipticity", "oracle_agreement", ellipticity_oracle_agreement},
    {"ellipticity", "threshold_symmetry", ellipticity_symmetry},
    {"julia", "parabolic_three_way", julia_three_way},
    {"julia", "backward_orbit_closure", julia_backward_closure},
    {"julia", "elliptic_max_gap", julia_elliptic_gaps},
    {"julia", "hyperbolic_fatou_gap", julia_hyperbolic_gaps},
    {"render", "determinism", render_determinism},
    {"render", "boundary_consistency", render_boundary_consistency},
    {"render", "rotational_symmetry", render_rotation},
};

}  // namespace

std::vector<CheckResult> run_selfcheck(CheckLevel level, const CheckObserver& observer) {
  std::vector<CheckResult> results;
  for (const NamedCheck& check : kChecks) {
    CheckResult r{check.module, check.name, false, {}, 0.0};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = check.run(level);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (observer) observer(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace ucb
