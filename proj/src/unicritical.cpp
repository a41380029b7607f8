#include "ucb/unicritical.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <utility>

#include "ucb/errors.hpp"
#include "ucb/polynomial.hpp"

namespace ucb {

namespace {

cplx pole_checked_denominator(const UnicriticalBlaschke& b, cplx z) {
  const cplx d = 1.0 - std::conj(b.critical_point()) * z;
  if (d == cplx{0.0, 0.0}) throw DomainError("Blaschke: evaluation at the pole 1/conj(w)");
  return d;
}

}  // namespace

UnicriticalBlaschke::UnicriticalBlaschke(int n, cplx w) : n_(n), w_(w) {
  if (n < 2) throw PreconditionError("UnicriticalBlaschke: degree must be >= 2");
  if (!(std::abs(w) < 1.0)) throw DomainError("UnicriticalBlaschke: |w| must be < 1");
}

UnicriticalBlaschke UnicriticalBlaschke::from_polar(int n, double s, double psi) {
  return {n, std::polar(s, psi)};
}

const char* to_string(Dynamics d) {
  switch (d) {
    case Dynamics::Elliptic: return "elliptic";
    case Dynamics::Parabolic: return "parabolic";
    case Dynamics::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

const char* to_string(HyperbolicStepKind k) {
  return k == HyperbolicStepKind::ZeroStep ? "zero" : "positive";
}

cplx evaluate(const UnicriticalBlaschke& b, cplx z) {
  const cplx d = pole_checked_denominator(b, z);
  return ipow((z - b.critical_point()) / d, b.degree());
}

cplx derivative(const UnicriticalBlaschke& b, cplx z) {
  const cplx w = b.critical_point();
  const cplx d = pole_checked_denominator(b, z);
  const cplx a = (z - w) / d;
  const cplx da = (1.0 - std::norm(w)) / (d * d);
  return static_cast<double>(b.degree()) * ipow(a, b.degree() - 1) * da;
}

cplx second_derivative(const UnicriticalBlaschke& b, cplx z) {
  const int n = b.degree();
  const cplx w = b.critical_point();
  const cplx d = pole_checked_denominator(b, z);
  const double r = 1.0 - std::norm(w);
  const cplx a = (z - w) / d;
  const cplx factor = static_cast<double>(n - 1) * r + 2.0 * std::conj(w) * (z - w);
  const cplx d2 = d * d;
  return static_cast<double>(n) * r * ipow(a, n - 2) / (d2 * d2) * factor;
}

double boundary_derivative_modulus(const UnicriticalBlaschke& b, double phi) {
  const double s = b.s();
  return b.degree() * (1.0 - s * s) /
         (1.0 + s * s - 2.0 * s * std::cos(phi - b.psi()));
}

namespace {

// The natural lift: A(e^{iφ}) = e^{iφ} c / c̄ with c = 1 − w e^{−iφ}, and
// Re c > 0, so arg c is continuous in φ.
double natural_lift(const UnicriticalBlaschke& b, double phi) {
  const cplx c = 1.0 - b.critical_point() * unit(-phi);
  return b.degree() * (phi + 2.0 * std::arg(c));
}

}  // namespace

double circle_lift(const UnicriticalBlaschke& b, double phi, const LiftAnchor& anchor) {
  const double base = natural_lift(b, phi);
  if (!anchor.value) return base;
  const double at_ref = natural_lift(b, anchor.phi);
  const double shift = std::round((*anchor.value - at_ref) / kTwoPi);
  return base + kTwoPi * shift;
}

double lift_displacement(const UnicriticalBlaschke& b, double phi) {
  return natural_lift(b, phi) - phi;
}

namespace {

constexpr double kLevelTol = 1e-12;
constexpr double kNeutralTol = 1e-4;
constexpr double kNeutralMergeGap = 1e-4;

// Roots of lift_displacement(φ) = 2πk on [x0, x1], where the displacement is
// monotone on the interval.
void monotone_piece_roots(const UnicriticalBlaschke& b, double x0, double x1,
                          std::vector<double>& out) {
  const double g0 = lift_displacement(b, x0);
  const double g1 = lift_displacement(b, x1);
  const double lo = std::min(g0, g1), hi = std::max(g0, g1);
  const long k_lo = static_cast<long>(std::ceil((lo - kLevelTol) / kTwoPi));
  const long k_hi = static_cast<long>(std::floor((hi + kLevelTol) / kTwoPi));
  const bool increasing = g1 >= g0;
  for (long k = k_lo; k <= k_hi; ++k) {
    const double target = kTwoPi * static_cast<double>(k);
    if (std::abs(g0 - target) <= kLevelTol) {
      out.push_back(x0);
      continue;
    }
    if (std::abs(g1 - target) <= kLevelTol) {
      out.push_back(x1);
      continue;
    }
    double a = x0, c = x1;
    for (int it = 0; it < 200 && c - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
      const double mid = 0.5 * (a + c);
      const bool below = lift_displacement(b, mid) < target;
      if (below == increasing) a = mid; else c = mid;
    }
    out.push_back(0.5 * (a + c));
  }
}

}  // namespace

std::vector<double> boundary_fixed_points(const UnicriticalBlaschke& b) {
  const int n = b.degree();
  const double s = b.s();
  const double psi = b.psi();
  const double s_in = static_cast<double>(n - 1) / (n + 1);
  std::vector<double> raw;
  const double t = s > s_in ? (1.0 - n + (1.0 + n) * s * s) / (2.0 * s) : -1.0;
  if (t <= -1.0) {
    // |B′| ≥ 1 everywhere: the displacement is monotone over one full turn.
    const double a = psi + kPi;
    monotone_piece_roots(b, a, a + kTwoPi, raw);
  } else {
    const double half = std::acos(std::min(1.0, t));
    const double phi1 = psi + half;
    const double phi2 = psi + kTwoPi - half;
    monotone_piece_roots(b, phi1, phi2, raw);
    monotone_piece_roots(b, phi2, phi1 + kTwoPi, raw);
  }
  for (double& r : raw) {
    r = wrap_2pi(r);
    if (r > kTwoPi - 1e-12) r = 0.0;
  }
  std::sort(raw.begin(), raw.end());

  std::vector<double> roots;
  for (double r : raw) {
    if (!roots.empty() && periodic_distance(r, roots.back(), kTwoPi) < 1e-9) continue;
    roots.push_back(r);
  }
  if (roots.size() > 1 && periodic_distance(roots.front(), roots.back(), kTwoPi) < 1e-9)
    roots.pop_back();

  // A neutral fixed point found from both sides of a K endpoint shows up as a
  // near-coincident pair with |B′| ≈ 1; keep one.
  auto neutral = [&](double phi) {
    return std::abs(boundary_derivative_modulus(b, phi) - 1.0) < kNeutralTol;
  };
  std::vector<double> merged;
  for (double r : roots) {
    if (!merged.empty() && neutral(r) && neutral(merged.back()) &&
        periodic_distance(r, merged.back(), kTwoPi) < kNeutralMergeGap)
      continue;
    merged.push_back(r);
  }
  if (merged.size() > 1 && neutral(merged.front()) && neutral(merged.back()) &&
      periodic_distance(merged.front(), merged.back(), kTwoPi) < kNeutralMergeGap)
    merged.pop_back();
  return merged;
}

std::optional<cplx> newton_fixed_point(const UnicriticalBlaschke& b, cplx start,
                                       int max_iter, double tol) {
  cplx z = start;
  for (int it = 0; it < max_iter; ++it) {
    const cplx f = evaluate(b, z) - z;
    const cplx df = derivative(b, z) - 1.0;
    if (df == cplx{0.0, 0.0}) return std::nullopt;
    const cplx step = f / df;
    z -= step;
    if (!std::isfinite(std::abs(z))) return std::nullopt;
    if (std::abs(step) <= tol * std::max(1.0, std::abs(z))) return z;
  }
  if (std::abs(evaluate(b, z) - z) < 1e-12) return z;
  return std::nullopt;
}

std::vector<cplx> polynomial_fixed_points(const UnicriticalBlaschke& b) {
  const int n = b.degree();
  const cplx w = b.critical_point();
  const cplx lin_a[2] = {-w, cplx{1.0, 0.0}};               // z − w
  const cplx lin_b[2] = {cplx{1.0, 0.0}, -std::conj(w)};    // 1 − w̄z
  Poly pa{cplx{1.0, 0.0}}, pb{cplx{1.0, 0.0}};
  for (int k = 0; k < n; ++k) {
    pa = poly_mul(pa, lin_a);
    pb = poly_mul(pb, lin_b);
  }
  const cplx z_only[2] = {cplx{0.0, 0.0}, cplx{1.0, 0.0}};
  const Poly poly = poly_sub(pa, poly_mul(z_only, pb));
  std::vector<cplx> roots = durand_kerner(poly).roots;
  for (cplx& r : roots) {
    try {
      if (auto polished = newton_fixed_point(b, r, 50); polished &&
          std::abs(*polished - r) < 1e-6)
        r = *polished;
    } catch (const DomainError&) {
    }
  }
  return roots;
}

std::optional<cplx> interior_fixed_point(const UnicriticalBlaschke& b) {
  const std::vector<cplx> fixed = polynomial_fixed_points(b);
  cplx p = *std::min_element(fixed.begin(), fixed.end(),
                             [](cplx x, cplx y) { return std::abs(x) < std::abs(y); });
  if (auto polished = newton_fixed_point(b, p); polished && std::abs(*polished) < 1.0)
    p = *polished;
  if (!(std::abs(p) < 1.0)) return std::nullopt;
  return p;
}

DwOracleResult denjoy_wolff_iterate(const UnicriticalBlaschke& b, double tol,
                                    long max_iter) {
  if (!(tol > 0.0)) throw PreconditionError("denjoy_wolff_iterate: tol must be > 0");
  constexpr int kInteriorRun = 50;
  constexpr double kInteriorStep = 1e-3;
  constexpr int kBoundaryRun = 20;
  constexpr double kBoundaryBand = 1e-6;

  // Nearest boundary fixed point with |B′| ≤ 1 to the point z.
  auto nearest_non_repelling = [&](cplx z) -> std::optional<cplx> {
    std::optional<cplx> best;
    double best_dist = 1e300;
    for (double phi : boundary_fixed_points(b)) {
      if (boundary_derivative_modulus(b, phi) > 1.0 + kNeutralTol) continue;
      const double d = std::abs(unit(phi) - z);
      if (d < best_dist) {
        best_dist = d;
        best = unit(phi);
      }
    }
    return best;
  };

  cplx z{0.0, 0.0};
  int calm = 0, near_edge = 0;
  for (long k = 1; k <= max_iter; ++k) {
    const cplx next = evaluate(b, z);
    if (std::abs(next) >= 1.0) {
      near_edge = kBoundaryRun;
    } else {
      calm = (hyperbolic_distance(z, next) < kInteriorStep) ? calm + 1 : 0;
      near_edge = (std::abs(next) > 1.0 - kBoundaryBand) ? near_edge + 1 : 0;
    }
    z = next;

    if (calm >= kInteriorRun) {
      calm = 0;
      const auto p = newton_fixed_point(b, z);
      if (p && std::abs(evaluate(b, *p) - *p) < tol) {
        const double depth = 1.0 - std::abs(*p);
        const double mult = std::abs(derivative(b, *p));
        // Next to a multiple boundary fixed point Newton stops inside the disk
        // with a tiny residual, so an interior point must visibly attract.
        if (depth > 1e-9 && mult < 1.0 && (depth > 1e-4 || mult < 1.0 - 1e-6))
          return {*p, DwLocation::Interior, k};
        // The orbit has stalled at a neutral point on the circle.
        if (depth < 1e-4)
          if (const auto q = nearest_non_repelling(*p); q && std::abs(*q - *p) < 1e-3)
            return {*q, DwLocation::Boundary, k};
      }
    }
    if (near_edge >= kBoundaryRun) {
      if (const auto q = nearest_non_repelling(z)) return {*q, DwLocation::Boundary, k};
      throw NumericError("denjoy_wolff_iterate: orbit reached the circle but no "
                         "non-repelling boundary fixed point exists");
    }
  }
  throw NumericError("denjoy_wolff_iterate: inconclusive after max_iter iterations");
}

double hyperbolic_distance(cplx z1, cplx z2) {
  if (!(std::abs(z1) < 1.0) || !(std::abs(z2) < 1.0))
    throw DomainError("hyperbolic_distance: arguments must lie in the open disk");
  // Fixed argument order keeps d(z1, z2) and d(z2, z1) bit-identical.
  if (z2.real() < z1.real() || (z2.real() == z1.real() && z2.imag() < z1.imag())) std::swap(z1, z2);
  const double r = std::abs((z1 - z2) / (1.0 - std::conj(z2) * z1));
  return std::atanh(std::min(r, 1.0));
}

StepSequence hyperbolic_step_sequence(const UnicriticalBlaschke& b, cplx z, long count) {
  if (!(std::abs(z) < 1.0))
    throw DomainError("hyperbolic_step_sequence: start must lie in the open disk");
  // Parabolic orbits approach the circle like 1/k², so by k ~ 10⁵ double
  // precision no longer resolves 1 − |z|. The orbit runs in long double.
  using real = long double;
  using lcplx = std::complex<real>;
  static_assert(std::numeric_limits<real>::digits >= 64,
                "hyperbolic_step_sequence needs an extended-precision long double");
  const int n = b.degree();
  const lcplx w(b.critical_point().real(), b.critical_point().imag());
  const lcplx wc = std::conj(w);
  auto step = [&](lcplx x) {
    const lcplx u = (x - w) / (real(1) - wc * x);
    lcplx acc(1);
    for (int k = 0; k < n; ++k) acc *= u;
    return acc;
  };
  auto distance = [](lcplx x, lcplx y) {
    const real r = std::abs((x - y) / (real(1) - std::conj(y) * x));
    return static_cast<double>(std::atanh(std::min(r, real(1))));
  };

  StepSequence out;
  out.steps.reserve(static_cast<std::size_t>(std::max(0L, count)));
  out.depth.reserve(out.steps.capacity());
  constexpr real kEdge = 1.0L - 1e-17L;
  lcplx x(z.real(), z.imag());
  for (long k = 0; k < count; ++k) {
    const lcplx next = step(x);
    if (std::abs(next) >= kEdge) {
      out.truncated = true;
      break;
    }
    out.steps.push_back(distance(x, next));
    out.depth.push_back(static_cast<double>(real(1) - std::abs(x)));
    x = next;
  }
  return out;
}

}  // namespace ucb
