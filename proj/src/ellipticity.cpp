#include "ucb/ellipticity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ucb/errors.hpp"

namespace ucb {

namespace {

constexpr double kDomainSlack = 1e-12;

void require_closed_domain(int n, double s, const char* what) {
  if (!(s >= inner_radius(n) - kDomainSlack && s < 1.0))
    throw PreconditionError(std::string(what) + ": s outside [(n-1)/(n+1), 1)");
}

void require_open_domain(int n, double s, const char* what) {
  if (!(s > inner_radius(n) && s < 1.0))
    throw PreconditionError(std::string(what) + ": s outside ((n-1)/(n+1), 1)");
}

double clamped_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

// Half-width of K around its centre ψ + π, i.e. π − arccos t.
double k_half_width(int n, double s) { return kPi - clamped_acos(t_of_s(n, s)); }

}  // namespace

bool CircleArc::contains(double phi) const {
  switch (kind) {
    case Kind::Empty: return false;
    case Kind::Point: return periodic_distance(phi, phi1, kTwoPi) < 1e-12;
    case Kind::Arc: {
      double r = std::fmod(phi - phi1, kTwoPi);
      if (r < 0.0) r += kTwoPi;
      return r <= (phi2 - phi1) + 1e-12;
    }
  }
  return false;
}

double t_of_s(int n, double s) {
  require_closed_domain(n, s, "t_of_s");
  return (1.0 - n + (1.0 + n) * s * s) / (2.0 * s);
}

double u_of_s(int n, double s) {
  require_closed_domain(n, s, "u_of_s");
  return (1.0 - n - (1.0 + n) * s * s) / (2.0 * n * s);
}

CircleArc k_arc(int n, double s, double psi) {
  if (!(s >= 0.0 && s < 1.0)) throw PreconditionError("k_arc: s outside [0, 1)");
  const double base = wrap_2pi(psi);
  const double s_in = inner_radius(n);
  if (s < s_in - kDomainSlack) return CircleArc::empty();
  if (std::abs(s - s_in) <= kDomainSlack) return CircleArc::point(base + kPi);
  const double a = clamped_acos(t_of_s(n, s));
  return CircleArc::arc(base + a, base + kTwoPi - a);
}

double arc_length_K(int n, double s) {
  return kTwoPi - 2.0 * clamped_acos(t_of_s(n, s));
}

double arc_length_BK(int n, double s) {
  return n * (kTwoPi - 2.0 * clamped_acos(u_of_s(n, s)));
}

namespace {

double arc_derivative_denominator(int n, double s) {
  const double a = static_cast<double>(1 - n);
  const double b = static_cast<double>(1 + n);
  return s * std::sqrt(1.0 - s * s) * std::sqrt(-a * a + b * b * s * s);
}

}  // namespace

double p_prime(int n, double s) {
  require_open_domain(n, s, "p_prime");
  return 2.0 * (n - 1.0 + (n + 1.0) * s * s) / arc_derivative_denominator(n, s);
}

double q_prime(int n, double s) {
  require_open_domain(n, s, "q_prime");
  return 2.0 * n * (n - 1.0 - (n + 1.0) * s * s) / arc_derivative_denominator(n, s);
}

namespace {

// (n−1)ψ ≡ target (mod 2π), with the tolerance taken on ψ.
bool multiple_matches(int n, double psi, double target) {
  const double m = static_cast<double>(n - 1);
  return periodic_distance(m * psi, target, kTwoPi) <= m * kSpecialAngleTol;
}

}  // namespace

bool is_always_elliptic_angle(int n, double psi) {
  return multiple_matches(n, psi, n % 2 == 0 ? 0.0 : kPi);
}

bool is_m_point_angle(int n, double psi) {
  return multiple_matches(n, psi, n % 2 == 1 ? 0.0 : kPi);
}

namespace {

struct LiftedEnds {
  double g1;  // displacement at φ₁ (start of K)
  double g2;  // displacement at φ₂ (end of K); g1 ≥ g2
  double phi1;
  double phi2;
};

LiftedEnds lifted_ends(const UnicriticalBlaschke& b, double half) {
  const double centre = b.psi() + kPi;
  const double phi1 = centre - half;
  const double phi2 = centre + half;
  return {lift_displacement(b, phi1), lift_displacement(b, phi2), phi1, phi2};
}

double distance_to_lattice(double x) { return periodic_distance(x, 0.0, kTwoPi); }

}  // namespace

EndpointDisplacement endpoint_displacement(int n, double s, double psi) {
  require_open_domain(n, s, "endpoint_displacement");
  if (is_always_elliptic_angle(n, psi) || is_m_point_angle(n, psi))
    throw PreconditionError("endpoint_displacement: special angle");
  const UnicriticalBlaschke b = UnicriticalBlaschke::from_polar(n, s, psi);
  const LiftedEnds e = lifted_ends(b, k_half_width(n, s));
  return {wrap_pi(e.g1), wrap_pi(e.g2)};
}

double fixed_point_margin(int n, double s, double psi) {
  const UnicriticalBlaschke b = UnicriticalBlaschke::from_polar(n, s, psi);
  const double s_in = inner_radius(n);
  if (s <= s_in) {
    const double centre = lift_displacement(b, b.psi() + kPi);
    return -distance_to_lattice(centre) - (s_in - s);
  }
  const LiftedEnds e = lifted_ends(b, k_half_width(n, s));
  return 0.5 * (e.g1 - e.g2) - distance_to_lattice(0.5 * (e.g1 + e.g2));
}

RayClassification s_zero(int n, double psi, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("s_zero: tol must be > 0");
  if (is_always_elliptic_angle(n, psi)) return {};
  const double s_in = inner_radius(n);
  if (is_m_point_angle(n, psi))
    return {RayClassification::Kind::ThresholdAt, s_in, true};

  double lo = s_in + kBracketMargin;
  double hi = 1.0 - kBracketMargin;
  // Just off an m-point ray the threshold can sit inside the bracket margin;
  // the margin is negative at s_in itself.
  if (fixed_point_margin(n, lo, psi) >= 0.0) lo = s_in;
  if (fixed_point_margin(n, hi, psi) < 0.0)
    throw NumericError("s_zero: no sign change of the fixed-point margin on the ray");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (fixed_point_margin(n, mid, psi) < 0.0) lo = mid; else hi = mid;
  }
  return {RayClassification::Kind::ThresholdAt, hi, false};
}

double threshold_on_ray(int n, double psi) {
  try {
    const RayClassification ray = s_zero(n, psi);
    return ray.always_elliptic() ? std::numeric_limits<double>::quiet_NaN() : ray.s0;
  } catch (const NumericError&) {
    return 1.0 - kBracketMargin;
  }
}

cplx parabolic_dw_point(int n, double s, double psi) {
  if (is_m_point_angle(n, psi) || s <= inner_radius(n)) return unit(psi + kPi);
  const UnicriticalBlaschke b = UnicriticalBlaschke::from_polar(n, s, psi);
  const LiftedEnds e = lifted_ends(b, k_half_width(n, s));
  const double phi =
      distance_to_lattice(e.g1) <= distance_to_lattice(e.g2) ? e.phi1 : e.phi2;
  return unit(phi);
}

namespace {

BlaschkeClass elliptic_class(const UnicriticalBlaschke& b) {
  const std::optional<cplx> p = interior_fixed_point(b);
  if (!p) throw NumericError("classify_unicritical: interior fixed point not resolved");
  return {Dynamics::Elliptic, *p, derivative(b, *p)};
}

BlaschkeClass hyperbolic_class(const UnicriticalBlaschke& b) {
  const int n = b.degree();
  const LiftedEnds e = lifted_ends(b, k_half_width(n, b.s()));
  const double target = kTwoPi * std::round(0.5 * (e.g1 + e.g2) / kTwoPi);
  // Displacement decreases across K, from g1 at φ₁ to g2 at φ₂.
  double lo = e.phi1, hi = e.phi2;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (lift_displacement(b, mid) > target) lo = mid; else hi = mid;
  }
  const cplx z = unit(0.5 * (lo + hi));
  return {Dynamics::Hyperbolic, z, cplx{std::abs(derivative(b, z)), 0.0}};
}

}  // namespace

BlaschkeClass classify_unicritical(int n, cplx w, double threshold_tol) {
  const UnicriticalBlaschke b(n, w);
  const double s = b.s();
  const double psi = b.psi();

  RayClassification ray;
  try {
    ray = s_zero(n, psi);
  } catch (const NumericError&) {
    // Threshold beyond the bracket: only parameters past 1 − 1e−9 can tell.
    if (s < 1.0 - kBracketMargin || fixed_point_margin(n, s, psi) < 0.0)
      return elliptic_class(b);
    return hyperbolic_class(b);
  }

  if (ray.always_elliptic() || s < ray.s0 - threshold_tol) return elliptic_class(b);
  if (std::abs(s - ray.s0) <= threshold_tol) {
    const cplx z = parabolic_dw_point(n, ray.s0, psi);
    return {Dynamics::Parabolic, z, derivative(b, z)};
  }
  return hyperbolic_class(b);
}

bool in_sector(int n, cplx w) {
  if (n == 2 || w == cplx{0.0, 0.0}) return true;
  const double a = arg_2pi(w);
  return a < sector_angle(n) - 1e-12 || a > kTwoPi - 1e-12;
}

cplx reduce_to_sector(int n, cplx w) {
  if (n == 2 || in_sector(n, w)) return w;
  const double width = sector_angle(n);
  double a = std::fmod(arg_2pi(w), width);
  if (a > width - 1e-12) a = 0.0;
  return std::polar(std::abs(w), a);
}

bool in_E_n(int n, cplx w) {
  if (!in_sector(n, w)) throw PreconditionError("in_E_n: w outside the sector S_n");
  return classify_unicritical(n, w).kind == Dynamics::Elliptic;
}

bool in_M_n(int n, cplx w) {
  if (!in_sector(n, w)) throw PreconditionError("in_M_n: w outside the sector S_n");
  if (std::abs(w - m_point(n)) <= kThresholdTol) return true;
  return in_E_n(n, w);
}

bool in_tilde_E_n(int n, cplx w) { return in_E_n(n, reduce_to_sector(n, w)); }

bool in_tilde_M_n(int n, cplx w) { return in_M_n(n, reduce_to_sector(n, w)); }

cplx m_point(int n) {
  if (n < 2) throw PreconditionError("m_point: n must be >= 2");
  const double r = inner_radius(n);
  if (n % 2 == 1) return {r, 0.0};
  if (n == 2) return {-r, 0.0};
  return std::polar(r, kPi / (n - 1));
}

}  // namespace ucb
