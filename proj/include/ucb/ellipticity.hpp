#pragma once

// Parameter-space structure of the unicritical family: the contracting arc K,
// its closed-form arc lengths, the radial parabolic threshold s₀(ψ), exact
// classification, and membership in the elliptic set and connectedness locus.
//
// Notation: w = s e^{iψ}; the inner radius is (n − 1)/(n + 1).

#include "ucb/angles.hpp"
#include "ucb/unicritical.hpp"

namespace ucb {

inline constexpr double kSpecialAngleTol = 1e-12;
inline constexpr double kThresholdTol = 1e-10;
inline constexpr double kSZeroTol = 1e-12;
inline constexpr double kBracketMargin = 1e-9;

inline double inner_radius(int n) { return static_cast<double>(n - 1) / (n + 1); }

/// The arc where |B′| ≤ 1. Angles are reported in [ψ, ψ + 2π).
struct CircleArc {
  enum class Kind { Empty, Point, Arc };
  Kind kind = Kind::Empty;
  double phi1 = 0.0;
  double phi2 = 0.0;

  static CircleArc empty() { return {}; }
  static CircleArc point(double phi) { return {Kind::Point, phi, phi}; }
  static CircleArc arc(double a, double b) { return {Kind::Arc, a, b}; }

  double length() const { return kind == Kind::Arc ? phi2 - phi1 : 0.0; }
  /// Whether e^{iφ} lies on the arc (closed), for any real φ.
  bool contains(double phi) const;
};

// Defined for s ∈ [(n−1)/(n+1), 1); PreconditionError otherwise.
double t_of_s(int n, double s);
double u_of_s(int n, double s);

CircleArc k_arc(int n, double s, double psi);

/// |K| = 2π − 2 arccos t(s).
double arc_length_K(int n, double s);
/// |B(K)| = n(2π − 2 arccos u(s)).
double arc_length_BK(int n, double s);

// Defined on the open interval ((n−1)/(n+1), 1).
double p_prime(int n, double s);
double q_prime(int n, double s);

/// The antipode e^{i(ψ+π)} of the critical direction maps to e^{iψ}, so
/// no point of K is ever fixed.
bool is_always_elliptic_angle(int n, double psi);

/// The antipode e^{i(ψ+π)} is fixed for every s; the ray carries the single
/// parabolic parameter with full-circle Julia set.
bool is_m_point_angle(int n, double psi);

/// Signed displacements (principal values in (−π, π]) of B at the two
/// endpoints of K: arg(B(e^{iφᵢ}) e^{−iφᵢ}).
struct EndpointDisplacement {
  double d1;
  double d2;
};
EndpointDisplacement endpoint_displacement(int n, double s, double psi);

/// Positive iff some point of K is fixed (parabolic/hyperbolic side), zero at
/// the threshold, negative on the elliptic side. Uses the lifted endpoint
/// displacements g1 ≥ g2: half of g1 − g2 minus the distance from their
/// midpoint to 2πℤ.
double fixed_point_margin(int n, double s, double psi);

struct RayClassification {
  enum class Kind { AlwaysElliptic, ThresholdAt };
  Kind kind = Kind::AlwaysElliptic;
  double s0 = 1.0;  // meaningful for ThresholdAt only
  bool is_m_point_ray = false;

  bool always_elliptic() const { return kind == Kind::AlwaysElliptic; }
};

/// Throws NumericError when the margin does not change sign over the bracket.
RayClassification s_zero(int n, double psi, double tol = kSZeroTol);

/// s₀ on the ray as a plain number: NaN for always-elliptic rays, and the
/// upper bracket end 1 − 1e−9 when the threshold lies beyond it.
double threshold_on_ray(int n, double psi);

BlaschkeClass classify_unicritical(int n, cplx w, double threshold_tol = kThresholdTol);

/// Sector S_n: arg w ∈ [0, 2π/(n−1)), with arguments within 1e−12 of the
/// upper edge wrapping to 0.
bool in_sector(int n, cplx w);
/// Rotate w by a multiple of 2π/(n−1) into the sector.
cplx reduce_to_sector(int n, cplx w);

// Non-tilde variants throw PreconditionError outside the sector.
bool in_E_n(int n, cplx w);
bool in_M_n(int n, cplx w);
bool in_tilde_E_n(int n, cplx w);
bool in_tilde_M_n(int n, cplx w);

/// The single point of M_n outside E_n: modulus (n−1)/(n+1), angle 0 for odd
/// n and π/(n−1) for even n.
cplx m_point(int n);

/// The parabolic Denjoy–Wolff point on a threshold ray at parameter s (the
/// fixed endpoint of K, or the antipode on an m-point ray).
cplx parabolic_dw_point(int n, double s, double psi);

}  // namespace ucb
