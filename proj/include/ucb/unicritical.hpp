#pragma once

// The unicritical family B_w(z) = ((z − w)/(1 − w̄z))^n on the unit disk.

#include <cstdint>
#include <optional>
#include <vector>

#include "ucb/angles.hpp"
#include "ucb/mobius.hpp"

namespace ucb {

class UnicriticalBlaschke {
 public:
  /// Throws PreconditionError for n < 2 and DomainError unless |w| < 1.
  UnicriticalBlaschke(int n, cplx w);

  static UnicriticalBlaschke from_polar(int n, double s, double psi);

  int degree() const { return n_; }
  cplx critical_point() const { return w_; }
  double s() const { return std::abs(w_); }
  /// arg(w) in [0, 2π); 0 when w = 0.
  double psi() const { return arg_2pi(w_); }

  /// The inner factor A(z) = (z − w)/(1 − w̄z).
  DiskMobius inner() const { return DiskMobius(0.0, w_); }

 private:
  int n_;
  cplx w_;
};

enum class Dynamics { Elliptic, Parabolic, Hyperbolic };

const char* to_string(Dynamics d);

/// Classification outcome with the Denjoy–Wolff point. `multiplier` is B′ at
/// the Denjoy–Wolff point: complex with modulus < 1 when elliptic, 1 when
/// parabolic, real in (0, 1) when hyperbolic.
struct BlaschkeClass {
  Dynamics kind;
  cplx dw_point;
  cplx multiplier;
};

enum class HyperbolicStepKind { ZeroStep, PositiveStep };

const char* to_string(HyperbolicStepKind k);

// Throw DomainError at the pole 1/w̄.
cplx evaluate(const UnicriticalBlaschke& b, cplx z);
cplx derivative(const UnicriticalBlaschke& b, cplx z);
cplx second_derivative(const UnicriticalBlaschke& b, cplx z);

/// |B′(e^{iφ})| = n(1 − s²)/(1 + s² − 2s cos(φ − ψ)).
double boundary_derivative_modulus(const UnicriticalBlaschke& b, double phi);

/// Branch selection for the boundary lift. With no `value`, the natural
/// branch F(φ) = nφ + 2n·arg(1 − w e^{−iφ}) is used (F(0) = 0 when w = 0);
/// otherwise the branch with F(phi) closest to `value`.
struct LiftAnchor {
  double phi = 0.0;
  std::optional<double> value;
};

/// Continuous lift F of the boundary circle map: e^{iF(φ)} = B(e^{iφ}),
/// F′ = |B′| > 0 and F(φ + 2π) = F(φ) + 2πn.
double circle_lift(const UnicriticalBlaschke& b, double phi,
                   const LiftAnchor& anchor = {});

/// F(φ) − φ on the natural branch; its zeros mod 2π are the boundary fixed
/// points, and its derivative is |B′(e^{iφ})| − 1.
double lift_displacement(const UnicriticalBlaschke& b, double phi);

/// Angles in [0, 2π) of the fixed points of B on the unit circle, ascending.
/// A neutral (parabolic) fixed point is reported once.
std::vector<double> boundary_fixed_points(const UnicriticalBlaschke& b);

enum class DwLocation { Interior, Boundary };

struct DwOracleResult {
  cplx point;
  DwLocation location;
  long iterations = 0;
};

/// Slow Denjoy–Wolff oracle: follows the critical-value orbit from 0.
/// After 50 consecutive steps shorter than 1e−3 hyperbolically, Newton on
/// B(z) − z decides: an attracting point inside the disk gives Interior, a
/// point within 1e−4 of a non-repelling boundary fixed point gives Boundary.
/// Boundary also once 20 consecutive iterates have |z| > 1 − 1e−6. Reports
/// the nearest non-repelling boundary fixed point in the Boundary case.
/// Throws NumericError when max_iter is exhausted.
DwOracleResult denjoy_wolff_iterate(const UnicriticalBlaschke& b,
                                    double tol = 1e-12,
                                    long max_iter = 2'000'000);

/// arctanh |(z1 − z2)/(1 − z̄2 z1)| (no factor 2).
double hyperbolic_distance(cplx z1, cplx z2);

struct StepSequence {
  std::vector<double> steps;  // d(B^k z, B^{k+1} z), k = 0..
  std::vector<double> depth;  // 1 − |B^k z| at the start of each step
  bool truncated = false;     // orbit hit |z| ≥ 1 − 1e−17
};

/// Steps along the orbit of z, computed in extended precision.
StepSequence hyperbolic_step_sequence(const UnicriticalBlaschke& b, cplx z,
                                      long count);

/// Newton iteration on B(z) − z. Returns nullopt on divergence.
std::optional<cplx> newton_fixed_point(const UnicriticalBlaschke& b, cplx start,
                                       int max_iter = 100, double tol = 1e-15);

/// Fixed points of B in the plane as roots of (z − w)^n − z(1 − w̄z)^n
/// (Durand–Kerner, then Newton polishing). Degree n + 1, or n when w = 0
/// (the remaining fixed point is ∞).
std::vector<cplx> polynomial_fixed_points(const UnicriticalBlaschke& b);

/// The minimum-modulus fixed point, Newton-polished, if it lies in the open
/// disk.
std::optional<cplx> interior_fixed_point(const UnicriticalBlaschke& b);

}  // namespace ucb
