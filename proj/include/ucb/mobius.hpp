#pragma once

// Conformal automorphisms of the unit disk in the normal form
//   A(z) = e^{iθ} (z − w) / (1 − w̄ z),   θ ∈ [0, 2π), |w| < 1.

#include <vector>

#include "ucb/angles.hpp"

namespace ucb {

class DiskMobius {
 public:
  /// Identity.
  DiskMobius() = default;

  /// Throws DomainError unless |w| < 1. θ is reduced to [0, 2π).
  DiskMobius(double theta, cplx w);

  static DiskMobius rotation(double theta) { return {theta, cplx{0.0, 0.0}}; }

  double theta() const { return theta_; }
  cplx w() const { return w_; }
  cplx rotation_factor() const { return unit(theta_); }

  cplx operator()(cplx z) const;

 private:
  double theta_ = 0.0;
  cplx w_{0.0, 0.0};
};

enum class MobiusClass { Identity, Elliptic, Parabolic, Hyperbolic };

const char* to_string(MobiusClass c);

inline constexpr double kParabolicTraceTol = 1e-9;
inline constexpr double kIdentityTol = 1e-12;

/// e^{iθ}(z − w)/(1 − w̄z). Throws DomainError at the pole z = 1/w̄.
cplx apply(const DiskMobius& a, cplx z);

/// (θ, w) ↦ (−θ, −w e^{iθ}).
DiskMobius inverse(const DiskMobius& a);

/// The automorphism z ↦ outer(inner(z)), re-extracted into normal form.
DiskMobius compose(const DiskMobius& outer, const DiskMobius& inner);

/// Squared trace of the unit-determinant matrix: 2(1 + cos θ)/(1 − |w|²).
double trace_squared(const DiskMobius& a);

MobiusClass classify_mobius(const DiskMobius& a);

bool is_identity(const DiskMobius& a);

/// A point of the Riemann sphere.
struct SpherePoint {
  cplx z{0.0, 0.0};
  bool infinite = false;
};

/// Solutions of A(z) = z, with multiplicity (always two entries).
/// Throws PreconditionError for the identity.
std::vector<SpherePoint> fixed_points(const DiskMobius& a);

/// |w| < sin(θ/2).
bool in_ellipticity_domain(double theta, cplx w);

/// The automorphism mapping 0, 1, −1 to the images y0, y1, y2 (which must
/// lie on a common circle consistent with a disk automorphism). Built from a
/// general Möbius interpolation by cross-ratio matching, then reduced to
/// normal form; `unit_defect` measures how far the raw interpolant was from
/// that normal form (|rotation factor| − 1 and the pole-coefficient mismatch).
struct InterpolatedMobius {
  DiskMobius map;
  double unit_defect = 0.0;
};
InterpolatedMobius interpolate_disk_mobius(cplx y0, cplx y1, cplx y2);

}  // namespace ucb
