#include "ucb/mobius.hpp"

#include <cmath>

#include "ucb/errors.hpp"

namespace ucb {

DiskMobius::DiskMobius(double theta, cplx w) : theta_(wrap_2pi(theta)), w_(w) {
  if (!(std::abs(w) < 1.0))
    throw DomainError("DiskMobius: |w| must be < 1");
}

cplx DiskMobius::operator()(cplx z) const { return apply(*this, z); }

const char* to_string(MobiusClass c) {
  switch (c) {
    case MobiusClass::Identity: return "identity";
    case MobiusClass::Elliptic: return "elliptic";
    case MobiusClass::Parabolic: return "parabolic";
    case MobiusClass::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

cplx apply(const DiskMobius& a, cplx z) {
  const cplx denom = 1.0 - std::conj(a.w()) * z;
  if (denom == cplx{0.0, 0.0})
    throw DomainError("DiskMobius: evaluation at the pole 1/conj(w)");
  return a.rotation_factor() * (z - a.w()) / denom;
}

DiskMobius inverse(const DiskMobius& a) {
  return {-a.theta(), -a.w() * a.rotation_factor()};
}

namespace {

// Unnormalized matrix [[e^{iθ}, −e^{iθ}w], [−w̄, 1]].
struct Mat2 {
  cplx a, b, c, d;
};

Mat2 matrix_of(const DiskMobius& m) {
  const cplx r = m.rotation_factor();
  return {r, -r * m.w(), -std::conj(m.w()), cplx{1.0, 0.0}};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

// (az + b)/(cz + d) with d ≠ 0 is e^{iθ}(z − w)/(1 − w̄z) with
// w = −b/a and e^{iθ} = a/d.
DiskMobius from_matrix(const Mat2& m) {
  const cplx w = -m.b / m.a;
  return {std::arg(m.a / m.d), w};
}

}  // namespace

DiskMobius compose(const DiskMobius& outer, const DiskMobius& inner) {
  return from_matrix(matrix_of(outer) * matrix_of(inner));
}

double trace_squared(const DiskMobius& a) {
  return 2.0 * (1.0 + std::cos(a.theta())) / (1.0 - std::norm(a.w()));
}

bool is_identity(const DiskMobius& a) {
  const double th = std::min(a.theta(), kTwoPi - a.theta());
  return th < kIdentityTol && std::abs(a.w()) < kIdentityTol;
}

MobiusClass classify_mobius(const DiskMobius& a) {
  if (is_identity(a)) return MobiusClass::Identity;
  const double tau = trace_squared(a);
  if (tau < 4.0 - kParabolicTraceTol) return MobiusClass::Elliptic;
  if (tau > 4.0 + kParabolicTraceTol) return MobiusClass::Hyperbolic;
  return MobiusClass::Parabolic;
}

std::vector<SpherePoint> fixed_points(const DiskMobius& m) {
  if (is_identity(m))
    throw PreconditionError("fixed_points: identity fixes every point");
  // e^{iθ}(z − w) = z(1 − w̄z)  ⇔  w̄ z² + (e^{iθ} − 1) z − e^{iθ} w = 0
  const cplx r = m.rotation_factor();
  const cplx qa = std::conj(m.w());
  const cplx qb = r - 1.0;
  const cplx qc = -r * m.w();
  if (qa == cplx{0.0, 0.0}) {
    // Pure rotation: 0 and ∞.
    return {SpherePoint{cplx{0.0, 0.0}, false}, SpherePoint{{}, true}};
  }
  const cplx disc = std::sqrt(qb * qb - 4.0 * qa * qc);
  // Sign matched to b so that b + sign·√disc does not cancel.
  const cplx sgn = (std::real(std::conj(qb) * disc) >= 0.0) ? 1.0 : -1.0;
  const cplx q = -0.5 * (qb + sgn * disc);
  if (q == cplx{0.0, 0.0}) {
    return {SpherePoint{cplx{0.0, 0.0}, false}, SpherePoint{cplx{0.0, 0.0}, false}};
  }
  return {SpherePoint{q / qa, false}, SpherePoint{qc / q, false}};
}

bool in_ellipticity_domain(double theta, cplx w) {
  return std::abs(w) < std::sin(wrap_2pi(theta) / 2.0);
}

InterpolatedMobius interpolate_disk_mobius(cplx y0, cplx y1, cplx y2) {
  // T(z) = (az + b)/(cz + 1): T(0) = b, and matching T(±1) gives c, a.
  const cplx b = y0;
  const cplx c = (2.0 * y0 - y1 - y2) / (y1 - y2);
  const cplx a = y1 * (c + 1.0) - y0;
  if (std::abs(a) == 0.0 || !std::isfinite(std::abs(c)))
    throw NumericError("interpolate_disk_mobius: degenerate interpolation data");
  const cplx u = -b / a;
  if (!(std::abs(u) < 1.0))
    throw NumericError("interpolate_disk_mobius: interpolant is not a disk automorphism");
  const double defect =
      std::max(std::abs(std::abs(a) - 1.0), std::abs(c + std::conj(u)));
  return {DiskMobius(std::arg(a), u), defect};
}

}  // namespace ucb
