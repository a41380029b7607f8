#pragma once

// Reduction of an arbitrary unicritical finite Blaschke product to the
// normal form ((z − w)/(1 − w̄z))^n with arg w ∈ [0, 2π/(n−1)), and the
// conjugation machinery used to test it.

#include <vector>

#include "ucb/mobius.hpp"
#include "ucb/unicritical.hpp"

namespace ucb {

/// e^{iθ} Π (z − wᵢ)/(1 − w̄ᵢz).
struct FiniteBlaschke {
  double theta = 0.0;
  std::vector<cplx> zeros;

  int degree() const { return static_cast<int>(zeros.size()); }
};

inline constexpr double kUnicriticalClusterTol = 1e-6;
inline constexpr double kNormalizationResidualTol = 1e-8;

/// Throws DomainError at a pole, PreconditionError if a zero is not in 𝔻.
cplx eval_finite(const FiniteBlaschke& f, cplx z);

/// The critical points inside 𝔻: the n − 1 smallest-modulus roots of the
/// numerator P′Q − PQ′ of F′ (P = Π(z − wᵢ), Q = Π(1 − w̄ᵢz)), with
/// multiplicity. NumericError if one of them is not inside 𝔻.
std::vector<cplx> critical_points(const FiniteBlaschke& f);

struct CriticalCluster {
  cplx centre;
  double spread;     // cluster radius, measured after moving the centre to 0
  double tolerance;  // largest spread still accepted as one multiple root
  bool unicritical() const { return spread <= tolerance; }
};

/// Centre and radius of the critical cluster. The centroid of
/// critical_points() is moved to 0 first; there the centre is the simple
/// root of the (n−2)-th derivative of the numerator (found by Newton) and
/// the radius comes from the Taylor coefficients bₖ of the numerator at
/// that centre, max |bₖ/b_{n−1}|^{1/(n−1−k)}. An (n−1)-fold root is only
/// resolved to about eps^{1/(n−1)}, so the accepted spread is
/// max(1e−6, 10·eps^{1/(n−1)}).
CriticalCluster critical_cluster(const FiniteBlaschke& f);

struct Conjugator {
  DiskMobius recentre;  // A: critical point → 0
  DiskMobius outer;     // M with A∘F∘A⁻¹ = M(zⁿ)
  double alpha = 0.0;   // final rotation R(z) = e^{iα} z
};

struct NormalizationResult {
  cplx w;
  Conjugator conjugator;
  double residual = 0.0;
};

/// Throws PreconditionError for non-unicritical input and NumericError when a
/// verification residual exceeds 1e−8.
NormalizationResult normalize(const FiniteBlaschke& f);

/// C∘B∘C⁻¹ in product form.
FiniteBlaschke conjugate(const UnicriticalBlaschke& b, const DiskMobius& c);

/// The n solutions of B(z) = q, z_k = A⁻¹(q^{1/n} e^{2πik/n}) on the principal
/// branch. Requires |q| ≤ 1.
std::vector<cplx> preimages(const UnicriticalBlaschke& b, cplx q);

/// The composed conjugacy H = R∘M⁻¹∘A, satisfying H∘F∘H⁻¹ = B_w.
DiskMobius conjugacy_map(const Conjugator& c);

}  // namespace ucb
