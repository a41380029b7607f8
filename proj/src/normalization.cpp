#include "ucb/normalization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ucb/errors.hpp"
#include "ucb/polynomial.hpp"

namespace ucb {

cplx eval_finite(const FiniteBlaschke& f, cplx z) {
  cplx acc = unit(f.theta);
  for (const cplx& wi : f.zeros) {
    if (!(std::abs(wi) < 1.0)) throw PreconditionError("eval_finite: zero outside the disk");
    const cplx d = 1.0 - std::conj(wi) * z;
    if (d == cplx{0.0, 0.0}) throw DomainError("eval_finite: evaluation at a pole");
    acc *= (z - wi) / d;
  }
  return acc;
}

namespace {

// Numerator P′Q − PQ′ of F′, with P = Π(z − wᵢ) and Q = Π(1 − w̄ᵢz).
Poly critical_numerator(const FiniteBlaschke& f) {
  Poly p{cplx{1.0, 0.0}}, q{cplx{1.0, 0.0}};
  for (const cplx& wi : f.zeros) {
    const cplx zf[2] = {-wi, cplx{1.0, 0.0}};
    const cplx pf[2] = {cplx{1.0, 0.0}, -std::conj(wi)};
    p = poly_mul(p, zf);
    q = poly_mul(q, pf);
  }
  return poly_trim(poly_sub(poly_mul(poly_derivative(p), q), poly_mul(p, poly_derivative(q))));
}

}  // namespace

namespace {

// The n − 1 smallest-modulus roots of the numerator: its 2n − 2 roots pair
// up as c and 1/c̄, so these are the critical points in 𝔻 even when
// root-finding noise pushes a clustered root slightly across the circle.
std::vector<cplx> inner_critical_roots(const FiniteBlaschke& f) {
  std::vector<cplx> roots = durand_kerner(critical_numerator(f)).roots;
  const auto m = static_cast<std::size_t>(f.degree() - 1);
  if (roots.size() < m) throw NumericError("critical_points: numerator degree too small");
  std::partial_sort(roots.begin(), roots.begin() + static_cast<std::ptrdiff_t>(m), roots.end(),
                    [](cplx x, cplx y) { return std::abs(x) < std::abs(y); });
  roots.resize(m);
  return roots;
}

cplx centroid(const std::vector<cplx>& pts) {
  cplx c{0.0, 0.0};
  for (const cplx& p : pts) c += p;
  return c / static_cast<double>(pts.size());
}

}  // namespace

std::vector<cplx> critical_points(const FiniteBlaschke& f) {
  if (f.degree() < 2) throw PreconditionError("critical_points: degree must be >= 2");
  std::vector<cplx> pts = inner_critical_roots(f);
  for (const cplx& c : pts)
    if (!(std::abs(c) < 1.0)) throw NumericError("critical_points: critical point not inside the disk");
  return pts;
}

CriticalCluster critical_cluster(const FiniteBlaschke& f) {
  const int n = f.degree();
  // Pre-compose with A₀ sending the rough centroid to 0: G = F∘A₀⁻¹ has its
  // critical points at A₀(cᵢ), near 0 and far from their reflections. The
  // zeros of G are A₀(wᵢ).
  const DiskMobius a0(0.0, centroid(critical_points(f)));
  FiniteBlaschke g;
  for (const cplx& wi : f.zeros) g.zeros.push_back(a0(wi));
  const Poly num = critical_numerator(g);

  // An (n−1)-fold root of the numerator is a simple root of its (n−2)-th
  // derivative, where Newton from 0 recovers full precision.
  Poly d = num;
  for (int k = 0; k < n - 2; ++k) d = poly_derivative(d);
  const Poly dd = poly_derivative(d);
  cplx z{0.0, 0.0};
  for (int it = 0; it < 50; ++it) {
    const cplx slope = poly_eval(dd, z);
    if (slope == cplx{0.0, 0.0}) break;
    const cplx step = poly_eval(d, z) / slope;
    z -= step;
    if (!(std::abs(z) < 1.0)) return {a0.w(), std::numeric_limits<double>::infinity(), 0.0};
    if (std::abs(step) <= 1e-16) break;
  }

  // Cluster radius from the Taylor coefficients b_k of the numerator at z:
  // max_k |b_k / b_{n−1}|^{1/(n−1−k)}, exact for a symmetric split.
  std::vector<cplx> taylor;
  Poly t = num;
  double factorial = 1.0;
  for (int k = 0; k < n; ++k) {
    taylor.push_back(poly_eval(t, z) / factorial);
    t = poly_derivative(t);
    factorial *= k + 1;
  }
  const double lead = std::abs(taylor.back());
  double spread = lead > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  for (int k = 0; k + 1 < n && lead > 0.0; ++k)
    spread = std::max(spread, std::pow(std::abs(taylor[k]) / lead, 1.0 / (n - 1 - k)));

  const double eps = std::numeric_limits<double>::epsilon();
  const double attainable = 10.0 * std::pow(eps, 1.0 / static_cast<double>(n - 1));
  return {inverse(a0)(z), spread, std::max(kUnicriticalClusterTol, attainable)};
}

namespace {

// Deterministic, well-spread sample angles on the circle.
std::vector<double> verification_angles(int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  const double golden = 0.6180339887498949;
  for (int k = 0; k < count; ++k)
    out[static_cast<std::size_t>(k)] = kTwoPi * std::fmod(0.1 + golden * k, 1.0);
  return out;
}

}  // namespace

DiskMobius conjugacy_map(const Conjugator& c) {
  return compose(DiskMobius::rotation(c.alpha), compose(inverse(c.outer), c.recentre));
}

NormalizationResult normalize(const FiniteBlaschke& f) {
  const int n = f.degree();
  const CriticalCluster cluster = critical_cluster(f);
  if (!cluster.unicritical())
    throw PreconditionError("normalize: input is not unicritical");

  // Step 1: move the critical point to 0.
  const DiskMobius recentre(0.0, cluster.centre);
  const DiskMobius recentre_inv = inverse(recentre);
  auto b1 = [&](cplx z) { return recentre(eval_finite(f, recentre_inv(z))); };

  // Step 2: B₁(z) = M(zⁿ), interpolated through z ∈ {0, 1, e^{iπ/n}}.
  const InterpolatedMobius interp =
      interpolate_disk_mobius(b1(cplx{0.0, 0.0}), b1(cplx{1.0, 0.0}), b1(unit(kPi / n)));
  const DiskMobius& m = interp.map;
  const std::vector<double> angles = verification_angles(32);
  double residual = interp.unit_defect;
  for (double phi : angles) {
    const cplx z = unit(phi);
    residual = std::max(residual, std::abs(b1(z) - m(ipow(z, n))));
  }
  if (residual > kNormalizationResidualTol)
    throw NumericError("normalize: B1(z) = M(z^n) verification failed");

  // Steps 3–4: B₂ = (M(z))ⁿ with M = e^{iθ}(z − u)/(1 − ūz); rotate by α with
  // nθ + (1 − n)α ∈ 2πℤ so that arg(u e^{iα}) lands in the sector.
  const double theta = m.theta();
  const cplx u = m.w();
  const double width = sector_angle(n);
  const double base_alpha = n * theta / (n - 1);
  double alpha = base_alpha;
  cplx w{0.0, 0.0};
  if (std::abs(u) > 0.0) {
    double a = std::fmod(wrap_2pi(std::arg(u) + base_alpha), width);
    if (a < 0.0) a += width;
    if (a > width - 1e-12) a = 0.0;
    alpha = wrap_2pi(a - std::arg(u));
    w = std::polar(std::abs(u), a);
  }

  const Conjugator conj{recentre, m, alpha};
  const DiskMobius h = conjugacy_map(conj);
  const UnicriticalBlaschke normal(n, w);
  for (double phi : angles) {
    const cplx z = unit(phi);
    residual = std::max(residual, std::abs(h(eval_finite(f, z)) - evaluate(normal, h(z))));
  }
  if (residual > kNormalizationResidualTol)
    throw NumericError("normalize: conjugacy verification failed");
  return {w, conj, residual};
}

std::vector<cplx> preimages(const UnicriticalBlaschke& b, cplx q) {
  if (!(std::abs(q) <= 1.0 + 1e-12)) throw PreconditionError("preimages: |q| must be <= 1");
  const int n = b.degree();
  const cplx w = b.critical_point();
  const cplx root = std::polar(std::pow(std::abs(q), 1.0 / n), std::arg(q) / n);
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const cplx y = root * unit(kTwoPi * k / n);
    out.push_back((y + w) / (1.0 + std::conj(w) * y));
  }
  return out;
}

FiniteBlaschke conjugate(const UnicriticalBlaschke& b, const DiskMobius& c) {
  const DiskMobius c_inv = inverse(c);
  FiniteBlaschke out;
  for (const cplx& x : preimages(b, c.w())) out.zeros.push_back(c(x));
  const cplx one{1.0, 0.0};
  const cplx target = c(evaluate(b, c_inv(one)));
  out.theta = 0.0;
  const cplx product = eval_finite(out, one);
  out.theta = wrap_2pi(std::arg(target / product));
  return out;
}

}  // namespace ucb
