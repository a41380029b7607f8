#include "ucb/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "ucb/errors.hpp"

namespace ucb {

cplx poly_eval(std::span<const cplx> coeffs, cplx z) {
  cplx acc{0.0, 0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly poly_mul(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly poly_sub(std::span<const cplx> a, std::span<const cplx> b) {
  Poly out(std::max(a.size(), b.size()), cplx{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Poly poly_derivative(std::span<const cplx> coeffs) {
  if (coeffs.size() <= 1) return {cplx{0.0, 0.0}};
  Poly out(coeffs.size() - 1);
  for (std::size_t k = 1; k < coeffs.size(); ++k)
    out[k - 1] = coeffs[k] * static_cast<double>(k);
  return out;
}

Poly poly_from_roots(std::span<const cplx> roots) {
  Poly out{cplx{1.0, 0.0}};
  for (const cplx& r : roots) {
    const cplx factor[2] = {-r, cplx{1.0, 0.0}};
    out = poly_mul(out, factor);
  }
  return out;
}

Poly poly_trim(Poly coeffs, double rel_tol) {
  double scale = 0.0;
  for (const cplx& c : coeffs) scale = std::max(scale, std::abs(c));
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= rel_tol * scale)
    coeffs.pop_back();
  return coeffs;
}

namespace {

double magnitude_scale(std::span<const cplx> coeffs, double r) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * r + std::abs(*it);
  return acc;
}

}  // namespace

RootsResult durand_kerner(std::span<const cplx> coeffs_in, int max_iter,
                          double tol) {
  Poly p = poly_trim(Poly(coeffs_in.begin(), coeffs_in.end()));
  const std::size_t degree = p.size() - 1;
  if (degree == 0) throw NumericError("durand_kerner: constant polynomial");

  const cplx lead = p.back();
  for (cplx& c : p) c /= lead;

  RootsResult result;
  result.roots.resize(degree);
  for (std::size_t k = 0; k < degree; ++k)
    result.roots[k] = 0.5 * unit(kTwoPi * static_cast<double>(k) /
                                     static_cast<double>(degree) +
                                 0.4);

  auto& z = result.roots;
  for (int it = 0; it < max_iter; ++it) {
    double worst = 0.0;
    for (std::size_t i = 0; i < degree; ++i) {
      cplx denom{1.0, 0.0};
      for (std::size_t j = 0; j < degree; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (denom == cplx{0.0, 0.0}) denom = cplx{1e-300, 0.0};
      const cplx step = poly_eval(p, z[i]) / denom;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    result.iterations = it + 1;
    if (worst < tol) {
      result.converged = true;
      break;
    }
  }

  for (const cplx& r : z) {
    const double scale = magnitude_scale(p, std::abs(r));
    if (!std::isfinite(std::abs(r)) || std::abs(poly_eval(p, r)) > 1e-8 * scale)
      throw NumericError("durand_kerner: root residual too large");
  }
  return result;
}

}  // namespace ucb
