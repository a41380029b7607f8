#pragma once

// Dense complex polynomials (coefficients in ascending order) and a
// Durand–Kerner simultaneous root finder.

#include <span>
#include <vector>

#include "ucb/angles.hpp"

namespace ucb {

using Poly = std::vector<cplx>;

cplx poly_eval(std::span<const cplx> coeffs, cplx z);
Poly poly_mul(std::span<const cplx> a, std::span<const cplx> b);
Poly poly_sub(std::span<const cplx> a, std::span<const cplx> b);
Poly poly_derivative(std::span<const cplx> coeffs);

/// Π (z − r) for the given roots.
Poly poly_from_roots(std::span<const cplx> roots);

/// Drop leading coefficients whose modulus is below rel_tol × max|coeff|.
Poly poly_trim(Poly coeffs, double rel_tol = 1e-14);

struct RootsResult {
  std::vector<cplx> roots;
  int iterations = 0;
  bool converged = false;
};

/// Durand–Kerner (Weierstrass) iteration on a trimmed polynomial.
///
/// Starting guesses sit on a circle of radius 0.5 with a small angular
/// offset. Iterates until every update is below `tol` (relative to
/// max(1, |root|)) or `max_iter` is reached. Multiple roots converge only
/// linearly and stall at roughly eps^(1/m), so callers that expect clusters
/// should check residuals instead of `converged`.
///
/// Throws NumericError when a root's residual stays above 1e-8 relative to
/// the coefficient scale, or when the polynomial is constant.
RootsResult durand_kerner(std::span<const cplx> coeffs, int max_iter = 500,
                          double tol = 1e-13);

}  // namespace ucb
