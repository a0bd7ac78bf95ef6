#pragma once

// Closed-form constructions of the polynomial families.

#include <string>
#include <string_view>
#include <vector>

#include "lahbell/exact.hpp"

namespace lahbell {

enum class Family {
  bell,
  lah_bell,
  bivariate_bell,
  bivariate_lah_bell,
  degenerate_bell,
  degenerate_lah_bell,
  laguerre,
};

std::string_view family_name(Family f);
/// Throws UnknownNameError.
Family parse_family(std::string_view name);
const std::vector<Family>& all_families();

/// sum_k S2(n,k) x^k.
MultiPoly bell_poly(unsigned n);
/// sum_k L(n,k) x^k.
MultiPoly lah_bell_poly(unsigned n);
/// sum_k S2(n,k) (x)_k y^k.
MultiPoly bivariate_bell_poly(unsigned n);
/// sum_k L(n,k) (x)_k y^k.
MultiPoly bivariate_lah_bell_poly(unsigned n);
/// sum_k S2(n,k) (x)_{k,lambda}.
MultiPoly degenerate_bell_poly(unsigned n);
/// sum_k L(n,k) (x)_{k,lambda}.
MultiPoly degenerate_lah_bell_poly(unsigned n);

/// n-th egf coefficient of (1-t)^{-alpha-1} e^{x t/(t-1)}.
///
/// Note the normalization: this is n! times the classical Laguerre
/// polynomial, sum_k (-1)^k C(n,k) <alpha+k+1>_{n-k} x^k. `alpha` may be the
/// indeterminate alpha or any constant polynomial.
MultiPoly laguerre_poly(unsigned n, const MultiPoly& alpha = Alpha());

/// The family by name. Laguerre uses symbolic alpha.
MultiPoly family_poly(Family f, unsigned n);

/// B^L_{n+1}(x) = x sum_{m=0}^{n} C(n,m) (n-m+1)! B^L_m(x), given
/// values = [B^L_0 .. B^L_n]. Throws PreconditionError on a length mismatch.
MultiPoly lah_bell_recurrence_step(unsigned n, const std::vector<MultiPoly>& values);

/// sum_{m=0}^{n-1} C(n,m) (n-m)! B^L_m(x), which equals d/dx B^L_n(x).
/// Throws PreconditionError for n = 0.
MultiPoly lah_bell_derivative(unsigned n);

}  // namespace lahbell
