#pragma once

// Certified evaluation of the Dobinski-type series
//
//   B^L_n(x) = e^{-x} sum_{k>=0} <k>_n x^k / k!
//   B_n(x)   = e^{-x} sum_{k>=0} k^n  x^k / k!
//
// for rational x > 0. The partial sum S_K = sum_{k<K} term_k is exact. K is
// at least K0, the first index where the term ratio term_{k+1}/term_k drops
// to <= 1/2 (the ratio is decreasing for k >= 1), so the tail is at most
// 2 term_K and M = S_{K0} + 2 term_{K0} bounds the whole sum. e^{-x} is
// replaced by its Taylor polynomial of degree J with Lagrange remainder
// r_J = x^{J+1}/(J+1)!. Since 0 < e^{-x} < 1,
//
//   |e^{-x}(S_K + tail) - E_J S_K| <= r_J M + 2 term_K.
//
// K and J are the least indices making each half <= eps/2. Both halves are
// non-increasing in their index, so a smaller eps never yields a larger bound.

#include <string>

#include "lahbell/exact.hpp"

namespace lahbell {

inline constexpr unsigned kDobinskiIterationCap = 20000;

struct CertifiedDecimal {
  BigRational value;
  BigRational error_bound;
  BigRational requested_eps;
  unsigned series_terms = 0;  // K
  unsigned exp_terms = 0;     // J + 1

  bool contains(const BigRational& exact) const {
    const BigRational d = exact - value;
    return (d < 0 ? BigRational(-d) : d) <= error_bound;
  }

  /// `value` rounded to the number of decimals the bound supports
  /// (the largest d with 10^-d >= error_bound, capped at 1000).
  std::string value_decimal() const;
  /// error_bound rounded up to three significant digits, e.g. "1.23e-21".
  std::string error_bound_decimal() const;
};

enum class DobinskiFamily { lah_bell, bell };

/// Throws PreconditionError for x <= 0 or eps <= 0 and PrecisionNotReached
/// when K or J would exceed kDobinskiIterationCap.
CertifiedDecimal dobinski(DobinskiFamily family, unsigned n, const BigRational& x, const BigRational& eps);

CertifiedDecimal lah_bell_dobinski(unsigned n, const BigRational& x, const BigRational& eps);
CertifiedDecimal bell_dobinski(unsigned n, const BigRational& x, const BigRational& eps);

/// Decimal rendering of a rational rounded half away from zero to `places`.
std::string to_decimal(const BigRational& v, unsigned places);

}  // namespace lahbell
