#pragma once

// Lah and Stirling triangles and their row sums.

#include <deque>
#include <shared_mutex>
#include <vector>

#include "lahbell/exact.hpp"

namespace lahbell {

enum class TriangleKind { lah, stirling1_signed, stirling2 };

/// Memoized lower-triangular table of exact integers, built row by row from
/// the kind's recurrence:
///
///   lah:        L(n,k)  = L(n-1,k-1) + (n-1+k) L(n-1,k)
///   stirling1:  S1(n,k) = S1(n-1,k-1) - (n-1) S1(n-1,k)
///   stirling2:  S2(n,k) = S2(n-1,k-1) + k S2(n-1,k)
///
/// Row 0 is (1). Reads take a shared lock; extension is single-writer. Rows
/// live in a deque so references returned by row() stay valid.
class Triangle {
 public:
  explicit Triangle(TriangleKind kind);

  TriangleKind kind() const { return kind_; }

  /// Entry (n, k); zero for k > n.
  BigInt at(unsigned n, unsigned k) const;
  /// Row n, entries k = 0..n.
  const std::vector<BigInt>& row(unsigned n) const;

 private:
  void extend_to(unsigned n) const;

  TriangleKind kind_;
  mutable std::shared_mutex mutex_;
  mutable std::deque<std::vector<BigInt>> rows_;
};

/// Process-wide memoized triangle for `kind`.
const Triangle& shared_triangle(TriangleKind kind);

BigInt lah(unsigned n, unsigned k);
BigInt stirling1_signed(unsigned n, unsigned k);
BigInt stirling2(unsigned n, unsigned k);

BigInt bell_number(unsigned n);
BigInt lah_bell_number(unsigned n);

// Closed forms, used only as cross-checks against the recurrence tables.

/// C(n-1, k-1) n!/k!, with L(0,0) = 1 by convention.
BigInt lah_closed_form(unsigned n, unsigned k);
/// C(n,k) C(n-1,k-1) (n-k)!.
BigInt lah_binomial_form(unsigned n, unsigned k);
/// (n!/k!)^2 k / (n (n-k)!), evaluated in rationals; requires 1 <= k <= n.
BigRational lah_factorial_ratio_form(unsigned n, unsigned k);

/// sum_{l=k}^{n} (-1)^{n-l} S1(n,l) S2(l,k).
BigInt lah_via_stirling(unsigned n, unsigned k);
/// sum_{l=k}^{n} (-1)^{n-l} S2(n,l) L(l,k).
BigInt stirling2_via_lah(unsigned n, unsigned k);

}  // namespace lahbell
