#include "lahbell/numbers.hpp"

#include <mutex>

#include "lahbell/errors.hpp"

namespace lahbell {

Triangle::Triangle(TriangleKind kind) : kind_(kind) { rows_.push_back({BigInt(1)}); }

BigInt Triangle::at(unsigned n, unsigned k) const {
  if (k > n) return 0;
  return row(n)[k];
}

const std::vector<BigInt>& Triangle::row(unsigned n) const {
  {
    std::shared_lock lock(mutex_);
    if (n < rows_.size()) return rows_[n];
  }
  extend_to(n);
  std::shared_lock lock(mutex_);
  return rows_[n];
}

void Triangle::extend_to(unsigned n) const {
  std::unique_lock lock(mutex_);
  while (rows_.size() <= n) {
    const std::vector<BigInt>& prev = rows_.back();
    const unsigned m = static_cast<unsigned>(rows_.size());  // row being built
    std::vector<BigInt> next(m + 1);
    for (unsigned k = 0; k <= m; ++k) {
      const BigInt diag = k >= 1 ? prev[k - 1] : BigInt(0);
      const BigInt same = k < m ? prev[k] : BigInt(0);
      switch (kind_) {
        case TriangleKind::lah:
          next[k] = diag + same * (m - 1 + k);
          break;
        case TriangleKind::stirling1_signed:
          next[k] = diag - same * (m - 1);
          break;
        case TriangleKind::stirling2:
          next[k] = diag + same * k;
          break;
      }
    }
    rows_.push_back(std::move(next));
  }
}

const Triangle& shared_triangle(TriangleKind kind) {
  static const Triangle lah_t(TriangleKind::lah);
  static const Triangle s1_t(TriangleKind::stirling1_signed);
  static const Triangle s2_t(TriangleKind::stirling2);
  switch (kind) {
    case TriangleKind::lah: return lah_t;
    case TriangleKind::stirling1_signed: return s1_t;
    case TriangleKind::stirling2: return s2_t;
  }
  throw UnknownNameError("unknown triangle kind");
}

BigInt lah(unsigned n, unsigned k) { return shared_triangle(TriangleKind::lah).at(n, k); }

BigInt stirling1_signed(unsigned n, unsigned k) {
  return shared_triangle(TriangleKind::stirling1_signed).at(n, k);
}

BigInt stirling2(unsigned n, unsigned k) { return shared_triangle(TriangleKind::stirling2).at(n, k); }

BigInt bell_number(unsigned n) {
  BigInt s = 0;
  for (const auto& v : shared_triangle(TriangleKind::stirling2).row(n)) s += v;
  return s;
}

BigInt lah_bell_number(unsigned n) {
  BigInt s = 0;
  for (const auto& v : shared_triangle(TriangleKind::lah).row(n)) s += v;
  return s;
}

BigInt lah_closed_form(unsigned n, unsigned k) {
  if (n == 0 && k == 0) return 1;
  if (k > n) return 0;
  return binomial(static_cast<long>(n) - 1, static_cast<long>(k) - 1) * (factorial(n) / factorial(k));
}

BigInt lah_binomial_form(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (n == 0) return 1;
  return binomial(n, k) * binomial(static_cast<long>(n) - 1, static_cast<long>(k) - 1) *
         factorial(n - k);
}

BigRational lah_factorial_ratio_form(unsigned n, unsigned k) {
  if (k < 1 || k > n) throw PreconditionError("factorial ratio form needs 1 <= k <= n");
  const BigRational ratio(factorial(n), factorial(k));
  return ratio * ratio * BigRational(k) / (BigRational(n) * BigRational(factorial(n - k)));
}

BigInt lah_via_stirling(unsigned n, unsigned k) {
  BigInt s = 0;
  for (unsigned l = k; l <= n; ++l) {
    const BigInt term = stirling1_signed(n, l) * stirling2(l, k);
    if ((n - l) % 2 == 0) {
      s += term;
    } else {
      s -= term;
    }
  }
  return s;
}

BigInt stirling2_via_lah(unsigned n, unsigned k) {
  BigInt s = 0;
  for (unsigned l = k; l <= n; ++l) {
    const BigInt term = stirling2(n, l) * lah(l, k);
    if ((n - l) % 2 == 0) {
      s += term;
    } else {
      s -= term;
    }
  }
  return s;
}

}  // namespace lahbell
