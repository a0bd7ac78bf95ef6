#pragma once

// Truncated formal power series over an exact coefficient ring.
//
// Ring is BigRational or MultiPoly. Coefficients are ordinary (c_n of t^n);
// egf_coefficient(n) multiplies by n! at the boundary. Every operation keeps
// the order N and binary operations reject mismatched orders.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lahbell/errors.hpp"
#include "lahbell/exact.hpp"

namespace lahbell {

inline bool ring_is_zero(const BigRational& v) { return v == 0; }
inline bool ring_is_zero(const MultiPoly& v) { return v.is_zero(); }

template <typename Ring>
class TruncatedSeries {
 public:
  /// Zero series tracking t^0..t^order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

  /// Takes ownership of c_0..c_N; the order is size() - 1.
  explicit TruncatedSeries(std::vector<Ring> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw PreconditionError("series needs at least one coefficient");
  }

  static TruncatedSeries constant(const Ring& c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// The series t.
  static TruncatedSeries identity(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = Ring(1);
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Ring& operator[](std::size_t n) const { return coeffs_.at(n); }
  const std::vector<Ring>& coefficients() const { return coeffs_; }

  /// n! c_n.
  Ring egf_coefficient(std::size_t n) const {
    return coeffs_.at(n) * BigRational(factorial(static_cast<unsigned>(n)));
  }

  std::vector<Ring> egf_coefficients() const {
    std::vector<Ring> out;
    out.reserve(coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) out.push_back(egf_coefficient(n));
    return out;
  }

  /// Coefficientwise map, e.g. partial evaluation of MultiPoly coefficients.
  template <typename F>
  auto map(F&& f) const {
    using Out = std::decay_t<decltype(f(coeffs_[0]))>;
    std::vector<Out> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return TruncatedSeries<Out>(std::move(out));
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_orders(a, b);
    TruncatedSeries r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_orders(a, b);
    TruncatedSeries r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    return r;
  }

  /// Cauchy product truncated at the common order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_orders(a, b);
    const std::size_t n = a.coeffs_.size();
    TruncatedSeries r(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (ring_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j < n; ++j) {
        if (ring_is_zero(b.coeffs_[j])) continue;
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }

  /// Multiplies every coefficient by a ring element.
  TruncatedSeries scaled(const Ring& c) const {
    TruncatedSeries r = *this;
    for (auto& v : r.coeffs_) v = v * c;
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  static void check_orders(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) {
      throw PreconditionError("series order mismatch: " + std::to_string(a.order()) + " vs " +
                              std::to_string(b.order()));
    }
  }

  std::vector<Ring> coeffs_;
};

using RationalSeries = TruncatedSeries<BigRational>;
using PolySeries = TruncatedSeries<MultiPoly>;

template <typename Ring>
TruncatedSeries<Ring> ser_add(const TruncatedSeries<Ring>& a, const TruncatedSeries<Ring>& b) {
  return a + b;
}

template <typename Ring>
TruncatedSeries<Ring> ser_mul(const TruncatedSeries<Ring>& a, const TruncatedSeries<Ring>& b) {
  return a * b;
}

template <typename Ring>
TruncatedSeries<Ring> ser_scale(const TruncatedSeries<Ring>& a, const Ring& c) {
  return a.scaled(c);
}

/// exp(f) for c_0(f) = 0, from n e_n = sum_{k=1}^{n} k f_k e_{n-k}.
template <typename Ring>
TruncatedSeries<Ring> ser_exp(const TruncatedSeries<Ring>& f) {
  if (!ring_is_zero(f[0])) throw PreconditionError("ser_exp: constant term must be zero");
  const std::size_t n_max = f.order();
  std::vector<Ring> e(n_max + 1);
  e[0] = Ring(1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Ring acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (ring_is_zero(f[k])) continue;
      acc += f[k] * e[n - k] * BigRational(static_cast<long>(k));
    }
    e[n] = acc * BigRational(1, static_cast<long>(n));
  }
  return TruncatedSeries<Ring>(std::move(e));
}

/// log(1 + f) for c_0(f) = 0. With h = g', (1 + f) h = f', so
/// h_n = (n+1) f_{n+1} - sum_{k=1}^{n} f_k h_{n-k} and g_{n+1} = h_n / (n+1).
template <typename Ring>
TruncatedSeries<Ring> ser_log1p(const TruncatedSeries<Ring>& f) {
  if (!ring_is_zero(f[0])) throw PreconditionError("ser_log1p: constant term must be zero");
  const std::size_t n_max = f.order();
  std::vector<Ring> g(n_max + 1);
  std::vector<Ring> h(n_max);
  for (std::size_t n = 0; n < n_max; ++n) {
    Ring acc = f[n + 1] * BigRational(static_cast<long>(n + 1));
    for (std::size_t k = 1; k <= n; ++k) {
      if (ring_is_zero(f[k])) continue;
      acc -= f[k] * h[n - k];
    }
    h[n] = acc;
    g[n + 1] = acc * BigRational(1, static_cast<long>(n + 1));
  }
  return TruncatedSeries<Ring>(std::move(g));
}

/// outer(inner(t)) by Horner accumulation; requires c_0(inner) = 0.
template <typename Ring>
TruncatedSeries<Ring> ser_compose(const TruncatedSeries<Ring>& outer, const TruncatedSeries<Ring>& inner) {
  if (outer.order() != inner.order()) throw PreconditionError("ser_compose: series order mismatch");
  if (!ring_is_zero(inner[0])) throw PreconditionError("ser_compose: inner constant term must be zero");
  const std::size_t n = outer.order();
  auto result = TruncatedSeries<Ring>::constant(outer[n], n);
  for (std::size_t i = n; i-- > 0;) {
    result = result * inner + TruncatedSeries<Ring>::constant(outer[i], n);
  }
  return result;
}

/// base^k for a nonnegative integer k.
template <typename Ring>
TruncatedSeries<Ring> ser_power(const TruncatedSeries<Ring>& base, unsigned k) {
  auto r = TruncatedSeries<Ring>::constant(Ring(1), base.order());
  for (unsigned i = 0; i < k; ++i) r = r * base;
  return r;
}

/// base^exponent = exp(exponent * log(1 + (base - 1))); requires c_0(base) = 1.
template <typename Ring>
TruncatedSeries<Ring> ser_pow(const TruncatedSeries<Ring>& base, const Ring& exponent) {
  if (base[0] != Ring(1)) throw PreconditionError("ser_pow: constant term must be one");
  const auto shifted = base - TruncatedSeries<Ring>::constant(Ring(1), base.order());
  return ser_exp(ser_log1p(shifted).scaled(exponent));
}

/// Lifts rational coefficients to constant polynomials.
PolySeries to_poly_series(const RationalSeries& s);

// Elementary series used throughout the catalog.

/// 1/(1-t) - 1 = t/(1-t) = sum_{n>=1} t^n.
RationalSeries geometric_minus_one(std::size_t order);
/// e^t - 1.
RationalSeries exp_minus_one(std::size_t order);
/// 1 - e^{-t}.
RationalSeries one_minus_exp_neg(std::size_t order);
/// -log(1 - t) = sum_{n>=1} t^n / n.
RationalSeries neg_log_one_minus(std::size_t order);
/// log(1 + t).
RationalSeries log_one_plus(std::size_t order);

/// Degenerate exponential e_lambda^x(t) = sum (x)_{n,lambda} t^n/n!, built
/// directly so that lambda stays polynomial.
PolySeries degenerate_exp(const MultiPoly& x, const MultiPoly& lambda, std::size_t order);

/// Catalog of the generating functions. Unbound parameters stay symbolic.
struct GfParams {
  std::optional<BigRational> x;
  std::optional<BigRational> y;
  std::optional<BigRational> lambda;
  std::optional<BigRational> alpha;
};

inline constexpr std::size_t kDefaultGfOrder = 32;

/// lah_bell, lah_bell_poly, bell, bell_poly, bivariate_bell,
/// bivariate_lah_bell, degenerate_lah_bell, degenerate_bell,
/// laguerre_weighted. Throws UnknownNameError otherwise.
PolySeries gf_catalog(std::string_view name, const GfParams& params, std::size_t order);

const std::vector<std::string>& gf_catalog_names();

}  // namespace lahbell
