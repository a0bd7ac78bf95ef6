#pragma once

// Exact scalar and polynomial arithmetic.
//
// BigInt and BigRational are GMP-backed boost.multiprecision types; mpq values
// are canonicalized after every operation (lowest terms, positive denominator)
// and division by zero throws std::overflow_error.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace lahbell {

// Expression templates off: values are always concrete, so `auto` and
// conditional expressions behave like ordinary value types.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using BigRational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// Renders an integer in base 10.
std::string to_string(const BigInt& v);
/// Renders "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const BigRational& v);

/// Parses "p", "p/q", "-1.25", "1e-20", "2.5E3" exactly.
/// Throws PreconditionError on malformed input or zero denominator.
BigRational parse_rational(std::string_view text);

BigInt factorial(unsigned n);
/// Binomial coefficient C(n, k) for integer n and k; zero when k < 0 or k > n >= 0.
BigInt binomial(long n, long k);

/// The fixed, ordered indeterminate universe.
enum class Var : std::uint8_t { x = 0, y = 1, lambda = 2, alpha = 3 };
inline constexpr std::size_t kNumVars = 4;

/// ASCII name used in rendering: "x", "y", "lambda", "alpha".
std::string_view var_name(Var v);

using Exponents = std::array<std::uint32_t, kNumVars>;

unsigned total_degree(const Exponents& e);

/// Rendering order: descending total degree, then lexicographically
/// descending exponents in x > y > lambda > alpha.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over BigRational in {x, y, lambda, alpha}.
///
/// The term map never stores a zero coefficient, so structural equality of
/// the maps is polynomial equality.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, BigRational, MonomialOrder>;

  MultiPoly() = default;
  MultiPoly(const BigRational& c);  // NOLINT: constants convert implicitly
  MultiPoly(const BigInt& c);       // NOLINT
  MultiPoly(long c);                // NOLINT

  static MultiPoly variable(Var v, std::uint32_t power = 1);
  static MultiPoly monomial(const BigRational& c, const Exponents& e);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of x^0 y^0 lambda^0 alpha^0.
  BigRational constant_term() const;
  BigRational coefficient(const Exponents& e) const;

  unsigned degree(Var v) const;
  unsigned total_degree() const;
  bool uses(Var v) const { return degree(v) > 0; }

  /// Formal partial derivative.
  MultiPoly derivative(Var v) const;

  /// Deterministic text form, e.g. "x^2 + 2*x", "x^2*y^2 - x*y^2 + 2*x*y".
  std::string to_string() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const BigRational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigRational& c) { return a *= c; }
  friend MultiPoly operator*(const BigRational& c, MultiPoly a) { return a *= c; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponents& e, const BigRational& c);

  TermMap terms_;
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly pow(const MultiPoly& p, unsigned n);

using Bindings = std::map<Var, BigRational>;

/// Partial evaluation: substitutes every bound indeterminate.
MultiPoly poly_eval(const MultiPoly& p, const Bindings& bindings);

/// (p)_n = p (p-1) ... (p-n+1); (p)_0 = 1.
MultiPoly falling_factorial(const MultiPoly& p, unsigned n);
/// <p>_n = p (p+1) ... (p+n-1); <p>_0 = 1.
MultiPoly rising_factorial(const MultiPoly& p, unsigned n);
/// p (p - s) (p - 2s) ... (p - (n-1)s). With s = lambda this is (x)_{n,lambda}.
MultiPoly generalized_falling(const MultiPoly& p, unsigned n, const MultiPoly& step);

inline const MultiPoly& X() {
  static const MultiPoly v = MultiPoly::variable(Var::x);
  return v;
}
inline const MultiPoly& Y() {
  static const MultiPoly v = MultiPoly::variable(Var::y);
  return v;
}
inline const MultiPoly& Lambda() {
  static const MultiPoly v = MultiPoly::variable(Var::lambda);
  return v;
}
inline const MultiPoly& Alpha() {
  static const MultiPoly v = MultiPoly::variable(Var::alpha);
  return v;
}

}  // namespace lahbell
