#include "lahbell/dobinski.hpp"

#include "lahbell/errors.hpp"

namespace lahbell {

namespace {

BigInt weight(DobinskiFamily family, unsigned n, unsigned k) {
  BigInt w = 1;
  for (unsigned i = 0; i < n; ++i) w *= family == DobinskiFamily::lah_bell ? k + i : k;
  return w;
}

BigRational pow10(long e) {
  BigRational r = 1;
  const BigRational base = e >= 0 ? BigRational(10) : BigRational(1, 10);
  for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= base;
  return r;
}

BigInt floor_of(const BigRational& v) {
  BigInt q = numerator(v) / denominator(v);  // truncates toward zero
  if (v < 0 && BigRational(q) != v) q -= 1;
  return q;
}

BigInt ceil_of(const BigRational& v) { return -floor_of(BigRational(-v)); }

[[noreturn]] void not_reached(const char* what, const BigRational& eps) {
  throw PrecisionNotReached(std::string("precision not reached: ") + what + " exceeds " +
                            std::to_string(kDobinskiIterationCap) + " terms for eps = " + to_string(eps));
}

}  // namespace

std::string to_decimal(const BigRational& v, unsigned places) {
  const bool negative = v < 0;
  const BigRational mag = negative ? BigRational(-v) : v;
  const BigInt scaled = floor_of(mag * pow10(places) + BigRational(1, 2));
  std::string digits = scaled.str();
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, ".");
  }
  return (negative && scaled != 0) ? "-" + digits : digits;
}

std::string CertifiedDecimal::value_decimal() const {
  unsigned d = 0;
  while (d < 1000 && pow10(-static_cast<long>(d) - 1) >= error_bound) ++d;
  return to_decimal(value, d);
}

std::string CertifiedDecimal::error_bound_decimal() const {
  if (error_bound <= 0) return "0";
  long e = 0;
  while (pow10(e) > error_bound) --e;
  while (pow10(e + 1) <= error_bound) ++e;
  BigInt mant = ceil_of(error_bound / pow10(e - 2));
  if (mant >= 1000) {
    mant = 100;
    ++e;
  }
  const std::string m = mant.str();
  return m.substr(0, 1) + "." + m.substr(1) + "e" + std::to_string(e);
}

CertifiedDecimal dobinski(DobinskiFamily family, unsigned n, const BigRational& x, const BigRational& eps) {
  if (x <= 0) throw PreconditionError("dobinski: x must be positive");
  if (eps <= 0) throw PreconditionError("dobinski: eps must be positive");
  const BigRational half_eps = eps / 2;

  // K0: first k >= 1 with ratio <= 1/2.
  unsigned k0 = 1;
  for (;; ++k0) {
    if (k0 > kDobinskiIterationCap) not_reached("ratio cutoff", eps);
    const BigRational ratio =
        BigRational(weight(family, n, k0 + 1), weight(family, n, k0)) * x / BigRational(k0 + 1);
    if (ratio <= BigRational(1, 2)) break;
  }

  BigRational power = 1;  // x^k / k!
  BigRational partial = 0;
  for (unsigned k = 0; k < k0; ++k) {
    partial += power * BigRational(weight(family, n, k));
    power *= x / BigRational(k + 1);
  }
  unsigned k = k0;
  BigRational term = power * BigRational(weight(family, n, k));
  const BigRational sum_upper = partial + 2 * term;
  while (2 * term > half_eps) {
    partial += term;
    power *= x / BigRational(k + 1);
    ++k;
    if (k > kDobinskiIterationCap) not_reached("series cutoff", eps);
    term = power * BigRational(weight(family, n, k));
  }
  const BigRational tail_bound = 2 * term;

  // Taylor polynomial of e^{-x}; j0 = ceil(x) makes the remainders decrease.
  const BigInt j0 = ceil_of(x);
  if (j0 > kDobinskiIterationCap) not_reached("exp cutoff", eps);
  BigRational exp_approx = 0;
  BigRational q = 1;  // x^j / j!
  unsigned j = 0;
  BigRational remainder;
  for (;; ++j) {
    if (j > kDobinskiIterationCap) not_reached("exp cutoff", eps);
    exp_approx += j % 2 == 0 ? q : BigRational(-q);
    q *= x / BigRational(j + 1);
    if (j >= j0 && q * sum_upper <= half_eps) {
      remainder = q;
      break;
    }
  }

  CertifiedDecimal out;
  out.value = exp_approx * partial;
  out.error_bound = remainder * sum_upper + tail_bound;
  out.requested_eps = eps;
  out.series_terms = k;
  out.exp_terms = j + 1;
  return out;
}

CertifiedDecimal lah_bell_dobinski(unsigned n, const BigRational& x, const BigRational& eps) {
  return dobinski(DobinskiFamily::lah_bell, n, x, eps);
}

CertifiedDecimal bell_dobinski(unsigned n, const BigRational& x, const BigRational& eps) {
  return dobinski(DobinskiFamily::bell, n, x, eps);
}

}  // namespace lahbell
