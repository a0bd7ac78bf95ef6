#include "lahbell/exact.hpp"

#include <cctype>
#include <numeric>

#include "lahbell/errors.hpp"

namespace lahbell {

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const BigRational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// The string constructor reads a leading 0 as an octal prefix.
BigInt decimal_integer(std::string_view digits) {
  const auto nz = digits.find_first_not_of('0');
  return nz == std::string_view::npos ? BigInt(0) : BigInt(std::string(digits.substr(nz)));
}

BigInt parse_signed_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw PreconditionError("malformed rational: '" + std::string(whole) + "'");
  }
  const BigInt v = decimal_integer(s);
  return negative ? BigInt(-v) : v;
}

BigInt pow10(unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw PreconditionError("empty rational");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_signed_integer(text.substr(0, slash), whole);
    const BigInt den = parse_signed_integer(text.substr(slash + 1), whole);
    if (den == 0) throw PreconditionError("zero denominator in '" + std::string(whole) + "'");
    return BigRational(num, den);
  }

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const BigInt ev = parse_signed_integer(text.substr(e + 1), whole);
    if (abs(ev) > 100000) throw PreconditionError("exponent out of range in '" + std::string(whole) + "'");
    exponent = ev.convert_to<long>();
    text = text.substr(0, e);
  }
  std::string digits;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto int_part = text.substr(0, dot);
    const auto frac_part = text.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw PreconditionError("malformed rational: '" + std::string(whole) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(text)) throw PreconditionError("malformed rational: '" + std::string(whole) + "'");
    digits = std::string(text);
  }
  BigRational v{decimal_integer(digits)};
  if (exponent > 0) v *= pow10(static_cast<unsigned>(exponent));
  if (exponent < 0) v /= pow10(static_cast<unsigned>(-exponent));
  return negative ? BigRational(-v) : v;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  // Multiplicative form; each prefix product is itself a binomial, so the
  // division is exact. Also valid for negative n.
  BigInt r = 1;
  for (long i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

std::string_view var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::lambda: return "lambda";
    case Var::alpha: return "alpha";
  }
  return "?";
}

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = lahbell::total_degree(a);
  const unsigned db = lahbell::total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly::MultiPoly(const BigRational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MultiPoly::MultiPoly(const BigInt& c) : MultiPoly(BigRational(c)) {}

MultiPoly::MultiPoly(long c) : MultiPoly(BigRational(c)) {}

MultiPoly MultiPoly::variable(Var v, std::uint32_t power) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = power;
  return monomial(1, e);
}

MultiPoly MultiPoly::monomial(const BigRational& c, const Exponents& e) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

BigRational MultiPoly::constant_term() const { return coefficient(Exponents{}); }

BigRational MultiPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[static_cast<std::size_t>(v)]);
  return d;
}

unsigned MultiPoly::total_degree() const {
  // First key has the largest total degree.
  return terms_.empty() ? 0 : lahbell::total_degree(terms_.begin()->first);
}

MultiPoly MultiPoly::derivative(Var v) const {
  const auto i = static_cast<std::size_t>(v);
  MultiPoly d;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents de = e;
    --de[i];
    d.add_term(de, c * e[i]);
  }
  return d;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const BigRational mag = negative ? BigRational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(static_cast<Var>(i));
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += lahbell::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += lahbell::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

void MultiPoly::add_term(const Exponents& e, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = r.terms_.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

MultiPoly pow(const MultiPoly& p, unsigned n) {
  MultiPoly r(1);
  MultiPoly base = p;
  while (n > 0) {
    if (n & 1u) r *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return r;
}

MultiPoly poly_eval(const MultiPoly& p, const Bindings& bindings) {
  if (bindings.empty()) return p;
  MultiPoly r;
  for (const auto& [e, c] : p.terms()) {
    BigRational coef = c;
    Exponents rest = e;
    for (const auto& [v, value] : bindings) {
      const auto i = static_cast<std::size_t>(v);
      if (rest[i] == 0) continue;
      BigRational f = 1;
      for (std::uint32_t k = 0; k < rest[i]; ++k) f *= value;
      coef *= f;
      rest[i] = 0;
    }
    r += MultiPoly::monomial(coef, rest);
  }
  return r;
}

MultiPoly falling_factorial(const MultiPoly& p, unsigned n) {
  return generalized_falling(p, n, MultiPoly(1));
}

MultiPoly rising_factorial(const MultiPoly& p, unsigned n) {
  return generalized_falling(p, n, MultiPoly(-1));
}

MultiPoly generalized_falling(const MultiPoly& p, unsigned n, const MultiPoly& step) {
  MultiPoly r(1);
  for (unsigned i = 0; i < n; ++i) {
    r *= p - step * BigRational(i);
  }
  return r;
}

}  // namespace lahbell
