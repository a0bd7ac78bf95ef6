#include "lahbell/identities.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>

#include "lahbell/dobinski.hpp"
#include "lahbell/errors.hpp"
#include "lahbell/exact.hpp"
#include "lahbell/numbers.hpp"
#include "lahbell/oracle.hpp"
#include "lahbell/polys.hpp"
#include "lahbell/series.hpp"

namespace lahbell {

namespace {

using Outcome = std::optional<Counterexample>;
using Check = std::function<Outcome(unsigned lo, unsigned hi)>;

std::string render(const BigInt& v) { return to_string(v); }
std::string render(const BigRational& v) { return to_string(v); }
std::string render(const MultiPoly& v) { return v.to_string(); }

template <typename T>
Outcome mismatch(const std::string& index, const T& lhs, const T& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Counterexample{index, render(lhs), render(rhs)};
}

std::string at_n(unsigned n) { return "n=" + std::to_string(n); }
std::string at_nk(unsigned n, unsigned k) { return "n=" + std::to_string(n) + ", k=" + std::to_string(k); }

MultiPoly sign(unsigned e) { return MultiPoly(e % 2 == 0 ? 1L : -1L); }
BigInt isign(unsigned e) { return e % 2 == 0 ? BigInt(1) : BigInt(-1); }

// sum_k (-1)^{n-k} T(n,k) f(k)
template <typename F>
MultiPoly signed_transform(TriangleKind kind, unsigned n, F&& f) {
  MultiPoly s;
  const auto& row = shared_triangle(kind).row(n);
  for (unsigned k = 0; k <= n; ++k) {
    if (row[k] == 0) continue;
    s += f(k) * sign(n - k) * BigRational(row[k]);
  }
  return s;
}

// sum_k T(n,k) f(k)
template <typename F>
MultiPoly transform(TriangleKind kind, unsigned n, F&& f) {
  MultiPoly s;
  const auto& row = shared_triangle(kind).row(n);
  for (unsigned k = 0; k <= n; ++k) {
    if (row[k] != 0) s += f(k) * BigRational(row[k]);
  }
  return s;
}

// Compares egf coefficients of a series against a closed form for n in lo..hi.
template <typename F>
Outcome compare_egf(const PolySeries& series, unsigned lo, unsigned hi, F&& closed) {
  for (unsigned n = lo; n <= hi; ++n) {
    if (auto c = mismatch(at_n(n), series.egf_coefficient(n), closed(n))) return c;
  }
  return std::nullopt;
}

Outcome compare_series(const PolySeries& a, const PolySeries& b, unsigned lo, unsigned hi) {
  for (unsigned n = lo; n <= hi; ++n) {
    if (auto c = mismatch(at_n(n), a[n], b[n])) return c;
  }
  return std::nullopt;
}

// (e^t - 1)^k / k!, (log(1+t))^k / k!, (t/(1-t))^k / k! all at order hi.
template <typename Base>
Outcome check_triangle_egf(Base&& base_series, TriangleKind kind, unsigned lo, unsigned hi) {
  const RationalSeries base = base_series(hi);
  std::vector<RationalSeries> powers;
  auto p = RationalSeries::constant(1, hi);
  for (unsigned k = 0; k <= hi; ++k) {
    powers.push_back(p.scaled(BigRational(1, factorial(k))));
    p = p * base;
  }
  for (unsigned n = lo; n <= hi; ++n) {
    for (unsigned k = 0; k <= hi; ++k) {
      if (auto c = mismatch(at_nk(n, k), powers[k].egf_coefficient(n), BigRational(shared_triangle(kind).at(n, k))))
        return c;
    }
  }
  return std::nullopt;
}

Outcome check_oracle(oracle::OracleCounts (*count)(unsigned), TriangleKind kind, bool absolute, unsigned lo,
                     unsigned hi) {
  for (unsigned n = lo; n <= hi; ++n) {
    const auto counts = count(n);
    BigInt row_total = 0;
    for (unsigned k = 0; k <= n; ++k) {
      BigInt expected = shared_triangle(kind).at(n, k);
      if (absolute && expected < 0) expected = -expected;
      row_total += expected;
      const auto it = counts.by_k.find(k);
      const BigInt got = it == counts.by_k.end() ? BigInt(0) : BigInt(it->second);
      if (auto c = mismatch(at_nk(n, k), got, expected)) return c;
    }
    if (auto c = mismatch(at_n(n) + " (total)", BigInt(counts.total), row_total)) return c;
  }
  return std::nullopt;
}

Outcome check_dobinski(DobinskiFamily family, const std::vector<BigRational>& xs, unsigned lo, unsigned hi) {
  const BigRational eps = parse_rational("1e-20");
  for (unsigned n = lo; n <= hi; ++n) {
    const MultiPoly p = family == DobinskiFamily::lah_bell ? lah_bell_poly(n) : bell_poly(n);
    for (const auto& x : xs) {
      const BigRational exact = poly_eval(p, {{Var::x, x}}).constant_term();
      const CertifiedDecimal c = dobinski(family, n, x, eps);
      if (!c.contains(exact) || c.error_bound > eps) {
        return Counterexample{at_n(n) + ", x=" + to_string(x),
                              to_string(c.value) + " +/- " + to_string(c.error_bound), to_string(exact)};
      }
    }
  }
  return std::nullopt;
}

const std::vector<BigRational>& spot_alphas() {
  static const std::vector<BigRational> v = {BigRational(0), BigRational(1, 2), BigRational(2), BigRational(-1, 3)};
  return v;
}

struct Entry {
  IdentityInfo info;
  Check check;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"eq3", "x^n = sum_k S2(n,k) (x)_k", "Stirling second kind expands powers in falling factorials", 0, 20,
        false},
       [](unsigned lo, unsigned hi) -> Outcome {
         for (unsigned n = lo; n <= hi; ++n) {
           const MultiPoly rhs = transform(TriangleKind::stirling2, n, [](unsigned k) { return falling_factorial(X(), k); });
           if (auto c = mismatch(at_n(n), MultiPoly::variable(Var::x, n), rhs)) return c;
         }
         return std::nullopt;
       }},
      {{"eq4", "(e^t - 1)^k / k! = sum_n S2(n,k) t^n/n!", "egf of the Stirling second kind columns", 0, 25, false},
       [](unsigned lo, unsigned hi) { return check_triangle_egf(exp_minus_one, TriangleKind::stirling2, lo, hi); }},
      {{"eq8", "(x)_n = sum_k S1(n,k) x^k", "signed Stirling first kind expands falling factorials", 0, 20, false},
       [](unsigned lo, unsigned hi) -> Outcome {
         for (unsigned n = lo; n <= hi; ++n) {
           MultiPoly rhs;
           for (unsigned k = 0; k <= n; ++k) rhs += MultiPoly::variable(Var::x, k) * BigRational(stirling1_signed(n, k));
           if (auto c = mismatch(at_n(n), falling_factorial(X(), n), rhs)) return c;
         }
         return std::nullopt;
       }},
      {{"eq9", "(log(1+t))^k / k! = sum_n S1(n,k) t^n/n!", "egf of the Stirling first kind columns", 0, 25, false},
       [](unsigned lo, unsigned hi) {
         return check_triangle_egf(log_one_plus, TriangleKind::stirling1_signed, lo, hi);
       }},
      {{"eq16", "L(n,k) = C(n-1,k-1) n!/k! = C(n,k) C(n-1,k-1) (n-k)! = (n!/k!)^2 k/(n (n-k)!)",
        "three Lah closed forms agree with the recurrence table", 0, 25, false},
       [](unsigned lo, unsigned hi) -> Outcome {
         for (unsigned n = lo; n <= hi; ++n) {
           for (unsigned k = 0; k <= n; ++k) {
             const BigInt table = lah(n, k);
             if (auto c = mismatch(at_nk(n, k) + " (C(n-1,k-1) n!/k!)", lah_closed_form(n, k), table)) return c;
             if (auto c = mismatch(at_nk(n, k) + " (C(n,k) C(n-1,k-1) (n-k)!)", lah_binomial_form(n, k), table))
               return c;
             if (k >= 1) {
               if (auto c = mismatch(at_nk(n, k) + " (factorial ratio)", lah_factorial_ratio_form(n, k),
                                     BigRational(table)))
                 return c;
             }
           }
         }
         return std::nullopt;
       }},
      {{"eq17", "L(n,k+1) k (k+1) = (n-k) L(n,k)", "Lah column ratio", 1, 25, false},
       [](unsigned lo, unsigned hi) -> Outcome {
         for (unsigned n = std::max(lo, 1u); n <= hi; ++n) {
           for (unsigned k = 1; k < n; ++k) {
             if (auto c = mismatch(at_nk(n, k), BigInt(lah(n, k + 1) * k * (k + 1)), BigInt(lah(n, k) * (n - k))))
               return c;
           }
         }
         return std::nullopt;
       }},
      {{"eq13", "<x>_n = sum_k L(n,k) (x)_k", "rising factorial in the falling basis", 0, 20, false},
       [](unsigned lo, unsigned hi) -> Outcome {
         for (unsigned n = lo; n <= hi; ++n) {
           const MultiPoly rhs = transform(TriangleKind::lah, n, [](unsigned k) { return falling_factorial(X(), k); });
           if (auto c = mismatch(at_n(n), rising_factorial(X(), n), rhs)) return c;
         }
         return std::nullopt;
       }},
      {{"eq14", "(x)_n = sum_k (-1)^{n-k} L(n,k) <x>_k", "falling factorial in the rising basis", 0, 20, false},
       [](unsigned lo, unsigned hi) -> Outcome {
         for (unsigned n = lo; n <= hi; ++n) {
           const MultiPoly rhs =
               signed_transform(TriangleKind::lah, n, [](unsigned k) { return rising_factorial(X(), k); });
           if (auto c = mismatch(at_n(n), falling_factorial(X(), n), rhs)) return c;
         }
         return std::nullopt;
       }},
      {{"eq18", "(t/(1-t))^k / k! = sum_n L(n,k) t^n/n!", "egf of the Lah columns", 0, 25, false},
       [](unsigned lo, unsigned hi) { return check_triangle_egf(geometric_minus_one, TriangleKind::lah, lo, hi); }},
      {{"lemma1", "exp(1/(1-t) - 1) = sum_n B^L_n t^n/n!", "Lah-Bell numbers from their generating function", 0,
        25, false},
       [](unsigned lo, unsigned hi) {
         return compare_egf(gf_catalog("lah_bell", {}, hi), lo, hi,
                            [](unsigned n) { return MultiPoly(lah_bell_number(n)); });
       }},
      {{"thm2", "B_n = sum_k (-1)^{n-k} B^L_k S2(n,k)", "Bell numbers from Lah-Bell numbers", 0, 25, false},
       [](unsigned lo, unsigned hi) -> Outcome {
         for (unsigned n = lo; n <= hi; ++n) {
           BigInt s = 0;
           for (unsigned k = 0; k <= n; ++k) s += isign(n - k) * lah_bell_number(k) * stirling2(n, k);
           if (auto c = mismatch(at_n(n), bell_number(n), s)) return c;
         }
         return std::nullopt;
       }},
      {{"thm3", "B^L_n = e^{-1} sum_k <k>_n / k!", "certified Dobinski enclosure at x = 1, eps = 1e-20", 0, 12,
        false},
       [](unsigned lo, unsigned hi) { return check_dobinski(DobinskiFamily::lah_bell, {BigRational(1)}, lo, hi); }},
      {{"lemma4", "exp(x (1/(1-t) - 1)) = sum_n B^L_n(x) t^n/n!", "Lah-Bell polynomials from their generating function",
        0, 20, false},
       [](unsigned lo, unsigned hi) { return compare_egf(gf_catalog("lah_bell_poly", {}, hi), lo, hi, lah_bell_poly); }},
      {{"thm5", "B_n(x) = sum_k (-1)^{n-k} S2(n,k) B^L_k(x)", "Bell polynomials from Lah-Bell polynomials", 0, 20,
        false},
       [](unsigned lo, unsigned hi) -> Outcome {
         for (unsigned n = lo; n <= hi; ++n) {
           if (auto c = mismatch(at_n(n), bell_poly(n), signed_transform(TriangleKind::stirling2, n, lah_bell_poly)))
             return c;
         }
         return std::nullopt;
       }},
      {{"thm6", "B^L_n(x) = e^{-x} sum_k <k>_n x^k / k!",
        "certified Dobinski enclosure at x in {1/2, 1, 3}, eps = 1e-20", 0, 12, false},
       [](unsigned lo, unsigned hi) {
         return check_dobinski(DobinskiFamily::lah_bell, {BigRational(1, 2), BigRational(1), BigRational(3)}, lo, hi);
       }},
      {{"eq7", "B_n(x) = e^{-x} sum_k k^n x^k / k!",
        "certified Bell Dobinski enclosure at x in {1/2, 1, 3}, eps = 1e-20", 0, 12, false},
       [](unsigned lo, unsigned hi) {
         return check_dobinski(DobinskiFamily::bell, {BigRational(1, 2), BigRational(1), BigRational(3)}, lo, hi);
       }},
      {{"thm7", "B^L_n(x) = sum_k (-1)^{n-k} S1(n,k) B_k(x)", "Lah-Bell polynomials from Bell polynomials (signed S1)",
        0, 20, false},
       [](unsigned lo, unsigned hi) -> Outcome {
         for (unsigned n = lo; n <= hi; ++n) {
           if (auto c = mismatch(at_n(n), lah_bell_poly(n),
                                 signed_transform(TriangleKind::stirling1_signed, n, bell_poly)))
             return c;
         }
         return std::nullopt;
       }},
      {{"thm8", "S2(n,k) = sum_{l=k}^{n} (-1)^{n-l} S2(n,l) L(l,k)", "Stirling second kind through Lah numbers", 0, 25,
        false},
       [](unsigned lo, unsigned hi) -> Outcome {
         for (unsigned n = lo; n <= hi; ++n) {
           for (unsigned k = 0; k <= n; ++k) {
             if (auto c = mismatch(at_nk(n, k), stirling2(n, k), stirling2_via_lah(n, k))) return c;
           }
         }
         return std::nullopt;
       }},
      {{"eq30", "L(n,k) = sum_{l=k}^{n} (-1)^{n-l} S1(n,l) S2(l,k)",
        "Lah numbers through Stirling numbers", 0, 25, false},
       [](unsigned lo, unsigned hi) -> Outcome {
         for (unsigned n = lo; n <= hi; ++n) {
           for (unsigned k = 0; k <= n; ++k) {
             if (auto c = mismatch(at_nk(n, k), lah(n, k), lah_via_stirling(n, k))) return c;
           }
         }
         return std::nullopt;
       }},
      {{"thm9", "B^L_{n+1}(x) = x sum_m C(n,m) (n-m+1)! B^L_m(x)", "Lah-Bell polynomial recurrence", 0, 20, false},
       [](unsigned lo, unsigned hi) -> Outcome {
         std::vector<MultiPoly> values;
         for (unsigned m = 0; m < lo; ++m) values.push_back(lah_bell_poly(m));
         for (unsigned n = lo; n <= hi; ++n) {
           values.push_back(lah_bell_poly(n));
           if (auto c = mismatch(at_n(n), lah_bell_recurrence_step(n, values), lah_bell_poly(n + 1))) return c;
         }
         return std::nullopt;
       }},
      {{"thm10", "d/dx B^L_n(x) = sum_{m<n} C(n,m) (n-m)! B^L_m(x)", "Lah-Bell polynomial derivative", 1, 20, false},
       [](unsigned lo, unsigned hi) -> Outcome {
         for (unsigned n = std::max(lo, 1u); n <= hi; ++n) {
           if (auto c = mismatch(at_n(n), lah_bell_poly(n).derivative(Var::x), lah_bell_derivative(n))) return c;
         }
         return std::nullopt;
       }},
      {{"eq20", "exp(1/(1-t) - 1) at t = 1 - e^{-t} equals exp(e^t - 1), and with weight x",
        "substitution coherence of the Lah-Bell and Bell generating functions", 0, 20, false},
       [](unsigned lo, unsigned hi) -> Outcome {
         const auto inner = to_poly_series(one_minus_exp_neg(hi));
         if (auto c = compare_series(ser_compose(gf_catalog("lah_bell", {}, hi), inner), gf_catalog("bell", {}, hi),
                                     lo, hi))
           return c;
         return compare_series(ser_compose(gf_catalog("lah_bell_poly", {}, hi), inner),
                               gf_catalog("bell_poly", {}, hi), lo, hi);
       }},
      {{"eq27", "exp(x (e^t - 1)) at t = -log(1-t) equals exp(x (1/(1-t) - 1))",
        "substitution coherence of the Bell and Lah-Bell polynomial generating functions", 0, 20, false},
       [](unsigned lo, unsigned hi) {
         return compare_series(ser_compose(gf_catalog("bell_poly", {}, hi), to_poly_series(neg_log_one_minus(hi))),
                               gf_catalog("lah_bell_poly", {}, hi), lo, hi);
       }},
      {{"eq37", "(1 + y (e^t - 1))^x = sum_n B_n(x,y) t^n/n!", "bivariate Bell polynomials from their generating function",
        0, 12, false},
       [](unsigned lo, unsigned hi) {
         return compare_egf(gf_catalog("bivariate_bell", {}, hi), lo, hi, bivariate_bell_poly);
       }},
      {{"lemma11", "(1 + y (1/(1-t) - 1))^x = sum_n B^L_n(x,y) t^n/n!",
        "bivariate Lah-Bell polynomials from their generating function", 0, 12, false},
       [](unsigned lo, unsigned hi) {
         return compare_egf(gf_catalog("bivariate_lah_bell", {}, hi), lo, hi, bivariate_lah_bell_poly);
       }},
      {{"bivariate-reduction", "[y^k] B^L_n(x,y) = L(n,k) (x)_k and sum_k L(n,k) y^k = B^L_n(y)",
        "coefficientwise form of the bivariate to univariate reduction", 0, 12, false},
       [](unsigned lo, unsigned hi) -> Outcome {
         for (unsigned n = lo; n <= hi; ++n) {
           const MultiPoly biv = bivariate_lah_bell_poly(n);
           MultiPoly reduced;
           for (unsigned k = 0; k <= n; ++k) {
             MultiPoly slice;
             for (const auto& [e, c] : biv.terms()) {
               if (e[static_cast<std::size_t>(Var::y)] != k) continue;
               Exponents ex = e;
               ex[static_cast<std::size_t>(Var::y)] = 0;
               slice += MultiPoly::monomial(c, ex);
             }
             if (auto c = mismatch(at_nk(n, k), slice, falling_factorial(X(), k) * BigRational(lah(n, k)))) return c;
             reduced += MultiPoly::variable(Var::y, k) * BigRational(lah(n, k));
           }
           MultiPoly univariate_in_y;
           const MultiPoly univariate = lah_bell_poly(n);
           for (const auto& [e, c] : univariate.terms()) {
             univariate_in_y += MultiPoly::variable(Var::y, e[0]) * c;
           }
           if (auto c = mismatch(at_n(n), reduced, univariate_in_y)) return c;
         }
         return std::nullopt;
       }},
      {{"thm12", "B^L_n(x,y) = sum_k (-1)^{n-k} S1(n,k) B_k(x,y) and B_n(x,y) = sum_k (-1)^{n-k} S2(n,k) B^L_k(x,y)",
        "bivariate connection, both directions", 0, 12, false},
       [](unsigned lo, unsigned hi) -> Outcome {
         for (unsigned n = lo; n <= hi; ++n) {
           if (auto c = mismatch(at_n(n) + " (S1 direction)", bivariate_lah_bell_poly(n),
                                 signed_transform(TriangleKind::stirling1_signed, n, bivariate_bell_poly)))
             return c;
           if (auto c = mismatch(at_n(n) + " (S2 direction)", bivariate_bell_poly(n),
                                 signed_transform(TriangleKind::stirling2, n, bivariate_lah_bell_poly)))
             return c;
         }
         return std::nullopt;
       }},
      {{"eq44", "e_lambda^x(1/(1-t) - 1) = sum_n B^L_{n,lambda}(x) t^n/n! with B^L_{n,lambda}(x) = sum_k L(n,k) (x)_{k,lambda}",
        "degenerate Lah-Bell explicit sum against its generating function", 0, 12, false},
       [](unsigned lo, unsigned hi) {
         return compare_egf(gf_catalog("degenerate_lah_bell", {}, hi), lo, hi, degenerate_lah_bell_poly);
       }},
      {{"eq45-catalog", "e_lambda^x(e^t - 1) = sum_n B_{n,lambda}(x) t^n/n! with B_{n,lambda}(x) = sum_k S2(n,k) (x)_{k,lambda}",
        "degenerate Bell finite sum against its generating function", 0, 12, false},
       [](unsigned lo, unsigned hi) {
         return compare_egf(gf_catalog("degenerate_bell", {}, hi), lo, hi, degenerate_bell_poly);
       }},
      {{"eq47", "B_{n,lambda}(x) = sum_k (-1)^{n-k} S2(n,k) B^L_{k,lambda}(x)",
        "degenerate Bell from degenerate Lah-Bell", 0, 12, false},
       [](unsigned lo, unsigned hi) -> Outcome {
         for (unsigned n = lo; n <= hi; ++n) {
           if (auto c = mismatch(at_n(n), degenerate_bell_poly(n),
                                 signed_transform(TriangleKind::stirling2, n, degenerate_lah_bell_poly)))
             return c;
         }
         return std::nullopt;
       }},
      {{"eq48-corrected",
        "e_lambda^x(t/(1-t)) = sum_n (sum_k (-1)^{n-k} S1(n,k) B_{k,lambda}(x)) t^n/n!",
        "degenerate Lah-Bell from degenerate Bell; corrected form with argument t/(1-t), the image of e^t - 1 "
        "under t -> -log(1-t)",
        0, 12, false},
       [](unsigned lo, unsigned hi) -> Outcome {
         for (unsigned n = lo; n <= hi; ++n) {
           if (auto c = mismatch(at_n(n) + " (finite sum)", degenerate_lah_bell_poly(n),
                                 signed_transform(TriangleKind::stirling1_signed, n, degenerate_bell_poly)))
             return c;
         }
         const auto substituted =
             ser_compose(gf_catalog("degenerate_bell", {}, hi), to_poly_series(neg_log_one_minus(hi)));
         const auto direct = ser_compose(degenerate_exp(X(), Lambda(), hi), to_poly_series(geometric_minus_one(hi)));
         if (auto c = compare_series(substituted, direct, lo, hi)) {
           c->index += " (series substitution)";
           return c;
         }
         return std::nullopt;
       }},
      {{"degenerate-limit", "B^L_{n,lambda}(x) and B_{n,lambda}(x) at lambda = 0 equal B^L_n(x) and B_n(x)",
        "degeneration limit", 0, 15, false},
       [](unsigned lo, unsigned hi) -> Outcome {
         const Bindings zero = {{Var::lambda, BigRational(0)}};
         for (unsigned n = lo; n <= hi; ++n) {
           if (auto c = mismatch(at_n(n) + " (Lah-Bell)", poly_eval(degenerate_lah_bell_poly(n), zero), lah_bell_poly(n)))
             return c;
           if (auto c = mismatch(at_n(n) + " (Bell)", poly_eval(degenerate_bell_poly(n), zero), bell_poly(n)))
             return c;
         }
         return std::nullopt;
       }},
      {{"eq49", "(1-t)^{-alpha-1} e^{x t/(t-1)} = sum_n L^(alpha)_n(x) t^n/n!",
        "Laguerre closed form (n! times classical) against the generating function, alpha symbolic and at "
        "0, 1/2, 2, -1/3",
        0, 10, false},
       [](unsigned lo, unsigned hi) -> Outcome {
         if (auto c = compare_egf(gf_catalog("laguerre_weighted", {}, hi), lo, hi,
                                  [](unsigned n) { return laguerre_poly(n); }))
           return c;
         for (const auto& a : spot_alphas()) {
           GfParams p;
           p.alpha = a;
           if (auto c = compare_egf(gf_catalog("laguerre_weighted", p, hi), lo, hi,
                                    [&](unsigned n) { return laguerre_poly(n, MultiPoly(a)); })) {
             c->index += ", alpha=" + to_string(a);
             return c;
           }
         }
         return std::nullopt;
       }},
      {{"laguerre-conv", "<alpha+1>_n = sum_m C(n,m) B^L_m(x) L^(alpha)_{n-m}(x)",
        "Laguerre convolution; the x-dependence cancels exactly. alpha symbolic and at 0, 1/2, 2, -1/3", 0, 10, false},
       [](unsigned lo, unsigned hi) -> Outcome {
         std::vector<MultiPoly> alphas = {Alpha()};
         for (const auto& a : spot_alphas()) alphas.emplace_back(a);
         for (unsigned n = lo; n <= hi; ++n) {
           for (const auto& alpha : alphas) {
             MultiPoly s;
             for (unsigned m = 0; m <= n; ++m) {
               s += lah_bell_poly(m) * laguerre_poly(n - m, alpha) * BigRational(binomial(n, m));
             }
             const std::string idx = at_n(n) + ", alpha=" + (alpha == Alpha() ? std::string("alpha") : alpha.to_string());
             if (s.uses(Var::x)) return Counterexample{idx + " (x did not cancel)", s.to_string(), "no x"};
             if (auto c = mismatch(idx, s, rising_factorial(alpha + MultiPoly(1), n))) return c;
           }
         }
         return std::nullopt;
       }},
      {{"oracle-lah", "#{ordered set partitions of [n] with k blocks} = L(n,k)",
        "brute-force ordered partitions against the Lah triangle and Lah-Bell row sums", 0, 8, true},
       [](unsigned lo, unsigned hi) {
         return check_oracle(oracle::count_ordered_partitions, TriangleKind::lah, false, lo,
                             std::min(hi, oracle::kMaxOrderedPartitionN));
       }},
      {{"oracle-stirling2", "#{set partitions of [n] with k blocks} = S2(n,k)",
        "brute-force set partitions against the Stirling second kind triangle", 0, 8, true},
       [](unsigned lo, unsigned hi) {
         return check_oracle(oracle::count_set_partitions, TriangleKind::stirling2, false, lo,
                             std::min(hi, oracle::kMaxSetPartitionN));
       }},
      {{"oracle-stirling1", "#{permutations of [n] with k cycles} = |S1(n,k)|",
        "brute-force permutations against the Stirling first kind triangle", 0, 8, true},
       [](unsigned lo, unsigned hi) {
         return check_oracle(oracle::count_permutations_by_cycles, TriangleKind::stirling1_signed, true, lo,
                             std::min(hi, oracle::kMaxPermutationN));
       }},
  };
  return table;
}

const Entry& find_entry(std::string_view id) {
  for (const auto& e : entries()) {
    if (e.info.id == id) return e;
  }
  throw UnknownNameError("unknown identity id: '" + std::string(id) + "'");
}

IdentityRecord run_entry(const Entry& e, unsigned hi) {
  IdentityRecord r;
  r.id = e.info.id;
  r.anchor = e.info.anchor;
  r.description = e.info.description;
  r.range_lo = e.info.range_lo;
  r.range_hi = std::max(hi, e.info.range_lo);
  r.counterexample = e.check(r.range_lo, r.range_hi);
  r.status = r.counterexample ? IdentityStatus::fail : IdentityStatus::pass;
  return r;
}

}  // namespace

std::optional<Counterexample> first_mismatch(unsigned lo, unsigned hi,
                                             const std::function<MultiPoly(unsigned)>& lhs,
                                             const std::function<MultiPoly(unsigned)>& rhs) {
  for (unsigned n = lo; n <= hi; ++n) {
    if (auto c = mismatch(at_n(n), lhs(n), rhs(n))) return c;
  }
  return std::nullopt;
}

const std::vector<IdentityInfo>& identity_catalog() {
  static const std::vector<IdentityInfo> v = [] {
    std::vector<IdentityInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return v;
}

IdentityRecord run_identity(std::string_view id, unsigned hi) { return run_entry(find_entry(id), hi); }

std::vector<IdentityRecord> run_suite(const std::vector<std::string>& selection, std::optional<unsigned> max_n,
                                      bool include_oracle) {
  if (max_n && *max_n == 0) throw PreconditionError("max_n must be at least 1");
  std::set<std::string> wanted;
  for (const auto& s : selection) {
    if (s == "all") {
      for (const auto& e : entries()) {
        if (!e.info.oracle || include_oracle) wanted.insert(e.info.id);
      }
    } else {
      wanted.insert(find_entry(s).info.id);
    }
  }

  std::vector<std::future<IdentityRecord>> jobs;
  for (const auto& e : entries()) {
    if (!wanted.count(e.info.id)) continue;
    const unsigned hi = max_n ? std::min(*max_n, e.info.default_hi) : e.info.default_hi;
    jobs.push_back(std::async(std::launch::async, [&e, hi] { return run_entry(e, hi); }));
  }
  std::vector<IdentityRecord> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace lahbell
