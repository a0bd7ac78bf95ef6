// Acceptance gate: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria. An optional argument 1..6 runs one criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lahbell/dobinski.hpp"
#include "lahbell/identities.hpp"
#include "lahbell/numbers.hpp"
#include "lahbell/oracle.hpp"
#include "lahbell/polys.hpp"
#include "lahbell/series.hpp"

using namespace lahbell;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

BigInt count_at(const oracle::OracleCounts& c, unsigned k) {
  const auto it = c.by_k.find(k);
  return BigInt(it == c.by_k.end() ? 0 : it->second);
}

Verdict oracle_equivalence() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  std::vector<BigInt> totals;
  for (unsigned n = 0; n <= 8; ++n) {
    const auto ordered = oracle::count_ordered_partitions(n);
    const auto sets = oracle::count_set_partitions(n);
    const auto perms = oracle::count_permutations_by_cycles(n);
    for (unsigned k = 0; k <= n; ++k) {
      const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      if (count_at(ordered, k) != lah(n, k)) v.fail("lah " + at);
      if (count_at(sets, k) != stirling2(n, k)) v.fail("stirling2 " + at);
      const BigInt s1 = stirling1_signed(n, k);
      if (count_at(perms, k) != (s1 < 0 ? BigInt(-s1) : s1)) v.fail("|stirling1| " + at);
    }
    if (BigInt(ordered.total) != lah_bell_number(n)) v.fail("lah_bell total n=" + std::to_string(n));
    totals.push_back(BigInt(ordered.total));
  }
  const double secs = seconds_since(start);
  if (secs >= 60) v.fail("runtime " + std::to_string(secs) + " s");
  std::string seq;
  for (const auto& t : totals) seq += (seq.empty() ? "" : ",") + t.str();
  if (v.ok) v.detail = "totals " + seq + ", " + std::to_string(secs) + " s";
  return v;
}

Verdict identity_suite() {
  Verdict v;
  for (const auto& r : run_suite({"all"}, 12u)) {
    if (!r.passed()) v.fail("verify all --max-n 12: " + r.id + " at " + r.counterexample->index);
  }
  const std::vector<std::pair<std::string, unsigned>> individual = {
      {"thm2", 20}, {"thm5", 20},  {"thm7", 20},  {"eq13", 15}, {"eq14", 15}, {"eq30", 15},
      {"thm8", 15}, {"thm9", 20},  {"thm10", 20}, {"thm12", 12}, {"eq47", 12}, {"laguerre-conv", 10}};
  for (const auto& [id, hi] : individual) {
    const auto r = run_identity(id, hi);
    if (!r.passed()) v.fail(id + " at " + r.counterexample->index);
  }
  if (v.ok) v.detail = "suite to 12 plus " + std::to_string(individual.size()) + " extended ranges";
  return v;
}

Verdict gf_coherence() {
  Verdict v;
  const auto against = [&v](std::string_view name, unsigned top, const std::function<MultiPoly(unsigned)>& closed) {
    const PolySeries s = gf_catalog(name, {}, top);
    for (unsigned n = 0; n <= top; ++n) {
      if (s.egf_coefficient(n) != closed(n)) v.fail(std::string(name) + " n=" + std::to_string(n));
    }
  };
  against("lah_bell", 20, [](unsigned n) { return MultiPoly(lah_bell_number(n)); });
  against("lah_bell_poly", 15, lah_bell_poly);
  against("bivariate_lah_bell", 12, bivariate_lah_bell_poly);
  against("bivariate_bell", 12, bivariate_bell_poly);
  against("degenerate_lah_bell", 12, degenerate_lah_bell_poly);
  against("degenerate_bell", 12, degenerate_bell_poly);

  constexpr std::size_t order = 12;
  const PolySeries lah_gf = gf_catalog("lah_bell_poly", {}, order);
  const PolySeries bell_gf = gf_catalog("bell_poly", {}, order);
  if (ser_compose(lah_gf, to_poly_series(one_minus_exp_neg(order))) != bell_gf) {
    v.fail("compose(lah_bell_poly gf, 1 - e^-t) != bell_poly gf");
  }
  if (ser_compose(bell_gf, to_poly_series(neg_log_one_minus(order))) != lah_gf) {
    v.fail("compose(bell_poly gf, -log(1-t)) != lah_bell_poly gf");
  }
  if (v.ok) v.detail = "catalog matches closed forms; both substitutions hold at order 12";
  return v;
}

Verdict dobinski_numerics() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const BigRational eps = parse_rational("1e-20");
  BigRational worst = 0;
  for (const auto family : {DobinskiFamily::lah_bell, DobinskiFamily::bell}) {
    for (const BigRational& x : {BigRational(1, 2), BigRational(1), BigRational(3)}) {
      for (unsigned n = 0; n <= 12; ++n) {
        const auto c = dobinski(family, n, x, eps);
        const MultiPoly p = family == DobinskiFamily::lah_bell ? lah_bell_poly(n) : bell_poly(n);
        const BigRational exact = poly_eval(p, {{Var::x, x}}).constant_term();
        const std::string at = std::string(family == DobinskiFamily::lah_bell ? "lah_bell" : "bell") +
                               " n=" + std::to_string(n) + " x=" + to_string(x);
        if (c.error_bound > eps) v.fail(at + ": bound above eps");
        if (!c.contains(exact)) v.fail(at + ": enclosure misses exact value");
        if (c.error_bound > worst) worst = c.error_bound;
      }
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 10) v.fail("runtime " + std::to_string(secs) + " s");
  if (v.ok) {
    CertifiedDecimal w;
    w.error_bound = worst;
    v.detail = "78 enclosures, worst bound " + w.error_bound_decimal() + ", " + std::to_string(secs) + " s";
  }
  return v;
}

Verdict degeneration() {
  Verdict v;
  for (unsigned n = 0; n <= 15; ++n) {
    if (poly_eval(degenerate_lah_bell_poly(n), {{Var::lambda, 0}}) != lah_bell_poly(n)) {
      v.fail("degenerate_lah_bell n=" + std::to_string(n));
    }
    if (poly_eval(degenerate_bell_poly(n), {{Var::lambda, 0}}) != bell_poly(n)) {
      v.fail("degenerate_bell n=" + std::to_string(n));
    }
  }
  if (v.ok) v.detail = "n = 0..15";
  return v;
}

Verdict series_properties() {
  Verdict v;
  constexpr std::size_t order = 16;
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  const RationalSeries one = RationalSeries::constant(1, order);
  const RationalSeries t = RationalSeries::identity(order);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BigRational> c(order + 1);
    for (std::size_t i = 1; i <= order; ++i) c[i] = BigRational(num(rng), den(rng));
    const RationalSeries f(c);
    const std::string at = "trial " + std::to_string(trial);
    if (ser_log1p(ser_exp(f) - one) != f) v.fail(at + ": log(exp f) != f");
    if (ser_exp(ser_log1p(f)) - one != f) v.fail(at + ": exp(log(1+f)) - 1 != f");
    if (ser_compose(f, t) != f) v.fail(at + ": f o t != f");
    if (ser_compose(t, f) != f) v.fail(at + ": t o f != f");
  }
  if (v.ok) v.detail = "50 random series at order 16";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"1 oracle equivalence (n <= 8, < 60 s)", oracle_equivalence},
      {"2 identity suite (exact)", identity_suite},
      {"3 generating-function coherence", gf_coherence},
      {"4 dobinski enclosures (eps 1e-20, < 10 s)", dobinski_numerics},
      {"5 degeneration at lambda = 0 (n <= 15)", degeneration},
      {"6 series-engine round trips (order 16)", series_properties},
  };
  std::size_t only = 0;
  if (argc > 1) {
    only = std::strtoul(argv[1], nullptr, 10);
    if (only < 1 || only > criteria.size()) {
      std::fprintf(stderr, "usage: %s [1..%zu]\n", argv[0], criteria.size());
      return 2;
    }
  }
  int failures = 0;
  std::size_t ran = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && i + 1 != only) continue;
    ++ran;
    const auto& [name, run] = criteria[i];
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    if (!v.ok) ++failures;
    std::printf("%s criterion %s: %s\n", v.ok ? "PASS" : "FAIL", name, v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(ran) - failures, ran);
  return failures;
}
