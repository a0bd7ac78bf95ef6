#include "lahbell/series.hpp"

#include <functional>
#include <map>

namespace lahbell {

PolySeries to_poly_series(const RationalSeries& s) {
  return s.map([](const BigRational& c) { return MultiPoly(c); });
}

RationalSeries geometric_minus_one(std::size_t order) {
  std::vector<BigRational> c(order + 1, BigRational(1));
  c[0] = 0;
  return RationalSeries(std::move(c));
}

RationalSeries exp_minus_one(std::size_t order) {
  std::vector<BigRational> c(order + 1);
  for (std::size_t n = 1; n <= order; ++n) c[n] = BigRational(1, factorial(static_cast<unsigned>(n)));
  return RationalSeries(std::move(c));
}

RationalSeries one_minus_exp_neg(std::size_t order) {
  std::vector<BigRational> c(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    const BigRational v(1, factorial(static_cast<unsigned>(n)));
    c[n] = n % 2 == 1 ? v : BigRational(-v);
  }
  return RationalSeries(std::move(c));
}

RationalSeries neg_log_one_minus(std::size_t order) {
  std::vector<BigRational> c(order + 1);
  for (std::size_t n = 1; n <= order; ++n) c[n] = BigRational(1, static_cast<long>(n));
  return RationalSeries(std::move(c));
}

RationalSeries log_one_plus(std::size_t order) {
  std::vector<BigRational> c(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    c[n] = BigRational(n % 2 == 1 ? 1 : -1, static_cast<long>(n));
  }
  return RationalSeries(std::move(c));
}

PolySeries degenerate_exp(const MultiPoly& x, const MultiPoly& lambda, std::size_t order) {
  std::vector<MultiPoly> c;
  c.reserve(order + 1);
  MultiPoly falling(1);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) falling *= x - lambda * BigRational(static_cast<long>(n - 1));
    c.push_back(falling * BigRational(1, factorial(static_cast<unsigned>(n))));
  }
  return PolySeries(std::move(c));
}

namespace {

MultiPoly param_or_var(const std::optional<BigRational>& bound, Var v) {
  return bound ? MultiPoly(*bound) : MultiPoly::variable(v);
}

using Builder = std::function<PolySeries(const GfParams&, std::size_t)>;

const std::map<std::string, Builder, std::less<>>& builders() {
  static const std::map<std::string, Builder, std::less<>> table = {
      {"lah_bell",
       [](const GfParams&, std::size_t n) { return to_poly_series(ser_exp(geometric_minus_one(n))); }},
      {"lah_bell_poly",
       [](const GfParams& p, std::size_t n) {
         return ser_exp(to_poly_series(geometric_minus_one(n)).scaled(param_or_var(p.x, Var::x)));
       }},
      {"bell", [](const GfParams&, std::size_t n) { return to_poly_series(ser_exp(exp_minus_one(n))); }},
      {"bell_poly",
       [](const GfParams& p, std::size_t n) {
         return ser_exp(to_poly_series(exp_minus_one(n)).scaled(param_or_var(p.x, Var::x)));
       }},
      {"bivariate_bell",
       [](const GfParams& p, std::size_t n) {
         const auto one = PolySeries::constant(MultiPoly(1), n);
         const auto base = one + to_poly_series(exp_minus_one(n)).scaled(param_or_var(p.y, Var::y));
         return ser_pow(base, param_or_var(p.x, Var::x));
       }},
      {"bivariate_lah_bell",
       [](const GfParams& p, std::size_t n) {
         const auto one = PolySeries::constant(MultiPoly(1), n);
         const auto base = one + to_poly_series(geometric_minus_one(n)).scaled(param_or_var(p.y, Var::y));
         return ser_pow(base, param_or_var(p.x, Var::x));
       }},
      {"degenerate_lah_bell",
       [](const GfParams& p, std::size_t n) {
         return ser_compose(degenerate_exp(param_or_var(p.x, Var::x), param_or_var(p.lambda, Var::lambda), n),
                            to_poly_series(geometric_minus_one(n)));
       }},
      {"degenerate_bell",
       [](const GfParams& p, std::size_t n) {
         return ser_compose(degenerate_exp(param_or_var(p.x, Var::x), param_or_var(p.lambda, Var::lambda), n),
                            to_poly_series(exp_minus_one(n)));
       }},
      {"laguerre_weighted",
       [](const GfParams& p, std::size_t n) {
         // (1-t)^{-alpha-1} e^{x t/(t-1)}, and x t/(t-1) = -x (1/(1-t) - 1).
         const auto one_minus_t = to_poly_series(RationalSeries::constant(1, n) - RationalSeries::identity(n));
         const MultiPoly alpha = param_or_var(p.alpha, Var::alpha);
         const auto weight = ser_pow(one_minus_t, -alpha - MultiPoly(1));
         const auto expo = ser_exp(to_poly_series(geometric_minus_one(n)).scaled(-param_or_var(p.x, Var::x)));
         return weight * expo;
       }},
  };
  return table;
}

}  // namespace

PolySeries gf_catalog(std::string_view name, const GfParams& params, std::size_t order) {
  const auto& table = builders();
  const auto it = table.find(name);
  if (it == table.end()) throw UnknownNameError("unknown generating function: '" + std::string(name) + "'");
  return it->second(params, order);
}

const std::vector<std::string>& gf_catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : builders()) v.push_back(k);
    return v;
  }();
  return names;
}

}  // namespace lahbell
