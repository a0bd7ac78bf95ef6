#include "lahbell/polys.hpp"

#include <array>

#include "lahbell/errors.hpp"
#include "lahbell/numbers.hpp"

namespace lahbell {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames = {{
    {Family::bell, "bell"},
    {Family::lah_bell, "lah_bell"},
    {Family::bivariate_bell, "bivariate_bell"},
    {Family::bivariate_lah_bell, "bivariate_lah_bell"},
    {Family::degenerate_bell, "degenerate_bell"},
    {Family::degenerate_lah_bell, "degenerate_lah_bell"},
    {Family::laguerre, "laguerre"},
}};

// sum_k T(n,k) basis_k
template <typename Basis>
MultiPoly triangle_sum(TriangleKind kind, unsigned n, Basis&& basis) {
  const auto& row = shared_triangle(kind).row(n);
  MultiPoly r;
  for (unsigned k = 0; k <= n; ++k) {
    if (row[k] == 0) continue;
    r += basis(k) * BigRational(row[k]);
  }
  return r;
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames) {
    if (n == name) return fam;
  }
  throw UnknownNameError("unknown polynomial family: '" + std::string(name) + "'");
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> v = [] {
    std::vector<Family> out;
    for (const auto& [fam, _] : kFamilyNames) out.push_back(fam);
    return out;
  }();
  return v;
}

MultiPoly bell_poly(unsigned n) {
  return triangle_sum(TriangleKind::stirling2, n, [](unsigned k) { return MultiPoly::variable(Var::x, k); });
}

MultiPoly lah_bell_poly(unsigned n) {
  return triangle_sum(TriangleKind::lah, n, [](unsigned k) { return MultiPoly::variable(Var::x, k); });
}

MultiPoly bivariate_bell_poly(unsigned n) {
  return triangle_sum(TriangleKind::stirling2, n, [](unsigned k) {
    return falling_factorial(X(), k) * MultiPoly::variable(Var::y, k);
  });
}

MultiPoly bivariate_lah_bell_poly(unsigned n) {
  return triangle_sum(TriangleKind::lah, n, [](unsigned k) {
    return falling_factorial(X(), k) * MultiPoly::variable(Var::y, k);
  });
}

MultiPoly degenerate_bell_poly(unsigned n) {
  return triangle_sum(TriangleKind::stirling2, n,
                      [](unsigned k) { return generalized_falling(X(), k, Lambda()); });
}

MultiPoly degenerate_lah_bell_poly(unsigned n) {
  return triangle_sum(TriangleKind::lah, n, [](unsigned k) { return generalized_falling(X(), k, Lambda()); });
}

MultiPoly laguerre_poly(unsigned n, const MultiPoly& alpha) {
  MultiPoly r;
  for (unsigned k = 0; k <= n; ++k) {
    BigRational c(binomial(n, k));
    if (k % 2 == 1) c = -c;
    r += rising_factorial(alpha + MultiPoly(static_cast<long>(k) + 1), n - k) * MultiPoly::variable(Var::x, k) * c;
  }
  return r;
}

MultiPoly family_poly(Family f, unsigned n) {
  switch (f) {
    case Family::bell: return bell_poly(n);
    case Family::lah_bell: return lah_bell_poly(n);
    case Family::bivariate_bell: return bivariate_bell_poly(n);
    case Family::bivariate_lah_bell: return bivariate_lah_bell_poly(n);
    case Family::degenerate_bell: return degenerate_bell_poly(n);
    case Family::degenerate_lah_bell: return degenerate_lah_bell_poly(n);
    case Family::laguerre: return laguerre_poly(n);
  }
  throw UnknownNameError("unknown polynomial family");
}

MultiPoly lah_bell_recurrence_step(unsigned n, const std::vector<MultiPoly>& values) {
  if (values.size() != static_cast<std::size_t>(n) + 1) {
    throw PreconditionError("lah_bell_recurrence_step: expected " + std::to_string(n + 1) + " values, got " +
                            std::to_string(values.size()));
  }
  MultiPoly s;
  for (unsigned m = 0; m <= n; ++m) {
    s += values[m] * BigRational(binomial(n, m) * factorial(n - m + 1));
  }
  return X() * s;
}

MultiPoly lah_bell_derivative(unsigned n) {
  if (n == 0) throw PreconditionError("lah_bell_derivative: n must be at least 1");
  MultiPoly s;
  for (unsigned m = 0; m < n; ++m) {
    s += lah_bell_poly(m) * BigRational(binomial(n, m) * factorial(n - m));
  }
  return s;
}

}  // namespace lahbell
