#include "feec/calculus.hpp"

#include <cassert>

namespace feec {

DiffForm d(const DiffForm& a) {
  DiffForm r(a.ambient(), a.degree() + 1);
  for (const auto& [I, f] : a.terms())
    for (int i = 0; i < a.ambient(); ++i) {
      SLocalPoly df = partial_derivative(f, i);
      if (df.is_zero()) continue;
      auto merged = merge_index_sets({i}, I);
      if (!merged) continue;
      if (merged->second < 0) df = -df;
      r.add_term(merged->first, df);
    }
  return r;
}

SimplexForm d(const SimplexForm& a) {
  SimplexForm r(a.dim(), a.degree() + 1);
  for (const auto& [I, f] : a.terms())
    for (int i = 0; i < a.dim(); ++i) {
      Polynomial df = partial_derivative(f, i);
      if (df.is_zero()) continue;
      auto merged = merge_index_sets({i}, I);
      if (!merged) continue;
      if (merged->second < 0) df = -df;
      r.add_term(merged->first, df);
    }
  return r;
}

DiffForm lie_euler(const SimplexContext& ctx, const DiffForm& a) {
  return d(contract_left(ctx.euler, a)) + contract_left(ctx.euler, d(a));
}

DiffForm modified_d(const SimplexContext& ctx, const DiffForm& a) {
  if (a.is_zero()) return DiffForm(a.ambient(), a.degree() + 1);
  auto r = form_homogeneity(a);
  if (!r)
    throw NotHomogeneous(
        "degree-preserving derivative needs a homogeneous argument");
  int weight = *r + a.degree();
  return d(a) - (Rational(weight) * wedge(ctx.ds, a).s_shifted(1));
}

DiffForm s_modified_d(const SimplexContext& ctx, const DiffForm& a) {
  if (a.is_zero()) return DiffForm(a.ambient(), a.degree() + 1);
  auto r = form_homogeneity(a);
  if (!r)
    throw NotHomogeneous(
        "degree-preserving derivative needs a homogeneous argument");
  int weight = *r + a.degree();
  return SLocalPoly(ctx.s) * d(a) - Rational(weight) * wedge(ctx.ds, a);
}

DiffForm koszul(const SimplexContext& ctx, const DiffForm& a) {
  return contract_left(ctx.koszul_field, a);
}

SimplexForm koszul(const SimplexContext& ctx, const SimplexForm& a) {
  assert(a.dim() == ctx.n);
  Rational c(1, ctx.ambient);
  c.canonicalize();
  std::vector<Polynomial> components;
  components.reserve(ctx.n);
  for (int i = 0; i < ctx.n; ++i)
    components.push_back(Polynomial::variable(ctx.n, i) -
                         Polynomial::constant(ctx.n, c));
  return contract_left(components, a);
}

Splitting split(const SimplexContext& ctx, const DiffForm& a) {
  if (a.degree() == 0) {
    // scalars are purely horizontal
    return Splitting{DiffForm(ctx.ambient, 0), a};
  }
  DiffForm scaled = a.s_shifted(1);
  Splitting parts{wedge(ctx.ds, contract_left(ctx.euler, scaled)),
                  contract_left(ctx.euler, wedge(ctx.ds, scaled))};
  return parts;
}

DiffForm horizontal_extension(const SimplexContext& ctx, const SimplexForm& a,
                              int r) {
  DiffForm lifted = homogeneous_lift(ctx, a, r);
  return contract_left(ctx.euler, wedge(ctx.ds, lifted)).s_shifted(1);
}

}  // namespace feec
