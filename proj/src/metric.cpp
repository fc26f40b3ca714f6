#include "feec/metric.hpp"

#include <cassert>

#include "feec/errors.hpp"

namespace feec {

SLocalPoly inner_product(const DiffForm& a, const DiffForm& b) {
  assert(a.ambient() == b.ambient());
  if (a.degree() != b.degree())
    throw DomainError("inner product needs forms of equal degree");
  SLocalPoly acc = SLocalPoly::zero(a.ambient());
  for (const auto& [I, f] : a.terms()) {
    auto it = b.terms().find(I);
    if (it == b.terms().end()) continue;
    MultiIndex m(a.ambient(), 0);
    for (int i : I) m[i] = 1;
    acc = acc + SLocalPoly(Polynomial::monomial(m, Rational(1))) * f * it->second;
  }
  return acc;
}

DiffForm hodge_star(const SimplexContext& ctx, const DiffForm& a) {
  assert(a.ambient() == ctx.ambient);
  DiffForm r(ctx.ambient, ctx.ambient - a.degree());
  for (const auto& [I, f] : a.terms()) {
    auto [comp, sign] = complement_index_set(I, ctx.ambient);
    MultiIndex m(ctx.ambient, 0);
    for (int i : I) m[i] = 1;
    SLocalPoly c = SLocalPoly(Polynomial::monomial(m, Rational(sign))) * f;
    r.add_term(comp, c);
  }
  return r;
}

DiffForm hodge_star_inverse(const SimplexContext& ctx, const DiffForm& a) {
  DiffForm starred = hodge_star(ctx, a);
  int k = starred.degree();
  int sign = (k * (ctx.ambient - k)) % 2 == 0 ? 1 : -1;
  MultiIndex ones(ctx.ambient, 1);
  DiffForm r(ctx.ambient, k);
  for (const auto& [I, f] : starred.terms()) {
    auto q = divided_by_monomial(f.num(), ones);
    if (!q) {
      throw NotInRange(
          "hodge_star_inverse: coefficient not divisible by the coordinate "
          "product");
    }
    r.add_term(I, SLocalPoly(Rational(sign) * *q, f.s_power()));
  }
  return r;
}

}  // namespace feec
