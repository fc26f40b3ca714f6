#include "oracles.hpp"

#include <stdexcept>

namespace feec::oracle {

Rational integrate_region(const Polynomial& p) {
  int d = p.nvars();
  if (d == 0) return p.coefficient(MultiIndex{});
  if (p.is_zero()) return Rational(0);

  // Antiderivative with respect to the last variable; every term then has a
  // positive last exponent, so the lower limit contributes nothing.
  Polynomial anti(d);
  for (const auto& [m, c] : p.terms()) {
    MultiIndex up = m;
    up[d - 1] += 1;
    anti.add_term(up, c / Rational(up[d - 1]));
  }

  Polynomial upper = Polynomial::constant(d, Rational(1));
  for (int i = 0; i + 1 < d; ++i) upper -= Polynomial::variable(d, i);
  return integrate_region(anti.substituted(d - 1, upper).truncated(d - 1));
}

Rational integrate_monomial(const MultiIndex& a) {
  return integrate_region(Polynomial::monomial(a, Rational(1)));
}

Rational integrate_simplex_form(const SimplexForm& a) {
  if (a.degree() != a.dim()) {
    throw std::invalid_argument("integrate_simplex_form: not a top form");
  }
  IndexSet all;
  for (int i = 0; i < a.dim(); ++i) all.push_back(i);
  // The simplex carries the boundary orientation of the solid region (outward
  // normal first).  In the chart coordinates that orientation is
  // (-1)^n dx_1 ^ ... ^ dx_n: inserting the outward field into the ambient
  // volume form and restricting gives (-1)^n times the chart volume form.
  Rational sign = a.dim() % 2 == 0 ? Rational(1) : Rational(-1);
  return sign * integrate_region(a.coefficient(all));
}

Rational integrate_solid_form(const DiffForm& a) {
  if (a.degree() != a.ambient()) {
    throw std::invalid_argument("integrate_solid_form: not a top form");
  }
  IndexSet all;
  for (int i = 0; i < a.ambient(); ++i) all.push_back(i);
  SLocalPoly f = a.coefficient(all);
  if (!f.is_polynomial()) {
    throw std::invalid_argument("integrate_solid_form: s-localized coefficient");
  }
  return integrate_region(f.num());
}

}  // namespace feec::oracle
