#pragma once

// Reference integrators used only by the tests.  They compute simplex
// integrals by symbolic antidifferentiation, one variable at a time, so they
// share no code path (and no factorial identities) with the library routines
// they are checked against.

#include "feec/forms.hpp"
#include "feec/polynomial.hpp"

namespace feec::oracle {

// Integral of p over {x >= 0, x_1 + ... + x_d <= 1} where d = p.nvars().
Rational integrate_region(const Polynomial& p);

// Integral of x^a over the same region with d = a.size().
Rational integrate_monomial(const MultiIndex& a);

// Integral of a top-degree form on the n-simplex, pulled back through the
// chart (x_1, ..., x_n) |-> (x_1, ..., x_n, 1 - x_1 - ... - x_n).
Rational integrate_simplex_form(const SimplexForm& a);

// Integral of a polynomial top-degree form over the solid region s <= 1.
Rational integrate_solid_form(const DiffForm& a);

}  // namespace feec::oracle
