#pragma once

#include "feec/forms.hpp"

namespace feec {

// Exterior derivative; the product rule for s-denominators is handled by the
// coefficient-level derivative.
DiffForm d(const DiffForm& a);
SimplexForm d(const SimplexForm& a);

// Lie derivative along the Euler field, via the Cartan formula.  Multiplies a
// form of homogeneity r and degree k by r + k.
DiffForm lie_euler(const SimplexContext& ctx, const DiffForm& a);

// The degree-preserving derivative d - (r+k)/s ds^(.) on forms of homogeneity
// r and degree k; conjugation of d by the weight s^(r+k).  Throws
// NotHomogeneous on mixed-degree input.
DiffForm modified_d(const SimplexContext& ctx, const DiffForm& a);

// s times modified_d, evaluated as s*da - (r+k) ds^a, which stays polynomial
// on polynomial input.
DiffForm s_modified_d(const SimplexContext& ctx, const DiffForm& a);

// Insertion of the tangential Koszul field (the Euler field minus its normal
// component s/(n+1) grad s).
DiffForm koszul(const SimplexContext& ctx, const DiffForm& a);
// The same field in chart coordinates on the simplex: components x_i - 1/(n+1).
SimplexForm koszul(const SimplexContext& ctx, const SimplexForm& a);

// g-orthogonal decomposition into a multiple of ds and a form annihilated by
// insertion of the Euler field.  Off the boundary the parts sum back to the
// input; both may pick up s-denominators.
struct Splitting {
  DiffForm vertical;    // ds ^ i_X (a / s)
  DiffForm horizontal;  // i_X (ds ^ (a / s))
};
Splitting split(const SimplexContext& ctx, const DiffForm& a);

// The horizontal homogeneous-degree-r extension of a form on the simplex:
// the unique degree-r form with the given trace that the Euler field
// annihilates.  Output is s-localized whenever the input lies outside the
// matching trial space.
DiffForm horizontal_extension(const SimplexContext& ctx, const SimplexForm& a,
                              int r);

}  // namespace feec
