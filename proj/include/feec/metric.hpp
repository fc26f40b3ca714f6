#pragma once

#include "feec/forms.hpp"

namespace feec {

// Pointwise inner product of two forms of equal degree in the diagonal
// metric <dx_i, dx_i> = x_i.  On wedge monomials the Gram determinant
// collapses to: zero unless the index sets match, else the product of the
// indexed coordinates.
SLocalPoly inner_product(const DiffForm& a, const DiffForm& b);

// Hodge star of the degenerate metric against the Euclidean volume form:
// f dx_I  ->  sign(I, I^c) f (prod_{i in I} x_i) dx_{I^c}.
// Doubling multiplies by (-1)^(k(n+1-k)) times the coordinate product.
DiffForm hodge_star(const SimplexContext& ctx, const DiffForm& a);

// Inverse where defined: (-1)^(k(n+1-k)) (1/p) star.  The coordinate-product
// division must be exact; arguments outside the image throw NotInRange.
DiffForm hodge_star_inverse(const SimplexContext& ctx, const DiffForm& a);

}  // namespace feec
