#include "doctest.h"

#include "feec/errors.hpp"
#include "feec/metric.hpp"
#include "feec/parse.hpp"
#include "feec/print.hpp"

using namespace feec;

TEST_CASE("inner products of coordinate covectors") {
  int n = 2;
  DiffForm dx = parse_diff_form("dx", n);
  DiffForm dy = parse_diff_form("dy", n);
  CHECK(inner_product(dx, dx) == SLocalPoly(Polynomial::variable(3, 0)));
  CHECK(inner_product(dx, dy).is_zero());
  DiffForm dxy = parse_diff_form("dx/\\dy", n);
  DiffForm dxz = parse_diff_form("dx/\\dz", n);
  CHECK(inner_product(dxy, dxy) ==
        SLocalPoly(Polynomial::variable(3, 0) * Polynomial::variable(3, 1)));
  CHECK(inner_product(dxy, dxz).is_zero());
  CHECK_THROWS_AS(inner_product(dx, dxy), DomainError);
  // bilinear over coefficients
  DiffForm a = parse_diff_form("y*dx + dz", n);
  CHECK(inner_product(a, dx) == SLocalPoly(Polynomial::variable(3, 0) *
                                           Polynomial::variable(3, 1)));
}

TEST_CASE("star on the covector basis") {
  int n = 2;
  SimplexContext ctx(n);
  CHECK(hodge_star(ctx, parse_diff_form("1", n)) ==
        parse_diff_form("dx/\\dy/\\dz", n));
  CHECK(hodge_star(ctx, parse_diff_form("dx", n)) ==
        parse_diff_form("x*dy/\\dz", n));
  CHECK(hodge_star(ctx, parse_diff_form("dy", n)) ==
        parse_diff_form("0 - y*dx/\\dz", n));
  CHECK(hodge_star(ctx, parse_diff_form("dx/\\dy", n)) ==
        parse_diff_form("x*y*dz", n));
  CHECK(hodge_star(ctx, parse_diff_form("dx/\\dy/\\dz", n)) ==
        parse_diff_form("x*y*z", n));
}

TEST_CASE("star doubled is the coordinate product up to sign") {
  int n = 2;
  SimplexContext ctx(n);
  DiffForm p = parse_diff_form("x*y*z", n);
  for (const char* text : {"dx", "dy", "x*dz", "dx/\\dy", "y*dy/\\dz"}) {
    DiffForm a = parse_diff_form(text, n);
    int k = a.degree();
    int sign = (k * (3 - k)) % 2 == 0 ? 1 : -1;
    CHECK(hodge_star(ctx, hodge_star(ctx, a)) ==
          Rational(sign) * wedge(p, a));
  }
}

TEST_CASE("defining relation against the volume form") {
  int n = 2;
  SimplexContext ctx(n);
  DiffForm a = parse_diff_form("y*dx + x*dz", n);
  DiffForm b = parse_diff_form("dx - z*dy", n);
  DiffForm lhs = wedge(a, hodge_star(ctx, b));
  DiffForm expect(3, 3);
  expect.add_term({0, 1, 2}, inner_product(a, b));
  CHECK(lhs == expect);
}

TEST_CASE("star inverse") {
  int n = 2;
  SimplexContext ctx(n);
  DiffForm a = parse_diff_form("y*dx - x*dy", n);
  DiffForm starred = hodge_star(ctx, a);
  CHECK(hodge_star_inverse(ctx, starred) == a);
  // dy /\ dz is not in the image: inverting needs division by x
  CHECK_THROWS_AS(hodge_star_inverse(ctx, parse_diff_form("dy/\\dz", n)),
                  NotInRange);
}
