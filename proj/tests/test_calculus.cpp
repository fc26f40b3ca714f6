#include "doctest.h"

#include "feec/calculus.hpp"
#include "feec/errors.hpp"
#include "feec/parse.hpp"
#include "feec/print.hpp"

using namespace feec;

TEST_CASE("exterior derivative") {
  int n = 2;
  DiffForm f = parse_diff_form("x^2*y", n);
  DiffForm df = d(f);
  CHECK(df == parse_diff_form("2*x*y*dx + x^2*dy", n));
  CHECK(d(df).is_zero());
  // product rule
  DiffForm a = parse_diff_form("x*dy", n);
  DiffForm b = parse_diff_form("z*dx", n);
  CHECK(d(wedge(a, b)) == wedge(d(a), b) - wedge(a, d(b)));
  // quotient rule through the s-denominator
  DiffForm g = parse_diff_form("(x^2/s)*dy", n);
  CHECK(d(d(g)).is_zero());
}

TEST_CASE("Lie derivative along the Euler field scales homogeneous forms") {
  int n = 2;
  SimplexContext ctx(n);
  DiffForm a = parse_diff_form("x*y*dx/\\dz", n);  // homogeneity 2, degree 2
  CHECK(lie_euler(ctx, a) == Rational(4) * a);
  DiffForm b = parse_diff_form("(x^2/s)*dy", n);  // homogeneity 1, degree 1
  CHECK(lie_euler(ctx, b) == Rational(2) * b);
}

TEST_CASE("horizontal extension golden values") {
  int n = 2;
  SimplexContext ctx(n);
  struct Row {
    const char* input;
    int r;
    const char* expected;
  };
  const Row rows[] = {
      {"x^4 + 3*x*y + y^3", 4, "x^4 + 3*x*y*s^2 + y^3*s"},
      {"x^4 + 3*x*y + y^3", 2, "x^4/s^2 + 3*x*y + y^3/s"},
      {"dx", 1, "s*dx - x*ds"},
      {"dx", 0, "dx - (x/s)*ds"},
      {"y*dx", 1, "y*dx - (x*y/s)*ds"},
      {"y*dx - x*dy", 1, "y*dx - x*dy"},
      {"dx/\\dy", 1, "x*dy/\\dz + y*dz/\\dx + z*dx/\\dy"},
  };
  for (const auto& row : rows) {
    CAPTURE(row.input);
    CAPTURE(row.r);
    SimplexForm a = parse_simplex_form(row.input, n);
    DiffForm lifted = horizontal_extension(ctx, a, row.r);
    CHECK(lifted == parse_diff_form(row.expected, n));
    // the extension has the right trace and the Euler field kills it
    CHECK(restrict_to_simplex(ctx, lifted) == a);
    CHECK(contract_left(ctx.euler, lifted).is_zero());
  }
}

TEST_CASE("splitting of y dx") {
  int n = 2;
  SimplexContext ctx(n);
  DiffForm a = parse_diff_form("y*dx", n);
  Splitting parts = split(ctx, a);
  CHECK(parts.vertical == parse_diff_form("(x*y/s)*ds", n));
  CHECK(parts.horizontal == parse_diff_form("y*dx - (x*y/s)*ds", n));
  CHECK(parts.vertical + parts.horizontal == a);
  CHECK(contract_left(ctx.euler, parts.horizontal).is_zero());
}

TEST_CASE("splitting of a scalar is purely horizontal") {
  SimplexContext ctx(2);
  DiffForm f = parse_diff_form("x^2 + y*z", 2);
  Splitting parts = split(ctx, f);
  CHECK(parts.vertical.is_zero());
  CHECK(parts.horizontal == f);
}

TEST_CASE("degree-preserving derivative") {
  int n = 2;
  SimplexContext ctx(n);
  DiffForm a = parse_diff_form("y*dx", n);
  DiffForm da = modified_d(ctx, a);
  // annihilates every power of s times a closed form
  CHECK(modified_d(ctx, da).is_zero());
  DiffForm sform = parse_diff_form("s^3", n);
  CHECK(modified_d(ctx, sform).is_zero());
  // mixed homogeneity is rejected
  CHECK_THROWS_AS(modified_d(ctx, parse_diff_form("x*dx + dy", n)),
                  NotHomogeneous);
  // conjugation by the weight s^(r+k): here r = 1, k = 1
  DiffForm conj = d(a.s_shifted(2)).s_shifted(-2);
  CHECK(da == conj);
}

TEST_CASE("polynomial variant of the degree-preserving derivative") {
  int n = 2;
  SimplexContext ctx(n);
  DiffForm a = parse_diff_form("x^2*dy", n);
  DiffForm sa = s_modified_d(ctx, a);
  CHECK(sa.is_polynomial());
  // s bold-d = s * bold-d
  DiffForm sm = wedge(parse_diff_form("s", n), modified_d(ctx, a));
  CHECK(sa == sm);
  CHECK(s_modified_d(ctx, s_modified_d(ctx, a)).is_zero());
}

TEST_CASE("tangential Koszul insertion") {
  int n = 2;
  SimplexContext ctx(n);
  DiffForm dx = parse_diff_form("dx", n);
  CHECK(koszul(ctx, dx) == parse_diff_form("x - 1/3*s", n));
  DiffForm two = parse_diff_form("dx/\\dy", n);
  CHECK(koszul(ctx, koszul(ctx, two)).is_zero());
  // chart-side insertion squares to zero as well
  SimplexForm t(2, 2);
  t.add_term({0, 1}, Polynomial::constant(2, Rational(1)));
  SimplexForm kt = koszul(ctx, t);
  CHECK(koszul(ctx, kt).is_zero());
  CHECK(!kt.is_zero());
}

TEST_CASE("extension followed by restriction is the identity") {
  int n = 2;
  SimplexContext ctx(n);
  SimplexForm a = parse_simplex_form("x*dy - y^2*dx", n);
  for (int r = 0; r <= 3; ++r) {
    DiffForm lifted = horizontal_extension(ctx, a, r);
    CHECK(restrict_to_simplex(ctx, lifted) == a);
  }
}
