#include "doctest.h"

#include "feec/forms.hpp"
#include "feec/parse.hpp"
#include "feec/print.hpp"

using namespace feec;

TEST_CASE("index set merging") {
  auto m = merge_index_sets({0, 2}, {1});
  REQUIRE(m.has_value());
  CHECK((m->first == IndexSet{0, 1, 2}));
  CHECK(m->second == -1);  // one transposition moves 1 past 2
  CHECK(!merge_index_sets({0, 1}, {1}).has_value());
  auto empty = merge_index_sets({}, {0, 1});
  REQUIRE(empty.has_value());
  CHECK(empty->second == 1);
  CHECK((complement_index_set({0, 2}, 4).first == IndexSet{1, 3}));
}

TEST_CASE("wedge is graded-commutative and associative") {
  int n = 2;
  DiffForm a = parse_diff_form("x*dx + y*dy", n);
  DiffForm b = parse_diff_form("z*dz + dx", n);
  DiffForm c = parse_diff_form("dy", n);
  CHECK(wedge(a, b) == -Rational(1) * wedge(b, a));
  CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  DiffForm f = parse_diff_form("x^2 + y*z", n);
  CHECK(wedge(f, a) == wedge(a, f));
}

TEST_CASE("contraction is an antiderivation") {
  int n = 2;
  SimplexContext ctx(n);
  DiffForm a = parse_diff_form("x*dx + z*dy", n);
  DiffForm b = parse_diff_form("dy/\\dz", n);
  DiffForm lhs = contract_left(ctx.euler, wedge(a, b));
  DiffForm rhs = wedge(contract_left(ctx.euler, a), b) -
                 wedge(a, contract_left(ctx.euler, b));
  CHECK(lhs == rhs);
  // i_X dx_i = x_i
  DiffForm dx = parse_diff_form("dx", n);
  CHECK(contract_left(ctx.euler, dx) == parse_diff_form("x", n));
  // j_V = (-1)^(k-1) i_V on k-forms
  CHECK(contract_right(ctx.euler, b) == -Rational(1) * contract_left(ctx.euler, b));
  CHECK(contract_right(ctx.euler, dx) == contract_left(ctx.euler, dx));
}

TEST_CASE("double contraction vanishes") {
  SimplexContext ctx(3);
  DiffForm vol = parse_diff_form("dx/\\dy/\\dz/\\dw", 3);
  DiffForm once = contract_left(ctx.euler, vol);
  CHECK(contract_left(ctx.euler, once).is_zero());
}

TEST_CASE("face pullback kills the conormal terms") {
  int n = 2;
  DiffForm a = parse_diff_form("x*dy + y*dx + z*dz", n);
  DiffForm on_face = pullback_face(a, 2);  // z = 0
  CHECK(on_face.coefficient({2}).num().is_zero());
  CHECK(on_face.coefficient({1}) == SLocalPoly(Polynomial::variable(3, 0)));
  CHECK(on_face.coefficient({0}) == SLocalPoly(Polynomial::variable(3, 1)));
  // a coefficient vanishing only on the face
  DiffForm b = parse_diff_form("z*dy", n);
  CHECK(pullback_face(b, 2).is_zero());
  CHECK(!pullback_face(b, 0).is_zero());
}

TEST_CASE("restriction to the simplex eliminates the last coordinate") {
  int n = 2;
  SimplexContext ctx(n);
  // ds pulls back to zero on s = 1
  CHECK(restrict_to_simplex(ctx, ctx.ds).is_zero());
  DiffForm a = parse_diff_form("z*dx", n);
  SimplexForm t = restrict_to_simplex(ctx, a);
  // z = 1 - x - y on the simplex
  Polynomial expect = Polynomial::constant(2, Rational(1)) -
                      Polynomial::variable(2, 0) - Polynomial::variable(2, 1);
  CHECK(t.coefficient({0}) == expect);
  // dz = -dx - dy on the simplex
  SimplexForm tz = restrict_to_simplex(ctx, parse_diff_form("dz", n));
  CHECK(tz.coefficient({0}) == Polynomial::constant(2, Rational(-1)));
  CHECK(tz.coefficient({1}) == Polynomial::constant(2, Rational(-1)));
}

TEST_CASE("homogeneous lift inverts restriction on homogeneous forms") {
  int n = 2;
  SimplexContext ctx(n);
  DiffForm a = parse_diff_form("y*dx - x*dy", n);
  SimplexForm t = restrict_to_simplex(ctx, a);
  DiffForm back = homogeneous_lift(ctx, t, 1);
  CHECK(restrict_to_simplex(ctx, back) == t);
  CHECK(form_homogeneity(back) == 1);
}

TEST_CASE("form homogeneity detection") {
  int n = 2;
  CHECK(form_homogeneity(parse_diff_form("x*dx + z*dy", n)) == 1);
  CHECK(form_homogeneity(parse_diff_form("x^2*dx", n)) == 2);
  CHECK(!form_homogeneity(parse_diff_form("x*dx + dy", n)).has_value());
  CHECK(form_homogeneity(parse_diff_form("(x/s)*dx", n)) == 0);
}

TEST_CASE("simplex face pullback") {
  SimplexForm a(2, 1);
  a.add_term({0}, Polynomial::variable(2, 1));  // y dx
  SimplexForm at_y0 = simplex_face_pullback(a, 1);
  CHECK(at_y0.is_zero());
  SimplexForm at_x0 = simplex_face_pullback(a, 0);
  CHECK(at_x0.is_zero());  // dx dies on x = 0
}
