#include "doctest.h"

#include "feec/calculus.hpp"
#include "feec/errors.hpp"
#include "feec/metric.hpp"
#include "feec/parse.hpp"
#include "feec/print.hpp"
#include "feec/spaces.hpp"

using namespace feec;

namespace {

bool contains(const FormSpace& space, const DiffForm& a) {
  return member(space, a).has_value();
}

}  // namespace

TEST_CASE("homogeneous space dimensions") {
  CHECK(space_H(2, 1, 1).dim() == 9);   // 3 monomials x 3 covectors
  CHECK(space_H(2, 0, 0).dim() == 1);
  CHECK(space_H(2, 2, 3).dim() == 6);   // top covector, 6 quadratics
  CHECK(space_H(1, 3, 0).dim() == 4);
  CHECK_THROWS_AS(space_H(0, 1, 0), DomainError);
  CHECK_THROWS_AS(space_H(2, -1, 0), DomainError);
  CHECK_THROWS_AS(space_H(2, 1, 4), DomainError);
}

TEST_CASE("trial space dimensions match the simplex counts") {
  // dim = C(r+k, k) C(n+r, n-k) for the full family
  CHECK(space_P(2, 1, 0).dim() == 3);
  CHECK(space_P(2, 1, 1).dim() == 6);
  CHECK(space_P(2, 1, 2).dim() == 3);
  CHECK(space_P(2, 2, 1).dim() == 12);
  CHECK(space_P(3, 2, 2).dim() == 30);
  // dim = C(r+k-1, k) C(n+r, n-k) for the reduced family
  CHECK(space_Pminus(2, 1, 0).dim() == 3);
  CHECK(space_Pminus(2, 1, 1).dim() == 3);
  CHECK(space_Pminus(2, 1, 2).dim() == 1);
  CHECK(space_Pminus(2, 2, 1).dim() == 8);
  CHECK(space_Pminus(3, 2, 2).dim() == 15);
  CHECK_THROWS_AS(space_Pminus(2, 0, 0), DomainError);
}

TEST_CASE("reduced trial space at degree one is spanned by rotations") {
  FormSpace pm = space_Pminus(2, 1, 1);
  REQUIRE(pm.dim() == 3);
  for (const char* text : {"y*dx - x*dy", "z*dy - y*dz", "x*dz - z*dx"}) {
    CAPTURE(text);
    CHECK(contains(pm, parse_diff_form(text, 2)));
  }
  CHECK(!contains(pm, parse_diff_form("y*dx", 2)));
  CHECK(!contains(pm, parse_diff_form("x*dx", 2)));
  // coordinates reconstruct the element
  DiffForm probe = parse_diff_form("2*(y*dx - x*dy) - (x*dz - z*dx)", 2);
  auto coords = member(pm, probe);
  REQUIRE(coords.has_value());
  DiffForm rebuilt(3, 1);
  for (size_t i = 0; i < coords->size(); ++i) {
    rebuilt += (*coords)[i] * pm.basis[i];
  }
  CHECK(rebuilt == probe);
}

TEST_CASE("full trial space at degree one") {
  FormSpace p = space_P(2, 1, 1);
  REQUIRE(p.dim() == 6);
  for (const char* text : {"y*dx/\\ds", "x*dy/\\ds", "z*dy/\\ds", "y*dz/\\ds",
                           "x*dz/\\ds", "z*dx/\\ds"}) {
    CAPTURE(text);
    CHECK(contains(p, parse_diff_form(text, 2)));
  }
  CHECK(!contains(p, parse_diff_form("dx/\\ds", 2)));
  // scalars pair with the measure factor ds
  FormSpace p0 = space_P(2, 1, 0);
  for (const char* text : {"x*ds", "y*ds", "z*ds"}) {
    CHECK(contains(p0, parse_diff_form(text, 2)));
  }
}

TEST_CASE("membership rejects shape mismatches and localized forms") {
  FormSpace pm = space_Pminus(2, 1, 1);
  CHECK_THROWS_AS(contains(pm, parse_diff_form("dx/\\dy", 2)), DomainError);
  CHECK(!contains(pm, parse_diff_form("(x*y/s)*dx", 2)));
  // zero is always a member with zero coordinates
  auto zero_coords = member(pm, DiffForm(3, 1));
  REQUIRE(zero_coords.has_value());
  for (const auto& c : *zero_coords) CHECK(c == Rational(0));
}

TEST_CASE("ring subspaces") {
  CHECK(ring_subspace(space_H(2, 0, 0)).dim() == 0);
  FormSpace top = space_H(2, 3, 3);
  CHECK(ring_subspace(top).dim() == top.dim());
  FormSpace ring_p = ring_subspace(space_P(2, 2, 1));
  CHECK(ring_p.dim() == 3);
  CHECK(ring_p.kind == SpaceKind::RingP);
  // every ring element has vanishing pullback to every ambient face
  for (const auto& b : ring_p.basis) {
    for (int face = 0; face < 3; ++face) {
      CHECK(pullback_face(b, face).is_zero());
    }
  }
  // idempotent
  CHECK(ring_subspace(ring_p).dim() == 3);
  FormSpace ring_pm = ring_subspace(space_Pminus(2, 2, 1));
  CHECK(ring_pm.dim() == 2);
}

TEST_CASE("star exchanges the two families on ring subspaces") {
  SimplexContext ctx(2);
  FormSpace pm = space_Pminus(2, 1, 1);
  FormSpace ring_p = ring_subspace(space_P(2, 2, 1));
  for (const auto& b : pm.basis) {
    CHECK(contains(ring_p, hodge_star(ctx, b)));
  }
  FormSpace p = space_P(2, 1, 1);
  FormSpace ring_pm = ring_subspace(space_Pminus(2, 3, 1));
  for (const auto& b : p.basis) {
    CHECK(contains(ring_pm, hodge_star(ctx, b)));
  }
}

TEST_CASE("transfer to and from the simplex") {
  SimplexContext ctx(2);
  // golden transfer of the first covector
  SimplexForm dx = parse_simplex_form("dx", 2);
  CHECK(from_T(ctx, dx, SpaceKind::P, 1) == parse_diff_form("s*dx/\\ds", 2));
  CHECK(from_T(ctx, dx, SpaceKind::Pminus, 1) ==
        parse_diff_form("y*dx + z*dx - x*dy - x*dz", 2));
  // round trips on both families
  for (const auto& b : space_P(2, 2, 1).basis) {
    CHECK(from_T(ctx, to_T(ctx, b, SpaceKind::P), SpaceKind::P, 2) == b);
  }
  for (const auto& b : space_Pminus(2, 2, 1).basis) {
    CHECK(from_T(ctx, to_T(ctx, b, SpaceKind::Pminus), SpaceKind::Pminus, 2) ==
          b);
  }
  // traces outside the trial space do not extend polynomially
  CHECK_THROWS_AS(
      from_T(ctx, parse_simplex_form("x^2*dx", 2), SpaceKind::Pminus, 1),
      NotPolynomialResult);
}
