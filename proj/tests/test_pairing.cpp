#include <random>
#include <vector>

#include "doctest.h"

#include "feec/calculus.hpp"
#include "feec/errors.hpp"
#include "feec/metric.hpp"
#include "feec/pairing.hpp"
#include "feec/parse.hpp"
#include "feec/print.hpp"
#include "feec/spaces.hpp"

#include "oracles.hpp"

using namespace feec;

namespace {

int irand(std::mt19937& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

DiffForm random_combination(std::mt19937& rng, const FormSpace& space) {
  DiffForm out(space.n + 1, space.form_degree);
  for (const auto& b : space.basis) {
    out += Rational(irand(rng, -3, 3)) * b;
  }
  return out;
}

}  // namespace

TEST_CASE("solid moments against the antidifferentiation oracle") {
  // every multi-index of total degree <= 6 in one to four variables
  for (int d = 1; d <= 4; ++d) {
    for (int total = 0; total <= 6; ++total) {
      for (const auto& a : monomials_of_degree(d, total)) {
        CAPTURE(d);
        CAPTURE(total);
        CHECK(integrate_monomial_solid(a) == oracle::integrate_monomial(a));
      }
    }
  }
  CHECK(integrate_monomial_solid({1, 1}) == Rational(1, 24));
  CHECK(integrate_monomial_solid({1, 1, 0}) == Rational(1, 120));
}

TEST_CASE("solid form integration") {
  DiffForm vol = parse_diff_form("dx/\\dy/\\dz", 2);
  CHECK(integrate_solid(vol) == Rational(1, 6));
  DiffForm weighted = parse_diff_form("x*y*z*dx/\\dy/\\dz", 2);
  CHECK(integrate_solid(weighted) == Rational(1, 720));
  CHECK(integrate_solid(weighted) == oracle::integrate_solid_form(weighted));
  CHECK_THROWS_AS(integrate_solid(parse_diff_form("dx/\\dy", 2)), DomainError);
  CHECK_THROWS_AS(integrate_solid(parse_diff_form("(x^4/s)*dx/\\dy/\\dz", 2)),
                  DomainError);
}

TEST_CASE("insertion relates solid and boundary integrals") {
  // (n + r + 1) int_solid mu = int_simplex trace(i_X mu) for homogeneous mu
  std::mt19937 rng(20240817u);
  for (int n = 1; n <= 3; ++n) {
    SimplexContext ctx(n);
    for (int r = 0; r <= 3; ++r) {
      IndexSet all;
      for (int i = 0; i <= n; ++i) all.push_back(i);
      DiffForm mu(n + 1, n + 1);
      Polynomial coeff(n + 1);
      for (const auto& m : monomials_of_degree(n + 1, r)) {
        coeff.add_term(m, Rational(irand(rng, -4, 4)));
      }
      if (coeff.is_zero()) continue;
      mu.add_term(all, SLocalPoly(coeff));
      SimplexForm trace = restrict_to_simplex(ctx, contract_left(ctx.euler, mu));
      CHECK(Rational(n + r + 1) * oracle::integrate_solid_form(mu) ==
            oracle::integrate_simplex_form(trace));
      CHECK(integrate_solid(mu) == oracle::integrate_solid_form(mu));
    }
  }
}

TEST_CASE("simplex pairing equals the direct chart integral") {
  std::mt19937 rng(7291823u);
  int checked = 0;
  for (int n = 1; n <= 3; ++n) {
    SimplexContext ctx(n);
    for (int ra = 1; ra <= 2; ++ra) {
      for (int rb = 1; rb <= 2; ++rb) {
        for (int k = 0; k <= n; ++k) {
          FormSpace pm = space_Pminus(n, ra, k);
          FormSpace p = space_P(n, rb, n - k);
          if (pm.dim() == 0 || p.dim() == 0) continue;
          SimplexForm a = to_T(ctx, random_combination(rng, pm),
                               SpaceKind::Pminus);
          SimplexForm b = to_T(ctx, random_combination(rng, p), SpaceKind::P);
          Rational via_solid = pair_simplex(ctx, a, b, ra, rb);
          Rational direct = oracle::integrate_simplex_form(wedge(a, b));
          CAPTURE(n);
          CAPTURE(ra);
          CAPTURE(rb);
          CAPTURE(k);
          CHECK(via_solid == direct);
          ++checked;
        }
      }
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("pairing matrices and duality cells") {
  DualityReport report = verify_duality(2, 1, 1);
  CHECK(report.cells.size() == 3);
  for (const auto& cell : report.cells) {
    CAPTURE(cell.label);
    CHECK(cell.square);
    CHECK(cell.nondegenerate);
    CHECK(cell.rank == cell.dim_rows);
    CHECK(cell.det != Rational(0));
  }
  CHECK(report.ok());
  // the first cell pairs the 3-dimensional reduced space with the interior
  // of the full space
  CHECK(report.cells[0].dim_rows == 3);
  CHECK(report.cells[0].dim_cols == 3);

  // shape guard: degrees must sum to the ambient dimension
  FormSpace bad = space_Pminus(2, 1, 1);
  CHECK_THROWS_AS(pairing_matrix(bad, bad), DomainError);
}

TEST_CASE("metric Gram matrices are positive definite") {
  SimplexContext ctx(2);
  FormSpace h = space_H(2, 1, 1);
  RatMat gram(h.dim(), h.dim());
  for (int i = 0; i < h.dim(); ++i) {
    for (int j = 0; j < h.dim(); ++j) {
      gram.at(i, j) =
          integrate_solid(wedge(h.basis[i], hodge_star(ctx, h.basis[j])));
    }
  }
  // Sylvester: every leading principal minor is positive
  for (int m = 1; m <= h.dim(); ++m) {
    RatMat lead(m, m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) lead.at(i, j) = gram.at(i, j);
    }
    CHECK(determinant(lead) > 0);
  }
}
