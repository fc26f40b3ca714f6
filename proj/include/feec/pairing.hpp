#pragma once

#include <string>
#include <vector>

#include "feec/ratmat.hpp"
#include "feec/spaces.hpp"

namespace feec {

// Exact moment of x^a over the solid simplex {x >= 0, sum x <= 1} in
// ambient dimension a.size(): (prod a_i!) / (|a| + d)!.
Rational integrate_monomial_solid(const MultiIndex& a);

// Exact integral of a polynomial top form over the solid simplex.  The form
// must have degree equal to its ambient dimension and polynomial
// coefficients; anything else throws DomainError.
Rational integrate_solid(const DiffForm& a);

// Pairing of simplex forms of complementary degree, computed through the
// orthant: lift a horizontally at degree ra, lift b vertically at degree rb,
// and integrate the wedge over the solid simplex with the closed-form
// normalization (-1)^n (n + ra + rb + 1).
Rational pair_simplex(const SimplexContext& ctx, const SimplexForm& a,
                      const SimplexForm& b, int ra, int rb);

struct PairingMatrix {
  FormSpace rows;
  FormSpace cols;
  RatMat entries;  // entries(i, j) = integral of rows[i] ^ cols[j]
};

// Matrix of wedge-integrals between two bases whose degrees sum to the
// ambient dimension.
PairingMatrix pairing_matrix(const FormSpace& rows, const FormSpace& cols);

struct PairingCell {
  std::string label;
  int dim_rows = 0;
  int dim_cols = 0;
  int rank = 0;
  bool square = false;
  Rational det;  // meaningful only when square
  bool nondegenerate = false;
};

struct DualityReport {
  int n = 0;
  int r = 0;
  int k = 0;
  std::vector<PairingCell> cells;
  bool ok() const {
    for (const auto& c : cells) {
      if (!c.nondegenerate) return false;
    }
    return true;
  }
};

// Builds and analyzes the three dual pairings at (n, r, k):
//   Pminus_r^k   x  ringP_{r+k}^{n-k}
//   P_r^k        x  ringPminus_{r+k+1}^{n-k}
//   H_r^k        x  ringH_{r+k}^{n+1-k}
// Each cell records dimensions, exact rank, and (when square) the exact
// determinant.  A cell passes when the matrix is square and nonsingular;
// an empty 0 x 0 pairing passes vacuously.
DualityReport verify_duality(int n, int r, int k);

PairingCell analyze_pairing(const std::string& label, const FormSpace& rows,
                            const FormSpace& cols);

}  // namespace feec
