#include "feec/pairing.hpp"

#include "feec/errors.hpp"

namespace feec {

Rational integrate_monomial_solid(const MultiIndex& a) {
  Integer numerator(1);
  for (int e : a) {
    if (e < 0) throw DomainError("integrate_monomial_solid: negative exponent");
    numerator *= factorial(e);
  }
  Rational value(numerator, factorial(mi_degree(a) + static_cast<int>(a.size())));
  value.canonicalize();
  return value;
}

Rational integrate_solid(const DiffForm& a) {
  if (a.degree() != a.ambient()) {
    throw DomainError("integrate_solid: not a top-degree form");
  }
  if (!a.is_polynomial()) {
    throw DomainError("integrate_solid: coefficients carry an s denominator");
  }
  Rational total(0);
  for (const auto& [I, coeff] : a.terms()) {
    (void)I;  // only the full index set can occur at top degree
    for (const auto& [m, c] : coeff.num().terms()) {
      total += c * integrate_monomial_solid(m);
    }
  }
  return total;
}

Rational pair_simplex(const SimplexContext& ctx, const SimplexForm& a,
                      const SimplexForm& b, int ra, int rb) {
  if (a.dim() != ctx.n || b.dim() != ctx.n) {
    throw DomainError("pair_simplex: dimension mismatch");
  }
  if (a.degree() + b.degree() != ctx.n) {
    throw DomainError("pair_simplex: degrees must sum to n");
  }
  DiffForm alpha = from_T(ctx, a, SpaceKind::Pminus, ra);
  DiffForm beta = from_T(ctx, b, SpaceKind::P, rb);
  Rational weight(ctx.n + ra + rb + 1);
  if (ctx.n % 2 != 0) weight = -weight;
  return weight * integrate_solid(wedge(alpha, beta));
}

PairingMatrix pairing_matrix(const FormSpace& rows, const FormSpace& cols) {
  if (rows.n != cols.n) {
    throw DomainError("pairing_matrix: spaces live over different simplices");
  }
  if (rows.form_degree + cols.form_degree != rows.n + 1) {
    throw DomainError("pairing_matrix: degrees must sum to the ambient dimension");
  }
  PairingMatrix out{rows, cols, RatMat(rows.dim(), cols.dim())};
  for (int i = 0; i < rows.dim(); ++i) {
    for (int j = 0; j < cols.dim(); ++j) {
      out.entries.at(i, j) = integrate_solid(wedge(rows.basis[i], cols.basis[j]));
    }
  }
  return out;
}

PairingCell analyze_pairing(const std::string& label, const FormSpace& rows,
                            const FormSpace& cols) {
  PairingMatrix mat = pairing_matrix(rows, cols);
  PairingCell cell;
  cell.label = label;
  cell.dim_rows = rows.dim();
  cell.dim_cols = cols.dim();
  cell.rank = rank(mat.entries);
  cell.square = cell.dim_rows == cell.dim_cols;
  if (cell.square) {
    cell.det = determinant(mat.entries);
    cell.nondegenerate = cell.det != 0;
  }
  return cell;
}

DualityReport verify_duality(int n, int r, int k) {
  DualityReport report;
  report.n = n;
  report.r = r;
  report.k = k;
  auto tag = [](const std::string& kind, int rr, int kk) {
    return kind + "(" + std::to_string(rr) + "," + std::to_string(kk) + ")";
  };
  report.cells.push_back(analyze_pairing(
      tag("Pminus", r, k) + " x " + tag("ringP", r + k, n - k),
      space_Pminus(n, r, k), ring_subspace(space_P(n, r + k, n - k))));
  report.cells.push_back(analyze_pairing(
      tag("P", r, k) + " x " + tag("ringPminus", r + k + 1, n - k),
      space_P(n, r, k), ring_subspace(space_Pminus(n, r + k + 1, n - k))));
  report.cells.push_back(analyze_pairing(
      tag("H", r, k) + " x " + tag("ringH", r + k, n + 1 - k),
      space_H(n, r, k), ring_subspace(space_H(n, r + k, n + 1 - k))));
  return report;
}

}  // namespace feec
