#include "feec/ratmat.hpp"

#include <cassert>
#include <utility>

namespace feec {

namespace {

// Row echelon by exact Gaussian elimination; returns pivot columns.
// Operates on an explicit row list so solve() can carry an augmented column.
std::vector<int> echelonize(std::vector<std::vector<Rational>>& rows,
                            int cols) {
  std::vector<int> pivot_cols;
  int next_row = 0;
  for (int col = 0; col < cols && next_row < static_cast<int>(rows.size());
       ++col) {
    int pivot = -1;
    for (int i = next_row; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[next_row], rows[pivot]);
    Rational inv = 1 / rows[next_row][col];
    for (int j = col; j < static_cast<int>(rows[next_row].size()); ++j)
      rows[next_row][j] *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == next_row || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (int j = col; j < static_cast<int>(rows[i].size()); ++j)
        rows[i][j] -= f * rows[next_row][j];
    }
    pivot_cols.push_back(col);
    ++next_row;
  }
  return pivot_cols;
}

std::vector<std::vector<Rational>> to_rows(const RatMat& m) {
  std::vector<std::vector<Rational>> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    rows[i].resize(m.cols());
    for (int j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  }
  return rows;
}

}  // namespace

int rank(RatMat m) {
  auto rows = to_rows(m);
  return static_cast<int>(echelonize(rows, m.cols()).size());
}

std::optional<std::vector<Rational>> solve(const RatMat& a,
                                           const std::vector<Rational>& b) {
  assert(static_cast<int>(b.size()) == a.rows());
  auto rows = to_rows(a);
  for (int i = 0; i < a.rows(); ++i) rows[i].push_back(b[i]);
  auto pivot_cols = echelonize(rows, a.cols());
  // Inconsistent when a nonzero augmented entry remains in a zero row.
  for (int i = static_cast<int>(pivot_cols.size()); i < a.rows(); ++i)
    if (rows[i][a.cols()] != 0) return std::nullopt;
  std::vector<Rational> x(a.cols(), Rational(0));
  for (std::size_t p = 0; p < pivot_cols.size(); ++p)
    x[pivot_cols[p]] = rows[p][a.cols()];
  return x;
}

std::vector<std::vector<Rational>> nullspace(const RatMat& a) {
  auto rows = to_rows(a);
  auto pivot_cols = echelonize(rows, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (int free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(a.cols(), Rational(0));
    v[free_col] = 1;
    for (std::size_t p = 0; p < pivot_cols.size(); ++p)
      v[pivot_cols[p]] = -rows[p][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const RatMat& a) {
  assert(a.rows() == a.cols());
  int n = a.rows();
  if (n == 0) return Rational(1);

  // Clear denominators row by row so elimination stays in the integers.
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  Integer scale(1);
  for (int i = 0; i < n; ++i) {
    Integer row_lcm(1);
    for (int j = 0; j < n; ++j)
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(),
              a.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < n; ++j) {
      Rational scaled = a.at(i, j) * Rational(row_lcm);
      assert(scaled.get_den() == 1);
      m[i][j] = scaled.get_num();
    }
    scale *= row_lcm;
  }

  int sign = 1;
  Integer prev(1);
  for (int k = 0; k < n - 1; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (m[i][k] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Rational det(sign * m[n - 1][n - 1]);
  det /= Rational(scale);
  det.canonicalize();
  return det;
}

bool Echelon::insert(std::vector<Rational> v) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational f = v[pivots_[r]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows_[r][j];
  }
  int pivot = -1;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) {
      pivot = static_cast<int>(j);
      break;
    }
  if (pivot < 0) return false;
  Rational inv = 1 / v[pivot];
  for (auto& x : v) x *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace feec
