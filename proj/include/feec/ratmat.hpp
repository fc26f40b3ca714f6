#pragma once

#include <optional>
#include <vector>

#include "feec/polynomial.hpp"

namespace feec {

// Dense matrix of exact rationals, row major.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

int rank(RatMat m);

// Any solution of A x = b, or nullopt when inconsistent (free variables zero).
std::optional<std::vector<Rational>> solve(const RatMat& a,
                                           const std::vector<Rational>& b);

// Basis of the right kernel of A.
std::vector<std::vector<Rational>> nullspace(const RatMat& a);

// Exact determinant.  Rows are scaled to integers, then eliminated with the
// fraction-free Bareiss recurrence; every interior division is exact.
Rational determinant(const RatMat& a);

// Incremental exact row reduction, used to pick deterministic maximal
// independent subsets in enumeration order.
class Echelon {
 public:
  // Reduces v against the rows seen so far; keeps it when independent.
  // Returns true exactly when v was independent.
  bool insert(std::vector<Rational> v);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<std::vector<Rational>> rows_;  // each normalized to pivot 1
  std::vector<int> pivots_;
};

}  // namespace feec
