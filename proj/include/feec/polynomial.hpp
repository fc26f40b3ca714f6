#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "feec/errors.hpp"

namespace feec {

// Scalars are exact rationals, kept in lowest terms with positive denominator
// (GMP canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational rational_from_string(const std::string& text);
std::string to_string(const Rational& value);

Integer factorial(int m);
Integer binomial(int a, int b);  // zero when b < 0 or b > a

// Exponent vector of a monomial; one entry per variable.
using MultiIndex = std::vector<int>;

int mi_degree(const MultiIndex& m);
MultiIndex mi_sum(const MultiIndex& a, const MultiIndex& b);

// Graded lexicographic order: total degree first, then exponent-vector lex
// with the first variable most significant.
struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    int da = mi_degree(a);
    int db = mi_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

using TermMap = std::map<MultiIndex, Rational, GrlexLess>;

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no explicitly stored zero coefficients.
class Polynomial {
 public:
  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int var);
  static Polynomial monomial(const MultiIndex& m, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  int total_degree() const;  // -1 for the zero polynomial
  Rational coefficient(const MultiIndex& m) const;

  void add_term(const MultiIndex& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  bool operator==(const Polynomial& rhs) const;

  // Substitute value (same variable count) for one variable.
  Polynomial substituted(int var, const Polynomial& value) const;
  // Reinterpret in a larger variable set (new exponents zero).
  Polynomial embedded(int new_nvars) const;
  // Drop trailing variables; their exponents must all be zero.
  Polynomial truncated(int new_nvars) const;

 private:
  int nvars_;
  TermMap terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, const Polynomial& p);

Polynomial power(const Polynomial& p, int e);
Polynomial partial_derivative(const Polynomial& p, int var);

// s = x_1 + ... + x_d and p = x_1 * ... * x_d for the ambient variable count.
Polynomial coordinate_sum(int nvars);
Polynomial coordinate_product(int nvars);

// Degree shared by all terms, or nullopt for mixed degrees.
// The zero polynomial has no homogeneity degree; callers must branch first.
std::optional<int> homogeneous_degree(const Polynomial& p);

// Exact quotient p / (x_1 + ... + x_d), or nullopt when the division leaves a
// remainder.  Long division in the last variable, in which the divisor is
// monic of degree one.
std::optional<Polynomial> divided_by_coordinate_sum(const Polynomial& p);

// Exact quotient by a monomial, or nullopt.
std::optional<Polynomial> divided_by_monomial(const Polynomial& p,
                                              const MultiIndex& m);

// Multiply each degree-m term by s^(r-m), producing a homogeneous polynomial
// of degree r.  Throws DegreeTooHigh when deg p > r.
Polynomial homogenized(const Polynomial& p, int r);

// Rational function with denominator restricted to a power of s.  Stored as
// num / s^s_power with s_power minimal (num not divisible by s unless the
// power is zero) and s_power = 0 for the zero element.
class SLocalPoly {
 public:
  SLocalPoly() = default;
  explicit SLocalPoly(Polynomial num, int s_power = 0);

  static SLocalPoly zero(int nvars);

  const Polynomial& num() const { return num_; }
  int s_power() const { return s_power_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return s_power_ == 0; }

  // Value divided by s^delta; negative delta multiplies.
  SLocalPoly s_shifted(int delta) const;

  SLocalPoly operator-() const;
  bool operator==(const SLocalPoly& rhs) const;

 private:
  Polynomial num_;
  int s_power_ = 0;
};

SLocalPoly operator+(const SLocalPoly& a, const SLocalPoly& b);
SLocalPoly operator-(const SLocalPoly& a, const SLocalPoly& b);
SLocalPoly operator*(const SLocalPoly& a, const SLocalPoly& b);
SLocalPoly operator*(const Rational& c, const SLocalPoly& f);

// num degree minus s-power, or nullopt for mixed-degree numerators.
// Callers must branch on zero first, as with polynomials.
std::optional<int> homogeneous_degree(const SLocalPoly& f);

SLocalPoly partial_derivative(const SLocalPoly& f, int var);

// Set one variable to zero in the numerator, keeping the s-power.  Faces of
// the orthant meet {s > 0} away from the origin, so the denominator survives
// restriction; the result renormalizes as usual.
SLocalPoly substituted_zero(const SLocalPoly& f, int var);

// All monomials of the given total degree, in increasing graded-lex order.
std::vector<MultiIndex> monomials_of_degree(int nvars, int degree);

}  // namespace feec
