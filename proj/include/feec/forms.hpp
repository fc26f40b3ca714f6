#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "feec/polynomial.hpp"

namespace feec {

// Strictly increasing list of 0-based coordinate indices naming a wedge of
// coordinate differentials.
using IndexSet = std::vector<int>;

// Merge two disjoint sorted index sets; the sign is the parity of the shuffle
// that sorts their concatenation.  nullopt when they overlap.
std::optional<std::pair<IndexSet, int>> merge_index_sets(const IndexSet& a,
                                                         const IndexSet& b);

// Complement within {0, ..., ambient-1} and the parity of (a, complement) as
// a permutation of the full index list.
std::pair<IndexSet, int> complement_index_set(const IndexSet& a, int ambient);

// Polynomial differential form on the closed first orthant, with coefficients
// allowed a power of s = x_1 + ... + x_{n+1} in the denominator.
class DiffForm {
 public:
  DiffForm() : ambient_(0), degree_(0) {}
  DiffForm(int ambient, int degree) : ambient_(ambient), degree_(degree) {}

  int ambient() const { return ambient_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<IndexSet, SLocalPoly>& terms() const { return terms_; }
  bool is_polynomial() const;

  SLocalPoly coefficient(const IndexSet& I) const;
  void add_term(const IndexSet& I, const SLocalPoly& c);

  DiffForm operator-() const;
  DiffForm& operator+=(const DiffForm& rhs);
  DiffForm& operator-=(const DiffForm& rhs);
  bool operator==(const DiffForm& rhs) const;

  // Coefficient-wise division by s^delta (negative delta multiplies).
  DiffForm s_shifted(int delta) const;

 private:
  int ambient_;
  int degree_;
  std::map<IndexSet, SLocalPoly> terms_;  // keys of size degree_, no zeros
};

DiffForm operator+(const DiffForm& a, const DiffForm& b);
DiffForm operator-(const DiffForm& a, const DiffForm& b);
DiffForm operator*(const Rational& c, const DiffForm& a);
DiffForm operator*(const SLocalPoly& f, const DiffForm& a);

DiffForm wedge(const DiffForm& a, const DiffForm& b);

// Vector field with s-localized polynomial components.
struct VectorField {
  int ambient = 0;
  std::vector<SLocalPoly> components;
};

// Insertion into the first slot: i_V.
DiffForm contract_left(const VectorField& v, const DiffForm& a);
// Insertion into the last slot: on k-forms this is (-1)^(k-1) i_V.
DiffForm contract_right(const VectorField& v, const DiffForm& a);

// Polynomial differential form on the standard n-simplex, written in the
// chart coordinates x_1, ..., x_n.
class SimplexForm {
 public:
  SimplexForm() : dim_(0), degree_(0) {}
  SimplexForm(int dim, int degree) : dim_(dim), degree_(degree) {}

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<IndexSet, Polynomial>& terms() const { return terms_; }

  Polynomial coefficient(const IndexSet& I) const;
  void add_term(const IndexSet& I, const Polynomial& c);

  SimplexForm operator-() const;
  SimplexForm& operator+=(const SimplexForm& rhs);
  SimplexForm& operator-=(const SimplexForm& rhs);
  bool operator==(const SimplexForm& rhs) const;

 private:
  int dim_;
  int degree_;
  std::map<IndexSet, Polynomial> terms_;
};

SimplexForm operator+(const SimplexForm& a, const SimplexForm& b);
SimplexForm operator-(const SimplexForm& a, const SimplexForm& b);
SimplexForm operator*(const Rational& c, const SimplexForm& a);
SimplexForm operator*(const Polynomial& f, const SimplexForm& a);

SimplexForm wedge(const SimplexForm& a, const SimplexForm& b);
SimplexForm contract_left(const std::vector<Polynomial>& components,
                          const SimplexForm& a);

// Geometry shared by the whole calculus: dimension n, the ambient orthant in
// n+1 coordinates, and the distinguished fields and forms attached to
// s = x_1 + ... + x_{n+1}.
struct SimplexContext {
  int n;
  int ambient;               // n + 1
  Polynomial s;              // coordinate sum
  Polynomial product;        // x_1 * ... * x_{n+1}
  DiffForm ds;               // dx_1 + ... + dx_{n+1}
  DiffForm volume;           // dx_1 ^ ... ^ dx_{n+1}
  VectorField euler;         // x_i d/dx_i, the g-dual of ds
  VectorField grad_s;        // d/dx_1 + ... + d/dx_{n+1}
  VectorField koszul_field;  // euler - (s/(n+1)) grad_s, tangent to {s = 1}

  explicit SimplexContext(int n);
};

// Pullback to the orthant face {x_face = 0}: substitute zero in numerators
// and drop every term whose index set contains the face index.
DiffForm pullback_face(const DiffForm& a, int face);

// Pullback along the inclusion of the hyperplane {s = 1}, in the chart
// x_1, ..., x_n: substitutes x_{n+1} = 1 - sum and dx_{n+1} = -sum dx_i.
SimplexForm restrict_to_simplex(const SimplexContext& ctx, const DiffForm& a);

// The homogeneous degree-r representative with the given trace: coefficients
// are homogenized with s-weights, index sets are kept verbatim.  Coefficient
// degrees above r throw DegreeTooHigh.
DiffForm polynomial_extension(const SimplexContext& ctx, const SimplexForm& a,
                              int r);

// Same lift without the degree restriction: a degree-m monomial picks up the
// weight s^(r-m), which lands in the denominator when m > r.
DiffForm homogeneous_lift(const SimplexContext& ctx, const SimplexForm& a,
                          int r);

// Homogeneity degree shared by all coefficients (s-powers counted
// negatively), nullopt when mixed.  Throws on the zero form.
std::optional<int> form_homogeneity(const DiffForm& a);

// Pullbacks to the n+1 boundary faces of the simplex in chart coordinates:
// faces 0..n-1 set one coordinate to zero, face n is the diagonal face,
// parametrized by dropping the last chart coordinate.
SimplexForm simplex_face_pullback(const SimplexForm& a, int face);

}  // namespace feec
