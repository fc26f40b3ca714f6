#pragma once

#include <optional>
#include <string>
#include <vector>

#include "feec/calculus.hpp"
#include "feec/forms.hpp"
#include "feec/ratmat.hpp"

namespace feec {

enum class SpaceKind { H, P, Pminus, RingH, RingP, RingPminus };

std::string to_string(SpaceKind kind);
std::optional<SpaceKind> space_kind_from_string(const std::string& name);

// A finite-dimensional space of polynomial forms on the orthant, carried by
// an exactly independent basis.  H spaces hold all homogeneous k-forms of
// coefficient degree r; P spaces are their ds-wedges (degree k+1 forms);
// Pminus spaces are Euler-field insertions of degree-(k+1) forms one
// coefficient degree down.  Ring variants keep only forms whose pullback to
// every boundary face vanishes.
struct FormSpace {
  SpaceKind kind;
  int n;
  int r;
  int k;            // requested shape parameter
  int form_degree;  // degree of the stored forms: k, or k+1 for P kinds
  std::vector<DiffForm> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

FormSpace space_H(int n, int r, int k);
FormSpace space_P(int n, int r, int k);
FormSpace space_Pminus(int n, int r, int k);

// Exact kernel, within the span, of the stacked face pullbacks.
FormSpace ring_subspace(const FormSpace& space);

// Dispatch by kind tag (ring kinds construct the parent, then restrict).
FormSpace make_space(SpaceKind kind, int n, int r, int k);

// Exact coordinates of a in the basis span, or nullopt.  The zero form is a
// member of every space.  Throws DomainError when shapes disagree.
std::optional<std::vector<Rational>> member(const FormSpace& space,
                                            const DiffForm& a);

// Trace isomorphisms with the simplex: Pminus elements restrict directly,
// P elements restrict after right-insertion of the Euler field.
SimplexForm to_T(const SimplexContext& ctx, const DiffForm& a, SpaceKind kind);

// Inverses of the trace maps.  Pminus lifts through the horizontal extension,
// P through (lift)^ds.  A result with a surviving s-denominator means the
// input was outside the corresponding trial space: NotPolynomialResult.
DiffForm from_T(const SimplexContext& ctx, const SimplexForm& a,
                SpaceKind kind, int r);

// Shared coordinatization of polynomial forms: columns are (index set,
// monomial) pairs present in the registered forms, in canonical order.
class FormCoordinates {
 public:
  void collect(const DiffForm& a);
  int cols() const { return static_cast<int>(columns_.size()); }
  std::vector<Rational> vectorize(const DiffForm& a) const;

 private:
  std::map<std::pair<IndexSet, MultiIndex>, int> columns_;
};

}  // namespace feec
