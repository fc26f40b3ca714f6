#include "feec/spaces.hpp"

#include <cassert>
#include <functional>
#include <utility>

#include "feec/errors.hpp"

namespace feec {

namespace {

void check_common(int n, int r, int k, int k_max, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": n must be at least 1");
  if (r < 0) throw DomainError(std::string(what) + ": negative degree r");
  if (k < 0 || k > k_max) {
    throw DomainError(std::string(what) + ": form degree k out of range");
  }
}

std::vector<IndexSet> index_sets(int ambient, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > ambient) return out;
  IndexSet current;
  // lexicographic enumeration of ascending k-subsets of {0,...,ambient-1}
  std::function<void(int)> extend = [&](int next) {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    int needed = k - static_cast<int>(current.size());
    for (int i = next; i + needed <= ambient; ++i) {
      current.push_back(i);
      extend(i + 1);
      current.pop_back();
    }
  };
  extend(0);
  return out;
}

// Deterministic greedy sweep: keep each candidate that enlarges the span.
std::vector<DiffForm> independent_subset(const std::vector<DiffForm>& candidates) {
  FormCoordinates coords;
  for (const DiffForm& c : candidates) coords.collect(c);
  Echelon echelon;
  std::vector<DiffForm> kept;
  for (const DiffForm& c : candidates) {
    if (c.is_zero()) continue;
    if (echelon.insert(coords.vectorize(c))) kept.push_back(c);
  }
  return kept;
}

}  // namespace

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::H: return "H";
    case SpaceKind::P: return "P";
    case SpaceKind::Pminus: return "Pminus";
    case SpaceKind::RingH: return "ringH";
    case SpaceKind::RingP: return "ringP";
    case SpaceKind::RingPminus: return "ringPminus";
  }
  return "?";
}

std::optional<SpaceKind> space_kind_from_string(const std::string& name) {
  if (name == "H") return SpaceKind::H;
  if (name == "P") return SpaceKind::P;
  if (name == "Pminus" || name == "P-") return SpaceKind::Pminus;
  if (name == "ringH") return SpaceKind::RingH;
  if (name == "ringP") return SpaceKind::RingP;
  if (name == "ringPminus" || name == "ringP-") return SpaceKind::RingPminus;
  return std::nullopt;
}

FormSpace space_H(int n, int r, int k) {
  check_common(n, r, k, n + 1, "space_H");
  int ambient = n + 1;
  FormSpace space{SpaceKind::H, n, r, k, k, {}};
  auto monomials = monomials_of_degree(ambient, r);
  for (const IndexSet& I : index_sets(ambient, k)) {
    for (const MultiIndex& m : monomials) {
      DiffForm b(ambient, k);
      b.add_term(I, SLocalPoly(Polynomial::monomial(m, Rational(1))));
      space.basis.push_back(std::move(b));
    }
  }
  return space;
}

FormSpace space_P(int n, int r, int k) {
  check_common(n, r, k, n, "space_P");
  SimplexContext ctx(n);
  FormSpace space{SpaceKind::P, n, r, k, k + 1, {}};
  std::vector<DiffForm> candidates;
  for (const DiffForm& b : space_H(n, r, k).basis) {
    candidates.push_back(wedge(ctx.ds, b));
  }
  space.basis = independent_subset(candidates);
  return space;
}

FormSpace space_Pminus(int n, int r, int k) {
  check_common(n, r, k, n + 1, "space_Pminus");
  if (r == 0) {
    throw DomainError("space_Pminus: degree r = 0 is excluded");
  }
  SimplexContext ctx(n);
  FormSpace space{SpaceKind::Pminus, n, r, k, k, {}};
  if (k + 1 <= n + 1) {
    std::vector<DiffForm> candidates;
    for (const DiffForm& b : space_H(n, r - 1, k + 1).basis) {
      candidates.push_back(contract_left(ctx.euler, b));
    }
    space.basis = independent_subset(candidates);
  }
  return space;
}

FormSpace ring_subspace(const FormSpace& space) {
  FormSpace out = space;
  switch (space.kind) {
    case SpaceKind::H: out.kind = SpaceKind::RingH; break;
    case SpaceKind::P: out.kind = SpaceKind::RingP; break;
    case SpaceKind::Pminus: out.kind = SpaceKind::RingPminus; break;
    default: break;  // already a ring space: idempotent
  }
  out.basis.clear();
  int dim = space.dim();
  if (dim == 0) return out;
  int ambient = space.n + 1;

  // Stack the coordinates of every face pullback of every basis form; the
  // ring subspace is the exact nullspace of that matrix.
  std::vector<std::vector<DiffForm>> pulled(dim);
  FormCoordinates coords;
  for (int j = 0; j < dim; ++j) {
    for (int face = 0; face < ambient; ++face) {
      pulled[j].push_back(pullback_face(space.basis[j], face));
      coords.collect(pulled[j].back());
    }
  }
  RatMat mat(ambient * coords.cols(), dim);
  for (int j = 0; j < dim; ++j) {
    int row0 = 0;
    for (int face = 0; face < ambient; ++face) {
      auto column = coords.vectorize(pulled[j][face]);
      for (int i = 0; i < coords.cols(); ++i) mat.at(row0 + i, j) = column[i];
      row0 += coords.cols();
    }
  }
  for (const auto& combo : nullspace(mat)) {
    DiffForm b(ambient, space.form_degree);
    for (int j = 0; j < dim; ++j) {
      if (combo[j] != 0) b += combo[j] * space.basis[j];
    }
    out.basis.push_back(std::move(b));
  }
  return out;
}

FormSpace make_space(SpaceKind kind, int n, int r, int k) {
  switch (kind) {
    case SpaceKind::H: return space_H(n, r, k);
    case SpaceKind::P: return space_P(n, r, k);
    case SpaceKind::Pminus: return space_Pminus(n, r, k);
    case SpaceKind::RingH: return ring_subspace(space_H(n, r, k));
    case SpaceKind::RingP: return ring_subspace(space_P(n, r, k));
    case SpaceKind::RingPminus: return ring_subspace(space_Pminus(n, r, k));
  }
  throw DomainError("make_space: unknown space kind");
}

std::optional<std::vector<Rational>> member(const FormSpace& space,
                                            const DiffForm& a) {
  if (a.ambient() != space.n + 1 || a.degree() != space.form_degree) {
    throw DomainError("member: form shape does not match the space");
  }
  if (a.is_zero()) return std::vector<Rational>(space.dim(), Rational(0));
  if (!a.is_polynomial()) return std::nullopt;
  FormCoordinates coords;
  for (const DiffForm& b : space.basis) coords.collect(b);
  coords.collect(a);
  RatMat mat(coords.cols(), space.dim());
  for (int j = 0; j < space.dim(); ++j) {
    auto column = coords.vectorize(space.basis[j]);
    for (int i = 0; i < coords.cols(); ++i) mat.at(i, j) = column[i];
  }
  return solve(mat, coords.vectorize(a));
}

SimplexForm to_T(const SimplexContext& ctx, const DiffForm& a, SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Pminus:
    case SpaceKind::RingPminus:
      return restrict_to_simplex(ctx, a);
    case SpaceKind::P:
    case SpaceKind::RingP:
      return restrict_to_simplex(ctx, contract_right(ctx.euler, a));
    default:
      throw DomainError("to_T: only P and Pminus kinds restrict to the simplex");
  }
}

DiffForm from_T(const SimplexContext& ctx, const SimplexForm& a, SpaceKind kind,
                int r) {
  switch (kind) {
    case SpaceKind::Pminus:
    case SpaceKind::RingPminus: {
      DiffForm lifted = horizontal_extension(ctx, a, r);
      if (!lifted.is_polynomial()) {
        throw NotPolynomialResult(
            "from_T: horizontal extension keeps an s denominator");
      }
      return lifted;
    }
    case SpaceKind::P:
    case SpaceKind::RingP: {
      DiffForm lifted = wedge(homogeneous_lift(ctx, a, r), ctx.ds);
      if (!lifted.is_polynomial()) {
        throw NotPolynomialResult(
            "from_T: vertical extension keeps an s denominator");
      }
      return lifted;
    }
    default:
      throw DomainError("from_T: only P and Pminus kinds lift from the simplex");
  }
}

void FormCoordinates::collect(const DiffForm& a) {
  for (const auto& [I, coeff] : a.terms()) {
    assert(coeff.is_polynomial());
    for (const auto& [m, c] : coeff.num().terms()) {
      (void)c;
      columns_.emplace(std::make_pair(I, m), cols());
    }
  }
}

std::vector<Rational> FormCoordinates::vectorize(const DiffForm& a) const {
  std::vector<Rational> out(columns_.size(), Rational(0));
  for (const auto& [I, coeff] : a.terms()) {
    assert(coeff.is_polynomial());
    for (const auto& [m, c] : coeff.num().terms()) {
      auto it = columns_.find(std::make_pair(I, m));
      assert(it != columns_.end());
      out[it->second] = c;
    }
  }
  return out;
}

}  // namespace feec
