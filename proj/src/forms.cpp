#include "feec/forms.hpp"

#include <algorithm>
#include <cassert>

namespace feec {

std::optional<std::pair<IndexSet, int>> merge_index_sets(const IndexSet& a,
                                                         const IndexSet& b) {
  IndexSet merged;
  merged.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  long inversions = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return std::nullopt;
    if (a[i] < b[j]) {
      merged.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining entries of a
      inversions += static_cast<long>(a.size() - i);
      merged.push_back(b[j++]);
    }
  }
  while (i < a.size()) merged.push_back(a[i++]);
  while (j < b.size()) merged.push_back(b[j++]);
  return std::make_pair(std::move(merged), inversions % 2 == 0 ? 1 : -1);
}

std::pair<IndexSet, int> complement_index_set(const IndexSet& a, int ambient) {
  IndexSet comp;
  comp.reserve(ambient - a.size());
  std::size_t p = 0;
  for (int i = 0; i < ambient; ++i) {
    if (p < a.size() && a[p] == i) {
      ++p;
    } else {
      comp.push_back(i);
    }
  }
  // Parity of the permutation (a, comp) of (0..ambient-1): only cross-block
  // inversions occur.
  long inversions = 0;
  for (int x : a)
    for (int y : comp)
      if (x > y) ++inversions;
  return {std::move(comp), inversions % 2 == 0 ? 1 : -1};
}

bool DiffForm::is_polynomial() const {
  for (const auto& [I, f] : terms_)
    if (!f.is_polynomial()) return false;
  return true;
}

SLocalPoly DiffForm::coefficient(const IndexSet& I) const {
  auto it = terms_.find(I);
  return it == terms_.end() ? SLocalPoly::zero(ambient_) : it->second;
}

void DiffForm::add_term(const IndexSet& I, const SLocalPoly& c) {
  assert(static_cast<int>(I.size()) == degree_);
  assert(c.nvars() == ambient_);
  if (c.is_zero()) return;
  auto it = terms_.find(I);
  if (it == terms_.end()) {
    terms_.emplace(I, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffForm DiffForm::operator-() const {
  DiffForm r(ambient_, degree_);
  for (const auto& [I, f] : terms_) r.terms_.emplace(I, -f);
  return r;
}

DiffForm& DiffForm::operator+=(const DiffForm& rhs) {
  assert(ambient_ == rhs.ambient_);
  // a zero form acts as the identity at any recorded degree
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    degree_ = rhs.degree_;
  } else {
    assert(degree_ == rhs.degree_);
  }
  for (const auto& [I, f] : rhs.terms_) add_term(I, f);
  return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& rhs) {
  assert(ambient_ == rhs.ambient_);
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    degree_ = rhs.degree_;
  } else {
    assert(degree_ == rhs.degree_);
  }
  for (const auto& [I, f] : rhs.terms_) add_term(I, -f);
  return *this;
}

bool DiffForm::operator==(const DiffForm& rhs) const {
  return ambient_ == rhs.ambient_ && degree_ == rhs.degree_ &&
         terms_ == rhs.terms_;
}

DiffForm DiffForm::s_shifted(int delta) const {
  DiffForm r(ambient_, degree_);
  for (const auto& [I, f] : terms_) r.add_term(I, f.s_shifted(delta));
  return r;
}

DiffForm operator+(const DiffForm& a, const DiffForm& b) {
  DiffForm r = a;
  r += b;
  return r;
}

DiffForm operator-(const DiffForm& a, const DiffForm& b) {
  DiffForm r = a;
  r -= b;
  return r;
}

DiffForm operator*(const Rational& c, const DiffForm& a) {
  DiffForm r(a.ambient(), a.degree());
  if (c == 0) return r;
  for (const auto& [I, f] : a.terms()) r.add_term(I, c * f);
  return r;
}

DiffForm operator*(const SLocalPoly& f, const DiffForm& a) {
  DiffForm r(a.ambient(), a.degree());
  for (const auto& [I, g] : a.terms()) r.add_term(I, f * g);
  return r;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  assert(a.ambient() == b.ambient());
  DiffForm r(a.ambient(), a.degree() + b.degree());
  for (const auto& [I, f] : a.terms())
    for (const auto& [J, g] : b.terms()) {
      auto merged = merge_index_sets(I, J);
      if (!merged) continue;
      SLocalPoly c = f * g;
      if (merged->second < 0) c = -c;
      r.add_term(merged->first, c);
    }
  return r;
}

DiffForm contract_left(const VectorField& v, const DiffForm& a) {
  assert(v.ambient == a.ambient());
  int k = a.degree();
  DiffForm r(a.ambient(), k > 0 ? k - 1 : 0);
  if (k == 0) return r;
  for (const auto& [I, f] : a.terms())
    for (std::size_t t = 0; t < I.size(); ++t) {
      const SLocalPoly& comp = v.components[I[t]];
      if (comp.is_zero()) continue;
      IndexSet rest;
      rest.reserve(I.size() - 1);
      for (std::size_t u = 0; u < I.size(); ++u)
        if (u != t) rest.push_back(I[u]);
      SLocalPoly c = comp * f;
      if (t % 2 == 1) c = -c;
      r.add_term(rest, c);
    }
  return r;
}

DiffForm contract_right(const VectorField& v, const DiffForm& a) {
  int k = a.degree();
  DiffForm r = contract_left(v, a);
  if (k >= 1 && (k - 1) % 2 == 1) r = -r;
  return r;
}

Polynomial SimplexForm::coefficient(const IndexSet& I) const {
  auto it = terms_.find(I);
  return it == terms_.end() ? Polynomial(dim_) : it->second;
}

void SimplexForm::add_term(const IndexSet& I, const Polynomial& c) {
  assert(static_cast<int>(I.size()) == degree_);
  assert(c.nvars() == dim_);
  if (c.is_zero()) return;
  auto it = terms_.find(I);
  if (it == terms_.end()) {
    terms_.emplace(I, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SimplexForm SimplexForm::operator-() const {
  SimplexForm r(dim_, degree_);
  for (const auto& [I, f] : terms_) r.terms_.emplace(I, -f);
  return r;
}

SimplexForm& SimplexForm::operator+=(const SimplexForm& rhs) {
  assert(dim_ == rhs.dim_);
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    degree_ = rhs.degree_;
  } else {
    assert(degree_ == rhs.degree_);
  }
  for (const auto& [I, f] : rhs.terms_) add_term(I, f);
  return *this;
}

SimplexForm& SimplexForm::operator-=(const SimplexForm& rhs) {
  assert(dim_ == rhs.dim_);
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    degree_ = rhs.degree_;
  } else {
    assert(degree_ == rhs.degree_);
  }
  for (const auto& [I, f] : rhs.terms_) add_term(I, -f);
  return *this;
}

bool SimplexForm::operator==(const SimplexForm& rhs) const {
  return dim_ == rhs.dim_ && degree_ == rhs.degree_ && terms_ == rhs.terms_;
}

SimplexForm operator+(const SimplexForm& a, const SimplexForm& b) {
  SimplexForm r = a;
  r += b;
  return r;
}

SimplexForm operator-(const SimplexForm& a, const SimplexForm& b) {
  SimplexForm r = a;
  r -= b;
  return r;
}

SimplexForm operator*(const Rational& c, const SimplexForm& a) {
  SimplexForm r(a.dim(), a.degree());
  if (c == 0) return r;
  for (const auto& [I, f] : a.terms()) r.add_term(I, c * f);
  return r;
}

SimplexForm operator*(const Polynomial& f, const SimplexForm& a) {
  SimplexForm r(a.dim(), a.degree());
  for (const auto& [I, g] : a.terms()) r.add_term(I, f * g);
  return r;
}

SimplexForm wedge(const SimplexForm& a, const SimplexForm& b) {
  assert(a.dim() == b.dim());
  SimplexForm r(a.dim(), a.degree() + b.degree());
  for (const auto& [I, f] : a.terms())
    for (const auto& [J, g] : b.terms()) {
      auto merged = merge_index_sets(I, J);
      if (!merged) continue;
      Polynomial c = f * g;
      if (merged->second < 0) c = -c;
      r.add_term(merged->first, c);
    }
  return r;
}

SimplexForm contract_left(const std::vector<Polynomial>& components,
                          const SimplexForm& a) {
  assert(static_cast<int>(components.size()) == a.dim());
  int k = a.degree();
  SimplexForm r(a.dim(), k > 0 ? k - 1 : 0);
  if (k == 0) return r;
  for (const auto& [I, f] : a.terms())
    for (std::size_t t = 0; t < I.size(); ++t) {
      const Polynomial& comp = components[I[t]];
      if (comp.is_zero()) continue;
      IndexSet rest;
      rest.reserve(I.size() - 1);
      for (std::size_t u = 0; u < I.size(); ++u)
        if (u != t) rest.push_back(I[u]);
      Polynomial c = comp * f;
      if (t % 2 == 1) c = -c;
      r.add_term(rest, c);
    }
  return r;
}

SimplexContext::SimplexContext(int n_in)
    : n(n_in),
      ambient(n_in + 1),
      s(coordinate_sum(n_in + 1)),
      product(coordinate_product(n_in + 1)),
      ds(n_in + 1, 1),
      volume(n_in + 1, n_in + 1) {
  assert(n >= 1);
  for (int i = 0; i < ambient; ++i)
    ds.add_term({i}, SLocalPoly(Polynomial::constant(ambient, Rational(1))));
  IndexSet all(ambient);
  for (int i = 0; i < ambient; ++i) all[i] = i;
  volume.add_term(all, SLocalPoly(Polynomial::constant(ambient, Rational(1))));

  euler.ambient = ambient;
  grad_s.ambient = ambient;
  koszul_field.ambient = ambient;
  Rational inv(1, ambient);
  inv.canonicalize();
  for (int i = 0; i < ambient; ++i) {
    Polynomial xi = Polynomial::variable(ambient, i);
    euler.components.push_back(SLocalPoly(xi));
    grad_s.components.push_back(
        SLocalPoly(Polynomial::constant(ambient, Rational(1))));
    koszul_field.components.push_back(SLocalPoly(xi - inv * s));
  }
}

DiffForm pullback_face(const DiffForm& a, int face) {
  assert(face >= 0 && face < a.ambient());
  DiffForm r(a.ambient(), a.degree());
  for (const auto& [I, f] : a.terms()) {
    if (std::binary_search(I.begin(), I.end(), face)) continue;
    r.add_term(I, substituted_zero(f, face));
  }
  return r;
}

SimplexForm restrict_to_simplex(const SimplexContext& ctx, const DiffForm& a) {
  assert(a.ambient() == ctx.ambient);
  int n = ctx.n;
  int drop = n;  // 0-based index of x_{n+1}
  Polynomial repl = Polynomial::constant(ctx.ambient, Rational(1));
  for (int j = 0; j < n; ++j) repl -= Polynomial::variable(ctx.ambient, j);

  SimplexForm r(n, a.degree());
  for (const auto& [I, f] : a.terms()) {
    // On {s = 1} the denominator is 1; substitute into the numerator only.
    Polynomial g = f.num().substituted(drop, repl).truncated(n);
    if (g.is_zero()) continue;
    if (!std::binary_search(I.begin(), I.end(), drop)) {
      r.add_term(I, g);
      continue;
    }
    // I = I' u {drop} with drop in last position; expand the dropped
    // differential as minus the sum of the chart differentials.
    IndexSet rest(I.begin(), I.end() - 1);
    for (int j = 0; j < n; ++j) {
      auto merged = merge_index_sets(rest, {j});
      if (!merged) continue;
      Polynomial c = -g;
      if (merged->second < 0) c = -c;
      r.add_term(merged->first, c);
    }
  }
  return r;
}

DiffForm polynomial_extension(const SimplexContext& ctx, const SimplexForm& a,
                              int r) {
  assert(a.dim() == ctx.n);
  DiffForm out(ctx.ambient, a.degree());
  for (const auto& [I, f] : a.terms())
    out.add_term(I, SLocalPoly(homogenized(f.embedded(ctx.ambient), r)));
  return out;
}

DiffForm homogeneous_lift(const SimplexContext& ctx, const SimplexForm& a,
                          int r) {
  assert(a.dim() == ctx.n);
  DiffForm out(ctx.ambient, a.degree());
  for (const auto& [I, f] : a.terms()) {
    SLocalPoly acc = SLocalPoly::zero(ctx.ambient);
    for (const auto& [m, c] : f.terms()) {
      MultiIndex e = m;
      e.resize(ctx.ambient, 0);
      Polynomial mono = Polynomial::monomial(e, c);
      int deg = mi_degree(m);
      if (deg <= r) {
        acc = acc + SLocalPoly(mono * power(ctx.s, r - deg));
      } else {
        acc = acc + SLocalPoly(std::move(mono), deg - r);
      }
    }
    out.add_term(I, acc);
  }
  return out;
}

std::optional<int> form_homogeneity(const DiffForm& a) {
  if (a.is_zero()) throw DomainError("zero form has no homogeneity degree");
  std::optional<int> result;
  for (const auto& [I, f] : a.terms()) {
    auto d = homogeneous_degree(f);
    if (!d) return std::nullopt;
    if (result && *result != *d) return std::nullopt;
    result = d;
  }
  return result;
}

SimplexForm simplex_face_pullback(const SimplexForm& a, int face) {
  int n = a.dim();
  assert(face >= 0 && face <= n);
  if (face < n) {
    SimplexForm r(n, a.degree());
    for (const auto& [I, f] : a.terms()) {
      if (std::binary_search(I.begin(), I.end(), face)) continue;
      Polynomial g = f.substituted(face, Polynomial(n));
      r.add_term(I, g);
    }
    return r;
  }
  // The slanted face {x_1 + ... + x_n = 1}: parametrize by the first n-1
  // chart coordinates.
  int drop = n - 1;
  Polynomial repl = Polynomial::constant(n, Rational(1));
  for (int j = 0; j < drop; ++j) repl -= Polynomial::variable(n, j);

  SimplexForm r(n, a.degree());
  for (const auto& [I, f] : a.terms()) {
    Polynomial g = f.substituted(drop, repl);
    if (g.is_zero()) continue;
    if (!std::binary_search(I.begin(), I.end(), drop)) {
      r.add_term(I, g);
      continue;
    }
    IndexSet rest(I.begin(), I.end() - 1);
    for (int j = 0; j < drop; ++j) {
      auto merged = merge_index_sets(rest, {j});
      if (!merged) continue;
      Polynomial c = -g;
      if (merged->second < 0) c = -c;
      r.add_term(merged->first, c);
    }
  }
  return r;
}

}  // namespace feec
