#include "feec/polynomial.hpp"

#include <algorithm>
#include <cassert>

namespace feec {

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw DomainError("malformed rational literal: " + text);
  if (q.get_den() == 0) throw DomainError("rational with zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Integer factorial(int m) {
  assert(m >= 0);
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
  return f;
}

Integer binomial(int a, int b) {
  if (b < 0 || b > a) return Integer(0);
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return c;
}

int mi_degree(const MultiIndex& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

MultiIndex mi_sum(const MultiIndex& a, const MultiIndex& b) {
  assert(a.size() == b.size());
  MultiIndex r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(MultiIndex(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
  assert(var >= 0 && var < nvars);
  MultiIndex m(nvars, 0);
  m[var] = 1;
  return monomial(m, Rational(1));
}

Polynomial Polynomial::monomial(const MultiIndex& m, const Rational& c) {
  Polynomial p(static_cast<int>(m.size()));
  p.add_term(m, c);
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, mi_degree(m));
  return d;
}

Rational Polynomial::coefficient(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& m, const Rational& c) {
  assert(static_cast<int>(m.size()) == nvars_);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  assert(nvars_ == rhs.nvars_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  assert(nvars_ == rhs.nvars_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r += b;
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r -= b;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  assert(a.nvars() == b.nvars());
  Polynomial r(a.nvars());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(mi_sum(ma, mb), ca * cb);
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r(p.nvars());
  if (c == 0) return r;
  for (const auto& [m, pc] : p.terms()) r.add_term(m, c * pc);
  return r;
}

Polynomial power(const Polynomial& p, int e) {
  assert(e >= 0);
  Polynomial r = Polynomial::constant(p.nvars(), Rational(1));
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

Polynomial partial_derivative(const Polynomial& p, int var) {
  assert(var >= 0 && var < p.nvars());
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    MultiIndex d = m;
    d[var] -= 1;
    r.add_term(d, Rational(m[var]) * c);
  }
  return r;
}

Polynomial Polynomial::substituted(int var, const Polynomial& value) const {
  assert(value.nvars() == nvars_);
  int max_e = 0;
  for (const auto& [m, c] : terms_) max_e = std::max(max_e, m[var]);
  std::vector<Polynomial> pow_cache;
  pow_cache.reserve(max_e + 1);
  pow_cache.push_back(Polynomial::constant(nvars_, Rational(1)));
  for (int e = 1; e <= max_e; ++e) pow_cache.push_back(pow_cache.back() * value);

  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    MultiIndex rest = m;
    int e = rest[var];
    rest[var] = 0;
    r += Polynomial::monomial(rest, c) * pow_cache[e];
  }
  return r;
}

Polynomial Polynomial::embedded(int new_nvars) const {
  assert(new_nvars >= nvars_);
  Polynomial r(new_nvars);
  for (const auto& [m, c] : terms_) {
    MultiIndex e = m;
    e.resize(new_nvars, 0);
    r.add_term(e, c);
  }
  return r;
}

Polynomial Polynomial::truncated(int new_nvars) const {
  assert(new_nvars <= nvars_);
  Polynomial r(new_nvars);
  for (const auto& [m, c] : terms_) {
    for (int i = new_nvars; i < nvars_; ++i) assert(m[i] == 0);
    MultiIndex e(m.begin(), m.begin() + new_nvars);
    r.add_term(e, c);
  }
  return r;
}

Polynomial coordinate_sum(int nvars) {
  Polynomial s(nvars);
  for (int i = 0; i < nvars; ++i) {
    MultiIndex m(nvars, 0);
    m[i] = 1;
    s.add_term(m, Rational(1));
  }
  return s;
}

Polynomial coordinate_product(int nvars) {
  return Polynomial::monomial(MultiIndex(nvars, 1), Rational(1));
}

std::optional<int> homogeneous_degree(const Polynomial& p) {
  if (p.is_zero())
    throw DomainError("zero polynomial has no homogeneity degree");
  int d = mi_degree(p.terms().begin()->first);
  for (const auto& [m, c] : p.terms())
    if (mi_degree(m) != d) return std::nullopt;
  return d;
}

std::optional<Polynomial> divided_by_coordinate_sum(const Polynomial& p) {
  int d = p.nvars();
  if (d == 0) return std::nullopt;
  if (p.is_zero()) return Polynomial(d);
  int t = d - 1;

  // View p as a univariate polynomial in the last variable; the divisor
  // s = u + x_t (u the sum of the others) is monic of degree one in x_t.
  std::map<int, Polynomial> by_t;
  int t_deg = 0;
  for (const auto& [m, c] : p.terms()) {
    MultiIndex rest = m;
    int e = rest[t];
    rest[t] = 0;
    auto [it, inserted] = by_t.emplace(e, Polynomial(d));
    it->second.add_term(rest, c);
    t_deg = std::max(t_deg, e);
  }
  auto coeff_at = [&](int e) -> Polynomial& {
    auto [it, inserted] = by_t.emplace(e, Polynomial(d));
    return it->second;
  };

  Polynomial u = coordinate_sum(d) - Polynomial::variable(d, t);
  std::map<int, Polynomial> quotient;
  for (int e = t_deg; e >= 1; --e) {
    Polynomial q = coeff_at(e);
    coeff_at(e - 1) -= u * q;
    quotient.emplace(e - 1, std::move(q));
  }
  if (!coeff_at(0).is_zero()) return std::nullopt;

  Polynomial result(d);
  for (const auto& [e, q] : quotient)
    for (const auto& [m, c] : q.terms()) {
      MultiIndex full = m;
      full[t] += e;
      result.add_term(full, c);
    }
  return result;
}

std::optional<Polynomial> divided_by_monomial(const Polynomial& p,
                                              const MultiIndex& m) {
  assert(static_cast<int>(m.size()) == p.nvars());
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    MultiIndex q = e;
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] -= m[i];
      if (q[i] < 0) return std::nullopt;
    }
    r.add_term(q, c);
  }
  return r;
}

Polynomial homogenized(const Polynomial& p, int r) {
  Polynomial s = coordinate_sum(p.nvars());
  Polynomial out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    int deg = mi_degree(m);
    if (deg > r)
      throw DegreeTooHigh("monomial degree " + std::to_string(deg) +
                          " exceeds homogenization degree " + std::to_string(r));
    out += Polynomial::monomial(m, c) * power(s, r - deg);
  }
  return out;
}

SLocalPoly::SLocalPoly(Polynomial num, int s_power)
    : num_(std::move(num)), s_power_(s_power) {
  assert(s_power_ >= 0);
  if (num_.is_zero()) {
    s_power_ = 0;
    return;
  }
  while (s_power_ > 0) {
    auto q = divided_by_coordinate_sum(num_);
    if (!q) break;
    num_ = std::move(*q);
    --s_power_;
  }
}

SLocalPoly SLocalPoly::zero(int nvars) { return SLocalPoly(Polynomial(nvars)); }

SLocalPoly SLocalPoly::s_shifted(int delta) const {
  int p = s_power_ + delta;
  if (p >= 0) return SLocalPoly(num_, p);
  return SLocalPoly(num_ * power(coordinate_sum(nvars()), -p), 0);
}

SLocalPoly SLocalPoly::operator-() const {
  SLocalPoly r = *this;
  r.num_ = -r.num_;
  return r;
}

bool SLocalPoly::operator==(const SLocalPoly& rhs) const {
  return s_power_ == rhs.s_power_ && num_ == rhs.num_;
}

SLocalPoly operator+(const SLocalPoly& a, const SLocalPoly& b) {
  assert(a.nvars() == b.nvars());
  int p = std::max(a.s_power(), b.s_power());
  Polynomial s = coordinate_sum(a.nvars());
  Polynomial num = a.num() * power(s, p - a.s_power()) +
                   b.num() * power(s, p - b.s_power());
  return SLocalPoly(std::move(num), p);
}

SLocalPoly operator-(const SLocalPoly& a, const SLocalPoly& b) {
  return a + (-b);
}

SLocalPoly operator*(const SLocalPoly& a, const SLocalPoly& b) {
  return SLocalPoly(a.num() * b.num(), a.s_power() + b.s_power());
}

SLocalPoly operator*(const Rational& c, const SLocalPoly& f) {
  return SLocalPoly(c * f.num(), f.s_power());
}

std::optional<int> homogeneous_degree(const SLocalPoly& f) {
  auto d = homogeneous_degree(f.num());
  if (!d) return std::nullopt;
  return *d - f.s_power();
}

SLocalPoly partial_derivative(const SLocalPoly& f, int var) {
  SLocalPoly d(partial_derivative(f.num(), var), f.s_power());
  if (f.s_power() == 0) return d;
  return d - Rational(f.s_power()) * SLocalPoly(f.num(), f.s_power() + 1);
}

SLocalPoly substituted_zero(const SLocalPoly& f, int var) {
  return SLocalPoly(f.num().substituted(
                        var, Polynomial(f.nvars())),
                    f.s_power());
}

std::vector<MultiIndex> monomials_of_degree(int nvars, int degree) {
  std::vector<MultiIndex> out;
  MultiIndex cur(nvars, 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      cur[var] = remaining;
      out.push_back(cur);
      cur[var] = 0;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[var] = e;
      self(self, var + 1, remaining - e);
    }
    cur[var] = 0;
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

}  // namespace feec
