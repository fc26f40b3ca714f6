#include "feec/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "feec/errors.hpp"
#include "feec/metric.hpp"
#include "feec/pairing.hpp"
#include "feec/parse.hpp"
#include "feec/print.hpp"
#include "feec/spaces.hpp"

namespace feec {

namespace {

int irand(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

Rational random_coeff(Rng& rng) {
  int c = irand(rng, -4, 4);
  if (c == 0) c = 1;
  return Rational(c);
}

MultiIndex random_monomial(Rng& rng, int nvars, int degree) {
  MultiIndex m(nvars, 0);
  for (int i = 0; i < degree; ++i) ++m[irand(rng, 0, nvars - 1)];
  return m;
}

IndexSet random_index_set(Rng& rng, int ambient, int k) {
  std::vector<int> all(ambient);
  for (int i = 0; i < ambient; ++i) all[i] = i;
  for (int i = 0; i < k; ++i) {
    std::swap(all[i], all[irand(rng, i, ambient - 1)]);
  }
  IndexSet I(all.begin(), all.begin() + k);
  std::sort(I.begin(), I.end());
  return I;
}

struct Checker {
  SectionResult result;
  explicit Checker(const std::string& name) { result.name = name; }
  bool check(bool ok, const std::string& name, const std::string& detail = "") {
    ++result.checks;
    if (!ok) result.failures.push_back({name, detail});
    return ok;
  }
};

// Zero forms may carry an incidental recorded degree; compare up to that.
bool forms_equal(const DiffForm& a, const DiffForm& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a == b;
}

bool forms_equal(const SimplexForm& a, const SimplexForm& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a == b;
}

std::string cell_tag(int r, int k) {
  return "r=" + std::to_string(r) + " k=" + std::to_string(k);
}

// Columns of the coefficients of a family of simplex forms, for exact rank
// and nullspace work on the T side.
class SimplexCoordinates {
 public:
  void collect(const SimplexForm& a) {
    for (const auto& [I, p] : a.terms()) {
      for (const auto& [m, c] : p.terms()) {
        (void)c;
        columns_.emplace(std::make_pair(I, m), static_cast<int>(columns_.size()));
      }
    }
  }
  int cols() const { return static_cast<int>(columns_.size()); }
  std::vector<Rational> vectorize(const SimplexForm& a) const {
    std::vector<Rational> out(columns_.size(), Rational(0));
    for (const auto& [I, p] : a.terms()) {
      for (const auto& [m, c] : p.terms()) {
        out[columns_.at(std::make_pair(I, m))] = c;
      }
    }
    return out;
  }

 private:
  std::map<std::pair<IndexSet, MultiIndex>, int> columns_;
};

// Dimension of the subspace of span(images) annihilated by every boundary
// face of the simplex.
int simplex_ring_dimension(const std::vector<SimplexForm>& images, int n) {
  if (images.empty()) return 0;
  std::vector<std::vector<SimplexForm>> pulled(images.size());
  SimplexCoordinates coords;
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (int face = 0; face <= n; ++face) {
      pulled[j].push_back(simplex_face_pullback(images[j], face));
      coords.collect(pulled[j].back());
    }
  }
  RatMat mat((n + 1) * coords.cols(), static_cast<int>(images.size()));
  for (std::size_t j = 0; j < images.size(); ++j) {
    int row0 = 0;
    for (int face = 0; face <= n; ++face) {
      auto column = coords.vectorize(pulled[j][face]);
      for (int i = 0; i < coords.cols(); ++i) {
        mat.at(row0 + i, static_cast<int>(j)) = column[i];
      }
      row0 += coords.cols();
    }
  }
  return static_cast<int>(nullspace(mat).size());
}

long long closed_form_dim_P(int n, int r, int k) {
  return Integer(binomial(r + k, k) * binomial(n + r, n - k)).get_si();
}

long long closed_form_dim_Pminus(int n, int r, int k) {
  return Integer(binomial(r + k - 1, k) * binomial(n + r, n - k)).get_si();
}

}  // namespace

Polynomial random_polynomial(Rng& rng, int nvars, int max_degree) {
  Polynomial p = Polynomial::constant(nvars, Rational(0));
  int terms = irand(rng, 1, 3);
  for (int t = 0; t < terms; ++t) {
    MultiIndex m = random_monomial(rng, nvars, irand(rng, 0, max_degree));
    p = p + Polynomial::monomial(m, random_coeff(rng));
  }
  return p;
}

Polynomial random_homogeneous(Rng& rng, int nvars, int degree) {
  Polynomial p = Polynomial::constant(nvars, Rational(0));
  int terms = irand(rng, 1, 3);
  for (int t = 0; t < terms; ++t) {
    MultiIndex m = random_monomial(rng, nvars, degree);
    p = p + Polynomial::monomial(m, random_coeff(rng));
  }
  return p;
}

DiffForm random_form(Rng& rng, int ambient, int degree, int max_coeff_degree) {
  DiffForm a(ambient, degree);
  if (degree > ambient) return a;
  int terms = irand(rng, 1, 3);
  for (int t = 0; t < terms; ++t) {
    a.add_term(random_index_set(rng, ambient, degree),
               SLocalPoly(random_polynomial(rng, ambient, max_coeff_degree)));
  }
  return a;
}

DiffForm random_homogeneous_form(Rng& rng, int ambient, int degree,
                                 int coeff_degree) {
  DiffForm a(ambient, degree);
  if (degree > ambient) return a;
  int terms = irand(rng, 1, 3);
  for (int t = 0; t < terms; ++t) {
    a.add_term(random_index_set(rng, ambient, degree),
               SLocalPoly(random_homogeneous(rng, ambient, coeff_degree)));
  }
  return a;
}

SectionResult check_golden_values(int n) {
  Checker c("golden");
  if (n != 2) return c.result;  // the worked examples live at n = 2
  SimplexContext ctx(2);

  auto form = [](const std::string& text) { return parse_diff_form(text, 2); };
  auto tform = [](const std::string& text) { return parse_simplex_form(text, 2); };

  // metric inner products
  c.check(inner_product(form("x*dy/\\dz"), form("y*dy/\\dz")) ==
              form("x*y^2*z").coefficient({}),
          "inner product of x dy^dz with y dy^dz");
  c.check(inner_product(form("dx"), form("dy")).is_zero(),
          "inner product of distinct covectors");
  c.check(inner_product(form("dx/\\dy/\\dz"), form("dx/\\dy/\\dz")) ==
              form("x*y*z").coefficient({}),
          "volume self inner product is the coordinate product");

  // horizontal extensions at several degrees
  struct Case {
    const char* input;
    int r;
    const char* expected;
  };
  const Case extensions[] = {
      {"x^4 + 3*x*y + y^3", 4, "x^4 + 3*x*y*s^2 + y^3*s"},
      {"x^4 + 3*x*y + y^3", 2, "x^4/s^2 + 3*x*y + y^3/s"},
      {"dx", 1, "s*dx - x*ds"},
      {"dx", 0, "dx - (x/s)*ds"},
      {"y*dx", 1, "y*dx - (x*y/s)*ds"},
      {"y*dx - x*dy", 1, "y*dx - x*dy"},
      {"dx/\\dy", 1, "x*dy/\\dz + y*dz/\\dx + z*dx/\\dy"},
  };
  for (const auto& e : extensions) {
    DiffForm got = horizontal_extension(ctx, tform(e.input), e.r);
    c.check(forms_equal(got, form(e.expected)),
            std::string("horizontal extension of ") + e.input + " at r=" +
                std::to_string(e.r),
            "got " + to_string(got));
  }

  // the pinned rendering of the s-localized extension
  c.check(to_string(horizontal_extension(ctx, tform("y*dx"), 1)) ==
              "y*dx - (x*y/s)*ds",
          "printed form of the extension of y dx",
          to_string(horizontal_extension(ctx, tform("y*dx"), 1)));

  // star table
  c.check(forms_equal(hodge_star(ctx, form("1")), form("dx/\\dy/\\dz")),
          "star of 1");
  c.check(forms_equal(hodge_star(ctx, form("dx")), form("x*dy/\\dz")),
          "star of dx");
  c.check(forms_equal(hodge_star(ctx, form("dx/\\dy")), form("x*y*dz")),
          "star of dx^dy");
  c.check(forms_equal(hodge_star(ctx, form("dx/\\dy/\\dz")), form("x*y*z")),
          "star of the volume form");

  // Koszul contraction of dx recenters the radial field
  c.check(forms_equal(koszul(ctx, form("dx")), form("x - 1/3*s")),
          "koszul contraction of dx");

  // degree-1 spans: computed bases match the listed generators exactly
  struct Span {
    SpaceKind kind;
    int k;
    std::vector<const char*> gens;
  };
  const Span spans[] = {
      {SpaceKind::Pminus, 0, {"x", "y", "z"}},
      {SpaceKind::P, 0, {"x*ds", "y*ds", "z*ds"}},
      {SpaceKind::Pminus, 1, {"y*dx - x*dy", "z*dy - y*dz", "x*dz - z*dx"}},
      {SpaceKind::P,
       1,
       {"y*dx/\\ds", "x*dy/\\ds", "z*dy/\\ds", "y*dz/\\ds", "x*dz/\\ds",
        "z*dx/\\ds"}},
      {SpaceKind::Pminus, 2, {"x*dy/\\dz + y*dz/\\dx + z*dx/\\dy"}},
      {SpaceKind::P,
       2,
       {"x*dx/\\dy/\\dz", "y*dx/\\dy/\\dz", "z*dx/\\dy/\\dz"}},
  };
  for (const auto& span : spans) {
    FormSpace space = make_space(span.kind, 2, 1, span.k);
    std::string label = to_string(span.kind) + " r=1 k=" + std::to_string(span.k);
    c.check(space.dim() == static_cast<int>(span.gens.size()),
            label + " dimension",
            "dim " + std::to_string(space.dim()));
    FormSpace listed{span.kind, 2, 1, span.k, space.form_degree, {}};
    for (const char* g : span.gens) listed.basis.push_back(form(g));
    bool mutual = true;
    for (const char* g : span.gens) {
      if (!member(space, form(g))) mutual = false;
    }
    for (const DiffForm& b : space.basis) {
      if (!member(listed, b)) mutual = false;
    }
    c.check(mutual, label + " span agreement");
  }

  // membership of the extension example
  FormSpace pminus11 = space_Pminus(2, 1, 1);
  c.check(member(pminus11, form("y*dx - x*dy")).has_value(),
          "the rotational 1-form is in the degree-1 trimmed space");
  c.check(!member(pminus11, form("y*dx")).has_value(),
          "y dx is not in the degree-1 trimmed space");

  // the vertical lift example
  c.check(forms_equal(from_T(ctx, tform("dx"), SpaceKind::P, 1),
                      form("s*dx/\\ds")),
          "vertical lift of dx at degree 1");
  return c.result;
}

SectionResult check_operator_identities(int n, int max_r, int cases_per_identity,
                                        unsigned seed) {
  Checker c("identities");
  SimplexContext ctx(n);
  const int amb = ctx.ambient;
  Rng rng(seed + 1000003u * static_cast<unsigned>(n));
  SLocalPoly s_coeff(ctx.s);

  for (int i = 0; i < cases_per_identity; ++i) {
    std::string tag = " [case " + std::to_string(i) + "]";
    {
      int k = irand(rng, 0, amb);
      DiffForm a = random_form(rng, amb, k, max_r);
      DiffForm lhs = wedge(ctx.ds, contract_left(ctx.euler, a)) +
                     contract_left(ctx.euler, wedge(ctx.ds, a));
      c.check(forms_equal(lhs, s_coeff * a),
              "wedge/insert anticommutator equals s" + tag);
    }
    {
      int k = irand(rng, 0, amb);
      DiffForm a = random_form(rng, amb, k, max_r);
      DiffForm lhs = wedge(ctx.ds, contract_left(ctx.grad_s, a)) +
                     contract_left(ctx.grad_s, wedge(ctx.ds, a));
      c.check(forms_equal(lhs, Rational(amb) * a),
              "gradient-sum anticommutator equals n+1" + tag);
    }
    {
      int k = irand(rng, 0, amb);
      int r = irand(rng, 0, max_r);
      DiffForm a = random_homogeneous_form(rng, amb, k, r);
      c.check(forms_equal(lie_euler(ctx, a), Rational(r + k) * a),
              "Euler derivative scales by homogeneity plus degree" + tag);
    }
    {
      int k = irand(rng, 0, amb - 1);
      DiffForm a = random_form(rng, amb, k, max_r);
      DiffForm b = random_form(rng, amb, k + 1, max_r);
      c.check(inner_product(wedge(ctx.ds, a), b) ==
                  inner_product(a, contract_left(ctx.euler, b)),
              "wedge and insertion are metric adjoints" + tag);
    }
    {
      int k = irand(rng, 0, amb);
      DiffForm a = random_form(rng, amb, k, max_r);
      Splitting parts = split(ctx, a);
      c.check(forms_equal(parts.vertical + parts.horizontal, a),
              "splitting recombines" + tag);
      c.check(inner_product(parts.vertical, parts.horizontal).is_zero(),
              "splitting parts are orthogonal" + tag);
    }
    {
      int k = irand(rng, 0, amb);
      DiffForm a = random_form(rng, amb, k, max_r).s_shifted(irand(rng, 0, 2));
      c.check(d(d(a)).is_zero(), "exterior derivative squares to zero" + tag);
    }
    {
      int k = irand(rng, 0, amb);
      int r = irand(rng, 0, max_r);
      DiffForm a = random_homogeneous_form(rng, amb, k, r)
                       .s_shifted(irand(rng, 0, 2));
      c.check(modified_d(ctx, modified_d(ctx, a)).is_zero(),
              "modified derivative squares to zero" + tag);
    }
    {
      int k1 = irand(rng, 0, amb);
      int k2 = irand(rng, 0, amb - k1);
      DiffForm a = random_homogeneous_form(rng, amb, k1, irand(rng, 0, max_r));
      DiffForm b = random_homogeneous_form(rng, amb, k2, irand(rng, 0, max_r));
      DiffForm lhs = modified_d(ctx, wedge(a, b));
      DiffForm rhs = wedge(modified_d(ctx, a), b);
      DiffForm cross = wedge(a, modified_d(ctx, b));
      if (k1 % 2 != 0) cross = -cross;
      rhs += cross;
      c.check(forms_equal(lhs, rhs),
              "modified derivative is an antiderivation" + tag);
    }
    {
      int k = irand(rng, 0, amb);
      DiffForm a = random_homogeneous_form(rng, amb, k, irand(rng, 0, max_r));
      c.check(forms_equal(modified_d(ctx, wedge(a, ctx.ds)),
                          wedge(modified_d(ctx, a), ctx.ds)),
              "modified derivative commutes with trailing ds" + tag);
    }
    {
      int k = irand(rng, 0, amb);
      DiffForm a = random_homogeneous_form(rng, amb, k, irand(rng, 0, max_r));
      c.check(forms_equal(modified_d(ctx, contract_right(ctx.euler, a)),
                          contract_right(ctx.euler, modified_d(ctx, a))),
              "modified derivative commutes with right insertion" + tag);
    }
    {
      int k = irand(rng, 0, amb);
      int r = irand(rng, 0, max_r);
      DiffForm a = random_homogeneous_form(rng, amb, k, r);
      DiffForm conjugated = d(a.s_shifted(r + k)).s_shifted(-(r + k));
      c.check(forms_equal(modified_d(ctx, a), conjugated),
              "modified derivative conjugation formula" + tag);
    }
  }
  return c.result;
}

SectionResult check_hodge_involution(int n, int max_r) {
  Checker c("hodge");
  SimplexContext ctx(n);
  const int amb = ctx.ambient;
  SLocalPoly p_coeff(ctx.product);

  for (int r = 0; r <= std::min(max_r, 3); ++r) {
    for (int k = 0; k <= amb; ++k) {
      int sign = (k * (amb - k)) % 2 == 0 ? 1 : -1;
      bool all = true;
      for (const DiffForm& b : space_H(n, r, k).basis) {
        DiffForm twice = hodge_star(ctx, hodge_star(ctx, b));
        if (!forms_equal(twice, Rational(sign) * (p_coeff * b))) all = false;
      }
      c.check(all, "star involution on degree-" + std::to_string(r) +
                       " forms, k=" + std::to_string(k));
    }
  }

  Rng rng(777100123u + static_cast<unsigned>(n));
  for (int i = 0; i < 20; ++i) {
    std::string tag = " [case " + std::to_string(i) + "]";
    int k = irand(rng, 0, amb);
    DiffForm a = random_form(rng, amb, k, max_r);
    DiffForm b = random_form(rng, amb, k, max_r);
    DiffForm vol_scaled(amb, amb);
    vol_scaled.add_term(ctx.volume.terms().begin()->first,
                        inner_product(a, b));
    c.check(forms_equal(wedge(a, hodge_star(ctx, b)), vol_scaled),
            "star satisfies the defining wedge relation" + tag);

    bool faces_vanish = true;
    for (int face = 0; face < amb; ++face) {
      if (!pullback_face(hodge_star(ctx, b), face).is_zero()) faces_vanish = false;
    }
    c.check(faces_vanish, "star output vanishes on faces" + tag);

    DiffForm vertical = wedge(ctx.ds, random_form(rng, amb, k, max_r));
    c.check(contract_left(ctx.euler, hodge_star(ctx, vertical)).is_zero(),
            "star of a vertical form is horizontal" + tag);
    DiffForm horizontal =
        contract_left(ctx.euler, random_form(rng, amb, k + 1, max_r));
    c.check(wedge(ctx.ds, hodge_star(ctx, horizontal)).is_zero(),
            "star of a horizontal form is vertical" + tag);

    if (!b.is_zero()) {
      DiffForm back = hodge_star_inverse(ctx, hodge_star(ctx, b));
      c.check(forms_equal(back, b), "star inverse undoes star" + tag);
    }
  }
  return c.result;
}

SectionResult check_space_structure(int n, int max_r,
                                    std::optional<int> max_cells) {
  Checker c("spaces");
  SimplexContext ctx(n);
  const int amb = ctx.ambient;
  SLocalPoly s_coeff(ctx.s);
  int cells = 0;

  for (int r = 1; r <= max_r; ++r) {
    for (int k = 0; k <= n; ++k) {
      if (max_cells && cells >= *max_cells) break;
      ++cells;
      std::string tag = " [" + cell_tag(r, k) + "]";

      FormSpace h = space_H(n, r, k);
      c.check(h.dim() == Integer(binomial(n + r, n) * binomial(amb, k)).get_si(),
              "full space dimension" + tag, "dim " + std::to_string(h.dim()));

      FormSpace p = space_P(n, r, k);
      c.check(p.dim() == closed_form_dim_P(n, r, k),
              "vertical space dimension" + tag,
              "dim " + std::to_string(p.dim()));
      bool vertical_ok = true, hom_ok = true;
      for (const DiffForm& b : p.basis) {
        if (!wedge(ctx.ds, b).is_zero()) vertical_ok = false;
        if (form_homogeneity(b) != r) hom_ok = false;
      }
      c.check(vertical_ok, "vertical basis killed by leading ds" + tag);
      c.check(hom_ok, "vertical basis homogeneity" + tag);

      FormSpace pm = space_Pminus(n, r, k);
      c.check(pm.dim() == closed_form_dim_Pminus(n, r, k),
              "trimmed space dimension" + tag,
              "dim " + std::to_string(pm.dim()));
      bool horizontal_ok = true;
      hom_ok = true;
      for (const DiffForm& b : pm.basis) {
        if (!contract_left(ctx.euler, b).is_zero()) horizontal_ok = false;
        if (form_homogeneity(b) != r) hom_ok = false;
      }
      c.check(horizontal_ok, "trimmed basis killed by insertion" + tag);
      c.check(hom_ok, "trimmed basis homogeneity" + tag);

      // inclusion chain and the multiplication-by-s composites
      FormSpace p_prev = space_P(n, r - 1, k);
      bool chain_ok = true, mult_ok = true;
      for (const DiffForm& b : p_prev.basis) {
        DiffForm inserted = contract_right(ctx.euler, b);
        if (!member(pm, inserted)) chain_ok = false;
        if (!forms_equal(wedge(inserted, ctx.ds), s_coeff * b)) mult_ok = false;
      }
      for (const DiffForm& b : pm.basis) {
        DiffForm lifted = wedge(b, ctx.ds);
        if (!member(p, lifted)) chain_ok = false;
        if (!forms_equal(contract_right(ctx.euler, lifted), s_coeff * b)) {
          mult_ok = false;
        }
      }
      c.check(chain_ok, "inclusion chain memberships" + tag);
      c.check(mult_ok, "inclusion composites multiply by s" + tag);

      // ring subspaces are annihilated by every face pullback
      for (SpaceKind kind : {SpaceKind::H, SpaceKind::P, SpaceKind::Pminus}) {
        FormSpace ring = ring_subspace(make_space(kind, n, r, k));
        bool faces_ok = true;
        for (const DiffForm& b : ring.basis) {
          for (int face = 0; face < amb; ++face) {
            if (!pullback_face(b, face).is_zero()) faces_ok = false;
          }
        }
        c.check(faces_ok, "ring subspace trace-free (" + to_string(ring.kind) +
                              ")" + tag);
      }

      // the star exchanges the two families into ring spaces
      if (n - k >= 0) {
        FormSpace ring_p = ring_subspace(space_P(n, r + k, n - k));
        bool exchange = true;
        for (const DiffForm& b : pm.basis) {
          if (!member(ring_p, hodge_star(ctx, b))) exchange = false;
        }
        c.check(exchange, "star sends trimmed basis into ring vertical" + tag);
        FormSpace ring_pm = ring_subspace(space_Pminus(n, r + k + 1, n - k));
        exchange = true;
        for (const DiffForm& b : p.basis) {
          if (!member(ring_pm, hodge_star(ctx, b))) exchange = false;
        }
        c.check(exchange, "star sends vertical basis into ring trimmed" + tag);
      }

      // trace behavior transfers to the simplex: ring dimensions agree
      std::vector<SimplexForm> p_images, pm_images;
      for (const DiffForm& b : p.basis) p_images.push_back(to_T(ctx, b, SpaceKind::P));
      for (const DiffForm& b : pm.basis) {
        pm_images.push_back(to_T(ctx, b, SpaceKind::Pminus));
      }
      c.check(simplex_ring_dimension(p_images, n) ==
                  ring_subspace(p).dim(),
              "vertical ring dimension matches on the simplex" + tag);
      c.check(simplex_ring_dimension(pm_images, n) ==
                  ring_subspace(pm).dim(),
              "trimmed ring dimension matches on the simplex" + tag);
    }
  }
  return c.result;
}

SectionResult check_correspondence(int n, int max_r) {
  Checker c("correspondence");
  SimplexContext ctx(n);

  for (int r = 1; r <= max_r; ++r) {
    for (int k = 0; k <= n; ++k) {
      std::string tag = " [" + cell_tag(r, k) + "]";
      FormSpace p = space_P(n, r, k);
      FormSpace pm = space_Pminus(n, r, k);

      bool round_p = true;
      for (const DiffForm& b : p.basis) {
        if (!forms_equal(from_T(ctx, to_T(ctx, b, SpaceKind::P), SpaceKind::P, r),
                         b)) {
          round_p = false;
        }
      }
      c.check(round_p, "vertical restriction/lift round trip" + tag);

      bool round_pm = true;
      for (const DiffForm& b : pm.basis) {
        if (!forms_equal(
                from_T(ctx, to_T(ctx, b, SpaceKind::Pminus), SpaceKind::Pminus, r),
                b)) {
          round_pm = false;
        }
      }
      c.check(round_pm, "trimmed restriction/lift round trip" + tag);

      // the two inclusion squares against the simplex
      bool squares = true;
      for (const DiffForm& b : pm.basis) {
        if (!forms_equal(to_T(ctx, wedge(b, ctx.ds), SpaceKind::P),
                         to_T(ctx, b, SpaceKind::Pminus))) {
          squares = false;
        }
      }
      c.check(squares, "inclusion square commutes" + tag);

      // modified derivative diagram: restrict after, or differentiate after
      bool d_diagram = true;
      for (const DiffForm& b : p.basis) {
        if (!forms_equal(to_T(ctx, modified_d(ctx, b), SpaceKind::P),
                         d(to_T(ctx, b, SpaceKind::P)))) {
          d_diagram = false;
        }
      }
      c.check(d_diagram, "modified derivative diagram" + tag);

      bool sd_diagram = true;
      for (const DiffForm& b : pm.basis) {
        if (!forms_equal(to_T(ctx, s_modified_d(ctx, b), SpaceKind::Pminus),
                         d(to_T(ctx, b, SpaceKind::Pminus)))) {
          sd_diagram = false;
        }
      }
      c.check(sd_diagram, "scaled modified derivative diagram" + tag);

      // image spaces of the derivatives
      if (r >= 1 && k + 1 <= n) {
        FormSpace target = space_P(n, r - 1, k + 1);
        bool image = true;
        for (const DiffForm& b : p.basis) {
          if (!member(target, modified_d(ctx, b))) image = false;
        }
        c.check(image, "modified derivative lowers degree into vertical" + tag);
      }
      if (k + 1 <= n + 1) {
        FormSpace target = space_Pminus(n, r, k + 1);
        bool image = true;
        for (const DiffForm& b : pm.basis) {
          if (!member(target, s_modified_d(ctx, b))) image = false;
        }
        c.check(image, "scaled derivative stays trimmed" + tag);
      }

      // mixed chain on the simplex: lower-degree forms extend polynomially
      bool t_chain = true;
      for (const DiffForm& b : space_P(n, r - 1, k).basis) {
        SimplexForm a = to_T(ctx, b, SpaceKind::P);
        try {
          DiffForm lift = from_T(ctx, a, SpaceKind::Pminus, r);
          if (!forms_equal(to_T(ctx, lift, SpaceKind::Pminus), a)) t_chain = false;
        } catch (const NotPolynomialResult&) {
          t_chain = false;
        }
      }
      for (const DiffForm& b : pm.basis) {
        SimplexForm a = to_T(ctx, b, SpaceKind::Pminus);
        try {
          DiffForm lift = from_T(ctx, a, SpaceKind::P, r);
          if (!forms_equal(to_T(ctx, lift, SpaceKind::P), a)) t_chain = false;
        } catch (const NotPolynomialResult&) {
          t_chain = false;
        }
      }
      c.check(t_chain, "simplex-side inclusion chain extends" + tag);
    }
  }
  return c.result;
}

SectionResult check_integration(int n, int max_r, int cases, unsigned seed) {
  Checker c("integration");
  SimplexContext ctx(n);
  const int amb = ctx.ambient;
  Rng rng(seed + 424243u * static_cast<unsigned>(n));
  SimplexForm one(n, 0);
  one.add_term({}, Polynomial::constant(n, Rational(1)));

  for (int i = 0; i < cases; ++i) {
    std::string tag = " [case " + std::to_string(i) + "]";
    int r = irand(rng, 0, max_r);
    DiffForm mu = random_homogeneous_form(rng, amb, amb, r);

    bool faces = true;
    for (int face = 0; face < amb; ++face) {
      if (!pullback_face(contract_left(ctx.euler, mu), face).is_zero()) {
        faces = false;
      }
    }
    c.check(faces, "inserted top form has no boundary trace" + tag);

    SimplexForm a = restrict_to_simplex(ctx, contract_left(ctx.euler, mu));
    Rational via_simplex = pair_simplex(ctx, a, one, r + 1, 0);
    c.check(via_simplex == Rational(n + r + 1) * integrate_solid(mu),
            "solid and simplex integrals are proportional" + tag);
  }
  return c.result;
}

SectionResult check_positivity(int n, int max_r, int cases, unsigned seed) {
  Checker c("positivity");
  SimplexContext ctx(n);
  const int amb = ctx.ambient;
  Rng rng(seed + 87178291u * static_cast<unsigned>(n));
  for (int i = 0; i < cases; ++i) {
    int k = irand(rng, 0, amb);
    DiffForm a = random_form(rng, amb, k, max_r);
    if (a.is_zero()) continue;
    Rational v = integrate_solid(wedge(a, hodge_star(ctx, a)));
    c.check(v > 0, "self pairing is positive [case " + std::to_string(i) + "]",
            "value " + to_string(v));
  }
  return c.result;
}

SectionResult check_duality(int n, int max_r, std::optional<int> max_cells) {
  Checker c("duality");
  int cells = 0;
  for (int r = 1; r <= max_r; ++r) {
    for (int k = 0; k <= n; ++k) {
      if (max_cells && cells >= *max_cells) break;
      ++cells;
      DualityReport report = verify_duality(n, r, k);
      for (const PairingCell& cell : report.cells) {
        std::ostringstream detail;
        detail << cell.dim_rows << "x" << cell.dim_cols << ", rank "
               << cell.rank;
        if (cell.square) detail << ", det " << to_string(cell.det);
        c.check(cell.square && cell.nondegenerate, "pairing " + cell.label,
                detail.str());
      }
    }
  }
  return c.result;
}

int VerifyReport::total_checks() const {
  int total = 0;
  for (const auto& s : sections) total += s.checks;
  return total;
}

int VerifyReport::total_failures() const {
  int total = 0;
  for (const auto& s : sections) total += static_cast<int>(s.failures.size());
  return total;
}

VerifyReport run_verification(const VerifyOptions& options, std::ostream* log) {
  VerifyReport report;
  report.options = options;
  const int n = options.n;
  const int max_r = options.max_r;

  auto run = [&](SectionResult section) {
    if (log) {
      *log << "  [" << (section.ok() ? "ok" : "FAIL") << "] " << section.name
           << ": " << section.checks << " checks, " << section.failures.size()
           << " failures\n";
      int shown = 0;
      for (const auto& f : section.failures) {
        if (++shown > 10) {
          *log << "      ... " << section.failures.size() - 10 << " more\n";
          break;
        }
        *log << "      " << f.name
             << (f.detail.empty() ? "" : ": " + f.detail) << "\n";
      }
    }
    report.sections.push_back(std::move(section));
  };

  run(check_golden_values(n));
  run(check_operator_identities(n, std::min(max_r, 4),
                                options.cases_per_identity, options.seed));
  run(check_hodge_involution(n, max_r));
  run(check_space_structure(n, max_r, options.max_cells));
  run(check_correspondence(n, max_r));
  run(check_integration(n, std::min(max_r, 4), options.cases_per_identity,
                        options.seed));
  run(check_positivity(n, max_r, options.cases_per_identity, options.seed));
  run(check_duality(n, max_r, options.max_cells));
  return report;
}

}  // namespace feec
