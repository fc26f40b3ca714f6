#include "feec/print.hpp"

#include <cassert>
#include <map>
#include <sstream>
#include <utility>

namespace feec {

namespace {

std::string monomial_string(const MultiIndex& m,
                            const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

// sign and magnitude text of a single monomial term
std::pair<int, std::string> term_string(const MultiIndex& m, const Rational& c,
                                        const std::vector<std::string>& vars) {
  int sign = c < 0 ? -1 : 1;
  Rational mag = sign < 0 ? Rational(-c) : c;
  std::string mono = monomial_string(m, vars);
  if (mono.empty()) return {sign, to_string(mag)};
  if (mag == 1) return {sign, mono};
  return {sign, to_string(mag) + "*" + mono};
}

// Renders a form coefficient: sign to hoist into the separator, the text,
// and whether the text already carries its own parentheses.
struct CoeffText {
  int sign = 1;
  std::string text;
  bool is_plain_one = false;
};

CoeffText coefficient_string(const SLocalPoly& f,
                             const std::vector<std::string>& vars) {
  assert(!f.is_zero());
  CoeffText out;
  const auto& terms = f.num().terms();
  if (f.s_power() == 0) {
    if (terms.size() == 1) {
      auto [sign, text] = term_string(terms.begin()->first,
                                      terms.begin()->second, vars);
      out.sign = sign;
      out.text = text;
      out.is_plain_one = text == "1";
    } else {
      out.text = "(" + to_string(f.num(), vars) + ")";
    }
    return out;
  }
  std::string tail = "/s";
  if (f.s_power() > 1) tail += "^" + std::to_string(f.s_power());
  if (terms.size() == 1) {
    auto [sign, text] = term_string(terms.begin()->first,
                                    terms.begin()->second, vars);
    out.sign = sign;
    out.text = "(" + text + tail + ")";
  } else {
    out.text = "((" + to_string(f.num(), vars) + ")" + tail + ")";
  }
  return out;
}

// One top-level rendering unit: an optional coefficient times a covector
// monomial (possibly ending in ds).
void append_term(std::string& out, const CoeffText& coeff,
                 const std::string& covectors) {
  bool first = out.empty();
  if (first) {
    if (coeff.sign < 0) out += "-";
  } else {
    out += coeff.sign < 0 ? " - " : " + ";
  }
  if (covectors.empty()) {
    out += coeff.text;
  } else if (coeff.is_plain_one) {
    out += covectors;
  } else {
    out += coeff.text + "*" + covectors;
  }
}

std::string covector_string(const IndexSet& I, bool with_ds,
                            const std::vector<std::string>& vars) {
  std::string out;
  for (int i : I) {
    if (!out.empty()) out += "/\\";
    out += "d" + vars[i];
  }
  if (with_ds) {
    if (!out.empty()) out += "/\\";
    out += "ds";
  }
  return out;
}

using Rendering = std::map<std::pair<bool, IndexSet>, SLocalPoly>;

void rendering_add(Rendering& r, bool ds, const IndexSet& I,
                   const SLocalPoly& f) {
  auto key = std::make_pair(ds, I);
  auto it = r.find(key);
  if (it == r.end()) {
    if (!f.is_zero()) r.emplace(key, f);
    return;
  }
  it->second = it->second + f;
  if (it->second.is_zero()) r.erase(it);
}

Rendering raw_rendering(const DiffForm& a) {
  Rendering r;
  for (const auto& [I, f] : a.terms()) rendering_add(r, false, I, f);
  return r;
}

// Rewrite with the last covector eliminated: dx_last = ds - sum of others.
Rendering ds_rendering(const DiffForm& a) {
  Rendering r;
  int last = a.ambient() - 1;
  for (const auto& [I, f] : a.terms()) {
    if (I.empty() || I.back() != last) {
      rendering_add(r, false, I, f);
      continue;
    }
    IndexSet head(I.begin(), I.end() - 1);
    rendering_add(r, true, head, f);
    for (int j = 0; j < last; ++j) {
      auto merged = merge_index_sets(head, {j});
      if (!merged) continue;
      rendering_add(r, false, merged->first, Rational(-merged->second) * f);
    }
  }
  return r;
}

std::string render(const Rendering& r, const std::vector<std::string>& vars) {
  if (r.empty()) return "0";
  std::string out;
  for (const auto& [key, f] : r) {
    append_term(out, coefficient_string(f, vars),
                covector_string(key.second, key.first, vars));
  }
  return out;
}

}  // namespace

std::vector<std::string> variable_names(int count, bool simplex) {
  static const char* aliases[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  bool use_aliases = simplex ? count <= 3 : count <= 4;
  for (int i = 0; i < count; ++i) {
    if (use_aliases) {
      out.push_back(aliases[i]);
    } else {
      out.push_back("x" + std::to_string(i + 1));
    }
  }
  return out;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    auto [sign, text] = term_string(it->first, it->second, vars);
    if (out.empty()) {
      if (sign < 0) out += "-";
    } else {
      out += sign < 0 ? " - " : " + ";
    }
    out += text;
  }
  return out;
}

std::string to_string(const SLocalPoly& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  if (f.s_power() == 0) return to_string(f.num(), vars);
  CoeffText c = coefficient_string(f, vars);
  return (c.sign < 0 ? "-" : "") + c.text;
}

std::string to_string(const DiffForm& a) {
  auto vars = variable_names(a.ambient(), false);
  if (a.is_zero()) return "0";
  Rendering raw = raw_rendering(a);
  Rendering ds = ds_rendering(a);
  return render(ds.size() < raw.size() ? ds : raw, vars);
}

std::string to_string(const SimplexForm& a) {
  auto vars = variable_names(a.dim(), true);
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [I, p] : a.terms()) {
    append_term(out, coefficient_string(SLocalPoly(p), vars),
                covector_string(I, false, vars));
  }
  return out;
}

std::string to_string(const RatMat& m) {
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << " ";
      out << to_string(m.at(i, j));
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace feec
