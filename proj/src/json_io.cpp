#include "feec/json_io.hpp"

#include <sstream>

#include "feec/errors.hpp"

namespace feec {

namespace {

nlohmann::json term_entry(const IndexSet& I, const MultiIndex& m,
                          const Rational& c, int s_power) {
  nlohmann::json entry;
  entry["coeff"] = to_string(c);
  entry["s_power"] = s_power;
  entry["monomial"] = m;
  std::vector<int> indices;
  for (int i : I) indices.push_back(i + 1);
  entry["indices"] = indices;
  return entry;
}

template <class FormT, class CoeffFn>
nlohmann::json form_json(const FormT& a, int degree, CoeffFn coeff) {
  nlohmann::json j;
  j["degree"] = degree;
  nlohmann::json terms = nlohmann::json::array();
  bool mixed = false;
  std::optional<int> homogeneity;
  for (const auto& [I, f] : a.terms()) {
    auto [num, s_power] = coeff(f);
    for (const auto& [m, c] : num.terms()) {
      terms.push_back(term_entry(I, m, c, s_power));
      int h = mi_degree(m) - s_power;
      if (!homogeneity) {
        homogeneity = h;
      } else if (*homogeneity != h) {
        mixed = true;
      }
    }
  }
  if (homogeneity && !mixed) j["homogeneity"] = *homogeneity;
  j["terms"] = terms;
  return j;
}

struct ParsedTerm {
  IndexSet indices;
  MultiIndex monomial;
  Rational coeff;
  int s_power;
};

ParsedTerm read_term(const nlohmann::json& entry, int vars) {
  if (!entry.contains("coeff") || !entry.contains("monomial") ||
      !entry.contains("indices")) {
    throw DomainError("form json: term needs coeff, monomial, indices");
  }
  ParsedTerm t;
  t.coeff = rational_from_string(entry["coeff"].get<std::string>());
  t.s_power = entry.value("s_power", 0);
  t.monomial = entry["monomial"].get<MultiIndex>();
  if (static_cast<int>(t.monomial.size()) != vars) {
    throw DomainError("form json: monomial length does not match dimension");
  }
  for (int e : t.monomial) {
    if (e < 0) throw DomainError("form json: negative exponent");
  }
  for (int i : entry["indices"].get<std::vector<int>>()) {
    if (i < 1 || i > vars) throw DomainError("form json: index out of range");
    t.indices.push_back(i - 1);
  }
  for (std::size_t i = 1; i < t.indices.size(); ++i) {
    if (t.indices[i - 1] >= t.indices[i]) {
      throw DomainError("form json: indices must be strictly increasing");
    }
  }
  return t;
}

}  // namespace

nlohmann::json to_json(const DiffForm& a) {
  return form_json(a, a.degree(), [](const SLocalPoly& f) {
    return std::make_pair(f.num(), f.s_power());
  });
}

nlohmann::json to_json(const SimplexForm& a) {
  return form_json(a, a.degree(), [](const Polynomial& p) {
    return std::make_pair(p, 0);
  });
}

DiffForm diff_form_from_json(const nlohmann::json& j, int n) {
  int vars = n + 1;
  DiffForm a(vars, j.at("degree").get<int>());
  for (const auto& entry : j.at("terms")) {
    ParsedTerm t = read_term(entry, vars);
    if (static_cast<int>(t.indices.size()) != a.degree()) {
      throw DomainError("form json: term index count does not match degree");
    }
    a.add_term(t.indices,
               SLocalPoly(Polynomial::monomial(t.monomial, t.coeff), t.s_power));
  }
  return a;
}

SimplexForm simplex_form_from_json(const nlohmann::json& j, int n) {
  SimplexForm a(n, j.at("degree").get<int>());
  for (const auto& entry : j.at("terms")) {
    ParsedTerm t = read_term(entry, n);
    if (static_cast<int>(t.indices.size()) != a.degree()) {
      throw DomainError("form json: term index count does not match degree");
    }
    if (t.s_power != 0) {
      throw DomainError("form json: simplex forms cannot carry s powers");
    }
    a.add_term(t.indices, Polynomial::monomial(t.monomial, t.coeff));
  }
  return a;
}

nlohmann::json to_json(const RatMat& m) {
  nlohmann::json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(to_string(m.at(i, k)));
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j;
}

RatMat ratmat_from_json(const nlohmann::json& j) {
  RatMat m(j.at("rows").get<int>(), j.at("cols").get<int>());
  const auto& entries = j.at("entries");
  for (int i = 0; i < m.rows(); ++i) {
    for (int k = 0; k < m.cols(); ++k) {
      m.at(i, k) = rational_from_string(entries.at(i).at(k).get<std::string>());
    }
  }
  return m;
}

std::string to_csv(const RatMat& m) {
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ",";
      out << to_string(m.at(i, j));
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace feec
