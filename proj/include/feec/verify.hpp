#pragma once

#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "feec/calculus.hpp"
#include "feec/forms.hpp"

namespace feec {

// Deterministic random inputs for the property suites.  Coefficients are
// small integers; forms may be given a uniform coefficient degree (for the
// homogeneous identities) or mixed degrees up to a bound.
using Rng = std::mt19937;

Polynomial random_polynomial(Rng& rng, int nvars, int max_degree);
Polynomial random_homogeneous(Rng& rng, int nvars, int degree);
DiffForm random_form(Rng& rng, int ambient, int degree, int max_coeff_degree);
DiffForm random_homogeneous_form(Rng& rng, int ambient, int degree,
                                 int coeff_degree);

struct CheckFailure {
  std::string name;
  std::string detail;
};

struct SectionResult {
  std::string name;
  int checks = 0;
  std::vector<CheckFailure> failures;
  bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
  int n = 2;
  int max_r = 3;
  unsigned seed = 918273645;
  int cases_per_identity = 40;
  std::optional<int> max_cells;  // cap on (r, k) duality cells, if set
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<SectionResult> sections;
  int total_checks() const;
  int total_failures() const;
  bool ok() const { return total_failures() == 0; }
};

// Individual sections, usable on their own (the acceptance gate drives some
// of them at larger case counts).
SectionResult check_golden_values(int n);
SectionResult check_operator_identities(int n, int max_r, int cases_per_identity,
                                        unsigned seed);
SectionResult check_hodge_involution(int n, int max_r);
SectionResult check_space_structure(int n, int max_r,
                                    std::optional<int> max_cells = {});
SectionResult check_correspondence(int n, int max_r);
SectionResult check_integration(int n, int max_r, int cases, unsigned seed);
SectionResult check_duality(int n, int max_r, std::optional<int> max_cells = {});
SectionResult check_positivity(int n, int max_r, int cases, unsigned seed);

// The full suite; logs one line per section to `log` when given.
VerifyReport run_verification(const VerifyOptions& options,
                              std::ostream* log = nullptr);

}  // namespace feec
