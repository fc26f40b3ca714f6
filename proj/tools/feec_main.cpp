#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"

#include "feec/errors.hpp"
#include "feec/json_io.hpp"
#include "feec/metric.hpp"
#include "feec/pairing.hpp"
#include "feec/parse.hpp"
#include "feec/print.hpp"
#include "feec/spaces.hpp"
#include "feec/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerifyFailed = 3;

struct DimArgs {
  int n = 2;
  int r = 1;
  int k = 0;
  std::string space = "Pminus";
  bool json = false;
};

feec::SpaceKind space_kind_or_throw(const std::string& name) {
  auto kind = feec::space_kind_from_string(name);
  if (!kind) throw feec::DomainError("unknown space kind: " + name);
  return *kind;
}

int run_dim(const DimArgs& args) {
  feec::FormSpace space =
      feec::make_space(space_kind_or_throw(args.space), args.n, args.r, args.k);
  std::cout << space.dim() << "\n";
  return kExitOk;
}

int run_basis(const DimArgs& args) {
  feec::FormSpace space =
      feec::make_space(space_kind_or_throw(args.space), args.n, args.r, args.k);
  if (args.json) {
    nlohmann::json j;
    j["space"] = feec::to_string(space.kind);
    j["n"] = space.n;
    j["r"] = space.r;
    j["k"] = space.k;
    j["form_degree"] = space.form_degree;
    j["dim"] = space.dim();
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& b : space.basis) basis.push_back(feec::to_json(b));
    j["basis"] = basis;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& b : space.basis) std::cout << feec::to_string(b) << "\n";
  }
  return kExitOk;
}

struct ApplyArgs {
  std::string op;
  int n = 2;
  std::optional<int> r;
  std::string expr;
  bool json = false;
};

int require_r(const ApplyArgs& args) {
  if (!args.r) {
    throw feec::DomainError("--op " + args.op + " requires --r");
  }
  return *args.r;
}

int run_apply(const ApplyArgs& args) {
  feec::SimplexContext ctx(args.n);

  if (args.op == "hr") {
    // extension acts on a form given in simplex coordinates
    feec::SimplexForm a = feec::parse_simplex_form(args.expr, args.n);
    feec::DiffForm result = feec::horizontal_extension(ctx, a, require_r(args));
    std::cout << (args.json ? feec::to_json(result).dump(2)
                            : feec::to_string(result))
              << "\n";
    return kExitOk;
  }

  feec::DiffForm a = feec::parse_diff_form(args.expr, args.n);
  if (args.op == "restrict") {
    feec::SimplexForm result = feec::restrict_to_simplex(ctx, a);
    std::cout << (args.json ? feec::to_json(result).dump(2)
                            : feec::to_string(result))
              << "\n";
    return kExitOk;
  }

  feec::DiffForm result(ctx.ambient, 0);
  if (args.op == "d") {
    result = feec::d(a);
  } else if (args.op == "boldd") {
    result = feec::modified_d(ctx, a);
  } else if (args.op == "sboldd") {
    result = feec::s_modified_d(ctx, a);
  } else if (args.op == "ix") {
    result = feec::contract_left(ctx.euler, a);
  } else if (args.op == "jx") {
    result = feec::contract_right(ctx.euler, a);
  } else if (args.op == "dswedge") {
    result = feec::wedge(ctx.ds, a);
  } else if (args.op == "koszul") {
    result = feec::koszul(ctx, a);
  } else if (args.op == "star") {
    result = feec::hodge_star(ctx, a);
  } else if (args.op == "starinv") {
    result = feec::hodge_star_inverse(ctx, a);
  } else {
    throw feec::DomainError("unknown operator: " + args.op);
  }
  std::cout << (args.json ? feec::to_json(result).dump(2)
                          : feec::to_string(result))
            << "\n";
  return kExitOk;
}

struct PairArgs {
  int n = 2;
  int r = 1;
  int k = 0;
  std::string family = "Pminus";
  bool json = false;
  bool csv = false;
};

int run_pair(const PairArgs& args) {
  auto make_cell = [&]() -> std::pair<feec::FormSpace, feec::FormSpace> {
    if (args.family == "Pminus" || args.family == "P-") {
      return {feec::space_Pminus(args.n, args.r, args.k),
              feec::ring_subspace(
                  feec::space_P(args.n, args.r + args.k, args.n - args.k))};
    }
    if (args.family == "P") {
      return {feec::space_P(args.n, args.r, args.k),
              feec::ring_subspace(feec::space_Pminus(
                  args.n, args.r + args.k + 1, args.n - args.k))};
    }
    if (args.family == "H") {
      return {feec::space_H(args.n, args.r, args.k),
              feec::ring_subspace(feec::space_H(args.n, args.r + args.k,
                                                args.n + 1 - args.k))};
    }
    throw feec::DomainError("unknown pairing family: " + args.family);
  };
  auto [rows, cols] = make_cell();
  feec::PairingMatrix matrix = feec::pairing_matrix(rows, cols);
  int rank = feec::rank(matrix.entries);
  bool square = rows.dim() == cols.dim();
  std::optional<feec::Rational> det;
  if (square) det = feec::determinant(matrix.entries);

  if (args.csv) {
    std::cout << feec::to_csv(matrix.entries);
    return kExitOk;
  }
  if (args.json) {
    nlohmann::json j;
    j["family"] = args.family;
    j["n"] = args.n;
    j["r"] = args.r;
    j["k"] = args.k;
    j["rows"] = {{"space", feec::to_string(rows.kind)}, {"dim", rows.dim()}};
    j["cols"] = {{"space", feec::to_string(cols.kind)}, {"dim", cols.dim()}};
    j["matrix"] = feec::to_json(matrix.entries);
    j["rank"] = rank;
    j["square"] = square;
    if (det) j["det"] = feec::to_string(*det);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "pairing " << feec::to_string(rows.kind) << "(" << rows.r << ","
            << rows.k << ") x " << feec::to_string(cols.kind) << "(" << cols.r
            << "," << cols.k << "), " << rows.dim() << " x " << cols.dim()
            << "\n";
  std::cout << feec::to_string(matrix.entries);
  std::cout << "rank " << rank << "\n";
  if (det) {
    std::cout << "det " << feec::to_string(*det) << "\n";
  } else {
    std::cout << "det undefined (not square)\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  int n = 2;
  int max_r = 3;
  unsigned seed = 918273645;
  int cases = 40;
};

int run_verify(const VerifyArgs& args) {
  feec::VerifyOptions options;
  options.n = args.n;
  options.max_r = args.max_r;
  options.seed = args.seed;
  options.cases_per_identity = args.cases;
  if (const char* cap = std::getenv("FEEC_MAX_CELLS")) {
    try {
      options.max_cells = std::stoi(cap);
    } catch (const std::exception&) {
      throw feec::DomainError("FEEC_MAX_CELLS is not an integer");
    }
  }
  std::cout << "verifying n=" << options.n << " max-r=" << options.max_r << "\n";
  feec::VerifyReport report = feec::run_verification(options, &std::cout);
  std::cout << (report.ok() ? "verification PASSED" : "verification FAILED")
            << " (" << report.total_checks() << " checks, "
            << report.total_failures() << " failures)\n";
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact polynomial differential forms on the simplex"};
  app.require_subcommand(1);

  DimArgs dim_args;
  CLI::App* dim = app.add_subcommand("dim", "print the dimension of a space");
  dim->add_option("--n", dim_args.n, "simplex dimension")->required();
  dim->add_option("--r", dim_args.r, "polynomial degree")->required();
  dim->add_option("--k", dim_args.k, "form degree")->required();
  dim->add_option("--space", dim_args.space,
                  "H, P, Pminus, ringH, ringP, or ringPminus");

  DimArgs basis_args;
  CLI::App* basis = app.add_subcommand("basis", "list a basis of a space");
  basis->add_option("--n", basis_args.n, "simplex dimension")->required();
  basis->add_option("--r", basis_args.r, "polynomial degree")->required();
  basis->add_option("--k", basis_args.k, "form degree")->required();
  basis->add_option("--space", basis_args.space,
                    "H, P, Pminus, ringH, ringP, or ringPminus");
  basis->add_flag("--json", basis_args.json, "machine-readable output");

  ApplyArgs apply_args;
  CLI::App* apply = app.add_subcommand("apply", "apply an operator to a form");
  apply->add_option("--op", apply_args.op,
                    "d, boldd, sboldd, ix, jx, dswedge, koszul, star, starinv, "
                    "hr, restrict")
      ->required();
  apply->add_option("--n", apply_args.n, "simplex dimension")->required();
  apply->add_option("--r", apply_args.r, "degree parameter (hr)");
  apply->add_flag("--json", apply_args.json, "machine-readable output");
  apply->add_option("expr", apply_args.expr, "form expression")->required();

  PairArgs pair_args;
  CLI::App* pair = app.add_subcommand("pair", "duality pairing matrix");
  pair->add_option("--n", pair_args.n, "simplex dimension")->required();
  pair->add_option("--r", pair_args.r, "polynomial degree")->required();
  pair->add_option("--k", pair_args.k, "form degree")->required();
  pair->add_option("--family", pair_args.family, "P, Pminus, or H");
  pair->add_flag("--json", pair_args.json, "machine-readable output");
  pair->add_flag("--csv", pair_args.csv, "matrix entries as CSV");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--n", verify_args.n, "simplex dimension")->required();
  verify->add_option("--max-r", verify_args.max_r, "largest polynomial degree")
      ->required();
  verify->add_option("--seed", verify_args.seed, "random seed");
  verify->add_option("--cases", verify_args.cases,
                     "randomized cases per identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitDomain;
  }

  try {
    if (dim->parsed()) return run_dim(dim_args);
    if (basis->parsed()) return run_basis(basis_args);
    if (apply->parsed()) return run_apply(apply_args);
    if (pair->parsed()) return run_pair(pair_args);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const feec::ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what()
              << "\n";
    return kExitParse;
  } catch (const feec::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
