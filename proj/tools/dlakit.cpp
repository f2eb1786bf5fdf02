// dlakit: command-line front end. Exit codes: 0 success, 1 a verification
// failed, 2 usage error.

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>

#include "dlakit/closure.hpp"
#include "dlakit/errors.hpp"
#include "dlakit/oracle.hpp"
#include "dlakit/parallel.hpp"
#include "dlakit/reach3.hpp"
#include "dlakit/report.hpp"
#include "dlakit/structure.hpp"
#include "dlakit/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct RunConfig {
  int n = 3;
  std::string format = "text";
  double tol = dlakit::kDefaultRootTol;
  bool oracle = false;
  int grid = 10000;
  int curve = 181;
  std::uint64_t seed = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_n(int n) {
  if (n < dlakit::kMinSites) throw UsageError("n must be ≥ 3");
  if (n > dlakit::kMaxSites) throw UsageError("n must be ≤ 64");
}

int emit(const RunConfig& cfg, const dlakit::Json& json, const std::string& text, bool passed) {
  if (cfg.format == "json") {
    std::cout << json.dump(2) << '\n';
  } else {
    std::cout << text;
  }
  return passed ? kOk : kFailed;
}

int cmd_basis(const RunConfig& cfg) {
  require_n(cfg.n);
  const dlakit::DlaBasis basis(cfg.n);
  return emit(cfg, dlakit::basis_json(basis), dlakit::basis_text(basis), true);
}

int cmd_closure(const RunConfig& cfg) {
  require_n(cfg.n);
  const auto result = dlakit::compute_closure(dlakit::generators(cfg.n));
  const auto verdict = dlakit::closure_verdict(result);
  return emit(cfg, dlakit::closure_json(result, verdict), dlakit::closure_text(result, verdict),
              verdict.passed());
}

int cmd_structure(const RunConfig& cfg) {
  require_n(cfg.n);
  if (!(cfg.tol > 0)) throw UsageError("--tol must be positive");
  const auto report = dlakit::decompose(cfg.n, cfg.tol);
  return emit(cfg, dlakit::structure_json(report), dlakit::structure_text(report), report.all_passed);
}

int cmd_verify(const RunConfig& cfg) {
  require_n(cfg.n);
  if (cfg.oracle && cfg.n > dlakit::kDenseClosureCap) throw UsageError("--oracle requires n ≤ 6");
  const auto report = dlakit::run_verify(cfg.n, cfg.oracle, cfg.seed);
  return emit(cfg, dlakit::verify_json(report), dlakit::verify_text(report), report.passed);
}

int cmd_reach3(const RunConfig& cfg) {
  if (cfg.grid < 1000) throw UsageError("--grid must be ≥ 1000");
  if (cfg.curve < 2) throw UsageError("--curve must be ≥ 2");
  const auto report = dlakit::run_reach3(cfg.grid, cfg.curve);
  const bool ok = report.passed && std::abs(report.maximum.tau_star - 1.0) <= 1e-9;
  return emit(cfg, dlakit::reach3_json(report), dlakit::reach3_text(report), ok);
}

}  // namespace

int main(int argc, char** argv) {
  dlakit::configure_threads();

  CLI::App app{"Dynamical Lie algebra toolkit for the periodic transverse-field Ising chain"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "Number of sites (>= 3)")->required(); };

  auto* basis = app.add_subcommand("basis", "Print the 3n-1 named basis elements");
  add_n(basis);
  add_common(basis);

  auto* closure = app.add_subcommand("closure", "Run the closure algorithm and compare with the named basis");
  add_n(closure);
  add_common(closure);

  auto* structure = app.add_subcommand("structure", "Center, ideals and all their verifications");
  add_n(structure);
  add_common(structure);
  structure->add_option("--tol", cfg.tol, "Root separation tolerance");

  auto* verify = app.add_subcommand("verify", "Property checks, optionally against the dense oracle");
  add_n(verify);
  add_common(verify);
  verify->add_flag("--oracle", cfg.oracle, "Cross-check with dense matrices (n <= 6)");
  verify->add_option("--seed", cfg.seed, "Seed for the randomized checks");

  auto* reach3 = app.add_subcommand("reach3", "The three-qubit reachability and tangle example");
  add_common(reach3);
  reach3->add_option("--grid", cfg.grid, "Grid resolution for the tangle maximum (>= 1000)");
  reach3->add_option("--curve", cfg.curve, "Number of family-curve samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*basis) return cmd_basis(cfg);
    if (*closure) return cmd_closure(cfg);
    if (*structure) return cmd_structure(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*reach3) return cmd_reach3(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const dlakit::StructuralError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const dlakit::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
