// nu-forge: command-line front end for the nu invariant pipeline and the G2
// identity suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "nuforge/g2forms.hpp"
#include "nuforge/nu.hpp"
#include "nuforge/report.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kNonIsolated = 2,
  kMismatch = 3,
  kBudgetExceeded = 4,
  kIdentityFailure = 5,
  kIntegrity = 6,
};

int exit_code_for(nuforge::ErrorKind kind) {
  switch (kind) {
    case nuforge::ErrorKind::InvalidInput: return kInvalidInput;
    case nuforge::ErrorKind::NonIsolated: return kNonIsolated;
    case nuforge::ErrorKind::BudgetExceeded: return kBudgetExceeded;
    case nuforge::ErrorKind::Integrity: return kIntegrity;
  }
  return kIntegrity;
}

/// Flag value, else NU_FORGE_BUDGET, else the library default.
std::optional<std::uint64_t> resolve_budget(const std::optional<std::uint64_t>& flag, std::string& error) {
  if (flag) return flag;
  if (const char* env = std::getenv("NU_FORGE_BUDGET"); env && *env) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      error = std::string("NU_FORGE_BUDGET must be a positive integer, got '") + env + "'";
      return std::nullopt;
    }
  }
  return nuforge::kDefaultStepBudget;
}

nuforge::OrderKind parse_order(const std::string& s) {
  return s == "lex" ? nuforge::OrderKind::Lex : nuforge::OrderKind::Grevlex;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compute the nu invariant of weighted-homogeneous Calabi-Yau links and verify G2 identities",
               "nu-forge"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string order = "grevlex";
  std::optional<std::uint64_t> budget;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_pipeline = [&](CLI::App* cmd) {
    cmd->add_option("--order", order, "Monomial order for the Groebner basis")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    cmd->add_option("--budget", budget, "Groebner reduction step budget (overrides NU_FORGE_BUDGET)")
        ->check(CLI::PositiveNumber);
  };

  auto* analyze = app.add_subcommand("analyze", "Analyze one polynomial");
  std::string poly;
  std::vector<std::uint64_t> weights;
  std::optional<std::uint64_t> degree;
  analyze->add_option("--poly", poly, "Polynomial in z0..z4, e.g. \"z0^5+z1^5+z2^5+z3^5+z4^5\"")->required();
  analyze->add_option("--weights", weights, "Comma-separated positive weights")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  analyze->add_option("--degree", degree, "Weighted degree (inferred from the polynomial when omitted)")
      ->check(CLI::PositiveNumber);
  add_common(analyze);
  add_pipeline(analyze);

  auto* batch = app.add_subcommand("batch", "Verify a JSONL corpus of (degree, weights, poly, expected_nu)");
  std::string corpus;
  std::size_t jobs = 1;
  batch->add_option("--corpus", corpus, "Corpus file (JSON lines)")->required()->check(CLI::ExistingFile);
  batch->add_option("--jobs", jobs, "Rows analyzed concurrently")->check(CLI::Range(std::size_t{1}, std::size_t{1024}));
  add_common(batch);
  add_pipeline(batch);

  auto* selftest = app.add_subcommand("g2-selftest", "Run the exact G2 identity suite");
  nuforge::g2::SelfTestOptions st;
  selftest->add_option("--samples", st.random_samples, "Random 2-forms for the property checks");
  selftest->add_option("--seed", st.seed, "Seed for the random 2-forms");
  selftest->add_flag("--inject-fault", st.inject_psi_fault, "Flip one sign of psi0 (negative control)");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kInvalidInput;
  }

  const bool json = format == "json";

  if (*selftest) {
    const auto checks = nuforge::g2::run_identity_suite(st);
    bool all = true;
    nuforge::Json results = nuforge::Json::array();
    for (const auto& c : checks) {
      all = all && c.passed;
      results.push_back({{"name", c.name}, {"passed", c.passed}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"note", c.note}});
    }
    if (json) {
      std::cout << nuforge::Json{{"schema", nuforge::kReportSchema}, {"checks", results}, {"all_passed", all}}.dump(2)
                << '\n';
    } else {
      for (const auto& c : checks) {
        std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << '\n';
        if (!c.note.empty()) std::cout << "      note: " << c.note << '\n';
        if (!c.passed) std::cout << "      lhs:  " << c.lhs << "\n      rhs:  " << c.rhs << '\n';
      }
    }
    return all ? kOk : kIdentityFailure;
  }

  std::string budget_error;
  const auto step_budget = resolve_budget(budget, budget_error);
  if (!step_budget) {
    std::cerr << "error: " << budget_error << '\n';
    return kInvalidInput;
  }
  nuforge::AnalyzeOptions options;
  options.step_budget = *step_budget;

  if (*analyze) {
    const auto report = nuforge::analyze(poly, weights, degree, parse_order(order), options);
    if (json)
      std::cout << nuforge::to_json(report).dump(2) << '\n';
    else
      std::cout << nuforge::to_text(report);
    if (report.failure) {
      std::cerr << "error: " << report.error << '\n';
      return exit_code_for(*report.failure);
    }
    return kOk;
  }

  std::ifstream in(corpus);
  if (!in) {
    std::cerr << "error: cannot open corpus " << corpus << '\n';
    return kInvalidInput;
  }
  const auto lines = nuforge::read_corpus(in);
  const auto summary = nuforge::run_corpus(lines, jobs, parse_order(order), options);
  if (json)
    std::cout << nuforge::to_json(summary).dump(2) << '\n';
  else
    std::cout << nuforge::to_text(summary);
  return summary.all_match() ? kOk : kMismatch;
}
