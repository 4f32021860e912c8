#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "nuforge/errors.hpp"
#include "nuforge/groebner.hpp"
#include "nuforge/milnor.hpp"
#include "nuforge/parse.hpp"
#include "nuforge/polynomial.hpp"
#include "nuforge/steenbrink.hpp"

namespace nuforge {

inline constexpr int kNuModulus = 48;
/// The nu formula is stated for links in C^5.
inline constexpr std::size_t kLinkVariables = 5;

class NotCalabiYau : public InvalidInput {
 public:
  explicit NotCalabiYau(const std::string& what) : InvalidInput(what) {}
};

/// d == sum of the weights.
inline bool cy_check(std::uint64_t d, const Weights& w) {
  return d == std::accumulate(w.begin(), w.end(), std::uint64_t{0});
}

inline int reduce_mod48(const BigInt& v) { return static_cast<int>(mod_floor(v, kNuModulus)); }

/// prod(d/w_i - 1) - 3*(mu_+ - mu_-) + 1, reduced to {0..47}. Requires the
/// CY condition; an even result is an IntegrityError.
inline int nu_invariant(std::uint64_t d, const Weights& w, const SteenbrinkCounts& counts) {
  if (w.size() != kLinkVariables)
    throw InvalidInput("nu is defined for links in C^5 (5 weights), got " + std::to_string(w.size()));
  if (!cy_check(d, w)) throw NotCalabiYau("degree " + std::to_string(d) + " differs from the weight sum");
  Rational product = 1;
  for (auto wi : w) product *= make_rational(static_cast<long>(d), static_cast<long>(wi)) - 1;
  if (!is_integer(product)) throw InvalidInput("prod(d/w_i - 1) is not an integer");
  const BigInt value = product.get_num() - 3 * BigInt(static_cast<long>(signature(counts))) + 1;
  const int nu = reduce_mod48(value);
  if (nu % 2 == 0) throw IntegrityError("parity violation: nu = " + std::to_string(nu) + " is even");
  return nu;
}

/// chi - 3*sigma reduced to {0..47}.
inline int nu_from_euler_signature(const BigInt& chi, std::int64_t sigma) {
  return reduce_mod48(chi - 3 * BigInt(static_cast<long>(sigma)));
}

struct AnalyzeOptions {
  std::uint64_t step_budget = kDefaultStepBudget;
  std::uint64_t retain_limit = kDefaultLValueRetention;
  bool certify = true;  ///< re-check all S-polynomials of the final basis
};

struct StageTimings {
  double parse_ms = 0;
  double homogeneity_ms = 0;
  double groebner_ms = 0;
  double enumeration_ms = 0;
  double steenbrink_ms = 0;
  double oracle_ms = 0;
  double certify_ms = 0;
  double total_ms = 0;
};

struct ReportChecks {
  std::optional<bool> poincare_match;
  std::optional<bool> spectrum_symmetric;
  std::optional<bool> l_range_ok;
  std::optional<bool> groebner_certified;
  std::optional<bool> nu_routes_agree;
};

struct NuReport {
  // Input echo.
  std::string poly_text;
  Weights weights;
  std::uint64_t degree = 0;
  std::string order = "grevlex";

  std::optional<ErrorKind> failure;
  std::string error;

  bool is_weighted_homogeneous = false;
  std::optional<std::string> violation_monomial;
  std::uint64_t violation_degree = 0;
  bool is_cy = false;

  std::optional<std::uint64_t> milnor_number;
  std::optional<std::uint64_t> closed_form_milnor;
  std::optional<SteenbrinkCounts> counts;
  std::optional<std::int64_t> sigma;
  std::optional<std::int64_t> euler_chi;
  std::optional<int> nu;
  std::optional<int> nu_via_euler;
  bool parity_ok = false;
  std::string nu_note;  ///< why nu is absent, when it is

  ReportChecks checks;
  GroebnerStats groebner;
  std::size_t basis_size = 0;
  std::size_t staircase_size = 0;
  StageTimings timings;

  bool ok() const noexcept { return !failure; }
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline void run_pipeline(const WeightedInput& in, const MonomialOrder& order, const AnalyzeOptions& options,
                         NuReport& report) {
  Stopwatch watch;
  const auto homogeneity = check_weighted_homogeneous(in);
  report.timings.homogeneity_ms = watch.lap();
  report.is_weighted_homogeneous = homogeneity.ok;
  report.is_cy = cy_check(in.degree, in.weights);
  if (!homogeneity.ok) {
    report.violation_monomial = render(Polynomial::monomial(*homogeneity.offending));
    report.violation_degree = homogeneity.offending_degree;
    throw InvalidInput("not weighted homogeneous: " + *report.violation_monomial + " has weighted degree " +
                       std::to_string(homogeneity.offending_degree) + ", expected " + std::to_string(in.degree));
  }

  const auto milnor = check_isolated_singularity(in, order, options.step_budget);
  report.timings.groebner_ms = watch.lap();
  report.groebner = milnor.gb.stats;
  report.basis_size = milnor.gb.generators.size();
  report.staircase_size = milnor.gb.staircase.generators().size();
  report.milnor_number = milnor.milnor_number;
  report.closed_form_milnor = milnor.closed_form_milnor;

  if (options.certify) {
    const auto cert = certify_groebner(milnor.gb, options.step_budget);
    report.checks.groebner_certified = cert.ok;
    report.timings.certify_ms = watch.lap();
    if (!cert.ok)
      throw IntegrityError(std::to_string(cert.nonzero_remainders) +
                           " S-polynomial(s) of the computed basis do not reduce to zero");
  }

  StandardMonomialStream stream(milnor.gb);
  report.counts = signature_counts(stream, in.weights, in.degree, options.retain_limit);
  report.timings.steenbrink_ms = watch.lap();
  const auto& counts = *report.counts;
  if (counts.total() != milnor.milnor_number)
    throw IntegrityError("Steenbrink counts do not sum to the Milnor number");
  if (counts.degree_histogram != milnor.basis_weighted_degrees)
    throw IntegrityError("basis weighted degrees differ between two passes over the same stream");

  const auto oracle = poincare_degree_multiset(in.degree, in.weights);
  report.timings.oracle_ms = watch.lap();
  report.checks.poincare_match = oracle == counts.degree_histogram;
  report.checks.spectrum_symmetric = is_spectrum_symmetric(counts, in.weights, in.degree);
  report.checks.l_range_ok = l_values_in_range(counts, in.weights, in.degree);
  if (!*report.checks.poincare_match)
    throw IntegrityError("basis weighted-degree multiset differs from the Poincare series expansion");
  if (!*report.checks.spectrum_symmetric)
    throw IntegrityError("l-value multiset is not symmetric under l -> n+1-l");
  if (!*report.checks.l_range_ok) throw IntegrityError("an l-value lies outside (0, n+1)");

  report.sigma = signature(counts);
  const std::size_t n = in.f.num_vars() - 1;
  const auto mu = static_cast<std::int64_t>(milnor.milnor_number);
  report.euler_chi = 1 + (n % 2 == 0 ? mu : -mu);

  if (in.f.num_vars() != kLinkVariables) {
    report.nu_note = "nu is defined for links in C^5 only";
  } else if (!report.is_cy) {
    report.nu_note = "not a Calabi-Yau link: degree differs from the weight sum";
  } else {
    report.nu = nu_invariant(in.degree, in.weights, counts);
    report.nu_via_euler = nu_from_euler_signature(BigInt(static_cast<long>(*report.euler_chi)), *report.sigma);
    report.checks.nu_routes_agree = *report.nu == *report.nu_via_euler;
    report.parity_ok = *report.nu % 2 == 1;
    if (!*report.checks.nu_routes_agree)
      throw IntegrityError("nu from the closed form (" + std::to_string(*report.nu) + ") differs from chi - 3 sigma (" +
                           std::to_string(*report.nu_via_euler) + ")");
  }
}

}  // namespace detail

/// Full pipeline: homogeneity, isolated-singularity certificate, Milnor
/// number by two routes, Steenbrink counts, nu. Failures are recorded in
/// the report rather than thrown.
inline NuReport analyze(const WeightedInput& in, const MonomialOrder& order, const AnalyzeOptions& options = {}) {
  NuReport report;
  report.poly_text = render(in.f);
  report.weights = in.weights;
  report.degree = in.degree;
  report.order = order.name();
  detail::Stopwatch total;
  try {
    detail::run_pipeline(in, order, options, report);
  } catch (const Error& e) {
    report.failure = e.kind();
    report.error = e.what();
  }
  report.timings.total_ms = total.lap();
  return report;
}

/// Parses `poly_text` first; when `degree` is absent it is inferred from the
/// leading term and then verified against every term.
inline NuReport analyze(const std::string& poly_text, const Weights& weights, std::optional<std::uint64_t> degree,
                        OrderKind order_kind = OrderKind::Grevlex, const AnalyzeOptions& options = {}) {
  detail::Stopwatch watch;
  NuReport failed;
  failed.poly_text = poly_text;
  failed.weights = weights;
  failed.degree = degree.value_or(0);
  failed.order = order_kind == OrderKind::Lex ? "lex" : "grevlex";
  try {
    if (weights.empty()) throw InvalidInput("no weights given");
    for (auto w : weights)
      if (w == 0) throw InvalidInput("weights must be positive");
    WeightedInput in{parse_polynomial(poly_text, weights.size()), weights, 0};
    if (in.f.is_zero()) throw InvalidInput("zero polynomial");
    if (degree) {
      in.degree = *degree;
    } else {
      const auto lead = in.f.leading_term(MonomialOrder::grevlex(in.f.num_vars()));
      in.degree = weighted_degree(lead->first, weights);
    }
    if (in.degree == 0) throw InvalidInput("degree must be positive");
    const double parse_ms = watch.lap();
    auto report = analyze(in, MonomialOrder(order_kind, weights.size()), options);
    report.poly_text = poly_text;
    report.timings.parse_ms = parse_ms;
    report.timings.total_ms += parse_ms;
    return report;
  } catch (const Error& e) {
    failed.failure = e.kind();
    failed.error = e.what();
    failed.timings.total_ms = watch.lap();
    return failed;
  }
}

// ---------------------------------------------------------------------------
// Corpus batches.

struct CorpusEntry {
  std::uint64_t degree = 0;
  Weights weights;
  std::string poly;
  std::optional<int> expected_nu;
};

/// One input line: either a parsed entry or the reason it could not be read.
struct CorpusLine {
  std::size_t line_number = 0;
  std::optional<CorpusEntry> entry;
  std::string error;
};

enum class RowStatus {
  Pass,           ///< nu computed and equal to expected_nu
  Mismatch,       ///< nu computed and different from expected_nu
  NotApplicable,  ///< pipeline ran but nu is undefined (e.g. not CY) while a value was expected
  Error,          ///< unreadable line or pipeline failure
  Unchecked,      ///< nu computed, no expected value given
};

inline const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "PASS";
    case RowStatus::Mismatch: return "MISMATCH";
    case RowStatus::NotApplicable: return "NOT_APPLICABLE";
    case RowStatus::Error: return "ERROR";
    case RowStatus::Unchecked: return "UNCHECKED";
  }
  return "?";
}

struct CorpusRow {
  std::size_t line_number = 0;
  std::optional<CorpusEntry> entry;
  std::optional<NuReport> report;
  RowStatus status = RowStatus::Error;
  std::string message;
};

struct CorpusSummary {
  std::vector<CorpusRow> rows;

  std::size_t count(RowStatus s) const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [&](const CorpusRow& r) { return r.status == s; }));
  }
  /// True iff every row either passed or carried no expectation and ran cleanly.
  bool all_match() const {
    return std::all_of(rows.begin(), rows.end(), [](const CorpusRow& r) {
      return r.status == RowStatus::Pass || r.status == RowStatus::Unchecked;
    });
  }
};

inline CorpusRow evaluate_corpus_line(const CorpusLine& line, OrderKind order, const AnalyzeOptions& options) {
  CorpusRow row;
  row.line_number = line.line_number;
  row.entry = line.entry;
  if (!line.entry) {
    row.status = RowStatus::Error;
    row.message = line.error;
    return row;
  }
  const auto& e = *line.entry;
  row.report = analyze(e.poly, e.weights, e.degree, order, options);
  const auto& rep = *row.report;
  if (!rep.ok()) {
    row.status = RowStatus::Error;
    row.message = rep.error;
  } else if (!rep.nu) {
    row.status = e.expected_nu ? RowStatus::NotApplicable : RowStatus::Unchecked;
    row.message = rep.nu_note;
  } else if (!e.expected_nu) {
    row.status = RowStatus::Unchecked;
  } else if (*rep.nu == *e.expected_nu) {
    row.status = RowStatus::Pass;
  } else {
    row.status = RowStatus::Mismatch;
    row.message = "expected nu = " + std::to_string(*e.expected_nu) + ", computed " + std::to_string(*rep.nu);
  }
  return row;
}

/// Evaluates every line, up to `jobs` at a time. Rows come back in input
/// order and one failing row never affects another.
inline CorpusSummary run_corpus(const std::vector<CorpusLine>& lines, std::size_t jobs,
                                OrderKind order = OrderKind::Grevlex, const AnalyzeOptions& options = {}) {
  CorpusSummary summary;
  summary.rows.resize(lines.size());
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(lines.size(), 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++)
      summary.rows[i] = evaluate_corpus_line(lines[i], order, options);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  return summary;
}

}  // namespace nuforge
