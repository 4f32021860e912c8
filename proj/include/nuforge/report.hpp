#pragma once

#include <cstdio>
#include <iomanip>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nuforge/nu.hpp"

namespace nuforge {

inline constexpr int kReportSchema = 1;

using Json = nlohmann::json;

namespace detail {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline double round_ms(double ms) { return static_cast<double>(static_cast<long long>(ms * 1000.0 + 0.5)) / 1000.0; }

}  // namespace detail

/// Report as a JSON object. Everything except diagnostics.timings_ms is a
/// function of the input and order alone.
inline Json to_json(const NuReport& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["input"] = {{"poly", r.poly_text}, {"weights", r.weights}, {"degree", r.degree}, {"order", r.order}};
  j["status"] = r.failure ? to_string(*r.failure) : "ok";
  if (r.failure) j["error"] = r.error;
  j["is_weighted_homogeneous"] = r.is_weighted_homogeneous;
  if (r.violation_monomial)
    j["homogeneity_violation"] = {{"monomial", *r.violation_monomial}, {"degree", r.violation_degree}};
  j["is_cy"] = r.is_cy;
  j["milnor_number"] = detail::optional_json(r.milnor_number);
  j["closed_form_milnor"] = detail::optional_json(r.closed_form_milnor);
  if (r.counts) {
    Json counts = {{"mu_minus", r.counts->mu_minus}, {"mu_zero", r.counts->mu_zero}, {"mu_plus", r.counts->mu_plus}};
    if (r.counts->l_values) {
      Json ls = Json::array();
      for (const auto& l : *r.counts->l_values) ls.push_back(l.get_str());
      counts["l_values"] = std::move(ls);
    } else {
      counts["l_values"] = nullptr;
    }
    j["counts"] = std::move(counts);
  } else {
    j["counts"] = nullptr;
  }
  j["sigma"] = detail::optional_json(r.sigma);
  j["euler_chi"] = detail::optional_json(r.euler_chi);
  j["nu"] = detail::optional_json(r.nu);
  if (!r.nu_note.empty()) j["nu_note"] = r.nu_note;
  j["parity_ok"] = r.parity_ok;
  j["checks"] = {{"poincare_match", detail::optional_json(r.checks.poincare_match)},
                 {"spectrum_symmetric", detail::optional_json(r.checks.spectrum_symmetric)},
                 {"l_range_ok", detail::optional_json(r.checks.l_range_ok)},
                 {"groebner_certified", detail::optional_json(r.checks.groebner_certified)},
                 {"nu_via_euler", detail::optional_json(r.nu_via_euler)},
                 {"nu_routes_agree", detail::optional_json(r.checks.nu_routes_agree)}};
  const auto& g = r.groebner;
  j["diagnostics"] = {
      {"groebner",
       {{"basis_size", r.basis_size},
        {"staircase_size", r.staircase_size},
        {"monomial_fast_path", g.monomial_fast_path},
        {"pairs_created", g.pairs_created},
        {"pairs_pruned", g.pairs_pruned},
        {"pairs_reduced", g.pairs_reduced},
        {"zero_reductions", g.zero_reductions},
        {"reduction_steps", g.reduction_steps},
        {"max_coeff_bits", g.max_coeff_bits}}},
      {"timings_ms",
       {{"parse", detail::round_ms(r.timings.parse_ms)},
        {"homogeneity", detail::round_ms(r.timings.homogeneity_ms)},
        {"groebner", detail::round_ms(r.timings.groebner_ms)},
        {"certify", detail::round_ms(r.timings.certify_ms)},
        {"steenbrink", detail::round_ms(r.timings.steenbrink_ms)},
        {"poincare_oracle", detail::round_ms(r.timings.oracle_ms)},
        {"total", detail::round_ms(r.timings.total_ms)}}}};
  return j;
}

/// Human-readable rendering of a single report.
inline std::string to_text(const NuReport& r) {
  std::ostringstream out;
  auto line = [&](const std::string& key, const std::string& value) {
    out << std::left << std::setw(22) << key << value << '\n';
  };
  line("polynomial", r.poly_text);
  std::string w;
  for (std::size_t i = 0; i < r.weights.size(); ++i) w += (i ? "," : "") + std::to_string(r.weights[i]);
  line("weights", "(" + w + ")");
  line("degree", std::to_string(r.degree));
  line("order", r.order);
  if (r.failure) {
    line("status", std::string("FAILED (") + to_string(*r.failure) + ")");
    line("error", r.error);
    return out.str();
  }
  line("weighted homogeneous", r.is_weighted_homogeneous ? "yes" : "no");
  line("calabi-yau", r.is_cy ? "yes" : "no");
  if (r.milnor_number) line("milnor number", std::to_string(*r.milnor_number));
  if (r.closed_form_milnor) line("closed-form milnor", std::to_string(*r.closed_form_milnor));
  if (r.counts)
    line("(mu-, mu0, mu+)", "(" + std::to_string(r.counts->mu_minus) + ", " + std::to_string(r.counts->mu_zero) +
                                ", " + std::to_string(r.counts->mu_plus) + ")");
  if (r.sigma) line("sigma", std::to_string(*r.sigma));
  if (r.euler_chi) line("euler chi", std::to_string(*r.euler_chi));
  line("nu (mod 48)", r.nu ? std::to_string(*r.nu) : "n/a (" + r.nu_note + ")");
  if (r.nu) line("parity", r.parity_ok ? "odd (ok)" : "EVEN");
  line("groebner basis", std::to_string(r.basis_size) + " generators" +
                             (r.groebner.monomial_fast_path ? " (monomial fast path)" : ""));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f ms", r.timings.total_ms);
  line("time", buf);
  return out.str();
}

inline CorpusEntry corpus_entry_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("corpus row is not a JSON object");
  for (const char* key : {"degree", "weights", "poly"})
    if (!j.contains(key)) throw InvalidInput(std::string("corpus row lacks \"") + key + "\"");
  CorpusEntry e;
  if (!j["degree"].is_number_unsigned() || j["degree"].get<std::uint64_t>() == 0)
    throw InvalidInput("\"degree\" must be a positive integer");
  e.degree = j["degree"].get<std::uint64_t>();
  if (!j["weights"].is_array() || j["weights"].size() != kLinkVariables)
    throw InvalidInput("\"weights\" must be an array of 5 positive integers");
  for (const auto& w : j["weights"]) {
    if (!w.is_number_unsigned() || w.get<std::uint64_t>() == 0)
      throw InvalidInput("\"weights\" must be an array of 5 positive integers");
    e.weights.push_back(w.get<std::uint64_t>());
  }
  if (!j["poly"].is_string()) throw InvalidInput("\"poly\" must be a string");
  e.poly = j["poly"].get<std::string>();
  if (j.contains("expected_nu") && !j["expected_nu"].is_null()) {
    if (!j["expected_nu"].is_number_integer()) throw InvalidInput("\"expected_nu\" must be an integer");
    const auto v = j["expected_nu"].get<long long>();
    if (v < 0 || v >= kNuModulus) throw InvalidInput("\"expected_nu\" must lie in 0..47");
    e.expected_nu = static_cast<int>(v);
  }
  return e;
}

inline Json to_json(const CorpusEntry& e) {
  Json j = {{"degree", e.degree}, {"weights", e.weights}, {"poly", e.poly}};
  j["expected_nu"] = detail::optional_json(e.expected_nu);
  return j;
}

/// Reads JSON Lines; blank lines are skipped and malformed lines become
/// error entries instead of aborting the read.
inline std::vector<CorpusLine> read_corpus(std::istream& in) {
  std::vector<CorpusLine> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    CorpusLine line;
    line.line_number = number;
    try {
      line.entry = corpus_entry_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      line.error = std::string("malformed JSON: ") + e.what();
    } catch (const Error& e) {
      line.error = e.what();
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

inline Json to_json(const CorpusSummary& s) {
  Json rows = Json::array();
  for (const auto& row : s.rows) {
    Json j;
    j["line"] = row.line_number;
    j["status"] = to_string(row.status);
    if (!row.message.empty()) j["message"] = row.message;
    if (row.entry) j["entry"] = to_json(*row.entry);
    if (row.report) {
      const auto& r = *row.report;
      j["mu"] = detail::optional_json(r.milnor_number);
      j["sigma"] = detail::optional_json(r.sigma);
      j["nu"] = detail::optional_json(r.nu);
      j["ms"] = detail::round_ms(r.timings.total_ms);
      j["report"] = to_json(r);
    }
    rows.push_back(std::move(j));
  }
  return {{"schema", kReportSchema},
          {"rows", std::move(rows)},
          {"total", s.rows.size()},
          {"passed", s.count(RowStatus::Pass)},
          {"mismatched", s.count(RowStatus::Mismatch)},
          {"not_applicable", s.count(RowStatus::NotApplicable)},
          {"errors", s.count(RowStatus::Error)},
          {"unchecked", s.count(RowStatus::Unchecked)},
          {"all_match", s.all_match()}};
}

inline std::string to_text(const CorpusSummary& s) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "line" << std::setw(6) << "d" << std::setw(22) << "weights" << std::right
      << std::setw(9) << "mu" << std::setw(9) << "sigma" << std::setw(5) << "nu" << std::setw(6) << "exp"
      << "  " << std::left << std::setw(15) << "status" << std::right << std::setw(10) << "ms" << '\n';
  for (const auto& row : s.rows) {
    std::string d = "-", w = "-", mu = "-", sigma = "-", nu = "-", expected = "-", ms = "-";
    if (row.entry) {
      d = std::to_string(row.entry->degree);
      w.clear();
      for (std::size_t i = 0; i < row.entry->weights.size(); ++i)
        w += (i ? "," : "(") + std::to_string(row.entry->weights[i]);
      w += ")";
      if (row.entry->expected_nu) expected = std::to_string(*row.entry->expected_nu);
    }
    if (row.report) {
      const auto& r = *row.report;
      if (r.milnor_number) mu = std::to_string(*r.milnor_number);
      if (r.sigma) sigma = std::to_string(*r.sigma);
      if (r.nu) nu = std::to_string(*r.nu);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f", r.timings.total_ms);
      ms = buf;
    }
    out << std::left << std::setw(6) << row.line_number << std::setw(6) << d << std::setw(22) << w << std::right
        << std::setw(9) << mu << std::setw(9) << sigma << std::setw(5) << nu << std::setw(6) << expected << "  "
        << std::left << std::setw(15) << to_string(row.status) << std::right << std::setw(10) << ms << '\n';
    if (!row.message.empty() && row.status != RowStatus::Pass) out << "      " << row.message << '\n';
  }
  out << s.count(RowStatus::Pass) << "/" << s.rows.size() << " PASS";
  if (auto m = s.count(RowStatus::Mismatch)) out << ", " << m << " MISMATCH";
  if (auto m = s.count(RowStatus::NotApplicable)) out << ", " << m << " NOT_APPLICABLE";
  if (auto m = s.count(RowStatus::Error)) out << ", " << m << " ERROR";
  if (auto m = s.count(RowStatus::Unchecked)) out << ", " << m << " UNCHECKED";
  out << '\n';
  return out.str();
}

}  // namespace nuforge
