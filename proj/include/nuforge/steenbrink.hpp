#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nuforge/groebner.hpp"
#include "nuforge/milnor.hpp"
#include "nuforge/monomial.hpp"
#include "nuforge/rational.hpp"

namespace nuforge {

inline constexpr std::uint64_t kDefaultLValueRetention = 100'000;

/// l(a) = sum_i (a_i + 1) w_i / d.
inline Rational l_value(const Monomial& alpha, const Weights& w, std::uint64_t d) {
  if (alpha.num_vars() != w.size()) throw InvalidInput("monomial and weight vector lengths differ");
  if (d == 0) throw InvalidInput("degree must be positive");
  BigInt num = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    num += BigInt(static_cast<unsigned long>(alpha[i]) + 1UL) * BigInt(static_cast<unsigned long>(w[i]));
  return make_rational(num, BigInt(static_cast<unsigned long>(d)));
}

enum class SpectrumClass { Minus, Zero, Plus };

/// Integral -> Zero; otherwise Plus when floor(l) is even, Minus when odd.
inline SpectrumClass classify(const Rational& l) {
  if (is_integer(l)) return SpectrumClass::Zero;
  return mpz_even_p(floor(l).get_mpz_t()) ? SpectrumClass::Plus : SpectrumClass::Minus;
}

struct SteenbrinkCounts {
  std::uint64_t mu_minus = 0;
  std::uint64_t mu_zero = 0;
  std::uint64_t mu_plus = 0;
  /// Every l-value, in stream order, while the basis is small enough.
  std::optional<std::vector<Rational>> l_values;
  /// Basis weighted degrees; l = (degree + sum w) / d, so this is the
  /// l-multiset in compressed form and is always kept.
  DegreeHistogram degree_histogram;

  std::uint64_t total() const noexcept { return mu_minus + mu_zero + mu_plus; }
};

/// Single-pass fold over basis monomials. Classification uses the integer
/// numerator N = deg + sum(w) of l = N/d, which is exact.
class SteenbrinkAccumulator {
 public:
  SteenbrinkAccumulator(Weights w, std::uint64_t d, std::uint64_t retain_limit = kDefaultLValueRetention)
      : w_(std::move(w)), d_(d), retain_limit_(retain_limit) {
    if (d_ == 0) throw InvalidInput("degree must be positive");
    for (auto wi : w_) weight_sum_ += wi;
    if (retain_limit_ > 0) counts_.l_values.emplace();
  }

  void add(const Monomial& alpha) {
    const std::uint64_t deg = weighted_degree(alpha, w_);
    const std::uint64_t numer = deg + weight_sum_;
    if (numer % d_ == 0)
      ++counts_.mu_zero;
    else if ((numer / d_) % 2 == 0)
      ++counts_.mu_plus;
    else
      ++counts_.mu_minus;
    ++counts_.degree_histogram[deg];
    if (counts_.l_values) {
      if (counts_.total() > retain_limit_)
        counts_.l_values.reset();
      else
        counts_.l_values->push_back(make_rational(BigInt(static_cast<unsigned long>(numer)),
                                                  BigInt(static_cast<unsigned long>(d_))));
    }
  }

  /// Merges a fold over a disjoint chunk of the basis. l-values are dropped
  /// unless both sides still retain them.
  void merge(const SteenbrinkAccumulator& other) {
    counts_.mu_minus += other.counts_.mu_minus;
    counts_.mu_zero += other.counts_.mu_zero;
    counts_.mu_plus += other.counts_.mu_plus;
    for (const auto& [deg, c] : other.counts_.degree_histogram) counts_.degree_histogram[deg] += c;
    if (counts_.l_values && other.counts_.l_values && counts_.total() <= retain_limit_)
      counts_.l_values->insert(counts_.l_values->end(), other.counts_.l_values->begin(),
                               other.counts_.l_values->end());
    else
      counts_.l_values.reset();
  }

  const SteenbrinkCounts& counts() const noexcept { return counts_; }
  SteenbrinkCounts take() { return std::move(counts_); }

 private:
  Weights w_;
  std::uint64_t d_;
  std::uint64_t retain_limit_;
  std::uint64_t weight_sum_ = 0;
  SteenbrinkCounts counts_;
};

/// Consumes the stream once and classifies every basis monomial.
inline SteenbrinkCounts signature_counts(StandardMonomialStream& basis, const Weights& w, std::uint64_t d,
                                         std::uint64_t retain_limit = kDefaultLValueRetention) {
  SteenbrinkAccumulator acc(w, d, retain_limit);
  while (const Monomial* m = basis.next()) acc.add(*m);
  return acc.take();
}

/// Same fold over an explicit list of monomials.
inline SteenbrinkCounts signature_counts(const std::vector<Monomial>& basis, const Weights& w, std::uint64_t d,
                                         std::uint64_t retain_limit = kDefaultLValueRetention) {
  SteenbrinkAccumulator acc(w, d, retain_limit);
  for (const auto& m : basis) acc.add(m);
  return acc.take();
}

/// mu_+ - mu_-.
inline std::int64_t signature(const SteenbrinkCounts& c) {
  return static_cast<std::int64_t>(c.mu_plus) - static_cast<std::int64_t>(c.mu_minus);
}

/// Whether the l-multiset is invariant under l -> (num_vars) - l, checked on
/// the degree histogram: deg -> num_vars*d - 2*sum(w) - deg.
inline bool is_spectrum_symmetric(const SteenbrinkCounts& c, const Weights& w, std::uint64_t d) {
  std::int64_t weight_sum = 0;
  for (auto wi : w) weight_sum += static_cast<std::int64_t>(wi);
  const std::int64_t mirror = static_cast<std::int64_t>(w.size() * d) - 2 * weight_sum;
  for (const auto& [deg, count] : c.degree_histogram) {
    const std::int64_t image = mirror - static_cast<std::int64_t>(deg);
    if (image < 0) return false;
    auto it = c.degree_histogram.find(static_cast<std::uint64_t>(image));
    if (it == c.degree_histogram.end() || it->second != count) return false;
  }
  return true;
}

/// Whether every l-value lies in the open interval (0, num_vars).
inline bool l_values_in_range(const SteenbrinkCounts& c, const Weights& w, std::uint64_t d) {
  if (c.degree_histogram.empty()) return true;
  std::uint64_t weight_sum = 0;
  for (auto wi : w) weight_sum += wi;
  const std::uint64_t top = c.degree_histogram.rbegin()->first + weight_sum;
  return weight_sum > 0 && top < w.size() * d;
}

}  // namespace nuforge
