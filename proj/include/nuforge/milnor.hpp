#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nuforge/errors.hpp"
#include "nuforge/groebner.hpp"
#include "nuforge/polynomial.hpp"
#include "nuforge/rational.hpp"

namespace nuforge {

/// Weighted degree -> multiplicity.
using DegreeHistogram = std::map<std::uint64_t, std::uint64_t>;

/// The partial derivatives of f, one per variable. Zero partials are kept
/// in place (a zero entry means f does not involve that variable).
inline std::vector<Polynomial> jacobian_ideal(const Polynomial& f) {
  if (f.is_zero()) throw InvalidInput("Jacobian ideal of the zero polynomial");
  std::vector<Polynomial> out;
  out.reserve(f.num_vars());
  for (std::size_t i = 0; i < f.num_vars(); ++i) out.push_back(partial_derivative(f, i));
  return out;
}

inline std::vector<std::size_t> zero_partials(const std::vector<Polynomial>& jacobian) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < jacobian.size(); ++i)
    if (jacobian[i].is_zero()) out.push_back(i);
  return out;
}

inline void check_weights(std::uint64_t d, const Weights& w) {
  if (d == 0) throw InvalidInput("degree must be positive");
  if (w.empty()) throw InvalidInput("weight vector is empty");
  for (auto wi : w)
    if (wi == 0) throw InvalidInput("weights must be positive");
}

/// prod_i (d/w_i - 1), the Milnor number of an isolated weighted homogeneous
/// singularity. Throws when the product is not a non-negative integer.
inline std::uint64_t milnor_number_closed_form(std::uint64_t d, const Weights& w) {
  check_weights(d, w);
  Rational product = 1;
  for (auto wi : w) product *= make_rational(static_cast<long>(d), static_cast<long>(wi)) - 1;
  if (!is_integer(product) || product < 0)
    throw InvalidInput("prod(d/w_i - 1) = " + product.get_str() +
                       " is not a non-negative integer; (d, w) cannot carry an isolated singularity");
  return product.get_num().get_ui();
}

/// Weighted-degree multiset of a monomial basis of the Milnor algebra, read
/// off the generating function prod_i (t^(d-w_i) - 1)/(t^(w_i) - 1) by exact
/// univariate division. Independent of any Groebner computation.
inline DegreeHistogram poincare_degree_multiset(std::uint64_t d, const Weights& w) {
  check_weights(d, w);
  for (auto wi : w)
    if (wi > d) throw InvalidInput("weight " + std::to_string(wi) + " exceeds the degree " + std::to_string(d));
  // Dense coefficients, index = exponent of t.
  std::vector<BigInt> num{BigInt(1)};
  for (auto wi : w) {
    const std::uint64_t shift = d - wi;
    std::vector<BigInt> next(num.size() + shift, BigInt(0));
    for (std::size_t k = 0; k < num.size(); ++k) {
      if (num[k] == 0) continue;
      next[k + shift] += num[k];
      next[k] -= num[k];
    }
    num = std::move(next);
  }
  for (auto wi : w) {
    // Synthetic division by t^wi - 1 from the top degree down.
    if (num.size() <= wi) {
      for (const auto& c : num)
        if (c != 0) throw InvalidInput("Poincare series division is not exact for the given (d, w)");
      num.assign(1, BigInt(0));
      continue;
    }
    std::vector<BigInt> quo(num.size() - wi, BigInt(0));
    for (std::size_t k = num.size(); k-- > wi;) {
      if (num[k] == 0) continue;
      quo[k - wi] = num[k];
      num[k - wi] += num[k];
      num[k] = 0;
    }
    for (std::size_t k = 0; k < wi; ++k)
      if (num[k] != 0) throw InvalidInput("Poincare series division is not exact for the given (d, w)");
    num = std::move(quo);
  }
  DegreeHistogram hist;
  for (std::size_t k = 0; k < num.size(); ++k) {
    if (num[k] == 0) continue;
    if (num[k] < 0) throw InvalidInput("Poincare series has a negative coefficient; (d, w) is inconsistent");
    hist[k] = num[k].get_ui();
  }
  return hist;
}

inline std::uint64_t histogram_total(const DegreeHistogram& h) {
  std::uint64_t total = 0;
  for (const auto& [deg, count] : h) total += count;
  return total;
}

struct MilnorAnalysis {
  std::vector<Polynomial> jacobian_generators;
  GroebnerBasis gb;
  std::uint64_t milnor_number = 0;
  std::uint64_t closed_form_milnor = 0;
  DegreeHistogram basis_weighted_degrees;
};

/// Groebner-certifies that f has an isolated singularity at 0 and computes
/// the Milnor number both as the quotient dimension and by the closed form.
/// The two must agree; a disagreement raises IntegrityError.
inline MilnorAnalysis check_isolated_singularity(const WeightedInput& in, const MonomialOrder& order,
                                                 std::uint64_t step_budget = kDefaultStepBudget) {
  auto jacobian = jacobian_ideal(in.f);
  std::vector<Polynomial> nonzero;
  for (const auto& p : jacobian)
    if (!p.is_zero()) nonzero.push_back(p);
  if (nonzero.empty()) throw NonIsolatedSingularity("all partial derivatives vanish identically");
  MilnorAnalysis out{std::move(jacobian), buchberger(nonzero, order, step_budget), 0, 0, {}};
  if (!is_zero_dimensional(out.gb)) {
    std::string missing;
    for (std::size_t i = 0; i < out.gb.num_vars(); ++i)
      if (!out.gb.staircase.pure_power(i)) missing += (missing.empty() ? "z" : ", z") + std::to_string(i);
    throw NonIsolatedSingularity("Jacobian ideal is not zero-dimensional (no pure power of " + missing +
                                 " among the leading terms)");
  }
  for_each_standard_monomial(out.gb.staircase, [&](const Monomial& m) {
    ++out.milnor_number;
    ++out.basis_weighted_degrees[weighted_degree(m, in.weights)];
  });
  out.closed_form_milnor = milnor_number_closed_form(in.degree, in.weights);
  if (out.milnor_number != out.closed_form_milnor)
    throw IntegrityError("Milnor number mismatch: quotient dimension " + std::to_string(out.milnor_number) +
                         " vs closed form " + std::to_string(out.closed_form_milnor));
  return out;
}

}  // namespace nuforge
