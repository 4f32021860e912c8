#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nuforge/errors.hpp"

namespace nuforge {

using Exponent = std::uint32_t;
using Weights = std::vector<std::uint64_t>;

/// Exponent vector z0^a0 * ... * zn^an.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  explicit Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {}

  std::size_t num_vars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  std::uint64_t total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }
  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  /// Lexicographic comparison of the raw exponent vectors. Used only for
  /// canonical storage; it is not a monomial order choice.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("monomial arity mismatch");
  Monomial r(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline bool divides(std::span<const Exponent> a, std::span<const Exponent> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}
inline bool divides(const Monomial& a, const Monomial& b) { return divides(a.exponents(), b.exponents()); }

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

/// b / a, assuming a | b.
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i) r[i] = b[i] - a[i];
  return r;
}

inline bool coprime(std::span<const Exponent> a, std::span<const Exponent> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

inline std::uint64_t weighted_degree(std::span<const Exponent> exps, std::span<const std::uint64_t> w) {
  if (exps.size() != w.size())
    throw InvalidInput("weight vector has " + std::to_string(w.size()) + " entries, monomial has " +
                       std::to_string(exps.size()) + " variables");
  std::uint64_t deg = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) deg += std::uint64_t{exps[i]} * w[i];
  return deg;
}
inline std::uint64_t weighted_degree(const Monomial& m, const Weights& w) {
  return weighted_degree(m.exponents(), std::span<const std::uint64_t>(w));
}

enum class OrderKind { Lex, Grevlex };

/// Global monomial order. `precedence[0]` is the most significant variable;
/// the default is z0 > z1 > ... > zn.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::size_t num_vars) : kind_(kind), precedence_(num_vars) {
    std::iota(precedence_.begin(), precedence_.end(), std::size_t{0});
  }
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
      : kind_(kind), precedence_(std::move(precedence)) {
    std::vector<std::size_t> check = precedence_;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i)
      if (check[i] != i) throw InvalidInput("variable precedence is not a permutation");
  }

  static MonomialOrder grevlex(std::size_t n) { return {OrderKind::Grevlex, n}; }
  static MonomialOrder lex(std::size_t n) { return {OrderKind::Lex, n}; }

  OrderKind kind() const noexcept { return kind_; }
  std::size_t num_vars() const noexcept { return precedence_.size(); }
  const std::vector<std::size_t>& precedence() const noexcept { return precedence_; }

  std::strong_ordering compare(std::span<const Exponent> a, std::span<const Exponent> b) const {
    const std::size_t n = precedence_.size();
    if (kind_ == OrderKind::Lex) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = precedence_[k];
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    }
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da <=> db;
    for (std::size_t k = n; k-- > 0;) {
      const std::size_t i = precedence_[k];
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return compare(a.exponents(), b.exponents());
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const { return kind_ == OrderKind::Lex ? "lex" : "grevlex"; }

 private:
  OrderKind kind_;
  std::vector<std::size_t> precedence_;
};

}  // namespace nuforge
