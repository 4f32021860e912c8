#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nuforge/errors.hpp"
#include "nuforge/monomial.hpp"
#include "nuforge/rational.hpp"

namespace nuforge {

/// Sparse multivariate polynomial over Q. Zero coefficients are never
/// stored; the zero polynomial has no terms. The value carries no monomial
/// order; callers sort terms by whichever order they need.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c) {
    Polynomial p(num_vars);
    p.add_term(Monomial(num_vars), c);
    return p;
  }
  static Polynomial monomial(const Monomial& m, const Rational& c = 1) {
    Polynomial p(m.num_vars());
    p.add_term(m, c);
    return p;
  }
  /// The variable z_i.
  static Polynomial variable(std::size_t num_vars, std::size_t i) {
    Monomial m(num_vars);
    m[i] = 1;
    return monomial(m);
  }

  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c*m, dropping the entry if it cancels.
  void add_term(const Monomial& m, const Rational& c) {
    if (m.num_vars() != num_vars_) throw std::invalid_argument("monomial arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Terms sorted by `order`, largest first.
  std::vector<std::pair<Monomial, Rational>> sorted_terms(const MonomialOrder& order) const {
    std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });
    return out;
  }

  std::optional<std::pair<Monomial, Rational>> leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) return std::nullopt;
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
      if (order.compare(it->first, best->first) > 0) best = it;
    return *best;
  }

  bool is_monomial() const noexcept { return terms_.size() == 1; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_arity(b);
    Polynomial r(a.num_vars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  void check_arity(const Polynomial& o) const {
    if (o.num_vars_ != num_vars_) throw std::invalid_argument("polynomial arity mismatch");
  }

  std::size_t num_vars_;
  TermMap terms_;
};

/// Formal partial derivative with respect to z_i.
inline Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
  if (i >= f.num_vars())
    throw InvalidInput("variable index " + std::to_string(i) + " out of range for " +
                       std::to_string(f.num_vars()) + " variables");
  Polynomial r(f.num_vars());
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    Monomial dm = m;
    dm[i] -= 1;
    r.add_term(dm, c * Rational(static_cast<unsigned long>(m[i])));
  }
  return r;
}

/// Renders in the input grammar, terms in descending `order`.
/// Non-integer coefficients are printed as p/q and are not re-parseable.
inline std::string render(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms(order)) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.is_one()) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) out << '*';
      out << 'z' << i;
      if (m[i] != 1) out << '^' << m[i];
      wrote = true;
    }
  }
  return out.str();
}
inline std::string render(const Polynomial& p) {
  return render(p, MonomialOrder::grevlex(p.num_vars()));
}

/// A polynomial together with the weights and degree it is claimed to be
/// weighted homogeneous for.
struct WeightedInput {
  Polynomial f;
  Weights weights;
  std::uint64_t degree = 0;
};

struct HomogeneityReport {
  bool ok = true;
  std::optional<Monomial> offending;      ///< first violating monomial (grevlex-descending scan)
  std::uint64_t offending_degree = 0;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks that every term of f has weighted degree exactly `degree`.
inline HomogeneityReport check_weighted_homogeneous(const WeightedInput& in) {
  if (in.f.is_zero()) throw InvalidInput("zero polynomial is not weighted homogeneous of any degree");
  if (in.weights.size() != in.f.num_vars())
    throw InvalidInput("expected " + std::to_string(in.f.num_vars()) + " weights, got " +
                       std::to_string(in.weights.size()));
  for (auto w : in.weights)
    if (w == 0) throw InvalidInput("weights must be positive");
  HomogeneityReport report;
  for (const auto& [m, c] : in.f.sorted_terms(MonomialOrder::grevlex(in.f.num_vars()))) {
    const auto deg = weighted_degree(m, in.weights);
    if (deg != in.degree) {
      report.ok = false;
      report.offending = m;
      report.offending_degree = deg;
      return report;
    }
  }
  return report;
}

}  // namespace nuforge
