#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nuforge/errors.hpp"
#include "nuforge/monomial.hpp"
#include "nuforge/polynomial.hpp"
#include "nuforge/rational.hpp"

namespace nuforge {

inline constexpr std::uint64_t kDefaultStepBudget = 10'000'000;

/// Counters surfaced in reports.
struct GroebnerStats {
  std::uint64_t pairs_created = 0;
  std::uint64_t pairs_pruned = 0;      ///< removed by the coprime or chain criterion
  std::uint64_t pairs_reduced = 0;     ///< S-polynomials actually formed
  std::uint64_t zero_reductions = 0;
  std::uint64_t reduction_steps = 0;
  std::uint64_t max_coeff_bits = 0;
  bool monomial_fast_path = false;
};

/// Minimal generators of a monomial ideal.
class Staircase {
 public:
  Staircase() = default;
  Staircase(std::size_t num_vars, std::vector<Monomial> gens);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }

  bool is_standard(std::span<const Exponent> m) const {
    for (const auto& g : gens_)
      if (divides(g.exponents(), m)) return false;
    return true;
  }
  bool is_standard(const Monomial& m) const { return is_standard(m.exponents()); }

  /// Smallest k with z_i^k in the staircase, if any.
  std::optional<Exponent> pure_power(std::size_t i) const {
    std::optional<Exponent> best;
    for (const auto& g : gens_) {
      // The unit monomial counts as z_i^0 for every i.
      bool pure = true;
      for (std::size_t j = 0; j < num_vars_ && pure; ++j)
        if (j != i && g[j] != 0) pure = false;
      if (pure && (!best || g[i] < *best)) best = g[i];
    }
    return best;
  }

  bool is_zero_dimensional() const {
    for (std::size_t i = 0; i < num_vars_; ++i)
      if (!pure_power(i)) return false;
    return true;
  }

 private:
  std::size_t num_vars_ = 0;
  std::vector<Monomial> gens_;
};

/// Reduced Groebner basis. Generators are primitive integer polynomials with
/// positive leading coefficient, sorted by increasing leading monomial.
struct GroebnerBasis {
  std::vector<Polynomial> generators;
  MonomialOrder order;
  Staircase staircase;
  GroebnerStats stats;

  std::size_t num_vars() const noexcept { return order.num_vars(); }
};

namespace detail {

/// Polynomial with terms sorted in descending order under a fixed monomial
/// order; exponents stored contiguously, `n` per term.
template <class Coeff>
struct SortedPoly {
  std::size_t n = 0;
  std::vector<Exponent> exps;
  std::vector<Coeff> coeffs;

  std::size_t size() const noexcept { return coeffs.size(); }
  bool empty() const noexcept { return coeffs.empty(); }
  std::span<const Exponent> mono(std::size_t i) const { return {exps.data() + i * n, n}; }
  std::span<const Exponent> lead() const { return mono(0); }
  void push(std::span<const Exponent> m, Coeff c) {
    exps.insert(exps.end(), m.begin(), m.end());
    coeffs.push_back(std::move(c));
  }
};

template <class Coeff>
SortedPoly<Coeff> to_sorted(const Polynomial& p, const MonomialOrder& order, const BigInt& scale = 1) {
  SortedPoly<Coeff> out;
  out.n = p.num_vars();
  for (auto& [m, c] : p.sorted_terms(order)) {
    if constexpr (std::is_same_v<Coeff, BigInt>) {
      Rational scaled = c * Rational(scale);
      out.push(m.exponents(), scaled.get_num());
    } else {
      out.push(m.exponents(), c);
    }
  }
  return out;
}

template <class Coeff>
Polynomial to_polynomial(const SortedPoly<Coeff>& p) {
  Polynomial out(p.n);
  for (std::size_t i = 0; i < p.size(); ++i) out.add_term(Monomial(p.mono(i)), Rational(p.coeffs[i]));
  return out;
}

/// Integer form of p: multiply through by the lcm of the denominators.
inline SortedPoly<BigInt> to_integer_sorted(const Polynomial& p, const MonomialOrder& order) {
  BigInt den = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  return to_sorted<BigInt>(p, order, den);
}

inline BigInt content(const SortedPoly<BigInt>& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Divides out the content and makes the leading coefficient positive.
inline void make_primitive(SortedPoly<BigInt>& p) {
  if (p.empty()) return;
  BigInt g = content(p);
  if (p.coeffs.front() < 0) g = -g;
  if (g != 1)
    for (auto& c : p.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

inline std::uint64_t max_bits(const SortedPoly<BigInt>& p) {
  std::uint64_t bits = 0;
  for (const auto& c : p.coeffs) bits = std::max<std::uint64_t>(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

/// a * p[p_from..] - b * m * g[g_from..], both inputs sorted descending.
template <class Coeff>
SortedPoly<Coeff> combine(const SortedPoly<Coeff>& p, std::size_t p_from, const Coeff& a,
                          std::span<const Exponent> m, const SortedPoly<Coeff>& g, std::size_t g_from,
                          const Coeff& b, const MonomialOrder& order) {
  const std::size_t n = p.n;
  SortedPoly<Coeff> out;
  out.n = n;
  out.exps.reserve((p.size() - p_from + g.size() - g_from) * n);
  out.coeffs.reserve(p.size() - p_from + g.size() - g_from);
  std::vector<Exponent> shifted(n);
  auto load = [&](std::size_t j) {
    auto gm = g.mono(j);
    for (std::size_t k = 0; k < n; ++k) shifted[k] = gm[k] + m[k];
  };
  const bool scale_p = a != 1;
  std::size_t i = p_from, j = g_from;
  if (j < g.size()) load(j);
  while (i < p.size() && j < g.size()) {
    const auto cmp = order.compare(p.mono(i), shifted);
    if (cmp > 0) {
      out.push(p.mono(i), scale_p ? Coeff(a * p.coeffs[i]) : p.coeffs[i]);
      ++i;
    } else if (cmp < 0) {
      out.push(shifted, Coeff(-(b * g.coeffs[j])));
      if (++j < g.size()) load(j);
    } else {
      Coeff c = scale_p ? Coeff(a * p.coeffs[i]) : p.coeffs[i];
      c -= b * g.coeffs[j];
      if (c != 0) out.push(shifted, std::move(c));
      ++i;
      if (++j < g.size()) load(j);
    }
  }
  for (; i < p.size(); ++i) out.push(p.mono(i), scale_p ? Coeff(a * p.coeffs[i]) : p.coeffs[i]);
  while (j < g.size()) {
    out.push(shifted, Coeff(-(b * g.coeffs[j])));
    if (++j < g.size()) load(j);
  }
  return out;
}

class StepCounter {
 public:
  explicit StepCounter(std::uint64_t budget) : budget_(budget) {}
  void tick() {
    if (++steps_ > budget_)
      throw BudgetExceeded("Groebner step budget of " + std::to_string(budget_) + " reduction steps exceeded");
  }
  std::uint64_t steps() const noexcept { return steps_; }

 private:
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
};

/// Full reduction of p modulo the polynomials in `basis` (all nonzero).
/// Over the integers the remainder is only determined up to a nonzero
/// scalar and is returned primitive.
template <class Coeff>
SortedPoly<Coeff> reduce(SortedPoly<Coeff> p, std::span<const SortedPoly<Coeff>* const> basis,
                         const MonomialOrder& order, StepCounter& counter) {
  constexpr bool integral = std::is_same_v<Coeff, BigInt>;
  SortedPoly<Coeff> rem;
  rem.n = p.n;
  std::size_t since_content = 0;
  while (!p.empty()) {
    const auto lead = p.lead();
    const SortedPoly<Coeff>* divisor = nullptr;
    for (const auto* g : basis) {
      if (divides(g->lead(), lead)) {
        divisor = g;
        break;
      }
    }
    if (!divisor) {
      // Move the leading term to the remainder.
      rem.push(lead, std::move(p.coeffs.front()));
      p.exps.erase(p.exps.begin(), p.exps.begin() + static_cast<std::ptrdiff_t>(p.n));
      p.coeffs.erase(p.coeffs.begin());
      continue;
    }
    counter.tick();
    std::vector<Exponent> m(p.n);
    auto glead = divisor->lead();
    for (std::size_t k = 0; k < p.n; ++k) m[k] = lead[k] - glead[k];
    if constexpr (integral) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), p.coeffs.front().get_mpz_t(), divisor->coeffs.front().get_mpz_t());
      BigInt a, b;
      mpz_divexact(a.get_mpz_t(), divisor->coeffs.front().get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), p.coeffs.front().get_mpz_t(), g.get_mpz_t());
      if (a < 0) {
        a = -a;
        b = -b;
      }
      p = combine<BigInt>(p, 1, a, m, *divisor, 1, b, order);
      if (a != 1)
        for (auto& c : rem.coeffs) c *= a;
      if (++since_content >= 8) {
        since_content = 0;
        BigInt cp = content(p);
        for (const auto& c : rem.coeffs) {
          if (cp == 1) break;
          mpz_gcd(cp.get_mpz_t(), cp.get_mpz_t(), c.get_mpz_t());
        }
        if (cp > 1) {
          for (auto& c : p.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cp.get_mpz_t());
          for (auto& c : rem.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cp.get_mpz_t());
        }
      }
    } else {
      Coeff factor = p.coeffs.front() / divisor->coeffs.front();
      p = combine<Coeff>(p, 1, Coeff(1), m, *divisor, 1, factor, order);
    }
  }
  if constexpr (integral) make_primitive(rem);
  return rem;
}

template <class Coeff>
std::vector<const SortedPoly<Coeff>*> pointers(const std::vector<SortedPoly<Coeff>>& v) {
  std::vector<const SortedPoly<Coeff>*> out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(&p);
  return out;
}

inline SortedPoly<BigInt> s_polynomial(const SortedPoly<BigInt>& f, const SortedPoly<BigInt>& g,
                                       const MonomialOrder& order) {
  const std::size_t n = f.n;
  std::vector<Exponent> mf(n), mg(n);
  auto lf = f.lead();
  auto lg = g.lead();
  for (std::size_t k = 0; k < n; ++k) {
    const Exponent l = std::max(lf[k], lg[k]);
    mf[k] = l - lf[k];
    mg[k] = l - lg[k];
  }
  BigInt c;
  mpz_gcd(c.get_mpz_t(), f.coeffs.front().get_mpz_t(), g.coeffs.front().get_mpz_t());
  BigInt a, b;
  mpz_divexact(a.get_mpz_t(), g.coeffs.front().get_mpz_t(), c.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), f.coeffs.front().get_mpz_t(), c.get_mpz_t());
  // mf*f scaled: build explicitly (combine multiplies only its second operand).
  SortedPoly<BigInt> left;
  left.n = n;
  std::vector<Exponent> buf(n);
  for (std::size_t i = 1; i < f.size(); ++i) {
    auto m = f.mono(i);
    for (std::size_t k = 0; k < n; ++k) buf[k] = m[k] + mf[k];
    left.push(buf, a * f.coeffs[i]);
  }
  SortedPoly<BigInt> out = combine<BigInt>(left, 0, BigInt(1), mg, g, 1, b, order);
  make_primitive(out);
  return out;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

/// Buchberger with the normal selection strategy and the Gebauer-Moeller
/// installation of the coprime and chain criteria.
class BuchbergerEngine {
 public:
  BuchbergerEngine(const MonomialOrder& order, std::uint64_t budget) : order_(order), counter_(budget) {}

  std::vector<SortedPoly<BigInt>> run(std::vector<SortedPoly<BigInt>> input) {
    for (auto& f : input) {
      if (f.empty()) continue;
      auto active = active_pointers();
      auto h = reduce<BigInt>(std::move(f), active, order_, counter_);
      if (!h.empty()) install(std::move(h));
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& x, const Pair& y) {
        const auto c = order_.compare(x.lcm, y.lcm);
        if (c != 0) return c < 0;
        return std::tie(x.j, x.i) < std::tie(y.j, y.i);
      });
      Pair pair = std::move(*best);
      pairs_.erase(best);
      ++stats_.pairs_reduced;
      auto s = s_polynomial(polys_[pair.i], polys_[pair.j], order_);
      auto active = active_pointers();
      auto h = reduce<BigInt>(std::move(s), active, order_, counter_);
      if (h.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      install(std::move(h));
    }
    return interreduce();
  }

  GroebnerStats stats() const {
    GroebnerStats s = stats_;
    s.reduction_steps = counter_.steps();
    return s;
  }

 private:
  std::vector<const SortedPoly<BigInt>*> active_pointers() const {
    std::vector<const SortedPoly<BigInt>*> out;
    out.reserve(active_.size());
    for (auto idx : active_) out.push_back(&polys_[idx]);
    return out;
  }

  Monomial lead_monomial(std::size_t idx) const { return Monomial(polys_[idx].lead()); }

  void install(SortedPoly<BigInt> h) {
    make_primitive(h);
    stats_.max_coeff_bits = std::max(stats_.max_coeff_bits, max_bits(h));
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial lh = lead_monomial(hi);

    // Gebauer-Moeller update: chain criterion on the new pairs, then the
    // coprime criterion, then pruning of old pairs through h.
    std::vector<Pair> candidates;
    candidates.reserve(active_.size());
    for (auto g : active_) candidates.push_back({g, hi, lcm(lead_monomial(g), lh)});
    stats_.pairs_created += candidates.size();
    auto is_coprime = [&](const Pair& p) { return coprime(lead_monomial(p.i).exponents(), lh.exponents()); };

    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool keep = is_coprime(p);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b)
          if (divides(candidates[b].lcm, p.lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (divides(kept[b].lcm, p.lcm)) keep = false;
      }
      if (keep)
        kept.push_back(p);
      else
        ++stats_.pairs_pruned;
    }
    std::vector<Pair> survivors;
    for (auto& p : kept) {
      if (is_coprime(p)) {
        ++stats_.pairs_pruned;
        continue;
      }
      survivors.push_back(std::move(p));
    }

    // Old pairs made redundant by h.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!divides(lh, p.lcm)) return false;
      const Monomial li = lcm(lead_monomial(p.i), lh);
      const Monomial lj = lcm(lead_monomial(p.j), lh);
      if (li != p.lcm && lj != p.lcm) {
        ++stats_.pairs_pruned;
        return true;
      }
      return false;
    });
    for (auto& p : survivors) pairs_.push_back(std::move(p));

    std::erase_if(active_, [&](std::size_t g) { return divides(lh, lead_monomial(g)); });
    active_.push_back(hi);
  }

  std::vector<SortedPoly<BigInt>> interreduce() {
    std::vector<SortedPoly<BigInt>> basis;
    for (auto idx : active_) basis.push_back(polys_[idx]);
    std::sort(basis.begin(), basis.end(), [&](const auto& x, const auto& y) {
      return order_.compare(x.lead(), y.lead()) < 0;
    });
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<const SortedPoly<BigInt>*> others;
      for (std::size_t t = 0; t < basis.size(); ++t)
        if (t != k) others.push_back(&basis[t]);
      // The leading term is irreducible; reduce only the tail.
      SortedPoly<BigInt> tail;
      tail.n = basis[k].n;
      for (std::size_t i = 1; i < basis[k].size(); ++i) tail.push(basis[k].mono(i), basis[k].coeffs[i]);
      SortedPoly<BigInt> head;
      head.n = basis[k].n;
      head.push(basis[k].lead(), basis[k].coeffs.front());
      tail = reduce_unnormalized(std::move(tail), others, head);
      basis[k] = std::move(tail);
      make_primitive(basis[k]);
    }
    return basis;
  }

  // Reduces `tail` against `others`, scaling `head` by the same integer
  // factors, and returns head + reduced tail.
  SortedPoly<BigInt> reduce_unnormalized(SortedPoly<BigInt> tail,
                                         const std::vector<const SortedPoly<BigInt>*>& others,
                                         SortedPoly<BigInt> head) {
    SortedPoly<BigInt> rem = std::move(head);
    while (!tail.empty()) {
      const auto lead = tail.lead();
      const SortedPoly<BigInt>* divisor = nullptr;
      for (const auto* g : others)
        if (divides(g->lead(), lead)) {
          divisor = g;
          break;
        }
      if (!divisor) {
        rem.push(lead, std::move(tail.coeffs.front()));
        tail.exps.erase(tail.exps.begin(), tail.exps.begin() + static_cast<std::ptrdiff_t>(tail.n));
        tail.coeffs.erase(tail.coeffs.begin());
        continue;
      }
      counter_.tick();
      std::vector<Exponent> m(tail.n);
      auto glead = divisor->lead();
      for (std::size_t k = 0; k < tail.n; ++k) m[k] = lead[k] - glead[k];
      BigInt g;
      mpz_gcd(g.get_mpz_t(), tail.coeffs.front().get_mpz_t(), divisor->coeffs.front().get_mpz_t());
      BigInt a, b;
      mpz_divexact(a.get_mpz_t(), divisor->coeffs.front().get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), tail.coeffs.front().get_mpz_t(), g.get_mpz_t());
      if (a < 0) {
        a = -a;
        b = -b;
      }
      tail = combine<BigInt>(tail, 1, a, m, *divisor, 1, b, order_);
      if (a != 1)
        for (auto& c : rem.coeffs) c *= a;
    }
    return rem;
  }

  MonomialOrder order_;
  StepCounter counter_;
  GroebnerStats stats_;
  std::vector<SortedPoly<BigInt>> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

inline std::vector<Monomial> minimize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace detail

inline Staircase::Staircase(std::size_t num_vars, std::vector<Monomial> gens) : num_vars_(num_vars) {
  for (const auto& g : gens)
    if (g.num_vars() != num_vars) throw std::invalid_argument("staircase generator arity mismatch");
  gens_ = detail::minimize_monomials(std::move(gens));
}

/// Remainder of f on division by `basis` (nonzero polynomials). Exact over
/// Q: f - r lies in the ideal and no term of r is divisible by a leading
/// term of the basis.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                              const MonomialOrder& order) {
  std::vector<detail::SortedPoly<Rational>> sorted;
  sorted.reserve(basis.size());
  for (const auto& b : basis) {
    if (b.is_zero()) throw InvalidInput("normal_form: zero polynomial in divisor list");
    sorted.push_back(detail::to_sorted<Rational>(b, order));
  }
  auto ptrs = detail::pointers(sorted);
  detail::StepCounter unlimited(~std::uint64_t{0});
  return detail::to_polynomial(detail::reduce<Rational>(detail::to_sorted<Rational>(f, order), ptrs, order, unlimited));
}

/// Reduced Groebner basis of the ideal generated by `generators`.
/// Throws BudgetExceeded when more than `step_budget` reduction steps are
/// needed. All-monomial input skips Buchberger entirely.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                                std::uint64_t step_budget = kDefaultStepBudget) {
  std::vector<const Polynomial*> nonzero;
  for (const auto& g : generators) {
    if (g.num_vars() != order.num_vars()) throw InvalidInput("generator arity does not match the monomial order");
    if (!g.is_zero()) nonzero.push_back(&g);
  }
  if (nonzero.empty()) throw InvalidInput("buchberger: all generators are zero");

  GroebnerBasis gb{{}, order, {}, {}};
  const std::size_t n = order.num_vars();

  const bool all_monomials = std::all_of(nonzero.begin(), nonzero.end(), [](auto* p) { return p->is_monomial(); });
  if (all_monomials) {
    std::vector<Monomial> monos;
    for (auto* p : nonzero) monos.push_back(p->terms().begin()->first);
    gb.staircase = Staircase(n, std::move(monos));
    auto gens = gb.staircase.generators();
    std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
    for (const auto& m : gens) gb.generators.push_back(Polynomial::monomial(m));
    gb.stats.monomial_fast_path = true;
    gb.stats.max_coeff_bits = 1;
    return gb;
  }

  std::vector<detail::SortedPoly<BigInt>> input;
  for (auto* p : nonzero) {
    auto s = detail::to_integer_sorted(*p, order);
    detail::make_primitive(s);
    input.push_back(std::move(s));
  }
  detail::BuchbergerEngine engine(order, step_budget);
  auto basis = engine.run(std::move(input));
  gb.stats = engine.stats();
  std::vector<Monomial> leads;
  for (const auto& b : basis) {
    leads.push_back(Monomial(b.lead()));
    gb.generators.push_back(detail::to_polynomial(b));
  }
  gb.staircase = Staircase(n, std::move(leads));
  return gb;
}

inline bool is_zero_dimensional(const GroebnerBasis& gb) { return gb.staircase.is_zero_dimensional(); }

/// Streams the standard monomials of a zero-dimensional staircase in
/// lexicographic order of exponent vectors (last variable fastest). Working
/// memory is one exponent vector plus the staircase.
class StandardMonomialStream {
 public:
  explicit StandardMonomialStream(const Staircase& staircase) : current_(staircase.num_vars()) {
    if (!staircase.is_zero_dimensional())
      throw NonIsolatedSingularity("standard monomials requested for a non-zero-dimensional ideal");
    const std::size_t n = staircase.num_vars();
    bounds_.resize(n);
    by_last_.resize(n);
    for (std::size_t i = 0; i < n; ++i) bounds_[i] = *staircase.pure_power(i);
    for (const auto& g : staircase.generators()) {
      if (g.is_one()) {
        unit_ideal_ = true;
        continue;
      }
      std::size_t last = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] != 0) last = i;
      by_last_[last].push_back(g);
    }
  }
  explicit StandardMonomialStream(const GroebnerBasis& gb) : StandardMonomialStream(gb.staircase) {}

  /// Next standard monomial, or nullptr once exhausted. The pointer stays
  /// valid until the following call.
  const Monomial* next() {
    if (done_) return nullptr;
    if (!started_) {
      started_ = true;
      if (unit_ideal_) {
        done_ = true;
        return nullptr;
      }
      return &current_;
    }
    for (std::size_t k = current_.num_vars(); k-- > 0;) {
      ++current_[k];
      if (current_[k] < bounds_[k] && !blocked(k)) return &current_;
      current_[k] = 0;
    }
    done_ = true;
    return nullptr;
  }

 private:
  bool blocked(std::size_t k) const {
    for (const auto& g : by_last_[k])
      if (divides(g.exponents().first(k + 1), current_.exponents().first(k + 1))) return true;
    return false;
  }

  Monomial current_;
  std::vector<Exponent> bounds_;
  std::vector<std::vector<Monomial>> by_last_;
  bool unit_ideal_ = false;
  bool started_ = false;
  bool done_ = false;
};

/// Calls visit(const Monomial&) for each standard monomial.
template <class Visitor>
void for_each_standard_monomial(const Staircase& staircase, Visitor&& visit) {
  StandardMonomialStream stream(staircase);
  while (const Monomial* m = stream.next()) visit(*m);
}

/// All standard monomials, materialized. Intended for small quotients.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  std::vector<Monomial> out;
  for_each_standard_monomial(gb.staircase, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

/// Dimension of the quotient ring as a vector space; nullopt when infinite.
inline std::optional<std::uint64_t> quotient_dimension(const Staircase& staircase) {
  if (!staircase.is_zero_dimensional()) return std::nullopt;
  std::uint64_t count = 0;
  for_each_standard_monomial(staircase, [&](const Monomial&) { ++count; });
  return count;
}
inline std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& gb) {
  return quotient_dimension(gb.staircase);
}

/// Result of the post-hoc Buchberger criterion check.
struct GroebnerCertificate {
  bool ok = true;
  std::uint64_t pairs_checked = 0;
  std::uint64_t nonzero_remainders = 0;
};

/// Checks that every S-polynomial of basis pairs reduces to zero modulo the
/// basis. Does not use the criteria, so this is independent of the engine's
/// pair pruning.
inline GroebnerCertificate certify_groebner(const GroebnerBasis& gb, std::uint64_t step_budget = kDefaultStepBudget) {
  GroebnerCertificate cert;
  std::vector<detail::SortedPoly<BigInt>> basis;
  for (const auto& g : gb.generators) {
    auto s = detail::to_integer_sorted(g, gb.order);
    detail::make_primitive(s);
    basis.push_back(std::move(s));
  }
  auto ptrs = detail::pointers(basis);
  detail::StepCounter counter(step_budget);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      ++cert.pairs_checked;
      auto s = detail::s_polynomial(basis[i], basis[j], gb.order);
      if (!detail::reduce<BigInt>(std::move(s), ptrs, gb.order, counter).empty()) {
        cert.ok = false;
        ++cert.nonzero_remainders;
      }
    }
  return cert;
}

/// True when every generator of the basis is reduced: no term of any
/// generator is divisible by another generator's leading monomial.
inline bool is_reduced(const GroebnerBasis& gb) {
  std::vector<Monomial> leads;
  for (const auto& g : gb.generators) leads.push_back(g.leading_term(gb.order)->first);
  for (std::size_t i = 0; i < gb.generators.size(); ++i)
    for (const auto& [m, c] : gb.generators[i].terms())
      for (std::size_t j = 0; j < leads.size(); ++j)
        if (i != j && divides(leads[j], m)) return false;
  return true;
}

}  // namespace nuforge
