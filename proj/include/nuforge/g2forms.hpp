#pragma once

// Exact exterior algebra on R^7 with the standard inner product and the
// orientation e^{1...7}, plus the pointwise identities of the G2 model
// 3-form.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "nuforge/errors.hpp"
#include "nuforge/rational.hpp"

namespace nuforge::g2 {

inline constexpr int kDim = 7;

/// Basis k-form e^{i1...ik}, i1 < ... < ik, encoded with bit (i-1) set for
/// each index i in 1..7.
using Blade = std::uint8_t;
inline constexpr Blade kVolume = 0x7f;

inline int grade(Blade b) { return std::popcount(b); }

/// Indices of a blade, increasing, 1-based.
inline std::vector<int> indices(Blade b) {
  std::vector<int> out;
  for (int i = 0; i < kDim; ++i)
    if (b & (1u << i)) out.push_back(i + 1);
  return out;
}

inline std::string blade_name(Blade b) {
  if (b == 0) return "1";
  std::string s = "e";
  for (int i : indices(b)) s += static_cast<char>('0' + i);
  return s;
}

/// Sign of e^A ^ e^B relative to e^{A u B}; 0 when A and B overlap.
inline int wedge_sign(Blade a, Blade b) {
  if (a & b) return 0;
  // Count pairs (i in A, j in B) with i > j.
  int swaps = 0;
  for (int j = 0; j < kDim; ++j)
    if (b & (1u << j)) swaps += std::popcount(static_cast<unsigned>(a) >> (j + 1));
  return swaps % 2 == 0 ? 1 : -1;
}

/// Element of the exterior algebra with rational coefficients; only nonzero
/// coefficients are stored.
class MultiVector {
 public:
  MultiVector() = default;

  static MultiVector scalar(const Rational& c) {
    MultiVector m;
    m.add(0, c);
    return m;
  }

  /// e^{i1} ^ ... ^ e^{ik} for 1-based indices in any order; repeated
  /// indices give zero.
  static MultiVector e(std::initializer_list<int> idx) { return e(std::vector<int>(idx)); }
  static MultiVector e(const std::vector<int>& idx) {
    Blade acc = 0;
    int sign = 1;
    for (int i : idx) {
      if (i < 1 || i > kDim) throw InvalidInput("basis index out of range 1..7");
      const Blade bit = static_cast<Blade>(1u << (i - 1));
      const int s = wedge_sign(acc, bit);
      if (s == 0) return {};
      sign *= s;
      acc |= bit;
    }
    MultiVector m;
    m.add(acc, sign);
    return m;
  }

  /// The 1-form sum_i u[i] e^{i+1}.
  static MultiVector vector(const std::array<Rational, kDim>& u) {
    MultiVector m;
    for (int i = 0; i < kDim; ++i) m.add(static_cast<Blade>(1u << i), u[i]);
    return m;
  }

  void add(Blade b, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<Blade, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// True when every stored term has grade k (the zero form qualifies).
  bool is_homogeneous(int k) const {
    return std::all_of(terms_.begin(), terms_.end(), [k](const auto& t) { return grade(t.first) == k; });
  }

  /// Degree-k part.
  MultiVector part(int k) const {
    MultiVector m;
    for (const auto& [b, c] : terms_)
      if (grade(b) == k) m.terms_.emplace(b, c);
    return m;
  }

  MultiVector operator-() const {
    MultiVector m = *this;
    for (auto& [b, c] : m.terms_) c = -c;
    return m;
  }
  MultiVector& operator+=(const MultiVector& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  MultiVector& operator-=(const MultiVector& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  MultiVector& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [b, c] : terms_) c *= s;
    return *this;
  }
  friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
  friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
  friend MultiVector operator*(MultiVector a, const Rational& s) { return a *= s; }
  friend MultiVector operator*(const Rational& s, MultiVector a) { return a *= s; }
  friend bool operator==(const MultiVector&, const MultiVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const MultiVector& m) { return os << m.to_string(); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [b, c] : terms_) {
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      const Rational mag = abs(c);
      if (mag != 1 || b == 0) s += mag.get_str() + (b == 0 ? "" : "*");
      if (b != 0) s += blade_name(b);
    }
    return s;
  }

 private:
  std::map<Blade, Rational> terms_;
};

inline MultiVector wedge(const MultiVector& a, const MultiVector& b) {
  MultiVector out;
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) {
      const int s = wedge_sign(ba, bb);
      if (s != 0) out.add(static_cast<Blade>(ba | bb), s > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
    }
  return out;
}

/// Standard inner product; basis blades are orthonormal.
inline Rational inner(const MultiVector& a, const MultiVector& b) {
  Rational sum = 0;
  for (const auto& [blade, c] : a.terms()) sum += c * b.coefficient(blade);
  return sum;
}
inline Rational norm_squared(const MultiVector& a) { return inner(a, a); }

/// Hodge star for the Euclidean metric and orientation e^{1...7}:
/// x ^ *a = <x, a> e^{1...7}. The input must be homogeneous of degree k.
inline MultiVector hodge_star(const MultiVector& a, int k) {
  if (!a.is_homogeneous(k))
    throw InvalidInput("hodge_star: input is not homogeneous of degree " + std::to_string(k));
  MultiVector out;
  for (const auto& [b, c] : a.terms()) {
    const Blade comp = static_cast<Blade>(kVolume & ~b);
    out.add(comp, wedge_sign(b, comp) > 0 ? c : Rational(-c));
  }
  return out;
}

/// Applies the star separately to each homogeneous component.
inline MultiVector hodge_star(const MultiVector& a) {
  MultiVector out;
  for (int k = 0; k <= kDim; ++k) out += hodge_star(a.part(k), k);
  return out;
}

/// Interior product u -| a with the vector u = sum u_i e_i (first slot).
inline MultiVector contract(const std::array<Rational, kDim>& u, const MultiVector& a) {
  MultiVector out;
  for (const auto& [b, c] : a.terms())
    for (int i = 0; i < kDim; ++i) {
      const Blade bit = static_cast<Blade>(1u << i);
      if (!(b & bit) || u[i] == 0) continue;
      const int position = std::popcount(static_cast<unsigned>(b) & (bit - 1u));
      const Rational v = c * u[i];
      out.add(static_cast<Blade>(b & ~bit), position % 2 == 0 ? v : Rational(-v));
    }
  return out;
}

inline std::array<Rational, kDim> unit_vector(int i) {
  std::array<Rational, kDim> u{};
  u[i - 1] = 1;
  return u;
}

// -- Model forms ------------------------------------------------------------

inline MultiVector omega1() { return MultiVector::e({1, 2}) - MultiVector::e({3, 4}); }
inline MultiVector omega2() { return MultiVector::e({1, 3}) - MultiVector::e({4, 2}); }
inline MultiVector omega3() { return MultiVector::e({1, 4}) - MultiVector::e({2, 3}); }

/// e567 + w1^e5 + w2^e6 + w3^e7.
inline MultiVector phi0() {
  return MultiVector::e({5, 6, 7}) + wedge(omega1(), MultiVector::e({5})) + wedge(omega2(), MultiVector::e({6})) +
         wedge(omega3(), MultiVector::e({7}));
}

/// e1234 - w1^e67 - w2^e75 - w3^e56, the 4-form paired with phi0.
inline MultiVector psi0() {
  return MultiVector::e({1, 2, 3, 4}) - wedge(omega1(), MultiVector::e({6, 7})) -
         wedge(omega2(), MultiVector::e({7, 5})) - wedge(omega3(), MultiVector::e({5, 6}));
}

/// Coefficient of e^{1...7} in (1/6)(u -| phi) ^ (v -| phi) ^ phi.
inline Rational metric_from_phi(const std::array<Rational, kDim>& u, const std::array<Rational, kDim>& v,
                                const MultiVector& phi = phi0()) {
  const auto top = wedge(wedge(contract(u, phi), contract(v, phi)), phi);
  return top.coefficient(kVolume) / 6;
}

using Matrix = std::vector<std::vector<Rational>>;

inline Matrix gram_matrix(const MultiVector& phi = phi0()) {
  Matrix g(kDim, std::vector<Rational>(kDim));
  std::array<MultiVector, kDim> contracted;
  for (int i = 0; i < kDim; ++i) contracted[i] = contract(unit_vector(i + 1), phi);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) g[i][j] = wedge(wedge(contracted[i], contracted[j]), phi).coefficient(kVolume) / 6;
  return g;
}

inline Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// T(eta) = *(eta ^ phi) on 2-forms.
inline MultiVector t_phi(const MultiVector& eta, const MultiVector& phi = phi0()) {
  if (!eta.is_homogeneous(2)) throw InvalidInput("t_phi expects a 2-form");
  return hodge_star(wedge(eta, phi), 5);
}

/// The 21 basis 2-forms in increasing blade order.
inline std::vector<Blade> two_form_basis() {
  std::vector<Blade> out;
  for (unsigned b = 0; b < 128; ++b)
    if (std::popcount(b) == 2) out.push_back(static_cast<Blade>(b));
  return out;
}

/// Matrix of T in the basis two_form_basis(); column j is T(e_j).
inline Matrix t_phi_matrix(const MultiVector& phi = phi0()) {
  const auto basis = two_form_basis();
  const std::size_t n = basis.size();
  Matrix m(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    MultiVector ej;
    ej.add(basis[j], 1);
    const auto image = t_phi(ej, phi);
    for (std::size_t i = 0; i < n; ++i) m[i][j] = image.coefficient(basis[i]);
  }
  return m;
}

// -- Exact linear algebra ---------------------------------------------------

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Matrix out(n, std::vector<Rational>(p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

/// a + s * I.
inline Matrix shifted(Matrix a, const Rational& s) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i][i] += s;
  return a;
}

inline bool is_zero(const Matrix& m) {
  for (const auto& row : m)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

inline std::size_t rank(Matrix m) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Characteristic polynomial det(xI - A), coefficients by increasing power
/// (Faddeev-LeVerrier).
inline std::vector<Rational> characteristic_polynomial(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> coeffs(n + 1);
  coeffs[n] = 1;
  Matrix m(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    m = shifted(multiply(a, m), coeffs[n - k + 1]);
    const Matrix am = multiply(a, m);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
    coeffs[n - k] = -trace / static_cast<long>(k);
  }
  return coeffs;
}

/// Coefficients (increasing power) of prod (x - root)^multiplicity.
inline std::vector<Rational> polynomial_from_roots(const std::vector<std::pair<Rational, std::size_t>>& roots) {
  std::vector<Rational> p{Rational(1)};
  for (const auto& [root, mult] : roots)
    for (std::size_t t = 0; t < mult; ++t) {
      std::vector<Rational> next(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        next[i + 1] += p[i];
        next[i] -= root * p[i];
      }
      p = std::move(next);
    }
  return p;
}

// -- Decomposition, instantons, energy ---------------------------------------

struct TwoFormDecomposition {
  MultiVector part7;   ///< (id - T)/3 eta: the -2 eigenspace component
  MultiVector part14;  ///< (T + 2)/3 eta: the +1 eigenspace component
};

inline TwoFormDecomposition decompose_two_form(const MultiVector& eta, const MultiVector& phi = phi0()) {
  const auto t = t_phi(eta, phi);
  return {(eta - t) * Rational(1, 3), (t + eta * 2) * Rational(1, 3)};
}

/// eta ^ psi0 == 0.
inline bool instanton_test(const MultiVector& eta, const MultiVector& psi = psi0()) {
  if (!eta.is_homogeneous(2)) throw InvalidInput("instanton_test expects a 2-form");
  return wedge(eta, psi).is_zero();
}

/// The three characterizations of the instanton condition, evaluated
/// independently.
struct InstantonEquivalence {
  bool wedge_psi_vanishes;
  bool part7_vanishes;
  bool star_equals_wedge_phi;
  bool consistent() const { return wedge_psi_vanishes == part7_vanishes && part7_vanishes == star_equals_wedge_phi; }
};

inline InstantonEquivalence instanton_equivalence(const MultiVector& eta) {
  return {instanton_test(eta), decompose_two_form(eta).part7.is_zero(),
          hodge_star(eta, 2) == wedge(eta, phi0())};
}

struct EnergyIdentity {
  Rational lhs;            ///< <eta, T eta>
  Rational rhs;            ///< -2|eta_7|^2 + |eta_14|^2
  Rational norm_squared;   ///< |eta|^2
  Rational split_norms;    ///< |eta_7|^2 + |eta_14|^2
  bool holds() const { return lhs == rhs && norm_squared == split_norms; }
};

inline EnergyIdentity energy_identity_check(const MultiVector& eta) {
  if (!eta.is_homogeneous(2)) throw InvalidInput("energy_identity_check expects a 2-form");
  const auto parts = decompose_two_form(eta);
  const Rational n7 = norm_squared(parts.part7), n14 = norm_squared(parts.part14);
  return {inner(eta, t_phi(eta)), -2 * n7 + n14, norm_squared(eta), n7 + n14};
}

// -- SU(3) assembly ----------------------------------------------------------

struct AssembledG2 {
  MultiVector phi;
  MultiVector psi;
  int orientation = 1;  ///< sign s with Gram(phi) = s * I
};

/// phi = theta ^ omega + im_eps, psi = (1/2) omega ^ omega + theta ^ re_eps.
/// Requires an orthonormal model frame: the contraction formula must give
/// s * identity for a sign s, which fixes the induced orientation
/// s * e^{1...7}. Checks psi = s * (*phi), the dual under that orientation.
inline AssembledG2 assemble_su3(const MultiVector& theta, const MultiVector& omega, const MultiVector& re_eps,
                                const MultiVector& im_eps) {
  if (!theta.is_homogeneous(1) || !omega.is_homogeneous(2) || !re_eps.is_homogeneous(3) || !im_eps.is_homogeneous(3))
    throw InvalidInput("assemble_su3 expects a 1-form, a 2-form and two 3-forms");
  AssembledG2 out;
  out.phi = wedge(theta, omega) + im_eps;
  out.psi = wedge(omega, omega) * Rational(1, 2) + wedge(theta, re_eps);
  const auto g = gram_matrix(out.phi);
  if (rank(g) < static_cast<std::size_t>(kDim))
    throw InvalidInput("assembled 3-form is degenerate: its contraction form has rank " + std::to_string(rank(g)));
  const Rational s = g[0][0];
  if ((s != 1 && s != -1) || g != [&] {
        Matrix m = identity(kDim);
        for (auto& row : m)
          for (auto& v : row) v *= s;
        return m;
      }())
    throw InvalidInput("assemble_su3 supports orthonormal model frames only (Gram matrix must be +-identity)");
  out.orientation = s > 0 ? 1 : -1;
  const auto dual = hodge_star(out.phi, 3) * Rational(out.orientation);
  if (dual != out.psi)
    throw InvalidInput("assembled psi is not the Hodge dual of phi under the induced orientation");
  return out;
}

// -- Randomized inputs --------------------------------------------------------

/// Random 2-form with small rational coefficients; some coefficients zero.
inline MultiVector random_two_form(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5), skip(0, 3);
  MultiVector eta;
  for (Blade b : two_form_basis())
    if (skip(rng) != 0) eta.add(b, make_rational(num(rng), den(rng)));
  return eta;
}

inline MultiVector random_form(std::mt19937_64& rng, int k) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  MultiVector m;
  for (unsigned b = 0; b < 128; ++b)
    if (std::popcount(b) == k) m.add(static_cast<Blade>(b), make_rational(num(rng), den(rng)));
  return m;
}

// -- Identity suite -----------------------------------------------------------

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string lhs;  ///< computed side
  std::string rhs;  ///< expected side
  std::string note;
};

struct SelfTestOptions {
  std::size_t random_samples = 1000;
  std::uint64_t seed = 20240607;
  /// Negative control: compares *phi0 against psi0 with one coefficient's
  /// sign flipped.
  bool inject_psi_fault = false;
};

inline std::string matrix_to_string(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? " " : "") + m[i][j].get_str();
  }
  return s + "]";
}

inline std::string polynomial_to_string(const std::vector<Rational>& coeffs) {
  std::string s;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] == 0) continue;
    if (!s.empty()) s += coeffs[k] < 0 ? " - " : " + ";
    else if (coeffs[k] < 0) s += "-";
    const Rational mag = abs(coeffs[k]);
    if (mag != 1 || k == 0) s += mag.get_str();
    if (k > 0) s += (mag != 1 ? "*x" : "x") + (k > 1 ? "^" + std::to_string(k) : std::string());
  }
  return s.empty() ? "0" : s;
}

/// Runs every pointwise identity and reports both sides of each comparison.
inline std::vector<IdentityCheck> run_identity_suite(const SelfTestOptions& options = {}) {
  std::vector<IdentityCheck> out;
  const auto phi = phi0();
  MultiVector psi = psi0();
  if (options.inject_psi_fault) {
    const auto first = *psi.terms().begin();
    psi.add(first.first, -2 * first.second);
  }

  {
    const auto star = hodge_star(phi, 3);
    out.push_back({"*phi0 matches psi0 term-by-term", star == psi, star.to_string(), psi.to_string(), ""});
  }
  {
    const auto g = gram_matrix(phi);
    const auto id = identity(kDim);
    out.push_back({"Gram matrix of the 1/6-contraction formula = identity", g == id, matrix_to_string(g),
                   matrix_to_string(id), ""});
    Matrix neg = id;
    for (auto& row : neg)
      for (auto& v : row) v = -v;
    const bool definite = g == id || g == neg;
    out.push_back({"Gram matrix = s * identity (orthonormal frame, induced orientation s)", definite,
                   matrix_to_string(g), "+-identity",
                   definite ? (g == id ? "s = +1" : "s = -1: formula induces the orientation -e1234567") : ""});
  }
  {
    const auto t = t_phi_matrix(phi);
    const auto cp = characteristic_polynomial(t);
    const auto expected = polynomial_from_roots({{Rational(-2), 7}, {Rational(1), 14}});
    out.push_back({"T eigenvalue multiset {-2 x7, +1 x14}", cp == expected, polynomial_to_string(cp),
                   polynomial_to_string(expected), "characteristic polynomial det(xI - T)"});
    const bool minimal = is_zero(multiply(shifted(t, 2), shifted(t, -1))) && !is_zero(shifted(t, 2)) &&
                         !is_zero(shifted(t, -1));
    out.push_back({"T minimal polynomial (x+2)(x-1)", minimal, minimal ? "(T+2)(T-1) = 0" : "(T+2)(T-1) != 0",
                   "(T+2)(T-1) = 0", ""});
    const std::size_t n = t.size();
    const std::size_t dim7 = n - rank(shifted(t, 2)), dim14 = n - rank(shifted(t, -1));
    out.push_back({"eigenspace dimensions (-2: 7, +1: 14)", dim7 == 7 && dim14 == 14,
                   "-2: " + std::to_string(dim7) + ", +1: " + std::to_string(dim14), "-2: 7, +1: 14", ""});
    bool contractions_in_7 = true;
    for (int i = 1; i <= kDim; ++i) {
      const auto v = contract(unit_vector(i), phi);
      contractions_in_7 = contractions_in_7 && t_phi(v, phi) == v * Rational(-2);
    }
    out.push_back({"v -| phi0 spans the -2 eigenspace", contractions_in_7,
                   contractions_in_7 ? "T(e_i -| phi0) = -2 (e_i -| phi0) for i=1..7" : "some e_i -| phi0 not in -2",
                   "T(e_i -| phi0) = -2 (e_i -| phi0)", ""});
  }
  {
    bool ok = true;
    std::string failure;
    for (int k = 0; k <= kDim && ok; ++k)
      for (unsigned b = 0; b < 128; ++b) {
        if (std::popcount(b) != k) continue;
        MultiVector m;
        m.add(static_cast<Blade>(b), 1);
        if (hodge_star(hodge_star(m, k), kDim - k) != m) {
          ok = false;
          failure = "** " + m.to_string() + " = " + hodge_star(hodge_star(m, k), kDim - k).to_string();
          break;
        }
      }
    out.push_back({"** = id on all basis forms, degrees 0..7", ok, ok ? "** = id" : failure, "** = id", ""});
  }

  std::mt19937_64 rng(options.seed);
  std::size_t instanton_bad = 0, energy_bad = 0, split_bad = 0, graded_bad = 0, instanton_true = 0;
  std::string instanton_example, energy_example, split_example, graded_example;
  for (std::size_t i = 0; i < options.random_samples; ++i) {
    const auto eta = random_two_form(rng);
    const auto parts = decompose_two_form(eta, phi);
    for (const auto& candidate : {eta, parts.part14, parts.part7}) {
      const InstantonEquivalence eq{wedge(candidate, psi).is_zero(), decompose_two_form(candidate, phi).part7.is_zero(),
                                    hodge_star(candidate, 2) == wedge(candidate, phi)};
      instanton_true += eq.wedge_psi_vanishes ? 1 : 0;
      if (!eq.consistent()) {
        if (instanton_bad++ == 0)
          instanton_example = "eta = " + candidate.to_string() + ": wedge_psi=" + std::to_string(eq.wedge_psi_vanishes) +
                              " part7=0:" + std::to_string(eq.part7_vanishes) +
                              " star=wedge_phi:" + std::to_string(eq.star_equals_wedge_phi);
      }
    }
    const auto energy = energy_identity_check(eta);
    if (!energy.holds() && energy_bad++ == 0)
      energy_example = "eta = " + eta.to_string() + ": " + energy.lhs.get_str() + " vs " + energy.rhs.get_str();
    if ((parts.part7 + parts.part14 != eta || inner(parts.part7, parts.part14) != 0) && split_bad++ == 0)
      split_example = "eta = " + eta.to_string();
    const int ka = static_cast<int>(i % 8), kb = static_cast<int>((i / 8) % 8);
    const auto a = random_form(rng, ka), b = random_form(rng, kb);
    const Rational sign = (ka * kb) % 2 == 0 ? 1 : -1;
    if (wedge(a, b) != wedge(b, a) * sign && graded_bad++ == 0)
      graded_example = "degrees " + std::to_string(ka) + "," + std::to_string(kb);
  }
  const std::string samples = std::to_string(options.random_samples);
  out.push_back({"instanton equivalence: eta^psi0 = 0 <=> eta_7 = 0 <=> *eta = eta^phi0",
                 instanton_bad == 0 && (options.random_samples == 0 || instanton_true > 0),
                 instanton_bad == 0 ? "consistent on " + std::to_string(3 * options.random_samples) +
                                          " forms (" + std::to_string(instanton_true) + " instantons)"
                                    : std::to_string(instanton_bad) + " inconsistent; first " + instanton_example,
                 "all three agree", "random eta with its 7- and 14-parts"});
  out.push_back({"energy identity <eta, T eta> = -2|eta_7|^2 + |eta_14|^2", energy_bad == 0,
                 energy_bad == 0 ? "exact on " + samples + " random 2-forms"
                                 : std::to_string(energy_bad) + " failures; first " + energy_example,
                 "lhs = rhs and |eta|^2 = |eta_7|^2 + |eta_14|^2", ""});
  out.push_back({"decomposition reconstructs and is orthogonal", split_bad == 0,
                 split_bad == 0 ? "exact on " + samples + " random 2-forms"
                                : std::to_string(split_bad) + " failures; first " + split_example,
                 "eta_7 + eta_14 = eta, <eta_7, eta_14> = 0", ""});
  out.push_back({"wedge graded-anticommutative", graded_bad == 0,
                 graded_bad == 0 ? "exact on " + samples + " random pairs"
                                 : std::to_string(graded_bad) + " failures; first " + graded_example,
                 "a^b = (-1)^{|a||b|} b^a", ""});

  {
    const auto theta = MultiVector::e({5});
    const auto omega = MultiVector::e({6, 7}) + omega1();
    const auto im_eps = wedge(omega2(), MultiVector::e({6})) + wedge(omega3(), MultiVector::e({7}));
    const auto re_eps = -MultiVector::e({1, 3, 7}) - MultiVector::e({2, 4, 7}) + MultiVector::e({1, 4, 6}) -
                        MultiVector::e({2, 3, 6});
    try {
      const auto g = assemble_su3(theta, omega, re_eps, im_eps);
      const bool ok = g.phi == phi && g.psi == hodge_star(g.phi, 3) * Rational(g.orientation);
      out.push_back({"SU(3) assembly on the model frame reproduces phi0 with psi = s * (*phi)", ok,
                     "phi = " + g.phi.to_string() + "; psi = " + g.psi.to_string(),
                     "phi = " + phi.to_string() + "; psi = s * (*phi)",
                     "induced orientation s = " + std::to_string(g.orientation)});
    } catch (const Error& e) {
      out.push_back({"SU(3) assembly on the model frame reproduces phi0 with psi = s * (*phi)", false, e.what(),
                     "assembled pair", ""});
    }
  }
  return out;
}

}  // namespace nuforge::g2
