#include <random>

#include <gtest/gtest.h>

#include "nuforge/g2forms.hpp"

namespace nuforge::g2 {
namespace {

using E = MultiVector;

TEST(Wedge, BasicProducts) {
  EXPECT_EQ(wedge(wedge(E::e({5}), E::e({6})), E::e({7})), E::e({5, 6, 7}));
  EXPECT_TRUE(wedge(E::e({1}), E::e({1})).is_zero());
  EXPECT_EQ(E::e({2, 1}), -E::e({1, 2}));
  EXPECT_TRUE(E::e({3, 3}).is_zero());
}

TEST(Wedge, OmegaSquared) {
  // (e12 - e34)^(e12 - e34) = -e12^e34 - e34^e12 = -2 e1234.
  EXPECT_EQ(wedge(omega1(), omega1()), E::e({1, 2, 3, 4}) * Rational(-2));
}

TEST(Wedge, GradedAnticommutative) {
  std::mt19937_64 rng(3);
  for (int ka = 0; ka <= 7; ++ka)
    for (int kb = 0; ka + kb <= 7; ++kb) {
      const auto a = random_form(rng, ka), b = random_form(rng, kb);
      const Rational sign = (ka * kb) % 2 == 0 ? 1 : -1;
      EXPECT_EQ(wedge(a, b), wedge(b, a) * sign) << ka << "," << kb;
    }
}

TEST(HodgeStar, Examples) {
  EXPECT_EQ(hodge_star(E::e({5, 6, 7}), 3), E::e({1, 2, 3, 4}));
  EXPECT_EQ(hodge_star(E::e({1, 2, 3, 4, 5, 6, 7}), 7), E::scalar(1));
  EXPECT_EQ(hodge_star(E::scalar(1), 0), E::e({1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(hodge_star(phi0(), 3), psi0());
}

TEST(HodgeStar, DefiningProperty) {
  // x ^ *a = <x, a> vol on basis forms of every degree.
  const auto vol = E::e({1, 2, 3, 4, 5, 6, 7});
  for (unsigned bx = 0; bx < 128; ++bx)
    for (unsigned ba = 0; ba < 128; ++ba) {
      if (std::popcount(bx) != std::popcount(ba)) continue;
      E x, a;
      x.add(static_cast<Blade>(bx), 1);
      a.add(static_cast<Blade>(ba), 1);
      EXPECT_EQ(wedge(x, hodge_star(a, std::popcount(ba))), vol * inner(x, a));
    }
}

TEST(HodgeStar, IsAnInvolution) {
  for (unsigned b = 0; b < 128; ++b) {
    E m;
    m.add(static_cast<Blade>(b), 1);
    const int k = std::popcount(b);
    EXPECT_EQ(hodge_star(hodge_star(m, k), 7 - k), m);
  }
}

TEST(HodgeStar, RejectsMixedDegree) {
  EXPECT_THROW(hodge_star(E::e({1}) + E::e({1, 2}), 1), InvalidInput);
}

TEST(Contract, InteriorProduct) {
  EXPECT_EQ(contract(unit_vector(5), phi0()), E::e({6, 7}) + omega1());
  EXPECT_EQ(contract(unit_vector(2), E::e({1, 2})), -E::e({1}));
  EXPECT_TRUE(contract(unit_vector(3), E::e({1, 2})).is_zero());
}

TEST(MetricFromPhi, LiteralContractionFormula) {
  // With the orientation e^{1...7}, the 1/6-contraction formula evaluates to
  // -1 on each e_i: phi0 induces the opposite orientation.
  EXPECT_EQ(metric_from_phi(unit_vector(1), unit_vector(1)), -1);
  EXPECT_EQ(metric_from_phi(unit_vector(1), unit_vector(2)), 0);
  Matrix neg = identity(7);
  for (auto& row : neg)
    for (auto& v : row) v = -v;
  EXPECT_EQ(gram_matrix(), neg);
}

TEST(TPhi, EigenStructure) {
  const auto t = t_phi_matrix();
  ASSERT_EQ(t.size(), 21u);
  EXPECT_EQ(characteristic_polynomial(t), polynomial_from_roots({{Rational(-2), 7}, {Rational(1), 14}}));
  EXPECT_TRUE(is_zero(multiply(shifted(t, 2), shifted(t, -1))));
  EXPECT_EQ(21 - rank(shifted(t, 2)), 7u);
  EXPECT_EQ(21 - rank(shifted(t, -1)), 14u);
}

TEST(TPhi, Witnesses) {
  EXPECT_TRUE(t_phi(E()).is_zero());
  const auto in7 = E::e({6, 7}) + omega1();  // e5 -| phi0
  EXPECT_EQ(t_phi(in7), in7 * Rational(-2));
  const auto in14 = omega1() - E::e({6, 7}) * Rational(2);
  EXPECT_EQ(t_phi(in14), in14);
  EXPECT_THROW(t_phi(E::e({1})), InvalidInput);
}

TEST(CharacteristicPolynomial, SmallMatrix) {
  const Matrix m{{2, 1}, {0, 3}};
  EXPECT_EQ(characteristic_polynomial(m), (std::vector<Rational>{6, -5, 1}));
}

TEST(Decompose, ProjectorsAndEigenvectors) {
  const auto in14 = omega1() - E::e({6, 7}) * Rational(2);
  EXPECT_TRUE(decompose_two_form(in14).part7.is_zero());
  EXPECT_EQ(decompose_two_form(in14).part14, in14);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto eta = random_two_form(rng);
    const auto parts = decompose_two_form(eta);
    EXPECT_EQ(parts.part7 + parts.part14, eta);
    EXPECT_EQ(inner(parts.part7, parts.part14), 0);
    EXPECT_EQ(t_phi(parts.part7), parts.part7 * Rational(-2));
    EXPECT_EQ(t_phi(parts.part14), parts.part14);
  }
}

TEST(Instanton, Examples) {
  const auto in14 = omega1() - E::e({6, 7}) * Rational(2);
  EXPECT_TRUE(instanton_test(in14));
  EXPECT_EQ(hodge_star(in14, 2), wedge(in14, phi0()));
  EXPECT_FALSE(instanton_test(E::e({6, 7}) + omega1()));
  EXPECT_TRUE(instanton_test(E()));
  EXPECT_THROW(instanton_test(E::e({1, 2, 3})), InvalidInput);
}

TEST(Instanton, ThreeWayEquivalence) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const auto eta = random_two_form(rng);
    const auto parts = decompose_two_form(eta);
    for (const auto& x : {eta, parts.part7, parts.part14}) EXPECT_TRUE(instanton_equivalence(x).consistent());
    EXPECT_TRUE(instanton_equivalence(parts.part14).wedge_psi_vanishes);
  }
}

TEST(Energy, UnitEigenforms) {
  // (1/3)(e1 + e2 + e3) -| phi0 has norm 1 and lies in the -2 eigenspace.
  std::array<Rational, 7> u{};
  u[0] = u[1] = u[2] = 1;
  const auto eta7 = contract(u, phi0()) * Rational(1, 3);
  ASSERT_EQ(norm_squared(eta7), 1);
  const auto e7 = energy_identity_check(eta7);
  EXPECT_EQ(e7.lhs, -2);
  EXPECT_EQ(e7.rhs, -2);

  const auto eta14 = (E::e({1, 2}) + E::e({3, 4}) + E::e({1, 3}) - E::e({2, 4})) * Rational(1, 2);
  ASSERT_EQ(norm_squared(eta14), 1);
  ASSERT_EQ(t_phi(eta14), eta14);
  const auto e14 = energy_identity_check(eta14);
  EXPECT_EQ(e14.lhs, 1);
  EXPECT_EQ(e14.rhs, 1);
}

TEST(Energy, RandomForms) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) EXPECT_TRUE(energy_identity_check(random_two_form(rng)).holds());
}

struct ModelFrame {
  E theta = E::e({5});
  E omega = E::e({6, 7}) + omega1();
  E re_eps = -E::e({1, 3, 7}) - E::e({2, 4, 7}) + E::e({1, 4, 6}) - E::e({2, 3, 6});
  E im_eps = wedge(omega2(), E::e({6})) + wedge(omega3(), E::e({7}));
};

TEST(AssembleSu3, ModelFrameReproducesPhi0) {
  const ModelFrame m;
  const auto g = assemble_su3(m.theta, m.omega, m.re_eps, m.im_eps);
  EXPECT_EQ(g.phi, phi0());
  EXPECT_EQ(g.orientation, -1);
  EXPECT_EQ(g.psi, -psi0());
  EXPECT_EQ(g.psi, hodge_star(g.phi, 3) * Rational(g.orientation));
}

TEST(AssembleSu3, NegatedEpsilonIsStillG2) {
  const ModelFrame m;
  const auto g = assemble_su3(m.theta, m.omega, -m.re_eps, -m.im_eps);
  EXPECT_EQ(g.psi, hodge_star(g.phi, 3) * Rational(g.orientation));
  EXPECT_NE(g.phi, phi0());
}

TEST(AssembleSu3, Errors) {
  const ModelFrame m;
  EXPECT_THROW(assemble_su3(m.theta, E(), m.re_eps, m.im_eps), InvalidInput);
  EXPECT_THROW(assemble_su3(m.omega, m.theta, m.re_eps, m.im_eps), InvalidInput);
  EXPECT_THROW(assemble_su3(m.theta, m.omega * Rational(2), m.re_eps, m.im_eps), InvalidInput);
}

TEST(IdentitySuite, ReportsEveryCheck) {
  SelfTestOptions options;
  options.random_samples = 50;
  const auto checks = run_identity_suite(options);
  ASSERT_FALSE(checks.empty());
  for (const auto& c : checks) {
    if (c.name.find("= identity") != std::string::npos && c.name.find("s * identity") == std::string::npos) {
      EXPECT_FALSE(c.passed) << "the contraction formula gives -identity under e^{1...7}";
      EXPECT_NE(c.lhs, c.rhs);
    } else {
      EXPECT_TRUE(c.passed) << c.name << ": " << c.lhs << " vs " << c.rhs;
    }
  }
}

TEST(IdentitySuite, InjectedFaultBreaksStarMatch) {
  SelfTestOptions options;
  options.random_samples = 10;
  options.inject_psi_fault = true;
  const auto checks = run_identity_suite(options);
  ASSERT_FALSE(checks.empty());
  EXPECT_EQ(checks.front().name, "*phi0 matches psi0 term-by-term");
  EXPECT_FALSE(checks.front().passed);
}

}  // namespace
}  // namespace nuforge::g2
