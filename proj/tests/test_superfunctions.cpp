#include <gtest/gtest.h>

#include "oracles.hpp"
#include "superfrob/characters.hpp"
#include "superfrob/error.hpp"
#include "superfrob/superfunctions.hpp"

using namespace sfrob;

namespace {

struct Vars {
  RingPtr r;
  MPoly x(int a, int color = 1) const { return mp_z(r, r->params().even_symbol(color, a)); }
  MPoly y(int b, int color = 1) const { return mp_z(r, r->params().odd_symbol(color, b)); }
  MPoly q(int e = 1) const { return mp_q(r, e); }
  MPoly Q(int a, int e = 1) const { return mp_Q(r, a, e); }
};

Vars vars(const HookParams& p) { return Vars{make_ring(p)}; }

}  // namespace

TEST(PowerSum, Examples) {
  auto v = vars(HookParams::uniform(1, 1, 1));
  EXPECT_EQ(power_sum(1, v.r), v.x(1) - v.y(1));
  EXPECT_EQ(P_t(1, 1, v.r), lift(power_sum(1, v.r)));
  auto w = vars(HookParams::uniform(1, 2, 0));
  EXPECT_EQ(power_sum(2, w.r), w.x(1) * w.x(1) + w.x(2) * w.x(2));
  EXPECT_EQ(power_sum(2, v.r), v.x(1) * v.x(1) - v.y(1) * v.y(1));
}

TEST(PowerSum, ColoredTwist) {
  auto p = HookParams::uniform(2, 1, 1);
  auto r = make_ring(p);
  // m = 2: P^{(1)} = -p(x1) + p(x2), P^{(2)} = p(x1) + p(x2)
  CycPoly want1 = lift(power_sum_color(1, 2, r) - power_sum_color(1, 1, r));
  CycPoly want2 = lift(power_sum_color(1, 1, r) + power_sum_color(1, 2, r));
  EXPECT_EQ(P_t(1, 1, r), want1);
  EXPECT_EQ(P_t(1, 2, r), want2);
}

TEST(Schur, Examples) {
  auto v = vars(HookParams::uniform(1, 1, 1));
  EXPECT_EQ(schur_super(Multipartition::parse("(2)"), v.r), v.x(1) * v.x(1) - v.x(1) * v.y(1));
  EXPECT_EQ(schur_super(Multipartition::parse("(1,1)"), v.r), v.y(1) * v.y(1) - v.x(1) * v.y(1));
  auto w = vars(HookParams::uniform(1, 1, 0));
  EXPECT_TRUE(schur_super(Multipartition::parse("(1,1)"), w.r).is_zero());
}

TEST(Schur, LinearlyIndependentOverHookShapes) {
  // distinct hook shapes have distinct leading monomials in the term order
  for (const auto& p : {HookParams::uniform(1, 2, 2), HookParams::uniform(2, 2, 2), HookParams::uniform(3, 1, 1)}) {
    auto r = make_ring(p);
    std::set<std::vector<int>> leads;
    int count = 0;
    for (const auto& lam : enumerate_multipartitions(3, p.m())) {
      MPoly s = schur_super(lam, r);
      if (!is_hook(lam, p)) {
        EXPECT_TRUE(s.is_zero());
        continue;
      }
      ++count;
      ASSERT_FALSE(s.is_zero());
      leads.insert(z_part(*r, s.terms().begin()->first));
    }
    EXPECT_EQ(static_cast<int>(leads.size()), count) << p.to_string();
  }
}

TEST(Schur, NumberOfTermsMatchesBruteForceTableaux) {
  auto p = HookParams::parse("1|1,1|2");
  auto r = make_ring(p);
  for (const auto& lam : enumerate_multipartitions(3, 2)) {
    // evaluate at x = y = 1 after stripping signs: count of fillings
    MPoly s = schur_super(lam, r);
    Rational abs_sum = 0;
    for (const auto& [e, c] : s.terms()) abs_sum += abs(c);
    auto fillings = oracle::hook_fillings_bruteforce(lam, p);
    // every filling is a distinct signed monomial contribution; terms may merge but absolute mass adds up
    EXPECT_EQ(abs_sum, Rational(static_cast<long>(fillings.size()))) << lam.to_string();
  }
}

TEST(TildeQ, Examples) {
  auto v = vars(HookParams::uniform(1, 1, 1));
  const auto& p = v.r->params();
  EXPECT_EQ(tilde_q(SortedComposition(p, {1, 0}), v.r), v.x(1));
  EXPECT_EQ(tilde_q(SortedComposition(p, {0, 2}), v.r), -v.q(-1) * v.y(1) * v.y(1));
  EXPECT_EQ(tilde_q(SortedComposition(p, {1, 1}), v.r), -(v.q() - v.q(-1)) * v.x(1) * v.y(1));
  EXPECT_THROW(tilde_q(SortedComposition(p, {0, 0}), v.r), ParameterError);
}

TEST(QT, Examples) {
  auto v = vars(HookParams::uniform(1, 1, 1));
  EXPECT_EQ(q_t_a(1, 1, v.r), v.Q(1) * (v.x(1) - v.y(1)));
  MPoly q2 = v.Q(1) * (v.q() * v.x(1) * v.x(1) - (v.q() - v.q(-1)) * v.x(1) * v.y(1) - v.q(-1) * v.y(1) * v.y(1));
  EXPECT_EQ(q_t_a(2, 1, v.r), q2);
  EXPECT_EQ(to_string(q_t_a(2, 1, v.r)), "q*Q1*x1^2 - (q*Q1 - q^-1*Q1)*x1*y1 - q^-1*Q1*y1^2");
}

TEST(QMu, Examples) {
  auto v = vars(HookParams::uniform(1, 1, 1));
  EXPECT_EQ(q_mu(Multipartition::parse("(2)"), v.r), q_t_a(2, 1, v.r));
  MPoly q1 = v.Q(1) * (v.x(1) - v.y(1));
  EXPECT_EQ(q_mu(Multipartition::parse("(1,1)"), v.r), q1 * q1);
}

TEST(QMu, SpecializesToPowerSumForTwoColors) {
  for (int m = 1; m <= 2; ++m) {
    auto p = HookParams::uniform(m, 2, 1);
    auto r = make_ring(p);
    for (int n = 1; n <= 3; ++n)
      for (const auto& mu : enumerate_multipartitions(n, m))
        EXPECT_EQ(specialize(q_mu(mu, r)), P_mu(mu, r)) << mu.to_string();
  }
}

TEST(QMu, ThreeColorsSpecializeToConjugatedTwist) {
  // With three or more colors q_mu(1, zeta) carries zeta^{+ij}: it equals the complex conjugate of P_mu.
  auto p = HookParams::uniform(3, 1, 1);
  auto r = make_ring(p);
  auto mu = Multipartition::parse("(1);-;-");
  EXPECT_FALSE(specialize(q_mu(mu, r)) == P_mu(mu, r));
  EXPECT_EQ(specialize(q_mu(mu, r)), conj(P_mu(mu, r)));
  for (const auto& nu : enumerate_multipartitions(2, 3)) EXPECT_EQ(specialize(q_mu(nu, r)), conj(P_mu(nu, r)));
}
