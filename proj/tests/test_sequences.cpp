#include <gtest/gtest.h>

#include <random>

#include "superfrob/error.hpp"
#include "superfrob/sequences.hpp"
#include "superfrob/superfunctions.hpp"

using namespace sfrob;

namespace {

const char* kFlagshipParams = "1|1,1|2,1|3";
const char* kFlagshipMu = "(2,1,1);(3,2,2,1);(4,3,1)";
const char* kFlagshipSeq = "1,3,2,4,6,7,9,2,2,5,4,7,8,6,5,7,3,4,6,8";

std::vector<Symbol> word(std::initializer_list<int> v) {
  std::vector<Symbol> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

// Row weight from the definition: find the strict ascent, check the tail, multiply pair factors.
std::optional<std::pair<int, int>> row_weight_reference(const std::vector<Symbol>& row, const HookParams& p) {
  size_t peak = 0;
  while (peak + 1 < row.size() && row[peak] < row[peak + 1]) ++peak;
  for (size_t i = peak; i + 1 < row.size(); ++i)
    if (row[i] < row[i + 1]) return std::nullopt;
  int sign = 1, qexp = 0;
  for (size_t i = 0; i + 1 < row.size(); ++i) {
    bool ascent = i < peak;
    bool even = p.is_even(ascent ? row[i] : row[i + 1]);
    if (ascent == even) {  // ascent after even, or descent into odd
      sign = -sign;
      qexp -= 1;
    } else {
      qexp += 1;
    }
  }
  return std::make_pair(sign, qexp);
}

}  // namespace

TEST(ParitySequence, ParseForms) {
  auto p = HookParams::parse(kFlagshipParams);
  auto a = ParitySequence::parse("1,4,6", p);
  auto b = ParitySequence::parse("x1.1,y1.2,x1.3", p);
  auto c = ParitySequence::parse("x1,y2,x3", p);
  EXPECT_EQ(a.symbols(), b.symbols());
  EXPECT_EQ(a.symbols(), c.symbols());
  EXPECT_EQ(a.to_names(), "x1.1,y1.2,x1.3");
  EXPECT_EQ(a.count(Parity::odd), 1);
  EXPECT_EQ(a.max_color(), 3);
  EXPECT_THROW(ParitySequence::parse("1,10", p), ParameterError);
  EXPECT_THROW(ParitySequence::parse("1,,2", p), ParameterError);
}

TEST(UpdownPeak, Examples) {
  EXPECT_EQ(updown_peak(word({6, 7, 9})), 3);
  EXPECT_EQ(updown_peak(word({2, 2})), 1);
  EXPECT_FALSE(updown_peak(word({8, 6, 5, 7})).has_value());
  EXPECT_EQ(updown_peak(word({5})), 1);
  EXPECT_THROW(updown_peak(word({})), ParameterError);
}

TEST(RowWeight, Examples) {
  auto p = HookParams::uniform(1, 1, 1);
  auto r = make_ring(p);
  EXPECT_EQ(row_weight(word({1}), r), mp_constant(r, 1));
  EXPECT_EQ(row_weight(word({1, 2}), r), -mp_q(r, -1));
  EXPECT_EQ(row_weight(word({2, 1}), r), mp_q(r));
  auto fp = HookParams::parse(kFlagshipParams);
  auto fr = make_ring(fp);
  EXPECT_EQ(row_weight(word({6, 7, 9}), fr), mp_constant(fr, -1));
  EXPECT_TRUE(row_weight(word({8, 6, 5, 7}), fr).is_zero());
}

TEST(RowWeight, AgreesWithReferenceOnAllShortRows) {
  for (const auto& p : {HookParams::uniform(1, 1, 1), HookParams::parse("2|1"), HookParams::parse("1|1,1|2")}) {
    for (int len = 1; len <= 4; ++len)
      for_each_word(len, p.alphabet_size(), [&](SymbolSpan w) {
        std::vector<Symbol> row(w.begin(), w.end());
        auto got = row_weight_raw(w, p);
        auto want = row_weight_reference(row, p);
        ASSERT_EQ(got.has_value(), want.has_value());
        if (got) {
          EXPECT_EQ(got->sign, want->first);
          EXPECT_EQ(got->qexp, want->second);
        }
      });
  }
}

TEST(MuWeight, FlagshipRowFactors) {
  auto p = HookParams::parse(kFlagshipParams);
  auto r = make_ring(p);
  auto seq = ParitySequence::parse(kFlagshipSeq, p);
  auto mu = Multipartition::parse(kFlagshipMu);
  // strict weight vanishes: row (8,6,5,7) is not up-down
  EXPECT_TRUE(mu_weight_sequence(seq.span(), mu, r).is_zero());
  // single-row checks through one-row multipartitions
  auto one_row = [&](std::initializer_list<int> v, int comp) {
    std::vector<Partition> parts(3);
    parts[comp - 1] = Partition({static_cast<int>(v.size())});
    return mu_weight_sequence(word(v), Multipartition(parts), r);
  };
  EXPECT_EQ(one_row({1, 3}, 1), -mp_q(r, -1) * mp_Q(r, 2));
  EXPECT_EQ(one_row({5, 4}, 2), -mp_q(r, -1) * mp_Q(r, 2, 2));
  EXPECT_EQ(one_row({2, 2}, 2), -mp_q(r, -1) * mp_Q(r, 1, 2));
}

TEST(MuWeight, AllSingletonEvenRows) {
  auto p = HookParams::parse("2|1,1|1");
  auto r = make_ring(p);
  auto mu = Multipartition::parse("(1,1,1);-");
  auto seq = word({1, 4, 2});
  EXPECT_EQ(mu_weight_sequence(seq, mu, r), mp_Q(r, 1, 2) * mp_Q(r, 2));
}

TEST(MuWeight, ErrorsOnMismatch) {
  auto p = HookParams::uniform(1, 1, 1);
  auto r = make_ring(p);
  EXPECT_THROW(mu_weight_sequence(word({1, 2}), Multipartition::parse("(3)"), r), ParameterError);
  EXPECT_THROW(mu_weight_sequence(word({1, 2}), Multipartition::parse("(2);-"), r), ParameterError);
}

TEST(ZMonomial, Signs) {
  auto p = HookParams::uniform(1, 1, 1);
  auto r = make_ring(p);
  EXPECT_EQ(z_monomial(word({2}), r), -mp_z(r, Symbol(2)));
  EXPECT_EQ(z_monomial(word({1, 2}), r), -mp_z(r, Symbol(1)) * mp_z(r, Symbol(2)));
  EXPECT_EQ(z_monomial(word({}), r), mp_constant(r, 1));
}

TEST(SortedComposition, Prefactor) {
  auto p = HookParams::uniform(1, 1, 1);
  auto r = make_ring(p);
  MPoly q = mp_q(r), qi = mp_q(r, -1);
  EXPECT_EQ(SortedComposition(p, {2, 0}).prefactor(r), q);
  EXPECT_EQ(SortedComposition(p, {0, 2}).prefactor(r), -qi);
  EXPECT_EQ(SortedComposition(p, {1, 1}).prefactor(r), q - qi);
  EXPECT_EQ(SortedComposition(p, {1, 0}).prefactor(r), mp_constant(r, 1));
  EXPECT_THROW(SortedComposition(p, {0, 0}).prefactor(r), ParameterError);
  auto s = SortedComposition::from_sequence(word({2, 1, 2}), p);
  EXPECT_EQ(s.exponents(), (std::vector<int>{1, 2}));
  EXPECT_EQ(s.to_sequence(), word({1, 2, 2}));
}

TEST(PermutationSum, AgreesWithPrefactorForSmallCompositions) {
  for (const auto& p : {HookParams::uniform(1, 1, 1), HookParams::parse("2|1"), HookParams::parse("1|1,1|1")}) {
    auto r = make_ring(p);
    for (int t = 1; t <= 4; ++t)
      for (const auto& c : compositions(t, p)) {
        auto rep = permutation_sum_check(c, r);
        EXPECT_TRUE(rep.pass) << p.to_string() << " " << c.to_string() << ": " << to_string(rep.lhs) << " vs "
                              << to_string(rep.rhs);
      }
  }
  auto p = HookParams::uniform(1, 1, 1);
  auto rep = permutation_sum_check(SortedComposition(p, {2, 0}), make_ring(p));
  EXPECT_EQ(rep.arrangements, 1u);
  EXPECT_EQ(rep.lhs, mp_q(make_ring(p)));
}

TEST(SequenceExpansion, MatchesQMuOnRandomParams) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> m_d(1, 2), kl(0, 2);
  for (int trial = 0; trial < 12; ++trial) {
    int m = m_d(rng);
    std::vector<int> k(m), l(m);
    for (int c = 0; c < m; ++c) {
      do {
        k[c] = kl(rng);
        l[c] = kl(rng);
      } while (k[c] + l[c] == 0);
    }
    HookParams p(k, l);
    auto r = make_ring(p);
    for (int n = 1; n <= 3; ++n)
      for (const auto& mu : enumerate_multipartitions(n, m)) {
        MPoly sum(r);
        for_each_word(n, p.alphabet_size(),
                      [&](SymbolSpan w) { sum += mu_weight_sequence(w, mu, r) * z_monomial(w, r); });
        EXPECT_EQ(sum, q_mu(mu, r)) << p.to_string() << " " << mu.to_string();
      }
  }
}

TEST(Words, CountAndOrder) {
  EXPECT_EQ(word_count(3, 4), 64u);
  EXPECT_EQ(word_count(40, 10), UINT64_MAX);
  std::vector<std::vector<Symbol>> seen;
  for_each_word(2, 2, [&](SymbolSpan w) { seen.emplace_back(w.begin(), w.end()); });
  EXPECT_EQ(seen, (std::vector<std::vector<Symbol>>{word({1, 1}), word({1, 2}), word({2, 1}), word({2, 2})}));
}
