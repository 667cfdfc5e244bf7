#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "superfrob/combinatorics.hpp"
#include "superfrob/error.hpp"

using namespace sfrob;

namespace {

std::vector<std::vector<int>> as_vectors(const Multipartition& mp) {
  std::vector<std::vector<int>> out;
  for (const auto& p : mp.components()) out.push_back(p.parts());
  return out;
}

std::vector<std::vector<std::vector<int>>> as_ints(const HookTableau& t) {
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& rows : t.components()) {
    std::vector<std::vector<int>> comp;
    for (const auto& r : rows) {
      std::vector<int> row;
      for (Symbol s : r) row.push_back(s.value);
      comp.push_back(row);
    }
    out.push_back(comp);
  }
  return out;
}

}  // namespace

TEST(Partition, RejectsIncreasingAndNegativeParts) {
  EXPECT_THROW(Partition({1, 2}), ParameterError);
  EXPECT_THROW(Partition({2, -1}), ParameterError);
  EXPECT_EQ(Partition({3, 1, 0, 0}).parts(), (std::vector<int>{3, 1}));
}

TEST(Partition, ConjugateIsInvolution) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : enumerate_partitions(n)) EXPECT_EQ(p.conjugate().conjugate(), p);
  EXPECT_EQ(Partition({3, 1}).conjugate().parts(), (std::vector<int>{2, 1, 1}));
}

TEST(Multipartition, ParseAndPrintRoundTrip) {
  auto mu = Multipartition::parse("(2,1,1);(3,2,2,1);(4,3,1)");
  EXPECT_EQ(mu.m(), 3);
  EXPECT_EQ(mu.size(), 20);
  EXPECT_EQ(mu.to_string(), "(2,1,1);(3,2,2,1);(4,3,1)");
  for (const char* empty : {"-", "0", "()", ""}) {
    auto e = Multipartition::parse(std::string("(1);") + empty);
    EXPECT_EQ(e.m(), 2);
    EXPECT_TRUE(e.component(2).empty());
    EXPECT_EQ(e.to_string(), "(1);-");
  }
  EXPECT_EQ(Multipartition::parse("(2,1)").m(), 1);
  EXPECT_THROW(Multipartition::parse("(1);(1)", 3), ParameterError);
  EXPECT_THROW(Multipartition::parse("(1,2)"), ParameterError);
  EXPECT_THROW(Multipartition::parse("(a)"), ParameterError);
}

TEST(EnumerateMultipartitions, SmallCases) {
  auto zero = enumerate_multipartitions(0, 2);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].to_string(), "-;-");

  auto two = enumerate_multipartitions(2, 2);
  std::vector<std::string> got;
  for (const auto& mp : two) got.push_back(mp.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"(2);-", "(1,1);-", "(1);(1)", "-;(2)", "-;(1,1)"}));

  EXPECT_EQ(enumerate_multipartitions(3, 1).size(), 3u);
}

TEST(EnumerateMultipartitions, MatchesBruteForceAndCount) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 5; ++n) {
      auto list = enumerate_multipartitions(n, m);
      std::set<std::vector<std::vector<int>>> got;
      for (const auto& mp : list) got.insert(as_vectors(mp));
      EXPECT_EQ(got.size(), list.size()) << "duplicates at m=" << m << " n=" << n;
      EXPECT_EQ(got, oracle::multipartitions_bruteforce(n, m)) << "m=" << m << " n=" << n;
      EXPECT_EQ(count_multipartitions(n, m), list.size());
      EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
    }
}

TEST(HookParams, ParseAndSymbolLayout) {
  auto p = HookParams::parse("1|1,1|2,1|3");
  EXPECT_EQ(p.m(), 3);
  EXPECT_EQ(p.alphabet_size(), 9);
  EXPECT_EQ(p.block_start(2), 2);
  EXPECT_EQ(p.block_end(2), 5);
  EXPECT_EQ(p.color(Symbol(4)), 2);
  EXPECT_TRUE(p.is_even(Symbol(3)));
  EXPECT_FALSE(p.is_even(Symbol(4)));
  EXPECT_EQ(p.symbol_name(Symbol(5)), "y2.2");
  EXPECT_EQ(p.variable_name(Symbol(5)), "y3");
  EXPECT_EQ(p.parse_symbol_name("y2.2"), Symbol(5));
  EXPECT_EQ(p.parse_symbol_name("x3"), Symbol(6));
  EXPECT_EQ(p.odd_reflect(Symbol(4)), Symbol(5));
  EXPECT_EQ(p.odd_reflect(Symbol(3)), Symbol(3));
  EXPECT_EQ(p.to_string(), "1|1,1|2,1|3");
  EXPECT_THROW(HookParams::parse("1|"), ParameterError);
  EXPECT_THROW(HookParams::parse("1|1,x|2"), ParameterError);
  EXPECT_THROW(p.check(Symbol(10)), ParameterError);
}

TEST(IsHook, Examples) {
  auto p = HookParams::parse("1|1,1|2,1|3");
  EXPECT_TRUE(is_hook(Multipartition::parse("(2,1,1);(3,2,2,1);(4,3,1)"), p));
  EXPECT_FALSE(is_hook(Multipartition::parse("(1,1);-"), HookParams({1, 0}, {0, 0})));
  EXPECT_TRUE(is_hook(Multipartition::empty(3), p));
  EXPECT_THROW(is_hook(Multipartition::parse("(1)"), p), ParameterError);
}

TEST(StandardTableaux, Examples) {
  EXPECT_EQ(standard_tableaux(Multipartition::parse("(1);(1)")).size(), 2u);
  EXPECT_EQ(standard_tableaux(Multipartition::parse("(2,1)")).size(), 2u);
}

TEST(StandardTableaux, CountMatchesHookLengthOracle) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 5; ++n)
      for (const auto& shape : enumerate_multipartitions(n, m)) {
        auto list = standard_tableaux(shape);
        EXPECT_EQ(list.size(), oracle::hook_length_count(shape)) << shape.to_string();
        EXPECT_EQ(count_standard_tableaux(shape), list.size());
        std::set<StandardTableau> distinct(list.begin(), list.end());
        EXPECT_EQ(distinct.size(), list.size());
        for (const auto& t : list) {
          EXPECT_EQ(t.shape(), shape);
          // rows and columns increase within each component, entries are 1..n
          std::vector<int> seen;
          for (const auto& rows : t.components())
            for (size_t r = 0; r < rows.size(); ++r)
              for (size_t j = 0; j < rows[r].size(); ++j) {
                seen.push_back(rows[r][j]);
                if (j) {
                  EXPECT_LT(rows[r][j - 1], rows[r][j]);
                }
                if (r) {
                  EXPECT_LT(rows[r - 1][j], rows[r][j]);
                }
              }
          std::sort(seen.begin(), seen.end());
          for (int i = 0; i < n; ++i) EXPECT_EQ(seen[i], i + 1);
        }
      }
}

TEST(HookTableaux, Examples) {
  auto p = HookParams::uniform(1, 1, 1);
  auto row = hook_tableaux(Multipartition::parse("(2)"), p);
  ASSERT_EQ(row.size(), 2u);
  EXPECT_EQ(to_string(row[0], p), "x1.1,x1.1");
  EXPECT_EQ(to_string(row[1], p), "x1.1,y1.1");
  auto col = hook_tableaux(Multipartition::parse("(1,1)"), p);
  ASSERT_EQ(col.size(), 2u);
  EXPECT_EQ(to_string(col[0], p), "x1.1/y1.1");
  EXPECT_EQ(to_string(col[1], p), "y1.1/y1.1");
  EXPECT_TRUE(hook_tableaux(Multipartition::parse("(1,1)"), HookParams::uniform(1, 1, 0)).empty());
}

TEST(HookTableaux, MatchBruteForceFillings) {
  std::vector<HookParams> params = {HookParams::uniform(1, 1, 1), HookParams::uniform(1, 2, 1),
                                    HookParams::uniform(1, 1, 2), HookParams::uniform(1, 0, 2),
                                    HookParams::parse("1|1,2|0"),  HookParams::parse("1|2,1|1")};
  for (const auto& p : params)
    for (int n = 0; n <= 4; ++n)
      for (const auto& shape : enumerate_multipartitions(n, p.m())) {
        auto got = hook_tableaux(shape, p);
        auto want = oracle::hook_fillings_bruteforce(shape, p);
        std::vector<std::vector<std::vector<std::vector<int>>>> g;
        for (const auto& t : got) g.push_back(as_ints(t));
        std::sort(want.begin(), want.end());
        EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
        EXPECT_EQ(g, want) << p.to_string() << " " << shape.to_string();
        EXPECT_EQ(!want.empty(), is_hook(shape, p)) << p.to_string() << " " << shape.to_string();
        auto first = first_hook_tableau(shape, p);
        EXPECT_EQ(first.has_value(), !got.empty());
        if (first) {
          EXPECT_EQ(*first, got.front());
        }
      }
}

TEST(Superstandard, FlagshipRows) {
  auto mu = Multipartition::parse("(2,1,1);(3,2,2,1);(4,3,1)");
  auto t = superstandard(mu);
  std::vector<std::pair<int, int>> rows;
  for (const auto& r : t.rows) rows.emplace_back(r.start, r.length);
  std::vector<std::pair<int, int>> want = {{1, 2},  {3, 1},  {4, 1},  {5, 3},  {8, 2},
                                           {10, 2}, {12, 1}, {13, 4}, {17, 3}, {20, 1}};
  EXPECT_EQ(rows, want);
  EXPECT_EQ(t.component_of[1], 1);
  EXPECT_EQ(t.component_of[5], 2);
  EXPECT_EQ(t.component_of[20], 3);
  EXPECT_EQ(to_string(superstandard(Multipartition::parse("(4)")).tableau), "1,2,3,4");
  EXPECT_EQ(to_string(superstandard(Multipartition::parse("(1,1,1)")).tableau), "1/2/3");
}

TEST(CanonicalOrder, RandomPairsAreConsistent) {
  std::mt19937 rng(7);
  auto list = enumerate_multipartitions(5, 3);
  std::uniform_int_distribution<size_t> pick(0, list.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    size_t a = pick(rng), b = pick(rng);
    EXPECT_EQ(canonical_less(list[a], list[b]), a < b);
  }
}
