#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "cqs/kset.hpp"
#include "oracles.hpp"

using namespace cqs;

namespace {

std::vector<std::vector<Int>> chains_of(const std::vector<KChain>& ks) {
  std::vector<std::vector<Int>> out;
  for (const KChain& k : ks) out.push_back(k.k);
  return out;
}

}  // namespace

TEST(QSequence, Examples) {
  EXPECT_EQ(q_sequence(ints({1, 2, 2, 1})), ints({0, 1, 1, 1, 1, 0}));
  EXPECT_EQ(q_sequence(ints({3, 1, 2, 2})), ints({0, 1, 3, 2, 1, 0}));
  EXPECT_EQ(q_sequence(ints({2, 3, 1, 2})), ints({0, 1, 2, 5, 3, 1}));
}

TEST(IsZeroChain, Examples) {
  EXPECT_TRUE(is_zero_chain(ints({1, 2, 2, 1})));
  EXPECT_TRUE(is_zero_chain(ints({1, 1})));
  EXPECT_FALSE(is_zero_chain(ints({2, 3, 1, 2})));
  EXPECT_EQ(cf_eval(ints({2, 3, 1, 2})), Rat(1));
  EXPECT_FALSE(is_zero_chain(ints({1})));
  EXPECT_FALSE(is_zero_chain({}));
  // q goes to zero early: (1,1,1) has q = (0,1,1,0,-1).
  EXPECT_FALSE(is_zero_chain(ints({1, 1, 1})));
}

TEST(IsZeroChain, AgreesWithRationalEvaluationOnABox) {
  for (std::size_t m = 1; m <= 6; ++m) {
    std::vector<long long> k(m, 1);
    while (true) {
      std::vector<Int> ks(k.begin(), k.end());
      ASSERT_EQ(is_zero_chain(ks), oracle::rational_admissible(ks)) << join(ks);
      std::size_t i = m;
      while (i > 0 && k[i - 1] == 6) k[--i] = 1;
      if (i == 0) break;
      ++k[i - 1];
    }
  }
}

TEST(EnumerateK, SmallLengths) {
  EXPECT_TRUE(enumerate_K(1).empty());
  EXPECT_EQ(chains_of(enumerate_K(2)), (std::vector<std::vector<Int>>{ints({1, 1})}));
  std::vector<std::vector<Int>> four{ints({1, 2, 2, 1}), ints({1, 3, 1, 2}), ints({2, 1, 3, 1}),
                                     ints({2, 2, 1, 3}), ints({3, 1, 2, 2})};
  ASSERT_EQ(oracle::box_search(4, 5), four);
  EXPECT_EQ(chains_of(enumerate_K(4)), four);
}

TEST(EnumerateK, MatchesWideBoxSearch) {
  // The box allows entries up to m + 1, above the search's own bound m - 1.
  for (std::size_t m = 2; m <= 6; ++m)
    ASSERT_EQ(chains_of(enumerate_K(m)), oracle::box_search(m, static_cast<long long>(m) + 1))
        << "m = " << m;
}

TEST(EnumerateK, CatalanCensusAndRationalAgreement) {
  for (std::size_t m = 2; m <= 9; ++m) {
    std::vector<KChain> ks = enumerate_K(m);
    ASSERT_EQ(static_cast<long long>(ks.size()), oracle::catalan(static_cast<long long>(m) - 1));
    ASSERT_TRUE(std::is_sorted(ks.begin(), ks.end()));
    for (const KChain& k : ks) {
      ASSERT_TRUE(oracle::rational_admissible(k.k)) << join(k.k);
      ASSERT_EQ(k.q_seq, q_sequence(k.k));
      ASSERT_EQ(k.q_seq.front(), 0);
      ASSERT_EQ(k.q_seq.back(), 0);
    }
  }
}

TEST(EnumerateKY, WorkedExample) {
  CoeffChain a{ints({3, 3, 2, 2}), ChainRole::A};
  EXPECT_EQ(chains_of(enumerate_KY(a)), (std::vector<std::vector<Int>>{
                                            ints({1, 2, 2, 1}), ints({1, 3, 1, 2}), ints({3, 1, 2, 2})}));
}

TEST(EnumerateKY, AllTwosChain) {
  // Length 3 is the exception: (2,1,2) also fits under (2,2,2).
  for (std::size_t m = 2; m <= 8; ++m) {
    CoeffChain a{std::vector<Int>(m, Int(2)), ChainRole::A};
    std::vector<std::vector<Int>> expected;
    for (std::vector<Int>& k : oracle::box_search(m, 2)) expected.push_back(k);
    ASSERT_EQ(chains_of(enumerate_KY(a)), expected);
    if (m == 3)
      EXPECT_EQ(expected, (std::vector<std::vector<Int>>{ints({1, 2, 1}), ints({2, 1, 2})}));
    else
      EXPECT_EQ(expected, std::vector<std::vector<Int>>{rdp_chain(m)});
  }
}

TEST(EnumerateKY, SubsetOfKAndContainsRdpChain) {
  std::map<std::size_t, std::vector<KChain>> k_by_length;
  for (long long n = 3; n <= 60; ++n)
    for (long long q = 1; q < n - 1; ++q) {
      if (std::gcd(n, q) != 1) continue;
      CoeffChain a = hj_expand(n, n - q, ChainRole::A);
      std::vector<KChain> ky = enumerate_KY(a);
      ASSERT_NE(std::find(ky.begin(), ky.end(), make_kchain(rdp_chain(a.size()))), ky.end());
      // K_m has Catalan(m - 1) elements, so only short chains are filtered in full.
      if (a.size() > 10) continue;
      auto [slot, fresh] = k_by_length.try_emplace(a.size());
      if (fresh) slot->second = enumerate_K(a.size());
      const std::vector<KChain>& all = slot->second;
      std::vector<KChain> filtered;
      for (const KChain& k : all) {
        bool fits = true;
        for (std::size_t i = 0; i < k.size(); ++i) fits = fits && k.k[i] <= a[i];
        if (fits) filtered.push_back(k);
      }
      ASSERT_EQ(ky, filtered);
    }
}

TEST(EnumerateKY, ReversalDuality) {
  for (long long n = 3; n <= 50; ++n)
    for (long long q = 1; q < n - 1; ++q) {
      if (std::gcd(n, q) != 1) continue;
      CoeffChain a = hj_expand(n, n - q, ChainRole::A);
      CoeffChain ra = a;
      std::reverse(ra.coefficients.begin(), ra.coefficients.end());
      std::vector<std::vector<Int>> fwd, rev = chains_of(enumerate_KY(ra));
      for (const KChain& k : enumerate_KY(a)) {
        fwd.emplace_back(k.k.rbegin(), k.k.rend());
        // Consecutive q's are coprime, so a zero chain always ends (..., 1, 0)
        // and its reversal starts from the same boundary data (0, 1, ...).
        ASSERT_EQ(k.q_seq[k.q_seq.size() - 2], 1);
      }
      std::sort(fwd.begin(), fwd.end());
      ASSERT_EQ(fwd, rev);
    }
}

TEST(EnumerateKY, RejectsNonAChain) {
  EXPECT_THROW(enumerate_KY(CoeffChain{ints({3, 1, 2}), ChainRole::A}), DomainError);
}
