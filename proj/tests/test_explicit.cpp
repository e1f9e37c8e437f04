#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "checks.hpp"
#include "dshuffle/errors.hpp"

using namespace dshuffle;

namespace {

IndexedWord iw(const char* text) { return parse_indexed_word(text); }

IndexPair pair11(int phi1) { return IndexPair(1, 1, {phi1}); }

}  // namespace

TEST(IndexPairs, Enumeration) {
  const auto p11 = enumerate_index_pairs(1, 1);
  ASSERT_EQ(p11.size(), 2u);
  EXPECT_EQ(p11[0].phi(), OrderMap{1});
  EXPECT_EQ(p11[1].phi(), OrderMap{2});
  EXPECT_EQ(enumerate_index_pairs(2, 2).size(), 6u);
  const auto p03 = enumerate_index_pairs(0, 3);
  ASSERT_EQ(p03.size(), 1u);
  EXPECT_EQ(p03[0].psi(), (OrderMap{1, 2, 3}));
  for (int k = 0; k <= 5; ++k)
    for (int l = 0; l <= 5; ++l) {
      const auto ps = enumerate_index_pairs(k, l);
      EXPECT_EQ(Integer(static_cast<unsigned long>(ps.size())), binomial(k + l, k));
      EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end(), [](const IndexPair& a, const IndexPair& b) {
        return a.phi() < b.phi();
      }));
    }
}

TEST(IndexPairs, Maps) {
  const IndexPair p(2, 1, {1, 3});
  EXPECT_EQ(p.psi(), OrderMap{2});
  EXPECT_EQ(IndexPair::from_maps(p.phi(), p.psi()), p);
  EXPECT_THROW(IndexPair::from_maps({1, 2}, {2}), DomainError);
  EXPECT_EQ(drop_head({1, 3, 4}), (OrderMap{2, 3}));
  EXPECT_EQ(drop_head({1}), OrderMap{});
  EXPECT_EQ(shift_down({2, 4}), (OrderMap{1, 3}));
  EXPECT_EQ(prepend_head({1, 3}), (OrderMap{1, 2, 4}));
  EXPECT_EQ(shift_up({1, 3}), (OrderMap{2, 4}));
  EXPECT_THROW(strip_leading_phi(IndexPair(1, 1, {2})), DomainError);
  EXPECT_THROW(strip_leading_psi(IndexPair(1, 1, {1})), DomainError);
}

TEST(Compositions, Enumeration) {
  EXPECT_EQ(enumerate_compositions(4, 2), (std::vector<Composition>{{1, 3}, {2, 2}, {3, 1}}));
  EXPECT_EQ(enumerate_compositions(3, 3), (std::vector<Composition>{{1, 1, 1}}));
  EXPECT_EQ(enumerate_compositions(5, 3).size(), 6u);
  EXPECT_TRUE(enumerate_compositions(2, 3).empty());
  for (int n = 1; n <= 10; ++n)
    for (int m = 1; m <= n; ++m) {
      const auto cs = enumerate_compositions(n, m);
      EXPECT_EQ(Integer(static_cast<unsigned long>(cs.size())), binomial(n - 1, m - 1));
      EXPECT_TRUE(std::is_sorted(cs.begin(), cs.end()));
    }
}

TEST(Coefficients, HandValues) {
  EXPECT_EQ(h_value(pair11(1), {2}, {3}, 1), 2);
  EXPECT_EQ(h_value(pair11(1), {2}, {3}, 2), 3);
  EXPECT_EQ(h_value(IndexPair(0, 3, {}), {}, {4, 5, 6}, 2), 5);
  const IndexPair p(2, 1, {1, 3});
  EXPECT_EQ(h_value(p, {5, 7}, {4}, 1), 5);
  EXPECT_EQ(h_value(p, {5, 7}, {4}, 2), 4);
  EXPECT_EQ(h_value(p, {5, 7}, {4}, 3), 7);
  EXPECT_THROW(h_value(p, {5, 7}, {4}, 4), DomainError);

  EXPECT_EQ(epsilon(p, 2), -1);
  EXPECT_EQ(epsilon(IndexPair(0, 2, {}), 1), -1);
  EXPECT_EQ(epsilon(IndexPair(1, 0, {1}), 1), 1);

  EXPECT_EQ(coefficient_factor(pair11(1), {2}, {2}, {3, 1}, 1), 2);
  EXPECT_EQ(coefficient_factor(pair11(1), {2}, {2}, {3, 1}, 2), 1);
  EXPECT_EQ(coefficient_factor(pair11(1), {2}, {2}, {2, 2}, 1), 1);
  EXPECT_EQ(coefficient_factor(pair11(1), {2}, {2}, {2, 2}, 2), 1);
  EXPECT_EQ(coefficient_factor(pair11(1), {2}, {2}, {1, 3}, 1), 0);

  EXPECT_EQ(coefficient(pair11(1), {2}, {2}, {3, 1}), 2);
  EXPECT_EQ(coefficient(pair11(1), {2}, {2}, {1, 3}), 0);
  EXPECT_EQ(coefficient(pair11(2), {2}, {2}, {1, 3}), 0);
  EXPECT_TRUE(coefficient_nonzero(pair11(1), {2}, {2}, {3, 1}));
  EXPECT_FALSE(coefficient_nonzero(pair11(1), {2}, {2}, {1, 3}));
  EXPECT_FALSE(coefficient_nonzero(IndexPair(1, 2, {1}), {1}, {1, 2}, {2, 1, 1}));
  EXPECT_THROW(coefficient(pair11(1), {2}, {2}, {3, 2}), DomainError);
}

// With one side empty the coefficient is a Kronecker delta.
TEST(Coefficients, DegenerateDelta) {
  for (int w = 1; w <= 6; ++w)
    for (int m = 1; m <= w; ++m)
      for (const auto& s : enumerate_compositions(w, m))
        for (const auto& t : enumerate_compositions(w, m)) {
          EXPECT_EQ(coefficient(IndexPair(0, m, {}), {}, s, t), s == t ? 1 : 0);
          std::vector<int> all(static_cast<std::size_t>(m));
          std::iota(all.begin(), all.end(), 1);
          EXPECT_EQ(coefficient(IndexPair(m, 0, all), s, {}, t), s == t ? 1 : 0);
        }
}

TEST(Coefficients, PrunedEnumerationMatchesDirect) {
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l)
      for (int w = k + l; w <= 8; ++w)
        for (int wr = k; wr <= w - l; ++wr) {
          if ((k == 0) != (wr == 0) || (l == 0) != (wr == w)) continue;
          for (const auto& r : enumerate_compositions(wr, k))
            for (const auto& s : enumerate_compositions(w - wr, l))
              for (const auto& p : enumerate_index_pairs(k, l)) {
                const CoefficientKernel kernel(p, r, s);
                std::map<Composition, Integer> visited;
                kernel.for_each_nonzero([&](const Composition& t, const Integer& c) { visited[t] = c; });
                for (const auto& t : enumerate_compositions(w, k + l)) {
                  const Integer c = kernel.value(t);
                  auto it = visited.find(t);
                  EXPECT_EQ(it == visited.end() ? Integer(0) : it->second, c);
                  if (it != visited.end()) {
                    EXPECT_NE(c, 0);
                  }
                }
              }
        }
}

TEST(Marks, Merges) {
  const GroupElement a(1, 3), b(1, 2);
  EXPECT_EQ(merge_marks_b(pair11(1), {a}, {b}), (std::vector<GroupElement>{a, b}));
  EXPECT_EQ(merge_marks_b(pair11(2), {a}, {b}), (std::vector<GroupElement>{b, a}));

  const GroupElement w1(1, 5), z1(2, 7), z2(1, 3);
  EXPECT_EQ(merge_marks_e(pair11(1), {w1}, {z1}), (std::vector<GroupElement>{w1, z1 / w1}));
  EXPECT_EQ(merge_marks_e(IndexPair(1, 2, {3}), {w1}, {z1, z2}), (std::vector<GroupElement>{z1, z2, w1 / (z1 * z2)}));
  EXPECT_THROW(merge_marks_e(pair11(1), {w1}, {}), DomainError);
}

TEST(Explicit, Examples) {
  IndexedComb want(iw("(2,2)"), 2);
  want.add_term(iw("(3,1)"), 4);
  EXPECT_EQ(explicit_product_b(iw("(2)"), iw("(2)")), want);
  EXPECT_EQ(explicit_product_e(iw("(2)"), iw("(2)")), want);

  IndexedComb want2(iw("(2,2,1)"), 3);
  want2.add_term(iw("(2,1,2)"), 1);
  want2.add_term(iw("(3,1,1)"), 6);
  EXPECT_EQ(explicit_product_b(iw("(2)"), iw("(2,1)")), want2);

  IndexedComb want3(iw("(2,3)"), 1);
  want3.add_term(iw("(3,2)"), 3);
  want3.add_term(iw("(4,1)"), 6);
  EXPECT_EQ(explicit_product_b(iw("(2)"), iw("(3)")), want3);

  IndexedComb want4(iw("(2,1,2,1)"), 2);
  want4.add_term(iw("(2,2,1,1)"), 6);
  want4.add_term(iw("(3,1,1,1)"), 12);
  EXPECT_EQ(explicit_product_b(iw("(2,1)"), iw("(2,1)")), want4);

  const IndexedWord nu = iw("(2,1 | 1/3,1/2)");
  EXPECT_EQ(explicit_product_b(IndexedWord(), nu), IndexedComb(nu));
  EXPECT_EQ(explicit_product_e(nu, IndexedWord()), IndexedComb(nu));
  EXPECT_EQ(explicit_product_b(IndexedWord(), IndexedWord()), IndexedComb(IndexedWord()));

  IndexedComb alt(iw("(2,2 | 1/2,0/1)"), 2);
  alt.add_term(iw("(3,1 | 1/2,0/1)"), 4);
  EXPECT_EQ(explicit_product_e(iw("(2 | 1/2)"), iw("(2 | 1/2)")), alt);
}

TEST(Explicit, MatchesOracleSmall) {
  const auto b = checks::oracle_b(6, 3);
  EXPECT_TRUE(b.equal.ok()) << b.equal.first;
  EXPECT_TRUE(b.mass.ok()) << b.mass.first;
  const auto e = checks::oracle_e(6, 3, 100);
  EXPECT_TRUE(e.equal.ok()) << e.equal.first;
  EXPECT_TRUE(e.mass.ok()) << e.mass.first;
}

TEST(Explicit, MatchesOracleThirdRoots) {
  checks::Tally t;
  checks::for_each_word_pair(5, 3, 3, [&](const IndexedWord& mu, const IndexedWord& nu) {
    t.expect(explicit_product_b(mu, nu) == shuffle_product_b(mu, nu), checks::show(mu, nu));
    t.expect(explicit_product_e(mu, nu) == shuffle_product_e(mu, nu), checks::show(mu, nu));
  });
  EXPECT_TRUE(t.ok()) << t.first;
}

TEST(Explicit, CombOverloadsAreBilinear) {
  IndexedComb x(iw("(2)"), 2);
  x.add_term(iw("(1,1 | 1/2,0/1)"), -1);
  IndexedComb y(iw("(3)"), 1);
  y.add_term(iw("(1 | 1/2)"), 5);
  IndexedComb want;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) want += ca * cb * shuffle_product_b(a, b);
  EXPECT_EQ(explicit_product_b(x, y), want);
  EXPECT_EQ(explicit_product_e(x, y), shuffle_product_e(x, y));
}

TEST(CoefficientIdentities, NonzeroSystem) {
  const auto t = checks::identity_nonzero(8);
  EXPECT_TRUE(t.ok()) << t.first;
  EXPECT_GT(t.cases, 1000);
}

TEST(CoefficientIdentities, Vanishing) {
  const auto t = checks::identity_vanishing(8);
  EXPECT_TRUE(t.ok()) << t.first;
}

TEST(CoefficientIdentities, Bijection) {
  const auto t = checks::identity_bijection(6);
  EXPECT_TRUE(t.ok()) << t.first;
}

TEST(CoefficientIdentities, FactorRecursions) {
  const auto t = checks::identity_factor_recursions(7);
  EXPECT_TRUE(t.ok()) << t.first;
}

TEST(CoefficientIdentities, CoefficientRecursions) {
  const auto t = checks::identity_coefficient_recursions(7);
  EXPECT_TRUE(t.ok()) << t.first;
}

TEST(CoefficientIdentities, MarkIdentities) {
  const auto t = checks::identity_marks(4);
  EXPECT_TRUE(t.ok()) << t.first;
}

TEST(CoefficientIdentities, RotaBaxter) {
  for (std::int64_t n : {1, 2}) {
    const auto t = checks::rota_baxter(6, n);
    EXPECT_TRUE(t.ok()) << t.first;
  }
}
