#include <gtest/gtest.h>

#include <bitset>
#include <map>
#include <set>

#include "cfpo/a5_tuple.hpp"
#include "cfpo/abstract_group.hpp"
#include "cfpo/automorphism.hpp"
#include "cfpo/census.hpp"

using namespace cfpo;

namespace {

using Table = std::vector<std::vector<ElemId>>;

// Oracle: close every pair of elements under the Cayley table and keep the
// subgroups of order 60 whose element orders match A5.
std::set<std::vector<ElemId>> brute_force_a5_subgroups(const std::vector<std::vector<ElemId>>& t) {
  const std::size_t n = t.size();
  ElemId e = 0;
  while (t[e][e] != e) ++e;
  auto order = [&](ElemId x) {
    int k = 1;
    for (ElemId p = x; p != e; p = t[p][x]) ++k;
    return k;
  };
  std::set<std::vector<ElemId>> out;
  std::vector<char> in(n);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = x + 1; y < n; ++y) {
      std::fill(in.begin(), in.end(), 0);
      std::vector<ElemId> s{e};
      in[e] = 1;
      for (ElemId g : {x, y})
        if (!in[g]) in[g] = 1, s.push_back(g);
      bool too_big = false;
      for (std::size_t i = 0; i < s.size() && !too_big; ++i)
        for (std::size_t j = 0; j <= i && !too_big; ++j)
          for (ElemId p : {t[s[i]][s[j]], t[s[j]][s[i]]})
            if (!in[p]) {
              in[p] = 1, s.push_back(p);
              if (s.size() > 60) too_big = true;
            }
      if (too_big || s.size() != 60) continue;
      std::map<int, int> orders;
      for (ElemId g : s) ++orders[order(g)];
      if (orders != std::map<int, int>{{1, 1}, {2, 15}, {3, 20}, {5, 24}}) continue;
      std::sort(s.begin(), s.end());
      out.insert(s);
    }
  return out;
}

Census<ElemId> census_of(const char* spec, std::vector<Perm>* elements = nullptr) {
  auto g = automorphism_group(Cfpo(generate(spec)));
  if (elements) *elements = *g.elements;
  return find_a5_tuples(OracleGroup(*g.elements));
}

}  // namespace

TEST(Census, StarFiveMatchesBruteForce) {
  std::vector<Perm> elems;
  auto c = census_of("star:5,0", &elems);
  EXPECT_TRUE(c.complete);
  ASSERT_EQ(c.subgroups.size(), 1u);
  EXPECT_EQ(c.listing_count(), 120u);
  auto oracle = brute_force_a5_subgroups(cayley_table(elems));
  std::set<std::vector<ElemId>> found;
  for (const auto& s : c.subgroups) found.insert(s.elements);
  EXPECT_EQ(found, oracle);
}

TEST(Census, StarSixHasTwelveSubgroups) {
  std::vector<Perm> elems;
  auto c = census_of("star:6,0", &elems);
  auto oracle = brute_force_a5_subgroups(cayley_table(elems));
  std::set<std::vector<ElemId>> found;
  for (const auto& s : c.subgroups) found.insert(s.elements);
  EXPECT_EQ(found, oracle);
  // six point stabilizers and six transitive copies
  EXPECT_EQ(found.size(), 12u);
}

TEST(Census, ListingsAreDistinctA5Tuples) {
  std::vector<Perm> elems;
  auto pc = to_perm_census(census_of("star:5,0", &elems), elems);
  const auto& s = pc.subgroups.at(0);
  std::set<std::vector<Perm>> seen;
  for (std::size_t l = 0; l < s.listings.size(); ++l) {
    auto t = s.tuple(l);
    EXPECT_TRUE(a5_check(t));
    EXPECT_EQ(s.listing_of(t), std::optional<std::size_t>(l));
    seen.insert(t);
  }
  EXPECT_EQ(seen.size(), 120u);
}

TEST(Census, TrivialAndAbelianGroupsAreEmpty) {
  EXPECT_TRUE(find_a5_tuples(TableGroup(Table{{0}})).subgroups.empty());
  auto c = find_a5_tuples(TableGroup(abelian_table({60})));
  EXPECT_TRUE(c.subgroups.empty());
  EXPECT_TRUE(c.complete);
}

TEST(Census, BudgetMarksIncomplete) {
  auto g = automorphism_group(Cfpo(gen_star(5, 0)));
  auto c = find_a5_tuples(OracleGroup(*g.elements), 1);
  EXPECT_FALSE(c.complete);
  auto none = find_a5_tuples(OracleGroup(*g.elements), 0);
  EXPECT_FALSE(none.complete);
  EXPECT_TRUE(none.subgroups.empty());
}

TEST(Census, TableAndOracleAgree) {
  auto g = automorphism_group(Cfpo(gen_star(5, 0)));
  auto a = find_a5_tuples(OracleGroup(*g.elements));
  auto b = find_a5_tuples(TableGroup(cayley_table(*g.elements)));
  ASSERT_EQ(a.subgroups.size(), b.subgroups.size());
  EXPECT_EQ(a.subgroups[0].elements, b.subgroups[0].elements);
  EXPECT_EQ(a.subgroups[0].listings, b.subgroups[0].listings);
}

TEST(Census, StarFiveFiveCountsDiagonals) {
  // A5 x 1, 1 x A5 and one diagonal per automorphism of A5
  auto c = census_of("star:5,5");
  EXPECT_EQ(c.subgroups.size(), 122u);
  EXPECT_EQ(c.listing_count(), 122u * 120u);
}

TEST(TableGroup, RejectsBadTables) {
  EXPECT_THROW(TableGroup(Table{{0, 1}, {1, 1}}), error);
  EXPECT_THROW(TableGroup(Table{{0, 1}}), error);
  EXPECT_THROW(TableGroup(Table{{0, 2}, {1, 0}}), error);
  // a Latin square with identity that is not associative
  Table t{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(TableGroup{t}, error);
}
