#include <gtest/gtest.h>

#include <algorithm>

#include "cfpo/instance.hpp"

using namespace cfpo;

namespace {

CfpoInstance chain3() { return {"chain", 3, {{0, 1}, {1, 2}}}; }
CfpoInstance vee() { return {"vee", 3, {{1, 0}, {1, 2}}}; }  // 0 > 1 < 2

// Oracle: x <= y iff y is reachable from x by following edges upward.
bool reach_up(const CfpoInstance& m, Point x, Point y) {
  std::vector<Point> stack{x};
  std::vector<bool> seen(m.point_count, false);
  while (!stack.empty()) {
    Point v = stack.back();
    stack.pop_back();
    if (v == y) return true;
    if (seen[v]) continue;
    seen[v] = true;
    for (auto [lo, hi] : m.edges)
      if (lo == v) stack.push_back(hi);
  }
  return false;
}

}  // namespace

TEST(Validate, ChainIsValid) { EXPECT_TRUE(validate(chain3()).empty()); }

TEST(Validate, DuplicateEdgeIsMultiEdge) {
  auto d = validate({"dup", 2, {{0, 1}, {0, 1}}});
  ASSERT_FALSE(d.empty());
  EXPECT_EQ(d.front().invariant, "no-multi-edges");
}

TEST(Validate, SquareIsCycle) {
  auto d = validate({"square", 4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}});
  ASSERT_FALSE(d.empty());
  EXPECT_EQ(d.front().invariant, "cycle-free");
}

TEST(Validate, DisconnectedAndUnknownPoints) {
  EXPECT_EQ(validate({"two", 3, {{0, 1}}}).front().invariant, "connected");
  EXPECT_EQ(validate({"bad", 2, {{0, 5}}}).front().invariant, "known-endpoints");
  EXPECT_EQ(validate({"loop", 1, {{0, 0}}}).front().invariant, "no-self-loops");
  EXPECT_THROW(Cfpo(CfpoInstance{"square", 4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}}), error);
}

TEST(Order, ChainAndVee) {
  Cfpo c(chain3());
  EXPECT_TRUE(c.order_leq(0, 2));
  EXPECT_FALSE(c.order_leq(2, 0));
  EXPECT_TRUE(c.order_leq(1, 1));
  Cfpo v(vee());
  EXPECT_FALSE(v.order_leq(0, 2));
  EXPECT_FALSE(v.order_leq(2, 0));
  EXPECT_THROW(c.order_leq(0, 7), error);
}

TEST(Path, TagsAndIdentity) {
  Cfpo c(chain3());
  auto p = c.path(0, 2);
  EXPECT_EQ(p.sequence, (std::vector<Point>{0, 1, 2}));
  ASSERT_EQ(p.turns.size(), 1u);
  EXPECT_EQ(p.turns[0], Turn::pass_up);
  Cfpo v(vee());
  auto q = v.path(0, 2);
  EXPECT_EQ(q.sequence, (std::vector<Point>{0, 1, 2}));
  EXPECT_EQ(q.turns[0], Turn::local_min);
  auto r = c.path(1, 1);
  EXPECT_EQ(r.sequence, (std::vector<Point>{1}));
  EXPECT_TRUE(r.turns.empty());
}

TEST(Betweenness, Examples) {
  Cfpo c(chain3());
  EXPECT_TRUE(c.betweenness(1, 0, 2));
  EXPECT_TRUE(c.betweenness(0, 0, 2));
  Cfpo v(vee());
  // The tips are incomparable, so the bottom is not between them.
  EXPECT_FALSE(v.comparable(0, 2));
  EXPECT_FALSE(v.betweenness(1, 0, 2));
}

TEST(Cones, StarAndChain) {
  Cfpo s(gen_star(5, 0));
  auto up = s.cones(0, Direction::up);
  ASSERT_EQ(up.size(), 5u);
  for (const auto& c : up) EXPECT_EQ(c.members.size(), 1u);
  EXPECT_TRUE(s.cones(0, Direction::down).empty());
  Cfpo c(chain3());
  EXPECT_EQ(c.cones(1, Direction::up).front().members, (PointSet{2}));
  EXPECT_EQ(c.cones(1, Direction::down).front().members, (PointSet{0}));
}

TEST(Ramification, Examples) {
  Cfpo s(gen_star(5, 0));
  EXPECT_EQ(s.ramification_orders(0), std::make_pair(std::size_t{5}, std::size_t{0}));
  EXPECT_EQ(s.ramification_orders(1), std::make_pair(std::size_t{0}, std::size_t{1}));
  Cfpo a(gen_alternating_tree(5, 5, 2));
  // base points and their neighbours are interior
  EXPECT_EQ(a.ramification_orders(0), std::make_pair(std::size_t{5}, std::size_t{5}));
  EXPECT_EQ(a.ramification_orders(1), std::make_pair(std::size_t{5}, std::size_t{5}));
  Cfpo b(gen_alternating_tree(6, 5, 2));
  for (Point p = 0; p < b.size(); ++p) {
    auto [u, d] = b.ramification_orders(p);
    if (u + d > 1) {
      EXPECT_EQ(std::make_pair(u, d), std::make_pair(std::size_t{6}, std::size_t{5}));
    }
  }
}

TEST(Generators, Counts) {
  auto s5 = gen_star(5, 0);
  EXPECT_EQ(s5.point_count, 6u);
  EXPECT_EQ(s5.edges.size(), 5u);
  EXPECT_EQ(gen_star(60, 0).point_count, 61u);
  EXPECT_EQ(gen_star(30, 0).point_count, 31u);
  EXPECT_THROW(gen_star(0, 0), error);
  EXPECT_EQ(gen_alternating_tree(5, 5, 0).point_count, 2u);
  // alt(5,5,1): base edge plus 4+5 new neighbours at each end
  EXPECT_EQ(gen_alternating_tree(5, 5, 1).point_count, 20u);
  EXPECT_EQ(gen_alternating_tree(6, 6, 2).point_count, 266u);
}

TEST(Generators, AltOneOneIsMonotoneChain) {
  for (std::size_t r = 0; r < 6; ++r) {
    Cfpo c(gen_alternating_tree(1, 1, r));
    EXPECT_EQ(c.size(), 2 + 2 * r);
    // every point has at most one upper and one lower neighbour
    for (Point p = 0; p < c.size(); ++p) {
      EXPECT_LE(c.upper_neighbors(p).size(), 1u);
      EXPECT_LE(c.lower_neighbors(p).size(), 1u);
    }
  }
}

TEST(Generators, ChainDecorated) {
  Cfpo c(gen_chain_decorated(1, 1, 3, 1));
  bool found = false;
  for (Point p = 0; p < c.size(); ++p) {
    auto [u, d] = c.ramification_orders(p);
    if (u == 1 && d == 1) {
      found = true;
      EXPECT_TRUE(c.betweenness(p, c.lower_neighbors(p)[0], c.upper_neighbors(p)[0]));
    }
  }
  EXPECT_TRUE(found);
  EXPECT_THROW(gen_chain_decorated(5, 5, 2, 1), error);
  Cfpo d(gen_chain_decorated(5, 5, 3, 1));
  // a monotone 3-chain exists
  bool chain = false;
  for (Point p = 0; p < d.size(); ++p)
    for (Point q : d.upper_neighbors(p))
      if (!d.upper_neighbors(q).empty()) chain = true;
  EXPECT_TRUE(chain);
}

TEST(Generate, SpecStrings) {
  EXPECT_EQ(generate("star:5,0").point_count, 6u);
  EXPECT_EQ(generate("alt:1,1,3").point_count, 8u);
  EXPECT_EQ(generate("alt:5,5,2").name, "alt:5,5,2");
  EXPECT_EQ(generate("chain-dec:5,5,3,2").name, "chain-dec:5,5,3,2");
  EXPECT_THROW(generate("star:0,0"), error);
  EXPECT_THROW(generate("star:5"), error);
  EXPECT_THROW(generate("tree:5,5"), error);
  EXPECT_THROW(generate("star:a,1"), error);
}

class InstanceProperties : public ::testing::TestWithParam<const char*> {};

TEST_P(InstanceProperties, PathOrderConeInvariants) {
  const CfpoInstance inst = generate(GetParam());
  ASSERT_TRUE(validate(inst).empty());
  Cfpo m(inst);
  const std::size_t n = m.size();
  for (Point x = 0; x < n; ++x) {
    // cones in both directions partition the other points
    std::vector<int> hits(n, 0);
    for (Direction d : {Direction::up, Direction::down}) {
      auto cs = m.cones(x, d);
      EXPECT_EQ(cs.size(), d == Direction::up ? m.ramification_orders(x).first : m.ramification_orders(x).second);
      for (const auto& c : cs)
        for (Point p : c.members) ++hits[p];
    }
    for (Point p = 0; p < n; ++p) EXPECT_EQ(hits[p], p == x ? 0 : 1);
    for (Point y = 0; y < n; y += 3) {
      auto p = m.path(x, y);
      auto q = m.path(y, x);
      ASSERT_EQ(p.sequence.front(), x);
      ASSERT_EQ(p.sequence.back(), y);
      std::vector<Point> rev(q.sequence.rbegin(), q.sequence.rend());
      EXPECT_EQ(p.sequence, rev);
      for (std::size_t i = 0; i < p.turns.size(); ++i) {
        Turn t = q.turns[q.turns.size() - 1 - i];
        Turn swapped = t == Turn::pass_up ? Turn::pass_down : t == Turn::pass_down ? Turn::pass_up : t;
        EXPECT_EQ(p.turns[i], swapped);
      }
      for (std::size_t i = 0; i + 1 < p.sequence.size(); ++i) {
        Point a = p.sequence[i], b = p.sequence[i + 1];
        EXPECT_TRUE(m.has_edge(a, b) || m.has_edge(b, a));
      }
      bool monotone = std::all_of(p.turns.begin(), p.turns.end(), [](Turn t) { return t == Turn::pass_up; });
      bool first_up = p.sequence.size() < 2 || m.has_edge(p.sequence[0], p.sequence[1]);
      EXPECT_EQ(m.order_leq(x, y), monotone && first_up);
      EXPECT_EQ(m.order_leq(x, y), reach_up(inst, x, y));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Suite, InstanceProperties,
                         ::testing::Values("star:5,0", "star:2,3", "alt:1,1,4", "alt:3,2,2", "alt:5,5,1",
                                           "chain-dec:2,2,3,1", "chain-dec:1,1,4,2"));
