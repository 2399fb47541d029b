#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cfpo/automorphism.hpp"
#include "cfpo/perm.hpp"

using namespace cfpo;

namespace {

// All bijections of the point set that preserve oriented edges.
std::set<Perm> brute_force_automorphisms(const Cfpo& m) {
  std::vector<Point> img(m.size());
  std::iota(img.begin(), img.end(), Point{0});
  std::set<Perm> out;
  do {
    Perm p(img);
    if (is_automorphism(p, m)) out.insert(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Perm from_cycle(std::size_t n, std::vector<Point> cyc) {
  Perm p = identity_perm(n);
  for (std::size_t i = 0; i < cyc.size(); ++i) p.images[cyc[i]] = cyc[(i + 1) % cyc.size()];
  return p;
}

}  // namespace

TEST(Compose, IdentityAndInverse) {
  Perm p = from_cycle(6, {1, 3, 5});
  EXPECT_EQ(compose(p, identity_perm(6)), p);
  EXPECT_EQ(compose(p, inverse(p)), identity_perm(6));
  EXPECT_EQ(compose(inverse(p), p), identity_perm(6));
  EXPECT_THROW(compose(p, identity_perm(5)), error);
}

TEST(Compose, RightFactorFirst) {
  // Oracle: multiply 5-cycles of the leaves as functions on {1..5}.
  Perm a = from_cycle(6, {1, 2, 3, 4, 5});
  Perm b = from_cycle(6, {1, 3, 5, 2, 4});
  Perm ab = compose(a, b);
  for (Point x = 1; x <= 5; ++x) EXPECT_EQ(ab(x), a(b(x)));
  // direct table for this pair: b then a
  const std::vector<Point> expect{0, 4, 5, 1, 2, 3};
  EXPECT_EQ(ab.images, expect);
}

TEST(Automorphisms, StarFiveMatchesBruteForce) {
  Cfpo m(gen_star(5, 0));
  auto g = automorphism_group(m);
  ASSERT_TRUE(g.enumerated());
  EXPECT_EQ(*g.order, 120u);
  auto brute = brute_force_automorphisms(m);
  EXPECT_EQ(std::set<Perm>(g.elements->begin(), g.elements->end()), brute);
}

TEST(Automorphisms, ChainIsTrivial) {
  Cfpo m(CfpoInstance{"chain", 3, {{0, 1}, {1, 2}}});
  auto g = automorphism_group(m);
  EXPECT_EQ(*g.order, 1u);
  EXPECT_EQ(g.elements->size(), 1u);
}

TEST(Automorphisms, StarTwoTwo) {
  Cfpo m(gen_star(2, 2));
  auto g = automorphism_group(m);
  EXPECT_EQ(*g.order, 4u);
  EXPECT_EQ(brute_force_automorphisms(m).size(), 4u);
}

TEST(Automorphisms, StarFactorial) {
  std::uint64_t f = 1;
  for (std::size_t n = 1; n <= 6; ++n) {
    f *= n;
    auto g = automorphism_group(Cfpo(gen_star(n, 0)));
    EXPECT_EQ(*g.order, f) << n;
    EXPECT_EQ(g.elements->size(), f) << n;
  }
}

TEST(Automorphisms, SmallTreesMatchBruteForce) {
  for (const char* spec : {"alt:2,2,1", "star:3,2", "chain-dec:1,2,3,1", "alt:1,2,2"}) {
    Cfpo m(generate(spec));
    if (m.size() > 9) continue;
    auto g = automorphism_group(m);
    auto brute = brute_force_automorphisms(m);
    EXPECT_EQ(std::set<Perm>(g.elements->begin(), g.elements->end()), brute) << spec;
  }
}

TEST(Automorphisms, OverBoundKeepsGenerators) {
  Cfpo m(gen_star(10, 0));
  auto g = automorphism_group(m, 1000);
  EXPECT_FALSE(g.enumerated());
  EXPECT_TRUE(g.order_exceeds_bound);
  EXPECT_EQ(*g.order, 3628800u);
  EXPECT_FALSE(g.generators.empty());
  for (const auto& p : g.generators) EXPECT_TRUE(is_automorphism(p, m));
  auto huge = automorphism_group(Cfpo(gen_star(60, 0)));
  EXPECT_FALSE(huge.order.has_value());
  EXPECT_NEAR(huge.log10_order, 81.92, 0.01);
}

TEST(Automorphisms, EveryElementIsAutomorphism) {
  Cfpo m(generate("star:3,3"));
  auto g = automorphism_group(m);
  EXPECT_EQ(*g.order, 36u);
  for (const auto& p : *g.elements) EXPECT_TRUE(is_automorphism(p, m));
}

TEST(Support, Examples) {
  EXPECT_TRUE(support(identity_perm(6)).empty());
  EXPECT_EQ(support(from_cycle(6, {2, 4})), (PointSet{2, 4}));
  std::vector<Perm> t{from_cycle(6, {1, 2, 3}), from_cycle(6, {3, 4, 5})};
  EXPECT_EQ(support_tuple(t), (PointSet{1, 2, 3, 4, 5}));
}

TEST(Orbits, Examples) {
  auto all = orbits(std::vector<Perm>{identity_perm(4)}, 4);
  EXPECT_EQ(all.size(), 4u);
  std::vector<Perm> gens{from_cycle(6, {1, 2, 3}), from_cycle(6, {3, 4, 5})};
  auto o = orbits(gens, 6);
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o[0], (PointSet{0}));
  EXPECT_EQ(o[1], (PointSet{1, 2, 3, 4, 5}));
}

TEST(Conjugate, Examples) {
  Perm p = from_cycle(6, {1, 2, 3});
  EXPECT_EQ(conjugate(p, identity_perm(6)), p);
  Perm phi = from_cycle(6, {3, 4});
  EXPECT_EQ(conjugate(p, phi), from_cycle(6, {1, 2, 4}));
  EXPECT_EQ(support(conjugate(p, phi)), image_of(phi, support(p)));
}

TEST(Conjugate, IsHomomorphism) {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::vector<Point> a(9), b(9), c(9);
    std::iota(a.begin(), a.end(), Point{0});
    b = c = a;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    std::shuffle(c.begin(), c.end(), rng);
    Perm pa(a), pb(b), phi(c);
    EXPECT_EQ(conjugate(compose(pa, pb), phi), compose(conjugate(pa, phi), conjugate(pb, phi)));
  }
}

TEST(Restrict, Examples) {
  Cfpo m(gen_star(5, 0));
  Perm swap = from_cycle(6, {1, 2});
  PointSet all{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(restrict(swap, all, m), swap);
  EXPECT_EQ(restrict(swap, {}, m), identity_perm(6));
  EXPECT_EQ(restrict(swap, {1, 2}, m), swap);
  EXPECT_THROW(restrict(swap, {1}, m), error);
  // restricting a chain-shift of a path is not an automorphism
  Cfpo c(CfpoInstance{"y", 5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}}});
  Perm flip(std::vector<Point>{0, 2, 1, 4, 3});
  EXPECT_THROW(restrict(flip, {1, 2}, c), error);
}

TEST(Orbits, RefineSupport) {
  Cfpo m(generate("star:3,3"));
  auto g = automorphism_group(m);
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    std::vector<Perm> pick{(*g.elements)[rng() % g.elements->size()], (*g.elements)[rng() % g.elements->size()]};
    auto supp = support_tuple(pick);
    for (const auto& o : orbits(pick, m.size()))
      for (Point x : o) EXPECT_EQ(o.size() > 1, std::binary_search(supp.begin(), supp.end(), x));
  }
}
