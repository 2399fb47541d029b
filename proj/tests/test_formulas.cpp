#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "cfpo/constructions.hpp"
#include "cfpo/crosscheck.hpp"

using namespace cfpo;

namespace {

// Oracle: points moved by some element of the subgroup, from all 60 elements.
PointSet moved_points(const A5Subgroup<Perm>& s) {
  std::set<Point> out;
  for (const Perm& p : s.elements)
    for (Point x = 0; x < p.size(); ++x)
      if (p.images[x] != x) out.insert(x);
  return {out.begin(), out.end()};
}

enum class Side { up, down, both };

// star:5,5 has centre 0, upper leaves 1..5 and lower leaves 6..10.
Side side_of(const PointSet& s) {
  const bool up = std::any_of(s.begin(), s.end(), [](Point x) { return x >= 1 && x <= 5; });
  const bool down = std::any_of(s.begin(), s.end(), [](Point x) { return x >= 6; });
  return up && down ? Side::both : up ? Side::up : Side::down;
}

class StarFiveFive : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { ctx = make_context(generate("star:5,5")).release(); }
  static void TearDownTestSuite() { delete ctx; }
  static GroupContext* ctx;

  std::vector<Side> sides() const {
    std::vector<Side> out;
    for (const auto& s : ctx->perm_census.subgroups) out.push_back(side_of(moved_points(s)));
    return out;
  }
};
GroupContext* StarFiveFive::ctx = nullptr;

}  // namespace

TEST_F(StarFiveFive, CensusSplitsIntoSidesAndDiagonals) {
  ASSERT_TRUE(ctx->syntactic);
  const auto sd = sides();
  // A5 < Sym(5) is unique; the diagonals of A5 x A5 are the graphs of the
  // 120 automorphisms of A5
  EXPECT_EQ(std::count(sd.begin(), sd.end(), Side::up), 1);
  EXPECT_EQ(std::count(sd.begin(), sd.end(), Side::down), 1);
  EXPECT_EQ(std::count(sd.begin(), sd.end(), Side::both), 120);
}

TEST_F(StarFiveFive, IndecMatchesSideOracleInBothBackends) {
  const auto sd = sides();
  for (std::size_t s = 0; s < sd.size(); ++s) {
    const bool oracle = sd[s] != Side::both;
    EXPECT_EQ(ctx->semantic->indec(s), oracle) << s;
    EXPECT_EQ(ctx->syntactic->indec(s), oracle) << s;
  }
}

TEST_F(StarFiveFive, DisjInclusionAndRepPointMatchOracle) {
  const auto sd = sides();
  const std::size_t n = sd.size();
  auto check = [&](const auto& model, const char* name) {
    std::size_t reps = 0;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        const bool one_sided = sd[s] != Side::both && sd[t] != Side::both;
        const bool disj = one_sided && sd[s] != sd[t];
        EXPECT_EQ(model.disj(s, t), disj) << name << " " << s << "," << t;
        EXPECT_EQ(model.subseteq(s, t), one_sided && sd[s] == sd[t]) << name << " " << s << "," << t;
        EXPECT_FALSE(model.subset(s, t)) << name << " " << s << "," << t;
        // the two sides attach at the centre from opposite directions
        EXPECT_EQ(model.rep_point(s, t), disj) << name << " " << s << "," << t;
        reps += model.rep_point(s, t);
      }
    EXPECT_EQ(reps, 2u) << name;
  };
  check(*ctx->semantic, "semantic");
  check(*ctx->syntactic, "syntactic");
}

TEST_F(StarFiveFive, SamePD) {
  const auto sd = sides();
  const std::size_t up = std::find(sd.begin(), sd.end(), Side::up) - sd.begin();
  const std::size_t down = std::find(sd.begin(), sd.end(), Side::down) - sd.begin();
  for (std::size_t s : {up, down})
    for (std::size_t t : {up, down}) EXPECT_EQ(ctx->semantic->same_pd(s, t), s == t);
  // no census subgroup lies strictly below either side, so the syntactic
  // reading cannot separate them
  EXPECT_TRUE(ctx->syntactic->same_pd(up, down));
}

TEST_F(StarFiveFive, InclusionRenderingsAreEquivalent) {
  const std::size_t n = ctx->syntactic->size();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const auto f = ctx->syntactic->subseteq_forms(s, t);
      EXPECT_EQ(f.for_all, f.not_exists) << s << "," << t;
    }
}

TEST_F(StarFiveFive, EqRepPointIdentifiesOrderedAndSwappedPairs) {
  const auto sd = sides();
  const std::size_t up = std::find(sd.begin(), sd.end(), Side::up) - sd.begin();
  const std::size_t down = std::find(sd.begin(), sd.end(), Side::down) - sd.begin();
  auto check = [&](const auto& model) {
    EXPECT_TRUE(model.eq_rep_point(up, down, up, down));
    EXPECT_TRUE(model.eq_rep_point(up, down, down, up));
    EXPECT_FALSE(model.eq_rep_point(up, up, up, down));
  };
  check(*ctx->semantic);
  check(*ctx->syntactic);
}

TEST(SemanticBackend, StarSixHasNaturalAndTransitiveSubgroups) {
  auto ctx = make_context(generate("star:6,0"));
  ASSERT_TRUE(ctx->syntactic);
  // Sym(6) has six point stabilisers and six transitive A5 subgroups
  std::size_t five = 0, six = 0;
  for (std::size_t s = 0; s < ctx->perm_census.subgroups.size(); ++s) {
    const auto supp = moved_points(ctx->perm_census.subgroups[s]);
    five += supp.size() == 5, six += supp.size() == 6;
    EXPECT_TRUE(ctx->semantic->indec(s));
    EXPECT_EQ(ctx->semantic->profile(s).support, supp);
  }
  EXPECT_EQ(five, 6u);
  EXPECT_EQ(six, 6u);
  const auto s = cross_check_all(*ctx);
  EXPECT_EQ(s.disagreements.at("Indec"), 0u);
  EXPECT_EQ(s.disagreements.at("disj"), 0u);
  EXPECT_EQ(s.subseteq_forall_differs, 0u);
}

TEST(SemanticBackend, ThirtyOrbitIsNotIndec) {
  const Cfpo m(generate("star:30,0"));
  const auto gc = left_cosets(a5_subgroup_order12());
  const auto hc = left_cosets(a5_subgroup_order10());
  // the diagonal action on (G coset, H coset) moves leaf 1 + 6a + b
  A5Tuple f(60, identity_perm(m.size()));
  for (A5Index i = 0; i < 60; ++i)
    for (std::size_t k = 0; k < 30; ++k) {
      const auto a = std::find(gc.begin(), gc.end(), translate(i, gc[k / 6])) - gc.begin();
      const auto b = std::find(hc.begin(), hc.end(), translate(i, hc[k % 6])) - hc.begin();
      f[i].images[1 + k] = static_cast<Point>(1 + 6 * a + b);
    }
  ASSERT_TRUE(a5_check(f));
  const auto p = profile_of(m, f[A5Model::a], f[A5Model::b]);
  EXPECT_EQ(p.max_orbit, 30u);
  EXPECT_EQ(p.eccs.components.size(), 1u);
  EXPECT_FALSE(semantic::indec(p));
}

TEST(CrossCheck, SingleVerdict) {
  auto ctx = make_context(generate("star:5,5"));
  const auto v = cross_check(*ctx, "RepPoint", {0, 1});
  EXPECT_EQ(v.formula, "RepPoint");
  ASSERT_TRUE(v.syntactic);
  EXPECT_EQ(*v.syntactic, v.semantic);
  EXPECT_FALSE(v.discrepancy());
  EXPECT_TRUE(v.complete);
  EXPECT_FALSE(v.witness.empty());
  EXPECT_THROW(cross_check(*ctx, "RepPoint", {0}), error);
  EXPECT_THROW(cross_check(*ctx, "disj", {0, 999}), error);
  EXPECT_THROW(cross_check(*ctx, "Bogus", {0}), error);
}

TEST(CrossCheck, DiagonalHasDecompositionWitness) {
  auto ctx = make_context(generate("star:5,5"));
  for (std::size_t s = 0; s < ctx->semantic->size(); ++s)
    if (!ctx->semantic->indec(s)) {
      const auto v = cross_check(*ctx, "Indec", {s});
      ASSERT_TRUE(v.syntactic);
      EXPECT_FALSE(*v.syntactic);
      EXPECT_NE(v.witness.find("decomposition"), std::string::npos);
      return;
    }
  FAIL() << "no diagonal subgroup";
}

TEST(CrossCheck, ZeroBudgetIsIncomplete) {
  Bounds b;
  b.census = 0;
  auto ctx = make_context(generate("star:5,0"), b);
  EXPECT_TRUE(ctx->perm_census.subgroups.empty());
  EXPECT_FALSE(ctx->perm_census.complete);
  const auto s = cross_check_all(*ctx);
  EXPECT_FALSE(s.complete);
  for (const auto& f : crosscheck_formulas()) EXPECT_EQ(s.evaluated.at(f), 0u);
}

TEST(CrossCheck, NeedsEnumeratedGroup) {
  auto ctx = make_context(generate("alt:5,5,2"));
  EXPECT_FALSE(ctx->enumerated());
  EXPECT_EQ(ctx->perm_census.method, "structural");
  EXPECT_FALSE(ctx->perm_census.complete);
  EXPECT_THROW(cross_check_all(*ctx), error);
  const auto v = cross_check(*ctx, "Indec", {0});
  EXPECT_FALSE(v.syntactic);
  EXPECT_FALSE(v.complete);
}

TEST(CrossCheck, FormulaArity) {
  EXPECT_EQ(formula_arity("Indec"), 1u);
  EXPECT_EQ(formula_arity("SamePD"), 2u);
  EXPECT_EQ(formula_arity("EqRepPoint"), 4u);
  EXPECT_THROW(formula_arity("supp"), error);
}
