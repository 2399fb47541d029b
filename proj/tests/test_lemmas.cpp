#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "cfpo/io.hpp"
#include "cfpo/lemmas.hpp"

using namespace cfpo;

TEST(Registry, NamesAndOrder) {
  const auto names = lemma_names();
  ASSERT_EQ(names.size(), 23u);
  EXPECT_EQ(names.front(), "A5Behaves");
  EXPECT_EQ(names.back(), "orderOmega");
  std::set<std::string> unique(names.begin(), names.end());
  EXPECT_EQ(unique.size(), names.size());
  for (const char* n : {"ECC", "no60", "30splits", "SamePDBehaves", "Temp-lemmas", "lessdot", "order0"})
    EXPECT_TRUE(unique.count(n)) << n;
  EXPECT_THROW(run_lemma("NoSuchLemma", generate("star:5,0")), error);
}

TEST(Report, CapsFailureLinesAndOrdersStatuses) {
  LemmaReport r;
  EXPECT_EQ(r.status(), "pass");
  r.skip("x");
  EXPECT_EQ(r.exit_code(), 2);
  for (int i = 0; i < 30; ++i) r.check(false, [] { return std::string("bad"); });
  EXPECT_EQ(r.failures, 30u);
  EXPECT_EQ(r.checked, 30u);
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_EQ(r.status(), "fail");
  const auto fails = std::count_if(r.lines.begin(), r.lines.end(), [](const auto& s) { return s.rfind("FAIL", 0) == 0; });
  EXPECT_EQ(fails, 21);  // 20 lines and the overflow marker
}

TEST(Lemmas, SupportLemmasPassOnStars) {
  for (const char* l : {"A5Behaves", "ECC", "indec", "disjbehaves"}) {
    const auto r = run_lemma(l, generate("star:5,0"));
    EXPECT_EQ(r.status(), "pass") << l;
    EXPECT_GT(r.checked, 0u) << l;
  }
  // a single component leaves nothing to restrict to; the diagonals of star:5,5 have two
  EXPECT_EQ(run_lemma("RestrictionSubgroups", generate("star:5,0")).checked, 0u);
  const auto r = run_lemma("RestrictionSubgroups", generate("star:5,5"));
  EXPECT_EQ(r.status(), "pass");
  EXPECT_GT(r.checked, 120u);
}

TEST(Lemmas, SamePDFailsOnStarFiveFive) {
  // the two sides have no census subgroup strictly below either
  const auto r = run_lemma("SamePDBehaves", generate("star:5,5"));
  EXPECT_EQ(r.failures, 2u);
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(Lemmas, FixturesNeedLargeConeClasses) {
  const auto r = run_lemma("no60", generate("star:30,0"));
  EXPECT_EQ(r.status(), "inconclusive");
  const auto s = run_lemma("30splits", generate("star:30,0"));
  EXPECT_EQ(s.status(), "pass");
  EXPECT_GT(s.checked, 60u);
}

TEST(Lemmas, LessdotIsGatedByRamification) {
  // star:5,5 ramifies 5 ways in each direction, so n = 5 is outside the hypothesis
  const auto r = run_lemma("lessdot", generate("star:5,5"));
  EXPECT_EQ(r.status(), "inconclusive");
  EXPECT_EQ(r.checked, 0u);
}

TEST(Lemmas, FaithfulOnStarFiveFive) {
  const auto r = run_lemma("faithful", generate("star:5,5"));
  EXPECT_EQ(r.status(), "pass");
}

// Properties of the engineered pairs. Expected values from the orbit
// structure: the regular pair fixes the identity-labelled point under the
// product; the coset-pair split has components of 5 and 6 points inside a
// single 30-orbit and no orbit of length 20.
TEST(PairProperties, StandardFixtureTable) {
  const auto pairs = standard_pairs();
  ASSERT_EQ(pairs.size(), 4u);
  std::map<std::string, PairProperties> by;
  for (const auto& p : pairs) {
    EXPECT_TRUE(comm_tuples(p.g, p.h)) << p.name;
    EXPECT_TRUE(a5_check(p.g) && a5_check(p.h)) << p.name;
    by[p.name.substr(0, p.name.find('@'))] = pair_properties(p);
  }
  const auto& nested = by.at("nested");
  EXPECT_TRUE(nested.nocancellingorbits.holds && nested.noflipping.holds && nested.longorbits.holds);
  EXPECT_TRUE(nested.noflipping.applicable && nested.longorbits.applicable);

  const auto& disjoint = by.at("disjoint");
  EXPECT_TRUE(disjoint.nocancellingorbits.holds);
  EXPECT_FALSE(disjoint.noflipping.applicable);
  EXPECT_FALSE(disjoint.longorbits.applicable);
  EXPECT_EQ(disjoint.product_orbits, (std::vector<std::size_t>{5, 5}));

  const auto& split = by.at("split30");
  EXPECT_EQ(split.product_orbits, std::vector<std::size_t>{30});
  EXPECT_TRUE(split.nocancellingorbits.holds);
  EXPECT_TRUE(split.noflipping.applicable);
  EXPECT_FALSE(split.noflipping.holds);
  EXPECT_TRUE(split.longorbits.applicable);
  EXPECT_FALSE(split.longorbits.holds);

  const auto& no60 = by.at("no60");
  EXPECT_TRUE(no60.nocancellingorbits.applicable);
  EXPECT_FALSE(no60.nocancellingorbits.holds);
  const auto total = std::accumulate(no60.product_orbits.begin(), no60.product_orbits.end(), std::size_t{0});
  EXPECT_EQ(total, 59u);  // the regular orbit less the fixed identity point
}

TEST(Io, InstanceRoundTrip) {
  for (const char* spec : {"star:5,5", "alt:2,3,1", "chain-dec:5,5,3,2"}) {
    const CfpoInstance m = generate(spec);
    const CfpoInstance back = instance_from_json(to_json(m));
    EXPECT_EQ(back.name, m.name);
    EXPECT_EQ(back.point_count, m.point_count);
    auto a = m.edges, b = back.edges;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
  }
}

TEST(Io, LoadsFilesAndSpecs) {
  const auto path = (std::filesystem::temp_directory_path() / "cfpo_io_test.json").string();
  write_json(to_json(generate("star:3,2")), path);
  EXPECT_EQ(load_instance(path).point_count, 6u);
  EXPECT_EQ(load_instance("star:3,2").point_count, 6u);
  std::remove(path.c_str());
}

TEST(Io, RejectsInvalidInstances) {
  EXPECT_THROW(parse_json("{", "x"), error);
  EXPECT_THROW(instance_from_json(Json{{"name", "x"}}), error);
  EXPECT_THROW(instance_from_json(Json::parse(R"({"name":"gap","points":[0,2],"edges":[[0,2]]})")), error);
  // a 4-cycle
  EXPECT_THROW(
      instance_from_json(Json::parse(R"({"name":"c","points":[0,1,2,3],"edges":[[0,1],[0,2],[1,3],[2,3]]})")),
      error);
  EXPECT_THROW(instance_from_json(Json::parse(R"({"name":"e","points":[0,1],"edges":[[0]]})")), error);
}

TEST(Io, PermAndTableRoundTrip) {
  Perm p;
  p.images = {2, 0, 1, 3};
  EXPECT_EQ(perm_from_json(to_json(p)), p);
  EXPECT_THROW(perm_from_json(Json::parse(R"({"images":[0,0,1]})")), error);
  const auto t = abelian_table({2, 3});
  EXPECT_EQ(table_from_json(table_to_json(t)), t);
  EXPECT_THROW(table_from_json(Json::parse(R"({"order":3,"table":[[0]]})")), error);
}

TEST(Io, ReportsSerialise) {
  const auto r = run_lemma("A5Behaves", generate("star:5,0"));
  const Json j = to_json(r);
  EXPECT_EQ(j.at("status"), "pass");
  EXPECT_EQ(j.at("lemma"), "A5Behaves");
  EXPECT_EQ(j.at("checked").get<std::size_t>(), r.checked);
}
