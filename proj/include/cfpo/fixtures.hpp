// Commuting pairs of A5 tuples built from classes of isomorphic cones, and
// the three properties asserted of commuting pairs: supports survive the
// product, extended components do not cross, and intersecting supports
// produce an orbit of length 20.

#pragma once

#include <algorithm>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "a5_tuple.hpp"
#include "constructions.hpp"
#include "instance.hpp"
#include "semantic.hpp"
#include "structural_census.hpp"

namespace cfpo {

struct CommutingPair {
  std::string name;
  std::shared_ptr<const Cfpo> instance;
  A5Tuple g, h;
  Point anchor = 0;  // the orbit point used by the construction
};

namespace detail {

/// Entry i carries cone k to cone act(i, k) along the canonical isomorphisms.
template <class Act>
A5Tuple cone_tuple(const Cfpo& m, ConeCodes& codes, Point apex, const std::vector<Point>& roots, Act act) {
  A5Tuple t(60, identity_perm(m.size()));
  for (A5Index i = 0; i < 60; ++i)
    for (std::size_t k = 0; k < roots.size(); ++k) codes.map_cone(apex, roots[k], apex, roots[act(i, k)], t[i]);
  return t;
}

inline const ConeClassInfo* class_with(const std::vector<ConeClassInfo>& classes, std::size_t at_least) {
  for (const auto& c : classes)
    if (c.roots.size() >= at_least) return &c;
  return nullptr;
}

inline PointSet cone_union(const Cfpo& m, Point apex, const std::vector<Point>& roots) {
  PointSet s;
  for (Point r : roots) {
    auto c = m.component_without(apex, r);
    s.insert(s.end(), c.begin(), c.end());
  }
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace detail

/// g permutes five isomorphic cones at x naturally; h acts naturally on five
/// isomorphic sub-cones inside each of them, identically in every cone.
inline std::optional<CommutingPair> nested_pair(std::shared_ptr<const Cfpo> mp) {
  const Cfpo& m = *mp;
  const A5Model& am = canonical_a5();
  ConeCodes codes(m);
  const auto classes = isomorphic_cone_classes(m, codes);
  for (const auto& outer : classes) {
    if (outer.roots.size() < 5) continue;
    const std::vector<Point> roots(outer.roots.begin(), outer.roots.begin() + 5);
    for (const auto& inner : classes) {
      if (inner.apex != roots[0] || inner.roots.size() < 5) continue;
      if (std::find(inner.roots.begin(), inner.roots.end(), outer.apex) != inner.roots.end()) continue;
      // the matching sub-cones of every cone: same positions under the canonical isomorphism
      std::vector<std::vector<Point>> sub(5);
      for (std::size_t j = 0; j < 5; ++j) {
        Perm carry = identity_perm(m.size());
        codes.map_cone(outer.apex, roots[0], outer.apex, roots[j], carry);
        for (std::size_t k = 0; k < 5; ++k) sub[j].push_back(carry.images[inner.roots[k]]);
      }
      CommutingPair p;
      p.name = "nested@" + std::to_string(outer.apex);
      p.instance = mp;
      p.anchor = inner.roots[0];
      p.g = detail::cone_tuple(m, codes, outer.apex, roots, [&](A5Index i, std::size_t k) { return am.natural[i][k]; });
      p.h.assign(60, identity_perm(m.size()));
      for (A5Index i = 0; i < 60; ++i)
        for (std::size_t j = 0; j < 5; ++j)
          for (std::size_t k = 0; k < 5; ++k) codes.map_cone(roots[j], sub[j][k], roots[j], sub[j][am.natural[i][k]], p.h[i]);
      return p;
    }
  }
  return std::nullopt;
}

/// Two natural actions on cone classes with disjoint unions.
inline std::optional<CommutingPair> disjoint_pair(std::shared_ptr<const Cfpo> mp) {
  const Cfpo& m = *mp;
  const A5Model& am = canonical_a5();
  ConeCodes codes(m);
  const auto classes = isomorphic_cone_classes(m, codes);
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      const auto& ca = classes[a];
      const auto& cb = classes[b];
      if (ca.roots.size() < 5 || cb.roots.size() < 5) continue;
      const std::vector<Point> ra(ca.roots.begin(), ca.roots.begin() + 5), rb(cb.roots.begin(), cb.roots.begin() + 5);
      const auto ua = detail::cone_union(m, ca.apex, ra), ub = detail::cone_union(m, cb.apex, rb);
      if (semantic::meets(ua, ub) || std::binary_search(ua.begin(), ua.end(), cb.apex) ||
          std::binary_search(ub.begin(), ub.end(), ca.apex))
        continue;
      auto nat = [&](A5Index i, std::size_t k) { return am.natural[i][k]; };
      CommutingPair p;
      p.name = "disjoint@" + std::to_string(ca.apex) + "," + std::to_string(cb.apex);
      p.instance = mp;
      p.anchor = ra[0];
      p.g = detail::cone_tuple(m, codes, ca.apex, ra, nat);
      p.h = detail::cone_tuple(m, codes, cb.apex, rb, nat);
      return p;
    }
  return std::nullopt;
}

/// The diagonal action on A5/G x A5/H (|G| = 12, |H| = 10) over 30 isomorphic
/// cones, as a single tuple.
inline std::optional<std::pair<A5Tuple, Point>> coset_pair_tuple(const Cfpo& m) {
  ConeCodes codes(m);
  const auto classes = isomorphic_cone_classes(m, codes);
  const ConeClassInfo* c = detail::class_with(classes, 30);
  if (!c) return std::nullopt;
  const auto gc = left_cosets(a5_subgroup_order12());
  const auto hc = left_cosets(a5_subgroup_order10());
  const std::vector<Point> roots(c->roots.begin(), c->roots.begin() + 30);
  // root 6a + b carries (a-th G coset, b-th H coset)
  auto act = [&](A5Index i, std::size_t k) {
    const auto a = translate(i, gc[k / 6]), b = translate(i, hc[k % 6]);
    const auto ia = std::find(gc.begin(), gc.end(), a) - gc.begin();
    const auto ib = std::find(hc.begin(), hc.end(), b) - hc.begin();
    return static_cast<std::size_t>(6 * ia + ib);
  };
  return std::pair(detail::cone_tuple(m, codes, c->apex, roots, act), roots[0]);
}

/// The two factors of the 30-orbit split.
inline std::optional<CommutingPair> split30_pair(std::shared_ptr<const Cfpo> mp) {
  auto f = coset_pair_tuple(*mp);
  if (!f) return std::nullopt;
  auto [g, h] = split_orbit_30(*mp, f->first, f->second);
  return CommutingPair{"split30", mp, std::move(g), std::move(h), f->second};
}

/// A5 acting regularly on 60 isomorphic cones, as a single tuple.
inline std::optional<std::pair<A5Tuple, Point>> regular_tuple(const Cfpo& m) {
  const A5Model& am = canonical_a5();
  ConeCodes codes(m);
  const auto classes = isomorphic_cone_classes(m, codes);
  const ConeClassInfo* c = detail::class_with(classes, 60);
  if (!c) return std::nullopt;
  const std::vector<Point> roots(c->roots.begin(), c->roots.begin() + 60);
  auto act = [&](A5Index i, std::size_t k) { return static_cast<std::size_t>(am.table[i][k]); };
  return std::pair(detail::cone_tuple(m, codes, c->apex, roots, act), roots[0]);
}

/// The regular tuple and its right-multiplication partner.
inline std::optional<CommutingPair> no60_pair(std::shared_ptr<const Cfpo> mp) {
  auto g = regular_tuple(*mp);
  if (!g) return std::nullopt;
  A5Tuple h = build_no60_counterexample(*mp, g->first, g->second);
  return CommutingPair{"no60", mp, std::move(g->first), std::move(h), g->second};
}

/// Every engineered pair the instance admits.
inline std::vector<CommutingPair> engineered_pairs(std::shared_ptr<const Cfpo> mp) {
  std::vector<CommutingPair> out;
  for (auto make : {nested_pair, disjoint_pair, split30_pair, no60_pair})
    if (auto p = make(mp)) out.push_back(std::move(*p));
  return out;
}

/// Two star-5 clusters joined by a 3-edge chain: 5 leaves below point 0,
/// 5 leaves above point 3.
inline CfpoInstance two_stars_instance() {
  CfpoInstance m;
  m.name = "two-stars";
  m.point_count = 14;
  m.edges = {{0, 1}, {1, 2}, {2, 3}};
  for (Point l = 4; l < 9; ++l) m.edges.emplace_back(l, 0);
  for (Point l = 9; l < 14; ++l) m.edges.emplace_back(3, l);
  return m;
}

/// The fixtures of the commuting-pair properties: the nested pair on
/// alt:6,6,2, the disjoint pair on two-stars, the 30-split on star:30,0 and
/// the no-60 pair on star:60,0.
inline std::vector<CommutingPair> standard_pairs() {
  auto make = [](CfpoInstance inst, std::optional<CommutingPair> (*build)(std::shared_ptr<const Cfpo>)) {
    auto p = build(std::make_shared<const Cfpo>(std::move(inst)));
    if (!p) throw error("fixture construction failed");
    return std::move(*p);
  };
  return {make(generate("alt:6,6,2"), nested_pair), make(two_stars_instance(), disjoint_pair),
          make(generate("star:30,0"), split30_pair), make(generate("star:60,0"), no60_pair)};
}

// ---------------------------------------------------------------------------
// Properties of commuting pairs

struct PropertyOutcome {
  bool applicable = false;
  bool holds = true;
  std::string detail;
};

struct PairProperties {
  PropertyOutcome nocancellingorbits;  // supp(g) ∪ supp(h) ⊆ supp(g * h)
  PropertyOutcome noflipping;          // ECCs of g and h nested or disjoint
  PropertyOutcome longorbits;          // an orbit of 20 and one of another length inside supp(g) ∩ supp(h)
  std::vector<std::size_t> product_orbits;  // nontrivial orbit lengths of g * h
};

/// Evaluates the three properties from generator pairs of two commuting
/// subgroups. The product of commuting A5 tuples is again an A5 tuple (its
/// kernel is normal and cannot be all of A5), generated by g_a h_a, g_b h_b.
inline PairProperties pair_properties(const Cfpo& m, const Perm& ga, const Perm& gb, const Perm& ha, const Perm& hb) {
  PairProperties out;
  const std::vector<Perm> g{ga, gb}, h{ha, hb}, f{compose(ga, ha), compose(gb, hb)};
  const PointSet sg = support_tuple(g), sh = support_tuple(h), sf = support_tuple(f);
  auto nontrivial = [&](const std::vector<Perm>& gens) {
    std::vector<PointSet> o;
    for (auto& x : orbits(gens, m.size()))
      if (x.size() > 1) o.push_back(std::move(x));
    return o;
  };
  const auto of = nontrivial(f);
  for (const auto& o : of) out.product_orbits.push_back(o.size());
  std::sort(out.product_orbits.begin(), out.product_orbits.end());

  out.nocancellingorbits.applicable = true;
  for (const PointSet* s : {&sg, &sh})
    for (Point x : *s)
      if (out.nocancellingorbits.holds && !std::binary_search(sf.begin(), sf.end(), x)) {
        out.nocancellingorbits.holds = false;
        out.nocancellingorbits.detail = "point " + std::to_string(x) + " is moved by a factor but fixed by the product";
      }

  PointSet both;
  std::set_intersection(sg.begin(), sg.end(), sh.begin(), sh.end(), std::back_inserter(both));
  if (both.empty()) return out;

  out.noflipping.applicable = true;
  auto parts = [&](const PointSet& s, const std::vector<Perm>& gens) {
    std::vector<PointSet> r;
    for (const auto& e : extended_components(m, s, nontrivial(gens)).components) {
      PointSet p;
      std::set_intersection(e.members.begin(), e.members.end(), s.begin(), s.end(), std::back_inserter(p));
      r.push_back(std::move(p));
    }
    return r;
  };
  const auto eg = parts(sg, g), eh = parts(sh, h);
  for (const auto& a : eg)
    for (const auto& b : eh) {
      if (!out.noflipping.holds || !semantic::meets(a, b)) continue;
      if (std::includes(a.begin(), a.end(), b.begin(), b.end()) || std::includes(b.begin(), b.end(), a.begin(), a.end()))
        continue;
      out.noflipping.holds = false;
      out.noflipping.detail = "components of sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size()) +
                              " overlap without nesting";
    }

  out.longorbits.applicable = true;
  bool twenty = false, other = false;
  for (const auto& o : of) {
    if (!std::includes(both.begin(), both.end(), o.begin(), o.end())) continue;
    (o.size() == 20 ? twenty : other) = true;
  }
  out.longorbits.holds = twenty && other;
  if (!out.longorbits.holds) {
    std::string lens;
    for (auto l : out.product_orbits) lens += (lens.empty() ? "" : ",") + std::to_string(l);
    out.longorbits.detail = std::string(twenty ? "" : "no orbit of length 20") + (twenty || other ? "" : " and ") +
                            (other ? "" : "no other nontrivial orbit") + " inside the intersection; product orbits {" +
                            lens + "}";
  }
  return out;
}

inline PairProperties pair_properties(const CommutingPair& p) {
  return pair_properties(*p.instance, p.g[A5Model::a], p.g[A5Model::b], p.h[A5Model::a], p.h[A5Model::b]);
}

}  // namespace cfpo
