// A5 subgroups of Aut(M) read off the tree when the group is too large to
// enumerate: natural actions on five isomorphic cones, the transitive A5
// actions on six isomorphic cones, and a few diagonal products. The result
// is a sub-census and is always flagged incomplete.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "a5.hpp"
#include "census.hpp"
#include "constructions.hpp"
#include "instance.hpp"
#include "perm.hpp"

namespace cfpo {

/// Canonical codes of directed subtrees: code(p, r) describes the component
/// of M - p containing the neighbour r, rooted at r, with edge directions.
class ConeCodes {
 public:
  explicit ConeCodes(const Cfpo& m) : m_(m) {}

  std::uint32_t code(Point parent, Point node) {
    auto key = std::pair(parent, node);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<std::uint32_t> sig{m_.has_edge(parent, node) ? 1u : 0u};
    std::vector<std::uint32_t> kids;
    for (auto [c, up] : children(parent, node)) kids.push_back(2 * code(node, c) + (up ? 1 : 0));
    std::sort(kids.begin(), kids.end());
    sig.insert(sig.end(), kids.begin(), kids.end());
    auto [pos, fresh] = ids_.try_emplace(sig, static_cast<std::uint32_t>(ids_.size()));
    memo_[key] = pos->second;
    return pos->second;
  }

  /// Writes into p the canonical isomorphism from the cone (pa, a) onto (pb, b).
  void map_cone(Point pa, Point a, Point pb, Point b, Perm& p) {
    if (code(pa, a) != code(pb, b)) throw error("map_cone: cones are not isomorphic");
    p.images[a] = b;
    auto ca = sorted_children(pa, a), cb = sorted_children(pb, b);
    for (std::size_t i = 0; i < ca.size(); ++i) map_cone(a, ca[i], b, cb[i], p);
  }

 private:
  std::vector<std::pair<Point, bool>> children(Point parent, Point node) const {
    std::vector<std::pair<Point, bool>> out;
    for (Point c : m_.upper_neighbors(node))
      if (c != parent) out.emplace_back(c, true);
    for (Point c : m_.lower_neighbors(node))
      if (c != parent) out.emplace_back(c, false);
    return out;
  }
  std::vector<Point> sorted_children(Point parent, Point node) {
    std::vector<std::tuple<bool, std::uint32_t, Point>> k;
    for (auto [c, up] : children(parent, node)) k.emplace_back(up, code(node, c), c);
    std::sort(k.begin(), k.end());
    std::vector<Point> out;
    for (auto& t : k) out.push_back(std::get<2>(t));
    return out;
  }

  const Cfpo& m_;
  std::map<std::pair<Point, Point>, std::uint32_t> memo_;
  std::map<std::vector<std::uint32_t>, std::uint32_t> ids_;
};

/// A class of pairwise isomorphic cones at one point and direction.
struct ConeClassInfo {
  Point apex;
  Direction direction;
  std::vector<Point> roots;  // sorted
};

inline std::vector<ConeClassInfo> isomorphic_cone_classes(const Cfpo& m, ConeCodes& codes) {
  std::vector<ConeClassInfo> out;
  for (Point p = 0; p < m.size(); ++p)
    for (Direction d : {Direction::up, Direction::down}) {
      std::map<std::uint32_t, std::vector<Point>> by_code;
      for (Point r : m.neighbors(p, d)) by_code[codes.code(p, r)].push_back(r);
      std::vector<ConeClassInfo> here;
      for (auto& [c, roots] : by_code) {
        std::sort(roots.begin(), roots.end());
        here.push_back({p, d, roots});
      }
      std::sort(here.begin(), here.end(), [](const auto& a, const auto& b) { return a.roots < b.roots; });
      out.insert(out.end(), here.begin(), here.end());
    }
  return out;
}

/// Points carrying at least five pairwise isomorphic cones in each direction.
inline PointSet representable_points(const Cfpo& m) {
  ConeCodes codes(m);
  std::vector<int> flags(m.size(), 0);
  for (const auto& c : isomorphic_cone_classes(m, codes))
    if (c.roots.size() >= 5) flags[c.apex] |= c.direction == Direction::up ? 1 : 2;
  PointSet out;
  for (Point p = 0; p < m.size(); ++p)
    if (flags[p] == 3) out.push_back(p);
  return out;
}

namespace detail {

using PositionAction = std::vector<std::vector<std::uint8_t>>;  // [A5 index][position] -> position

inline PositionAction natural_positions() {
  const A5Model& am = canonical_a5();
  PositionAction a(60, std::vector<std::uint8_t>(5));
  for (std::size_t i = 0; i < 60; ++i)
    for (std::size_t j = 0; j < 5; ++j) a[i][j] = am.natural[i][j];
  return a;
}

/// The six transitive actions of A5 on six positions, as listed actions.
inline const std::vector<PositionAction>& six_point_actions() {
  static const std::vector<PositionAction> all = [] {
    const auto cosets = left_cosets(a5_subgroup_order10());
    PositionAction base(60, std::vector<std::uint8_t>(6));
    for (A5Index i = 0; i < 60; ++i)
      for (std::size_t k = 0; k < 6; ++k) {
        auto t = translate(i, cosets[k]);
        base[i][k] = static_cast<std::uint8_t>(std::find(cosets.begin(), cosets.end(), t) - cosets.begin());
      }
    std::vector<std::uint8_t> pi{0, 1, 2, 3, 4, 5};
    std::set<std::set<std::vector<std::uint8_t>>> seen;
    std::vector<PositionAction> out;
    do {
      std::vector<std::uint8_t> inv(6);
      for (std::uint8_t k = 0; k < 6; ++k) inv[pi[k]] = k;
      PositionAction c(60, std::vector<std::uint8_t>(6));
      for (std::size_t i = 0; i < 60; ++i)
        for (std::size_t k = 0; k < 6; ++k) c[i][k] = pi[base[i][inv[k]]];
      std::set<std::vector<std::uint8_t>> key(c.begin(), c.end());
      if (seen.insert(key).second) out.push_back(std::move(c));
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
  }();
  return all;
}

/// Generator pair of the A5 acting on the cones at `roots` through `act`;
/// cone j is carried to cone act[i][j] by the canonical isomorphisms.
inline std::pair<Perm, Perm> cone_action_generators(const Cfpo& m, ConeCodes& codes, Point apex,
                                                    const std::vector<Point>& roots, const PositionAction& act) {
  std::pair<Perm, Perm> gens{identity_perm(m.size()), identity_perm(m.size())};
  for (auto [idx, out] : {std::pair<std::size_t, Perm*>{A5Model::a, &gens.first}, {A5Model::b, &gens.second}})
    for (std::size_t j = 0; j < roots.size(); ++j) codes.map_cone(apex, roots[j], apex, roots[act[idx][j]], *out);
  return gens;
}

}  // namespace detail

/// Sub-census of Aut(M) built from cone isomorphism classes. Stops after
/// `max_subgroups` subgroups.
inline Census<Perm> structural_census(const Cfpo& m, std::size_t max_subgroups = 5000) {
  Census<Perm> c;
  c.method = "structural";
  c.complete = false;
  ConeCodes codes(m);
  const auto classes = isomorphic_cone_classes(m, codes);
  std::set<std::vector<Perm>> seen;
  auto add = [&](const Perm& u, const Perm& v) {
    if (c.subgroups.size() >= max_subgroups) return;
    auto s = perm_subgroup(u, v);
    if (seen.insert(s.elements).second) c.subgroups.push_back(std::move(s));
  };
  const auto natural = detail::natural_positions();
  // k-subsets of 0..n-1 in lexicographic order, until the cap is reached
  auto each_subset = [&](std::size_t n, std::size_t k, auto fn) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      if (c.subgroups.size() >= max_subgroups) return;
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) s.push_back(i);
      fn(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  };
  std::map<std::pair<Point, Direction>, std::pair<Perm, Perm>> first_natural;
  for (const auto& cls : classes) {
    const std::size_t n = cls.roots.size();
    if (n < 5) continue;
    const std::vector<Point> first(cls.roots.begin(), cls.roots.begin() + 5);
    first_natural.try_emplace({cls.apex, cls.direction},
                              detail::cone_action_generators(m, codes, cls.apex, first, natural));
    each_subset(n, 5, [&](const std::vector<std::size_t>& idx) {
      std::vector<Point> r;
      for (auto i : idx) r.push_back(cls.roots[i]);
      auto g = detail::cone_action_generators(m, codes, cls.apex, r, natural);
      add(g.first, g.second);
    });
    if (n >= 6)
      each_subset(n, 6, [&](const std::vector<std::size_t>& idx) {
        std::vector<Point> r;
        for (auto i : idx) r.push_back(cls.roots[i]);
        for (const auto& act : detail::six_point_actions()) {
          auto g = detail::cone_action_generators(m, codes, cls.apex, r, act);
          add(g.first, g.second);
        }
      });
    if (n >= 10) {
      // two disjoint natural actions in the same listing
      std::vector<Point> r1(cls.roots.begin(), cls.roots.begin() + 5), r2(cls.roots.begin() + 5, cls.roots.begin() + 10);
      auto g1 = detail::cone_action_generators(m, codes, cls.apex, r1, natural);
      auto g2 = detail::cone_action_generators(m, codes, cls.apex, r2, natural);
      add(compose(g1.first, g2.first), compose(g1.second, g2.second));
    }
  }
  // diagonal of the up and down actions at one point
  for (Point p = 0; p < m.size(); ++p) {
    auto up = first_natural.find({p, Direction::up}), down = first_natural.find({p, Direction::down});
    if (up == first_natural.end() || down == first_natural.end()) continue;
    add(compose(up->second.first, down->second.first), compose(up->second.second, down->second.second));
  }
  std::sort(c.subgroups.begin(), c.subgroups.end(), [](const auto& a, const auto& b) { return a.elements < b.elements; });
  return c;
}

}  // namespace cfpo
