// Explicit A5 actions on stars and the two decomposition constructions:
// splitting a 30-orbit into commuting factors and the right-multiplication
// partner of a regular 60-orbit.

#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "a5.hpp"
#include "a5_tuple.hpp"
#include "instance.hpp"
#include "perm.hpp"

namespace cfpo {

using A5Index = A5Model::Index;
using Coset = std::vector<A5Index>;  // sorted set of A5 indices

/// Left cosets xH of a subgroup, ordered by least member.
inline std::vector<Coset> left_cosets(const std::vector<A5Index>& h) {
  const A5Model& m = canonical_a5();
  std::vector<Coset> out;
  std::vector<bool> used(60, false);
  for (A5Index x = 0; x < 60; ++x) {
    if (used[x]) continue;
    Coset c;
    for (A5Index y : h) c.push_back(m.mul(x, y));
    std::sort(c.begin(), c.end());
    for (A5Index y : c) used[y] = true;
    out.push_back(std::move(c));
  }
  return out;
}

inline Coset translate(A5Index g, const Coset& c) {
  const A5Model& m = canonical_a5();
  Coset r;
  for (A5Index y : c) r.push_back(m.mul(g, y));
  std::sort(r.begin(), r.end());
  return r;
}

/// Subgroups used by the constructions: a point stabilizer of the natural
/// action (order 12) and the normalizer of a 5-cycle (order 10).
inline std::vector<A5Index> a5_subgroup_order12() {
  const A5Model& m = canonical_a5();
  std::vector<A5Index> gens;
  for (A5Index i = 0; i < 60; ++i)
    if (m.natural[i][4] == 4) gens.push_back(i);
  return a5_subgroup(m, gens);
}

inline std::vector<A5Index> a5_subgroup_order10() {
  const A5Model& m = canonical_a5();
  // <ab> together with an involution inverting it.
  const A5Index r = m.mul(A5Model::a, A5Model::b);
  for (A5Index s = 0; s < 60; ++s)
    if (m.order[s] == 2 && m.mul(m.mul(s, r), s) == m.inverse[r]) return a5_subgroup(m, {r, s});
  throw error("no dihedral subgroup of order 10");
}

/// Tuple acting on labelled points: point p_k carries label L_k, and entry i
/// sends the point labelled L to the point labelled e_i L. Other points are fixed.
template <class Label, class Act>
A5Tuple labelled_action(std::size_t n, const std::vector<std::pair<Point, Label>>& labelled, Act act) {
  std::map<Label, Point> where;
  for (const auto& [p, l] : labelled) where.emplace(l, p);
  A5Tuple t(60, identity_perm(n));
  for (A5Index i = 0; i < 60; ++i)
    for (const auto& [p, l] : labelled) t[i].images[p] = where.at(act(i, l));
  return t;
}

/// A5 acting on the leaves 1..5 of star(5,0) (or leaves starting at `first`)
/// through the natural representation.
inline A5Tuple natural_action(std::size_t n, Point first = 1) {
  const A5Model& m = canonical_a5();
  A5Tuple t(60, identity_perm(n));
  for (std::size_t i = 0; i < 60; ++i)
    for (Point j = 0; j < 5; ++j) t[i].images[first + j] = first + m.natural[i][j];
  return t;
}

/// Natural action on five arbitrary points, listed in the natural order.
inline A5Tuple natural_action_on(std::size_t n, const std::vector<Point>& pts) {
  const A5Model& m = canonical_a5();
  if (pts.size() != 5) throw error("natural action needs five points");
  A5Tuple t(60, identity_perm(n));
  for (std::size_t i = 0; i < 60; ++i)
    for (std::size_t j = 0; j < 5; ++j) t[i].images[pts[j]] = pts[m.natural[i][j]];
  return t;
}

/// Coset action on A5/H placed on the given points (one per coset, in coset order).
inline A5Tuple coset_action(std::size_t n, const std::vector<A5Index>& h, const std::vector<Point>& pts) {
  const auto cosets = left_cosets(h);
  if (cosets.size() != pts.size()) throw error("coset action: point count does not match the index");
  std::vector<std::pair<Point, Coset>> lab;
  for (std::size_t k = 0; k < pts.size(); ++k) lab.emplace_back(pts[k], cosets[k]);
  return labelled_action(n, lab, [](A5Index i, const Coset& c) { return translate(i, c); });
}

/// Star(60,0) with A5 acting regularly on the leaves: leaf 1+k carries e_k.
inline A5Tuple regular_action_star60() {
  const A5Model& m = canonical_a5();
  A5Tuple t(60, identity_perm(61));
  for (std::size_t i = 0; i < 60; ++i)
    for (std::size_t k = 0; k < 60; ++k) t[i].images[1 + k] = static_cast<Point>(1 + m.table[i][k]);
  return t;
}

/// Star(30,0) with A5 acting diagonally on A5/G x A5/H, |G| = 12, |H| = 10.
/// Leaf 1 + 6a + b carries the pair (a-th G coset, b-th H coset).
inline A5Tuple coset_pair_action_star30() {
  const auto gc = left_cosets(a5_subgroup_order12());
  const auto hc = left_cosets(a5_subgroup_order10());
  std::vector<std::pair<Point, std::pair<Coset, Coset>>> lab;
  for (std::size_t a = 0; a < gc.size(); ++a)
    for (std::size_t b = 0; b < hc.size(); ++b) lab.push_back({static_cast<Point>(1 + 6 * a + b), {gc[a], hc[b]}});
  return labelled_action(31, lab, [](A5Index i, const std::pair<Coset, Coset>& l) {
    return std::pair(translate(i, l.first), translate(i, l.second));
  });
}

namespace detail {

struct ConeClass {
  Point apex;
  std::vector<PointSet> cones;  // each holds exactly one point of the orbit
  std::vector<Point> orbit_point;
};

/// The orbit of x and the cones of the ECC apex holding it. Requires every
/// orbit point to sit in its own cone of a common fixed apex.
inline ConeClass orbit_cones(const Cfpo& m, const A5Tuple& f, Point x, std::size_t want, const char* what) {
  const PointSet orb = tuple_image(f, x);
  if (orb.size() != want) throw error(std::string("no ") + what + "-orbit at point " + std::to_string(x));
  const auto part = extended_components(m, f);
  const Ecc* ecc = nullptr;
  for (const auto& e : part.components)
    if (std::binary_search(e.members.begin(), e.members.end(), x)) ecc = &e;
  if (!ecc || !ecc->e) throw error(std::string(what) + "-orbit is not cone-aligned");
  ConeClass cc;
  cc.apex = *ecc->e;
  for (Point y : orb) {
    Point root = y;
    for (Point r : m.upper_neighbors(cc.apex))
      if (m.on_path(r, cc.apex, y)) root = r;
    for (Point r : m.lower_neighbors(cc.apex))
      if (m.on_path(r, cc.apex, y)) root = r;
    cc.cones.push_back(m.component_without(cc.apex, root));
    cc.orbit_point.push_back(y);
  }
  std::size_t total = 0;
  for (const auto& c : cc.cones) total += c.size();
  if (total + 1 != ecc->members.size()) throw error(std::string(what) + "-orbit is not cone-aligned");
  return cc;
}

}  // namespace detail

/// Splits f = g * h with Comm(g, h) along a 30-orbit at x. The cones of the
/// orbit are labelled (aG, bH); g moves the first coordinate, h the second.
inline std::pair<A5Tuple, A5Tuple> split_orbit_30(const Cfpo& m, const A5Tuple& f, Point x) {
  const A5Model& am = canonical_a5();
  const auto cc = detail::orbit_cones(m, f, x, 30, "30");
  std::vector<A5Index> stab;
  for (A5Index i = 0; i < 60; ++i)
    if (f[i].images[x] == x) stab.push_back(i);
  // An order-12 and an order-10 subgroup through the stabilizer of x; they meet in it.
  auto conj_sub = [&](const std::vector<A5Index>& s, A5Index c) {
    Coset r;
    for (A5Index y : s) r.push_back(am.mul(am.mul(c, y), am.inverse[c]));
    std::sort(r.begin(), r.end());
    return r;
  };
  auto through_stab = [&](const std::vector<A5Index>& base) {
    for (A5Index c = 0; c < 60; ++c) {
      auto s = conj_sub(base, c);
      if (std::includes(s.begin(), s.end(), stab.begin(), stab.end())) return s;
    }
    throw error("30-orbit stabilizer is not contained in the required subgroups");
  };
  const auto G = through_stab(a5_subgroup_order12());
  const auto H = through_stab(a5_subgroup_order10());
  // label of cone k: (e_j G, e_j H) for any j with f_j(x) = orbit_point[k]
  std::map<std::pair<Coset, Coset>, std::size_t> cone_of;
  std::vector<std::pair<Coset, Coset>> label(cc.cones.size());
  std::vector<A5Index> carrier(cc.cones.size());
  for (std::size_t k = 0; k < cc.cones.size(); ++k) {
    for (A5Index j = 0; j < 60; ++j)
      if (f[j].images[x] == cc.orbit_point[k]) carrier[k] = j;
    label[k] = {translate(carrier[k], G), translate(carrier[k], H)};
    cone_of.emplace(label[k], k);
  }
  if (cone_of.size() != 30) throw error("30-orbit labels are not distinct");
  std::map<Point, std::size_t> cone_index;
  for (std::size_t k = 0; k < cc.cones.size(); ++k) cone_index[cc.orbit_point[k]] = k;
  // f_j maps cone k onto cone k' exactly when it maps orbit point k to orbit point k'.
  auto carry = [&](std::size_t from, std::size_t to) {
    for (A5Index j = 0; j < 60; ++j)
      if (f[j].images[cc.orbit_point[from]] == cc.orbit_point[to]) return j;
    throw error("30-orbit: cones are not related by the action");
  };
  A5Tuple g = f, h(60, identity_perm(m.size()));
  for (A5Index i = 0; i < 60; ++i) {
    for (std::size_t k = 0; k < cc.cones.size(); ++k) {
      const std::size_t kg = cone_of.at({translate(i, label[k].first), label[k].second});
      const std::size_t kh = cone_of.at({label[k].first, translate(i, label[k].second)});
      const Perm& fg = f[carry(k, kg)];
      const Perm& fh = f[carry(k, kh)];
      for (Point z : cc.cones[k]) g[i].images[z] = fg.images[z], h[i].images[z] = fh.images[z];
    }
  }
  return {g, h};
}

/// The right-multiplication partner h_i : g ↦ g g_i^-1 of a tuple with a
/// regular 60-orbit. The least point of the orbit is labelled by the identity.
inline A5Tuple build_no60_counterexample(const Cfpo& m, const A5Tuple& g, Point x) {
  const A5Model& am = canonical_a5();
  const auto cc = detail::orbit_cones(m, g, x, 60, "regular 60");
  const Point x0 = *std::min_element(cc.orbit_point.begin(), cc.orbit_point.end());
  std::map<Point, std::size_t> cone_index;
  for (std::size_t k = 0; k < cc.cones.size(); ++k) cone_index[cc.orbit_point[k]] = k;
  // cone labelled by A5 index j holds g_j(x0)
  std::vector<std::size_t> cone_of_label(60);
  for (A5Index j = 0; j < 60; ++j) cone_of_label[j] = cone_index.at(g[j].images[x0]);
  A5Tuple h(60, identity_perm(m.size()));
  for (A5Index i = 0; i < 60; ++i)
    for (A5Index k = 0; k < 60; ++k) {
      const A5Index target = am.mul(k, am.inverse[i]);
      // g_j carries cone k to cone target when e_j e_k = e_target
      const A5Index j = am.mul(target, am.inverse[k]);
      for (Point z : cc.cones[cone_of_label[k]]) h[i].images[z] = g[j].images[z];
    }
  return h;
}

/// The identity-labelled point used by build_no60_counterexample.
inline Point no60_identity_point(const A5Tuple& g, Point x) {
  const PointSet orb = tuple_image(g, x);
  return orb.front();
}

}  // namespace cfpo
