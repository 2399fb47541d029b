// 60-tuples of automorphisms indexed by the canonical A5 listing.

#pragma once

#include <algorithm>
#include <functional>
#include <iterator>
#include <numeric>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "a5.hpp"
#include "census.hpp"
#include "instance.hpp"
#include "perm.hpp"

namespace cfpo {

using A5Tuple = std::vector<Perm>;

namespace detail {
inline void check_arity(const A5Tuple& t) {
  if (t.size() != kA5Order) throw error("A5 tuple must have 60 entries, got " + std::to_string(t.size()));
}
inline void check_pair(const A5Tuple& f, const A5Tuple& g) {
  check_arity(f), check_arity(g);
  if (f[0].size() != g[0].size()) throw error("tuples act on different instances");
}
}  // namespace detail

/// All 3600 product equations and the inequations (entries pairwise distinct).
inline bool a5_check(const A5Tuple& t) {
  detail::check_arity(t);
  const A5Model& m = canonical_a5();
  const std::size_t n = t[0].size();
  for (const Perm& p : t)
    if (p.size() != n) return false;
  for (std::size_t i = 0; i < 60; ++i)
    for (std::size_t j = 0; j < 60; ++j) {
      const Perm& k = t[m.table[i][j]];
      for (std::size_t x = 0; x < n; ++x)
        if (t[i].images[t[j].images[x]] != k.images[x]) return false;
    }
  A5Tuple sorted = t;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

/// f(x) = { y : some entry maps x to y }.
inline PointSet tuple_image(const A5Tuple& t, Point x) {
  detail::check_arity(t);
  if (x >= t[0].size()) throw error("unknown point " + std::to_string(x));
  PointSet s;
  for (const Perm& p : t) s.push_back(p.images[x]);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline A5Tuple star(const A5Tuple& f, const A5Tuple& g) {
  detail::check_pair(f, g);
  A5Tuple r(60);
  for (std::size_t i = 0; i < 60; ++i) r[i] = compose(f[i], g[i]);
  return r;
}

/// (phi f_i phi^-1)
inline A5Tuple conj_tuple(const A5Tuple& f, const Perm& phi) {
  detail::check_arity(f);
  A5Tuple r(60);
  for (std::size_t i = 0; i < 60; ++i) r[i] = conjugate(f[i], phi);
  return r;
}

inline A5Tuple lmul(const Perm& phi, const A5Tuple& f) {
  detail::check_arity(f);
  A5Tuple r(60);
  for (std::size_t i = 0; i < 60; ++i) r[i] = compose(phi, f[i]);
  return r;
}

inline A5Tuple rmul(const A5Tuple& f, const Perm& phi) {
  detail::check_arity(f);
  A5Tuple r(60);
  for (std::size_t i = 0; i < 60; ++i) r[i] = compose(f[i], phi);
  return r;
}

inline A5Tuple inverse_entries(const A5Tuple& f) {
  A5Tuple r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = inverse(f[i]);
  return r;
}

/// f_i g_j = g_j f_i for all 3600 pairs.
inline bool comm_tuples(const A5Tuple& f, const A5Tuple& g) {
  detail::check_pair(f, g);
  for (const Perm& a : f)
    for (const Perm& b : g)
      if (!commute(a, b)) return false;
  return true;
}

inline PointSet fixed_points(const A5Tuple& t) {
  detail::check_arity(t);
  const PointSet s = support_tuple(t);
  PointSet out;
  for (Point x = 0; x < t[0].size(); ++x)
    if (!std::binary_search(s.begin(), s.end(), x)) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------------------
// Extended connected components

struct Ecc {
  PointSet members;            // support points plus e when present
  std::optional<Point> e;      // joining point outside the support
  std::vector<Point> boundary; // fixed points adjacent to the support part
  std::size_t component_count = 0;
};

struct EccPartition {
  std::vector<Ecc> components;
  PointSet leftover;  // support points outside every component; empty by construction
};

/// Least fixpoint: support components (tree connectivity) are merged when
/// the action links them, and a class of two or more components also
/// receives the single outside point e through which they are joined.
/// Works from the support and orbit data only.
inline EccPartition extended_components(const Cfpo& m, const PointSet& supp, const std::vector<PointSet>& orbit_list) {
  const std::size_t n = m.size();
  std::vector<bool> in_supp(n, false);
  for (Point x : supp) in_supp[x] = true;
  std::vector<int> comp(n, -1);
  std::vector<PointSet> comps;
  for (Point s : supp) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(comps.size());
    comps.emplace_back();
    std::vector<Point> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      Point v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      for (Direction d : {Direction::up, Direction::down})
        for (Point w : m.neighbors(v, d))
          if (in_supp[w] && comp[w] < 0) comp[w] = id, stack.push_back(w);
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  std::vector<int> cls(comps.size());
  std::iota(cls.begin(), cls.end(), 0);
  std::function<int(int)> find = [&](int c) { return cls[c] == c ? c : cls[c] = find(cls[c]); };
  for (const auto& o : orbit_list) {
    if (o.size() < 2) continue;
    for (Point x : o)
      if (comp[x] >= 0 && comp[o[0]] >= 0) {
        int a = find(comp[x]), b = find(comp[o[0]]);
        if (a != b) cls[std::max(a, b)] = std::min(a, b);
      }
  }
  std::map<int, std::vector<int>> classes;
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) classes[find(c)].push_back(c);
  EccPartition out;
  for (const auto& [root, members] : classes) {
    Ecc e;
    e.component_count = members.size();
    std::set<Point> boundary;
    for (int c : members) {
      e.members.insert(e.members.end(), comps[c].begin(), comps[c].end());
      for (Point v : comps[c])
        for (Direction d : {Direction::up, Direction::down})
          for (Point w : m.neighbors(v, d))
            if (!in_supp[w]) boundary.insert(w);
    }
    e.boundary.assign(boundary.begin(), boundary.end());
    if (members.size() >= 2 && e.boundary.size() == 1) {
      e.e = e.boundary.front();
      e.members.push_back(*e.e);
    }
    std::sort(e.members.begin(), e.members.end());
    out.components.push_back(std::move(e));
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const Ecc& a, const Ecc& b) { return a.members < b.members; });
  return out;
}

inline EccPartition extended_components(const Cfpo& m, const A5Tuple& t) {
  detail::check_arity(t);
  return extended_components(m, support_tuple(t), orbits(t, m.size()));
}

/// Entrywise restriction to X, which must be a union of ECCs of t.
inline A5Tuple restrict_tuple(const Cfpo& m, const A5Tuple& t, const PointSet& x) {
  const PointSet supp = support_tuple(t);
  const auto part = extended_components(m, supp, orbits(t, m.size()));
  PointSet covered;
  for (const Ecc& e : part.components) {
    PointSet sp;
    std::set_intersection(e.members.begin(), e.members.end(), supp.begin(), supp.end(), std::back_inserter(sp));
    const bool all = std::includes(x.begin(), x.end(), sp.begin(), sp.end());
    bool none = true;
    for (Point p : sp)
      if (std::binary_search(x.begin(), x.end(), p)) none = false;
    if (!all && !none) throw error("restrict_tuple: set is not a union of extended components");
    if (all) covered.insert(covered.end(), sp.begin(), sp.end());
  }
  if (covered.empty()) throw error("restrict_tuple: restriction is the identity tuple, not an A5 tuple");
  std::sort(covered.begin(), covered.end());
  A5Tuple r(60);
  for (std::size_t i = 0; i < 60; ++i) r[i] = restrict(t[i], covered, m);
  return r;
}

// ---------------------------------------------------------------------------
// Profiles used by the semantic backend

struct TupleProfile {
  PointSet support;
  std::vector<PointSet> orbits;  // nontrivial orbits only
  EccPartition eccs;
  std::size_t max_orbit = 1;
  std::optional<Point> attachment;      // set when the support has one ECC
  std::optional<Direction> direction;   // side of the attachment the support lies on
};

/// Profile computed from the two generators of a subgroup (support and
/// orbits of a group are those of any generating set).
inline TupleProfile profile_of(const Cfpo& m, const Perm& u, const Perm& v) {
  TupleProfile p;
  const std::vector<Perm> gens{u, v};
  p.support = support_tuple(gens);
  for (auto& o : orbits(gens, m.size()))
    if (o.size() > 1) p.max_orbit = std::max(p.max_orbit, o.size()), p.orbits.push_back(std::move(o));
  p.eccs = extended_components(m, p.support, p.orbits);
  if (p.eccs.components.size() == 1 && p.eccs.components[0].boundary.size() == 1) {
    const Point x = p.eccs.components[0].boundary[0];
    p.attachment = x;
    bool up = false, down = false;
    for (Point y : p.support) up |= m.has_edge(x, y), down |= m.has_edge(y, x);
    if (up != down) p.direction = up ? Direction::up : Direction::down;
  }
  return p;
}

template <class S>
TupleProfile profile_of(const Cfpo& m, const S& subgroup) {
  return profile_of(m, subgroup.entry(0, A5Model::a), subgroup.entry(0, A5Model::b));
}

/// x_f: the single boundary point of an Indec tuple's support.
inline Point attachment_point(const Cfpo& m, const A5Tuple& f) {
  const PointSet supp = support_tuple(f);
  if (supp.size() == m.size()) throw error("attachment_point: support is every point");
  const auto p = profile_of(m, f[A5Model::a], f[A5Model::b]);
  if (p.eccs.components.size() != 1) throw error("attachment_point: support has several extended components");
  if (!p.attachment) throw error("attachment_point: boundary is not a singleton");
  return *p.attachment;
}

}  // namespace cfpo
