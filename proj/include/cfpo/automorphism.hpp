// Automorphism groups of edge-oriented trees.
//
// The tree is rooted at its center, which every automorphism fixes (a
// central edge cannot be flipped because that would reverse its
// orientation). Subtrees are classified by integer canonical labels; the
// group is generated by the transpositions and cycles of isomorphic sibling
// subtrees.

#pragma once

#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "instance.hpp"
#include "perm.hpp"

namespace cfpo {

struct PermGroup {
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::optional<std::uint64_t> order;  // empty when it overflows 64 bits
  double log10_order = 0.0;
  std::optional<std::vector<Perm>> elements;  // sorted; present when enumerated
  bool order_exceeds_bound = false;

  bool enumerated() const { return elements.has_value(); }
};

/// Enumerates the closure of `generators` on `degree` points. Returns
/// nullopt when more than `bound` elements appear.
inline std::optional<std::vector<Perm>> enumerate_closure(const std::vector<Perm>& generators, std::size_t degree,
                                                          std::uint64_t bound) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> out;
  std::deque<Perm> queue;
  Perm id = identity_perm(degree);
  seen.insert(id);
  out.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm cur = std::move(queue.front());
    queue.pop_front();
    for (const Perm& g : generators) {
      Perm nxt = compose(g, cur);
      if (seen.insert(nxt).second) {
        if (out.size() >= bound) return std::nullopt;
        out.push_back(nxt);
        queue.push_back(std::move(nxt));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

struct RootedTree {
  Point root = 0;
  std::vector<Point> parent;
  std::vector<std::vector<Point>> children;  // sorted by (label, id) once labels exist
  std::vector<int> from_parent;              // +1 child above parent, -1 below, 0 root
  std::vector<std::uint32_t> label;
  std::vector<Point> preorder;
};

inline Point tree_center(const Cfpo& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> deg(n);
  std::vector<Point> layer;
  for (Point p = 0; p < n; ++p) {
    deg[p] = m.degree(p);
    if (deg[p] <= 1) layer.push_back(p);
  }
  std::size_t remaining = n;
  std::vector<bool> gone(n, false);
  while (remaining > 2) {
    std::vector<Point> next;
    for (Point p : layer) {
      gone[p] = true;
      --remaining;
      for (Direction d : {Direction::up, Direction::down})
        for (Point q : m.neighbors(p, d))
          if (!gone[q] && --deg[q] == 1) next.push_back(q);
    }
    layer = std::move(next);
  }
  Point best = static_cast<Point>(n);
  for (Point p = 0; p < n; ++p)
    if (!gone[p]) best = std::min(best, p);
  // For a central edge, root at its lower end; both ends are fixed anyway.
  for (Point p = 0; p < n; ++p)
    if (!gone[p] && p != best && m.has_edge(p, best)) return p;
  return best;
}

inline RootedTree root_and_label(const Cfpo& m) {
  const std::size_t n = m.size();
  RootedTree t;
  t.root = tree_center(m);
  t.parent.assign(n, t.root);
  t.children.resize(n);
  t.from_parent.assign(n, 0);
  t.label.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<Point> stack{t.root};
  seen[t.root] = true;
  while (!stack.empty()) {
    Point v = stack.back();
    stack.pop_back();
    t.preorder.push_back(v);
    for (Direction d : {Direction::up, Direction::down})
      for (Point w : m.neighbors(v, d))
        if (!seen[w]) {
          seen[w] = true;
          t.parent[w] = v;
          t.from_parent[w] = d == Direction::up ? 1 : -1;
          t.children[v].push_back(w);
          stack.push_back(w);
        }
  }
  std::map<std::pair<int, std::vector<std::uint32_t>>, std::uint32_t> ids;
  for (auto it = t.preorder.rbegin(); it != t.preorder.rend(); ++it) {
    Point v = *it;
    std::vector<std::uint32_t> key;
    for (Point c : t.children[v]) key.push_back(t.label[c]);
    std::sort(key.begin(), key.end());
    auto [pos, fresh] = ids.try_emplace({t.from_parent[v], std::move(key)}, static_cast<std::uint32_t>(ids.size()));
    t.label[v] = pos->second;
    std::sort(t.children[v].begin(), t.children[v].end(),
              [&](Point a, Point b) { return std::pair(t.label[a], a) < std::pair(t.label[b], b); });
  }
  return t;
}

/// Writes into `p` the canonical isomorphism from the subtree at a onto the subtree at b.
inline void map_subtree(const RootedTree& t, Point a, Point b, Perm& p) {
  std::vector<std::pair<Point, Point>> stack{{a, b}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    p.images[x] = y;
    const auto& cx = t.children[x];
    const auto& cy = t.children[y];
    for (std::size_t i = 0; i < cx.size(); ++i) stack.emplace_back(cx[i], cy[i]);
  }
}

}  // namespace detail

/// Rooted canonical label of every point; equal labels at siblings mean
/// isomorphic subtrees.
inline std::vector<std::uint32_t> subtree_labels(const Cfpo& m) { return detail::root_and_label(m).label; }

inline PermGroup automorphism_group(const Cfpo& m, std::uint64_t bound = 1'000'000) {
  const auto t = detail::root_and_label(m);
  PermGroup g;
  g.degree = m.size();
  std::uint64_t order = 1;
  bool overflow = false;
  for (Point v : t.preorder) {
    const auto& ch = t.children[v];
    for (std::size_t i = 0; i < ch.size();) {
      std::size_t j = i;
      while (j < ch.size() && t.label[ch[j]] == t.label[ch[i]]) ++j;
      const std::size_t k = j - i;
      for (std::size_t f = 2; f <= k; ++f) {
        g.log10_order += std::log10(static_cast<double>(f));
        if (order > UINT64_MAX / f) overflow = true;
        else order *= f;
      }
      if (k >= 2) {
        Perm swap = identity_perm(m.size());
        detail::map_subtree(t, ch[i], ch[i + 1], swap);
        detail::map_subtree(t, ch[i + 1], ch[i], swap);
        g.generators.push_back(std::move(swap));
      }
      if (k >= 3) {
        Perm cyc = identity_perm(m.size());
        for (std::size_t c = i; c < j; ++c) detail::map_subtree(t, ch[c], ch[c + 1 < j ? c + 1 : i], cyc);
        g.generators.push_back(std::move(cyc));
      }
      i = j;
    }
  }
  if (!overflow) g.order = order;
  if (g.order && *g.order <= bound) {
    g.elements = enumerate_closure(g.generators, g.degree, bound);
  } else {
    g.order_exceeds_bound = true;
  }
  return g;
}

}  // namespace cfpo
