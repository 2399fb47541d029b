// Finite cycle-free partial orders realized as edge-oriented trees.
//
// A CfpoInstance is raw data (it may be invalid); a Cfpo is a validated
// instance with the indexes needed for path, order and cone queries.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cfpo {

using Point = std::uint32_t;
using PointSet = std::vector<Point>;  // always sorted, no repeats

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Direction { up, down };

inline Direction opposite(Direction d) { return d == Direction::up ? Direction::down : Direction::up; }
inline const char* to_string(Direction d) { return d == Direction::up ? "up" : "down"; }

/// Edge (lower, upper): a covering pair lower < upper.
using Edge = std::pair<Point, Point>;

struct CfpoInstance {
  std::string name;
  std::size_t point_count = 0;  // points are 0 .. point_count-1
  std::vector<Edge> edges;
};

struct Diagnostic {
  std::string invariant;
  std::string detail;
};

/// Empty iff the instance is a connected, acyclic, edge-oriented tree on
/// dense point ids. Reports the first violated invariant only.
inline std::vector<Diagnostic> validate(const CfpoInstance& m) {
  const std::size_t n = m.point_count;
  if (n == 0) return {{"nonempty", "instance has no points"}};
  std::vector<std::pair<Point, Point>> undirected;
  for (const auto& [lo, hi] : m.edges) {
    if (lo >= n || hi >= n)
      return {{"known-endpoints", "edge (" + std::to_string(lo) + "," + std::to_string(hi) + ") names an unknown point"}};
    if (lo == hi) return {{"no-self-loops", "self-loop at " + std::to_string(lo)}};
    undirected.emplace_back(std::min(lo, hi), std::max(lo, hi));
  }
  std::sort(undirected.begin(), undirected.end());
  for (std::size_t i = 1; i < undirected.size(); ++i)
    if (undirected[i] == undirected[i - 1])
      return {{"no-multi-edges", "multi-edge between " + std::to_string(undirected[i].first) + " and " +
                                     std::to_string(undirected[i].second)}};

  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : undirected) {
    Point ra = find(a), rb = find(b);
    if (ra == rb)
      return {{"cycle-free", "undirected cycle closed by edge " + std::to_string(a) + "-" + std::to_string(b)}};
    parent[ra] = rb;
  }
  for (Point p = 1; p < n; ++p)
    if (find(p) != find(0))
      return {{"connected", "point " + std::to_string(p) + " is not connected to point 0"}};
  return {};
}

enum class Turn { pass_up, pass_down, local_max, local_min };

inline const char* to_string(Turn t) {
  switch (t) {
    case Turn::pass_up: return "pass-through-up";
    case Turn::pass_down: return "pass-through-down";
    case Turn::local_max: return "local-max";
    case Turn::local_min: return "local-min";
  }
  return "?";
}

struct PathResult {
  std::vector<Point> sequence;
  std::vector<Turn> turns;  // turns[i] tags sequence[i+1]; size = max(0, |sequence|-2)

  bool contains(Point p) const { return std::find(sequence.begin(), sequence.end(), p) != sequence.end(); }
};

struct Cone {
  Point apex;
  Direction direction;
  Point root;  // the neighbor of apex inside the cone
  PointSet members;
};

/// Validated tree with O(depth) path queries.
class Cfpo {
 public:
  explicit Cfpo(CfpoInstance inst) : inst_(std::move(inst)) {
    if (auto d = validate(inst_); !d.empty()) throw error("invalid CFPO: " + d.front().invariant + ": " + d.front().detail);
    const std::size_t n = inst_.point_count;
    up_.resize(n);
    down_.resize(n);
    for (const auto& [lo, hi] : inst_.edges) {
      up_[lo].push_back(hi);
      down_[hi].push_back(lo);
    }
    for (auto& v : up_) std::sort(v.begin(), v.end());
    for (auto& v : down_) std::sort(v.begin(), v.end());
    parent_.assign(n, 0);
    depth_.assign(n, 0);
    parent_is_up_.assign(n, false);
    std::vector<Point> stack{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!stack.empty()) {
      Point v = stack.back();
      stack.pop_back();
      for (Point w : up_[v])
        if (!seen[w]) {
          seen[w] = true, parent_[w] = v, depth_[w] = depth_[v] + 1, parent_is_up_[w] = false;
          stack.push_back(w);
        }
      for (Point w : down_[v])
        if (!seen[w]) {
          seen[w] = true, parent_[w] = v, depth_[w] = depth_[v] + 1, parent_is_up_[w] = true;
          stack.push_back(w);
        }
    }
  }

  const CfpoInstance& instance() const { return inst_; }
  const std::string& name() const { return inst_.name; }
  std::size_t size() const { return inst_.point_count; }
  const std::vector<Edge>& edges() const { return inst_.edges; }
  const std::vector<Point>& upper_neighbors(Point p) const { return up_.at(check(p)); }
  const std::vector<Point>& lower_neighbors(Point p) const { return down_.at(check(p)); }
  const std::vector<Point>& neighbors(Point p, Direction d) const {
    return d == Direction::up ? upper_neighbors(p) : lower_neighbors(p);
  }
  std::size_t degree(Point p) const { return up_.at(check(p)).size() + down_[p].size(); }

  bool has_edge(Point lower, Point upper) const {
    if (lower >= size() || upper >= size()) return false;
    return std::binary_search(up_[lower].begin(), up_[lower].end(), upper);
  }

  /// The unique tree path, with turn tags for the interior points.
  PathResult path(Point x, Point y) const {
    check(x), check(y);
    std::vector<Point> from_x, from_y;
    Point a = x, b = y;
    while (depth_[a] > depth_[b]) from_x.push_back(a), a = parent_[a];
    while (depth_[b] > depth_[a]) from_y.push_back(b), b = parent_[b];
    while (a != b) {
      from_x.push_back(a), a = parent_[a];
      from_y.push_back(b), b = parent_[b];
    }
    PathResult r;
    r.sequence = std::move(from_x);
    r.sequence.push_back(a);
    r.sequence.insert(r.sequence.end(), from_y.rbegin(), from_y.rend());
    for (std::size_t i = 1; i + 1 < r.sequence.size(); ++i) {
      const Point prev = r.sequence[i - 1], cur = r.sequence[i], next = r.sequence[i + 1];
      const bool from_below = has_edge(prev, cur);
      const bool to_above = has_edge(cur, next);
      if (from_below && to_above) r.turns.push_back(Turn::pass_up);
      else if (!from_below && !to_above) r.turns.push_back(Turn::pass_down);
      else if (from_below) r.turns.push_back(Turn::local_max);
      else r.turns.push_back(Turn::local_min);
    }
    return r;
  }

  std::size_t distance(Point x, Point y) const { return path(x, y).sequence.size() - 1; }

  bool on_path(Point z, Point x, Point y) const {
    const std::size_t l = lca(x, y);
    if (lca(z, l) != l) return false;
    return lca(z, x) == z || lca(z, y) == z;
  }

  bool order_leq(Point x, Point y) const {
    const auto p = path(x, y);
    for (std::size_t i = 0; i + 1 < p.sequence.size(); ++i)
      if (!has_edge(p.sequence[i], p.sequence[i + 1])) return false;
    return true;
  }
  bool order_less(Point x, Point y) const { return x != y && order_leq(x, y); }
  bool comparable(Point x, Point y) const { return order_leq(x, y) || order_leq(y, x); }

  /// z on the path from x to y and x, y, z pairwise comparable.
  bool betweenness(Point z, Point x, Point y) const {
    return on_path(z, x, y) && comparable(x, y) && comparable(x, z) && comparable(y, z);
  }

  /// The component of the tree minus `apex` containing neighbor `root`.
  PointSet component_without(Point apex, Point root) const {
    PointSet out;
    std::vector<Point> stack{root};
    std::vector<bool> seen(size(), false);
    seen[apex] = seen[root] = true;
    while (!stack.empty()) {
      Point v = stack.back();
      stack.pop_back();
      out.push_back(v);
      for (const auto* nb : {&up_[v], &down_[v]})
        for (Point w : *nb)
          if (!seen[w]) seen[w] = true, stack.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Cone> cones(Point x, Direction d) const {
    std::vector<Cone> out;
    for (Point r : neighbors(x, d)) out.push_back({x, d, r, component_without(x, r)});
    return out;
  }

  std::pair<std::size_t, std::size_t> ramification_orders(Point x) const {
    return {upper_neighbors(x).size(), lower_neighbors(x).size()};
  }

 private:
  Point check(Point p) const {
    if (p >= size()) throw error("unknown point " + std::to_string(p));
    return p;
  }
  Point lca(Point a, Point b) const {
    while (depth_[a] > depth_[b]) a = parent_[a];
    while (depth_[b] > depth_[a]) b = parent_[b];
    while (a != b) a = parent_[a], b = parent_[b];
    return a;
  }

  CfpoInstance inst_;
  std::vector<std::vector<Point>> up_, down_;
  std::vector<Point> parent_;
  std::vector<std::uint32_t> depth_;
  std::vector<bool> parent_is_up_;
};

// ---------------------------------------------------------------------------
// Generators

inline CfpoInstance gen_star(std::size_t n_up, std::size_t n_down) {
  if (n_up + n_down == 0) throw error("gen_star: both counts are zero");
  CfpoInstance m;
  m.name = "star:" + std::to_string(n_up) + "," + std::to_string(n_down);
  m.point_count = 1 + n_up + n_down;
  for (Point i = 0; i < n_up; ++i) m.edges.emplace_back(0, 1 + i);
  for (Point i = 0; i < n_down; ++i) m.edges.emplace_back(static_cast<Point>(1 + n_up + i), 0);
  return m;
}

namespace detail {

struct GrownTree {
  CfpoInstance inst;
  std::vector<std::size_t> distance;  // distance from the base edge
};

inline GrownTree grow_alternating(std::size_t b_up, std::size_t b_down, std::size_t radius) {
  GrownTree t;
  t.inst.point_count = 2;
  t.inst.edges.emplace_back(0, 1);
  t.distance = {0, 0};
  std::vector<std::size_t> n_up{1, 0}, n_down{0, 1};
  for (std::size_t head = 0; head < t.inst.point_count; ++head) {
    if (t.distance[head] >= radius) continue;
    const Point p = static_cast<Point>(head);
    auto add = [&](bool above) {
      const Point q = static_cast<Point>(t.inst.point_count++);
      t.distance.push_back(t.distance[head] + 1);
      n_up.push_back(above ? 0 : 1);
      n_down.push_back(above ? 1 : 0);
      if (above) t.inst.edges.emplace_back(p, q), ++n_up[head];
      else t.inst.edges.emplace_back(q, p), ++n_down[head];
    };
    while (n_up[head] < b_up) add(true);
    while (n_down[head] < b_down) add(false);
  }
  return t;
}

}  // namespace detail

inline CfpoInstance gen_alternating_tree(std::size_t b_up, std::size_t b_down, std::size_t radius) {
  if (b_up == 0 || b_down == 0) throw error("gen_alternating_tree: branching counts must be positive");
  auto t = detail::grow_alternating(b_up, b_down, radius);
  t.inst.name = "alt:" + std::to_string(b_up) + "," + std::to_string(b_down) + "," + std::to_string(radius);
  return std::move(t.inst);
}

/// Every grown point of the alternating tree becomes a monotone chain of
/// chain_len points; lower neighbors attach to the bottom, upper ones to the top.
inline CfpoInstance gen_chain_decorated(std::size_t b_up, std::size_t b_down, std::size_t chain_len,
                                        std::size_t radius) {
  if (chain_len < 3) throw error("gen_chain_decorated: chain_len must be at least 3");
  if (b_up == 0 || b_down == 0) throw error("gen_chain_decorated: branching counts must be positive");
  const auto t = detail::grow_alternating(b_up, b_down, radius);
  CfpoInstance m;
  m.name = "chain-dec:" + std::to_string(b_up) + "," + std::to_string(b_down) + "," + std::to_string(chain_len) + "," +
           std::to_string(radius);
  std::vector<Point> bottom(t.inst.point_count), top(t.inst.point_count);
  for (std::size_t p = 0; p < t.inst.point_count; ++p) {
    const std::size_t len = t.distance[p] < radius ? chain_len : 1;
    bottom[p] = static_cast<Point>(m.point_count);
    for (std::size_t i = 1; i < len; ++i)
      m.edges.emplace_back(static_cast<Point>(m.point_count + i - 1), static_cast<Point>(m.point_count + i));
    m.point_count += len;
    top[p] = static_cast<Point>(m.point_count - 1);
  }
  for (const auto& [lo, hi] : t.inst.edges) m.edges.emplace_back(top[lo], bottom[hi]);
  return m;
}

namespace detail {

inline std::vector<std::size_t> parse_counts(const std::string& s) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    const std::string tok = s.substr(pos, comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw error("malformed count '" + tok + "'");
    out.push_back(std::stoul(tok));
    pos = comma + 1;
  }
  return out;
}

}  // namespace detail

/// "star:5,0", "alt:5,5,2", "chain-dec:5,5,3,2".
inline CfpoInstance generate(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw error("malformed instance spec '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const auto n = detail::parse_counts(spec.substr(colon + 1));
  auto need = [&](std::size_t k) {
    if (n.size() != k) throw error("instance spec '" + spec + "' expects " + std::to_string(k) + " counts");
  };
  if (kind == "star") return need(2), gen_star(n[0], n[1]);
  if (kind == "alt") return need(3), gen_alternating_tree(n[0], n[1], n[2]);
  if (kind == "chain-dec") return need(4), gen_chain_decorated(n[0], n[1], n[2], n[3]);
  throw error("unknown instance kind '" + kind + "'");
}

}  // namespace cfpo
