// The parameter-pair order formulas (x1 <_n x2 ⇔ y1 < y2) and their finite
// disjunction. <_0 is a lookup into a table of betweenness signatures
// generated by brute force; <_1 and <_n follow the displayed definitions.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "point_formulas.hpp"

namespace cfpo {

/// Equality pattern of four labelled points plus B(a; b, c) for every
/// triple of labels. Labels: 0 = x1, 1 = x2, 2 = y1, 3 = y2.
using Signature = std::uint64_t;

struct Order0Table {
  std::set<Signature> forcing;     // configurations forcing x1 < x2 given y1 < y2
  std::size_t configurations = 0;  // weak orders examined
  std::size_t ambiguous = 0;       // signatures reached with both answers
};

namespace detail {

template <class Eq, class Between>
Signature signature(Eq eq, Between between) {
  Signature s = 0;
  int bit = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) s |= Signature{eq(a, b) ? 1u : 0u} << bit++;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) s |= Signature{between(a, b, c) ? 1u : 0u} << bit++;
  return s;
}

}  // namespace detail

/// Four pairwise comparable points of a tree form a chain, so the
/// configurations are the weak orders of the four labels. A signature is in
/// the table when every weak order producing it, read in the orientation
/// with y1 below y2, puts x1 strictly below x2.
inline const Order0Table& order0_table() {
  static const Order0Table table = [] {
    Order0Table t;
    std::map<Signature, std::pair<bool, bool>> seen;  // (some true, some false)
    std::array<int, 4> pos{};
    for (pos[0] = 0; pos[0] < 4; ++pos[0])
      for (pos[1] = 0; pos[1] < 4; ++pos[1])
        for (pos[2] = 0; pos[2] < 4; ++pos[2])
          for (pos[3] = 0; pos[3] < 4; ++pos[3]) {
            // keep only gap-free rank assignments, one per weak order
            std::set<int> used(pos.begin(), pos.end());
            if (*used.rbegin() != static_cast<int>(used.size()) - 1) continue;
            if (pos[2] == pos[3]) continue;
            ++t.configurations;
            const int dir = pos[2] < pos[3] ? 1 : -1;
            const bool truth = dir * pos[0] < dir * pos[1];
            auto sig = detail::signature([&](int a, int b) { return pos[a] == pos[b]; },
                                         [&](int a, int b, int c) {
                                           return std::min(pos[b], pos[c]) <= pos[a] && pos[a] <= std::max(pos[b], pos[c]);
                                         });
            auto& s = seen[sig];
            (truth ? s.first : s.second) = true;
          }
    for (const auto& [sig, v] : seen) {
      if (v.first && v.second) ++t.ambiguous;
      if (v.first && !v.second) t.forcing.insert(sig);
    }
    return t;
  }();
  return table;
}

struct OrderOptions {
  bool alpha5 = true;
  std::size_t n_max = 6;
};

/// Order formulas with a fixed parameter pair (y1, y2) over the classes of
/// a PointRelations table.
class OrderFormulas {
 public:
  OrderFormulas(const PointRelations& r, std::size_t y1, std::size_t y2, OrderOptions o = {})
      : r_(r), y1_(y1), y2_(y2), opt_(o), n_(r.size()) {
    if (y1 >= n_ || y2 >= n_) throw error("parameter pair out of range");
    if (!r.related(y1, y2)) throw error("parameter pair is not Related");
    levels_.push_back(table([&](std::size_t a, std::size_t b) { return lt0(a, b, y1_, y2_); }));
    if (o.n_max >= 1) levels_.push_back(table([&](std::size_t a, std::size_t b) { return lt1(a, b, y1_, y2_); }));
    for (std::size_t n = 2; n <= o.n_max; ++n) levels_.push_back(next_level(n));
  }

  /// (x1 <_0 x2 ⇔ p1 < p2)
  bool lt0(std::size_t x1, std::size_t x2, std::size_t p1, std::size_t p2) const {
    const std::array<std::size_t, 4> v{x1, x2, p1, p2};
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (!r_.related(v[a], v[b])) return false;
    const auto sig = detail::signature([&](int a, int b) { return v[a] == v[b]; },
                                       [&](int a, int b, int c) { return r_.b(v[a], v[b], v[c]); });
    return order0_table().forcing.count(sig) > 0;
  }

  /// (x1 <_1 x2 ⇔ p1 < p2), with x1 and x2 required to be distinct:
  /// otherwise α2 = B(x; x, p2) holds for every x Related to p2.
  bool lt1(std::size_t x1, std::size_t x2, std::size_t p1, std::size_t p2) const {
    if (x1 == x2) return false;
    if (lt0(x2, x1, p1, p2) || lt0(x1, x2, p1, p2)) return false;
    const bool a1 = r_.b(p2, p1, x2) && r_.related(x1, x2);
    const bool a2 = r_.b(x2, x1, p2);
    const bool a3 = r_.b(p1, x1, p2) && r_.related(x1, x2);
    const bool a4 = r_.b(x1, p1, x2);
    const bool a5 = opt_.alpha5 && r_.related(x1, p2) && r_.related(x2, p1) && !r_.related(x1, p1) &&
                    !r_.related(x2, p2) && r_.related(x1, x2);
    return a1 || a2 || a3 || a4 || a5;
  }

  /// (x1 <_n x2 ⇔ y1 < y2) for n ≤ n_max.
  bool lt(std::size_t x1, std::size_t x2, std::size_t n) const { return levels_.at(n)[x1 * n_ + x2]; }

  /// Least n ≤ n_max with x1 <_n x2.
  std::optional<std::size_t> level(std::size_t x1, std::size_t x2) const {
    for (std::size_t n = 0; n < levels_.size(); ++n)
      if (lt(x1, x2, n)) return n;
    return std::nullopt;
  }
  bool order_iff(std::size_t x1, std::size_t x2) const { return level(x1, x2).has_value(); }

  /// A level is empty only if every later one is, so a nonempty top level
  /// means n_max may be too small.
  bool conclusive() const {
    const auto& top = levels_.back();
    return std::find(top.begin(), top.end(), true) == top.end();
  }
  std::size_t y1() const { return y1_; }
  std::size_t y2() const { return y2_; }

 private:
  template <class F>
  std::vector<bool> table(F f) const {
    std::vector<bool> t(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) t[a * n_ + b] = f(a, b);
    return t;
  }

  std::vector<bool> next_level(std::size_t n) const {
    const auto& prev = levels_[n - 1];
    std::vector<bool> row_any(n_, false), col_any(n_, false), row_low(n_, false), col_low(n_, false);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        if (prev[a * n_ + b]) row_any[a] = true, col_any[b] = true;
        for (std::size_t i = 0; i + 1 < n; ++i)
          if (levels_[i][a * n_ + b]) row_low[a] = true, col_low[b] = true;
      }
    return table([&](std::size_t x1, std::size_t x2) {
      // the order is not yet resolved for x1 or x2
      if (row_low[x1] || col_low[x2]) return false;
      // exactly one of x1, x2 is reached at level n-1
      const bool left = row_any[x1] && !col_any[x2];
      const bool right = col_any[x2] && !row_any[x1];
      if (!left && !right) return false;
      if (!col_any[x2]) {
        bool found = false;
        for (std::size_t w = 0; w < n_ && !found; ++w) found = prev[x1 * n_ + w] && lt1(x1, x2, x1, w);
        if (!found) return false;
      }
      if (!row_any[x1]) {
        bool found = false;
        for (std::size_t w = 0; w < n_ && !found; ++w) found = prev[w * n_ + x2] && lt1(x1, x2, w, x2);
        if (!found) return false;
      }
      return true;
    });
  }

  const PointRelations& r_;
  std::size_t y1_, y2_;
  OrderOptions opt_;
  std::size_t n_;
  std::vector<std::vector<bool>> levels_;
};

}  // namespace cfpo
