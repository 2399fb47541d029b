// Permutations of a point set stored as image arrays.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "instance.hpp"

namespace cfpo {

struct Perm {
  std::vector<Point> images;

  Perm() = default;
  explicit Perm(std::vector<Point> img) : images(std::move(img)) {}

  std::size_t size() const { return images.size(); }
  Point operator()(Point p) const { return images[p]; }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images <=> b.images; }
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

inline Perm identity_perm(std::size_t n) {
  Perm p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), Point{0});
  return p;
}

inline bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.images[i] != i) return false;
  return true;
}

/// True iff the images form a bijection of 0..n-1.
inline bool is_bijection(const Perm& p) {
  std::vector<bool> hit(p.size(), false);
  for (Point x : p.images) {
    if (x >= p.size() || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

namespace detail {
inline void same_domain(const Perm& a, const Perm& b) {
  if (a.size() != b.size())
    throw error("mismatched point sets (" + std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}
}  // namespace detail

/// compose(a, b)(x) = a(b(x)): b is applied first.
inline Perm compose(const Perm& a, const Perm& b) {
  detail::same_domain(a, b);
  Perm r;
  r.images.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.images[i] = a.images[b.images[i]];
  return r;
}

inline Perm inverse(const Perm& a) {
  Perm r;
  r.images.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.images[a.images[i]] = static_cast<Point>(i);
  return r;
}

/// phi p phi^-1
inline Perm conjugate(const Perm& p, const Perm& phi) {
  detail::same_domain(p, phi);
  Perm r;
  r.images.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r.images[phi.images[i]] = phi.images[p.images[i]];
  return r;
}

inline bool commute(const Perm& a, const Perm& b) {
  detail::same_domain(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.images[b.images[i]] != b.images[a.images[i]]) return false;
  return true;
}

inline std::size_t perm_order(const Perm& p) {
  std::size_t ord = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p.images[j]) seen[j] = true, ++len;
    ord = std::lcm(ord, len);
  }
  return ord;
}

inline PointSet support(const Perm& p) {
  PointSet s;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.images[i] != i) s.push_back(static_cast<Point>(i));
  return s;
}

template <class Range>
PointSet support_tuple(const Range& perms) {
  std::vector<bool> moved;
  for (const Perm& p : perms) {
    moved.resize(std::max(moved.size(), p.size()), false);
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p.images[i] != i) moved[i] = true;
  }
  PointSet s;
  for (std::size_t i = 0; i < moved.size(); ++i)
    if (moved[i]) s.push_back(static_cast<Point>(i));
  return s;
}

inline PointSet image_of(const Perm& p, const PointSet& xs) {
  PointSet out;
  out.reserve(xs.size());
  for (Point x : xs) out.push_back(p.images.at(x));
  std::sort(out.begin(), out.end());
  return out;
}

/// Orbit partition of the group generated by `perms` on 0..n-1, each orbit
/// sorted, orbits ordered by least member.
template <class Range>
std::vector<PointSet> orbits(const Range& perms, std::size_t n) {
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Perm& p : perms) {
    if (p.size() != n) throw error("orbits: permutation on wrong point set");
    for (std::size_t i = 0; i < n; ++i) {
      Point a = find(static_cast<Point>(i)), b = find(p.images[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<PointSet> out;
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (Point i = 0; i < n; ++i) {
    Point r = find(i);
    if (slot[r] == SIZE_MAX) slot[r] = out.size(), out.emplace_back();
    out[slot[r]].push_back(i);
  }
  return out;
}

/// Bijection that preserves every edge and its orientation.
inline bool is_automorphism(const Perm& p, const Cfpo& m) {
  if (p.size() != m.size() || !is_bijection(p)) return false;
  for (const auto& [lo, hi] : m.edges())
    if (!m.has_edge(p.images[lo], p.images[hi])) return false;
  return true;
}

inline bool preserves_setwise(const Perm& p, const PointSet& xs) {
  for (Point x : xs)
    if (!std::binary_search(xs.begin(), xs.end(), p.images.at(x))) return false;
  return true;
}

/// p on X, identity elsewhere. Throws when X is not preserved or the
/// result is not an automorphism of m.
inline Perm restrict(const Perm& p, const PointSet& xs, const Cfpo& m) {
  if (!preserves_setwise(p, xs)) throw error("restrict: set is not preserved by the permutation");
  Perm r = identity_perm(p.size());
  for (Point x : xs) r.images[x] = p.images[x];
  if (!is_automorphism(r, m)) throw error("restrict: result is not an automorphism");
  return r;
}

/// Cycle notation on 0-based ids, e.g. "(0 1)(2 3)"; "()" for the identity.
inline std::string cycle_string(const Perm& p) {
  std::string s;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p.images[i] == i) continue;
    s += '(';
    for (std::size_t j = i; !seen[j]; j = p.images[j]) {
      if (j != i) s += ' ';
      s += std::to_string(j);
      seen[j] = true;
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

}  // namespace cfpo
