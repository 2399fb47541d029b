// Census of A5 subgroups and their listings.
//
// A listing of a subgroup S ≅ A5 is a generating pair (u, v) with u^2 = v^3 =
// (uv)^5 = 1; entry i of the listing is canonical word i evaluated at (u, v).
// Every such pair determines an isomorphism A5 → S, so each subgroup has
// exactly |Aut(A5)| = 120 listings.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "a5.hpp"
#include "abstract_group.hpp"
#include "perm.hpp"

namespace cfpo {

using Listing = std::array<std::uint8_t, 60>;  // canonical index -> position in `elements`

template <class E>
struct A5Subgroup {
  std::vector<E> elements;         // sorted, 60 entries
  std::vector<Listing> listings;   // sorted by (u, v) positions; listings[0] is the canonical one
  std::array<std::array<std::uint8_t, 60>, 60> table{};  // on positions

  E entry(std::size_t listing, std::size_t i) const { return elements[listings[listing][i]]; }
  std::vector<E> tuple(std::size_t listing) const {
    std::vector<E> t(60);
    for (std::size_t i = 0; i < 60; ++i) t[i] = entry(listing, i);
    return t;
  }
  std::optional<std::size_t> position(const E& x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    if (it == elements.end() || !(*it == x)) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
  }
  bool contains(const E& x) const { return position(x).has_value(); }
  /// Index of the listing whose entries are `t`, if any.
  std::optional<std::size_t> listing_of(const std::vector<E>& t) const {
    auto u = position(t[A5Model::a]), v = position(t[A5Model::b]);
    if (!u || !v) return std::nullopt;
    auto it = std::lower_bound(listings.begin(), listings.end(), std::pair(*u, *v), [](const Listing& l, auto key) {
      return std::pair<std::size_t, std::size_t>(l[A5Model::a], l[A5Model::b]) < key;
    });
    if (it == listings.end() || (*it)[A5Model::a] != *u || (*it)[A5Model::b] != *v) return std::nullopt;
    for (std::size_t i = 0; i < 60; ++i)
      if (!(elements[(*it)[i]] == t[i])) return std::nullopt;
    return static_cast<std::size_t>(it - listings.begin());
  }
};

template <class E>
struct Census {
  std::vector<A5Subgroup<E>> subgroups;
  bool complete = true;
  std::string method;  // "pair-scan" or "structural"
  std::uint64_t scanned_pairs = 0;

  std::size_t listing_count() const {
    std::size_t n = 0;
    for (const auto& s : subgroups) n += s.listings.size();
    return n;
  }
};

namespace detail {

/// Completes a subgroup given its canonical tuple (entries indexed by the
/// canonical listing). Fills elements, table and all 120 listings.
template <class E>
A5Subgroup<E> subgroup_from_tuple(const std::vector<E>& canonical_tuple) {
  const A5Model& m = canonical_a5();
  A5Subgroup<E> s;
  s.elements = canonical_tuple;
  std::sort(s.elements.begin(), s.elements.end());
  if (std::adjacent_find(s.elements.begin(), s.elements.end()) != s.elements.end())
    throw error("tuple entries are not pairwise distinct");
  Listing base{};
  std::array<std::uint8_t, 60> to_canonical{};
  for (std::size_t i = 0; i < 60; ++i) {
    base[i] = static_cast<std::uint8_t>(*s.position(canonical_tuple[i]));
    to_canonical[base[i]] = static_cast<std::uint8_t>(i);
  }
  for (std::size_t x = 0; x < 60; ++x)
    for (std::size_t y = 0; y < 60; ++y) s.table[x][y] = base[m.table[to_canonical[x]][to_canonical[y]]];
  auto order = [&](std::uint8_t x) { return m.order[to_canonical[x]]; };
  for (std::uint8_t u = 0; u < 60; ++u) {
    if (order(u) != 2) continue;
    for (std::uint8_t v = 0; v < 60; ++v) {
      if (order(v) != 3 || order(s.table[u][v]) != 5) continue;
      Listing l{};
      l[0] = base[A5Model::identity];
      for (std::size_t i = 1; i < 60; ++i) l[i] = s.table[l[m.parent[i]]][m.letter[i] ? v : u];
      s.listings.push_back(l);
    }
  }
  std::sort(s.listings.begin(), s.listings.end(), [](const Listing& p, const Listing& q) {
    return std::pair(p[A5Model::a], p[A5Model::b]) < std::pair(q[A5Model::a], q[A5Model::b]);
  });
  if (s.listings.size() != 120) throw error("subgroup has " + std::to_string(s.listings.size()) + " listings, not 120");
  return s;
}

}  // namespace detail

/// Evaluates the canonical words at (u, v) with the supplied multiplication.
template <class E, class Mul>
std::vector<E> evaluate_words(const E& identity, const E& u, const E& v, Mul mul) {
  const A5Model& m = canonical_a5();
  std::vector<E> t(60, identity);
  for (std::size_t i = 1; i < 60; ++i) t[i] = mul(t[m.parent[i]], m.letter[i] ? v : u);
  return t;
}

/// A5 subgroup of permutations from a generating pair satisfying the presentation.
inline A5Subgroup<Perm> perm_subgroup(const Perm& u, const Perm& v) {
  if (perm_order(u) != 2 || perm_order(v) != 3 || perm_order(compose(u, v)) != 5)
    throw error("generators do not satisfy the A5 presentation");
  return detail::subgroup_from_tuple(
      evaluate_words(identity_perm(u.size()), u, v, [](const Perm& x, const Perm& y) { return compose(x, y); }));
}

/// All A5 subgroups of an abstract group by scanning pairs (u of order 2, v
/// of order 3) with |uv| = 5. Pairs lying inside an already-found subgroup
/// are skipped. `pair_budget` caps the scanned pairs; exhausting it marks
/// the census incomplete.
inline Census<ElemId> find_a5_tuples(const AbstractGroup& g, std::uint64_t pair_budget = UINT64_MAX) {
  Census<ElemId> c;
  c.method = "pair-scan";
  const std::size_t n = g.order();
  if (n % 60 != 0) return c;
  std::vector<ElemId> invol, order3;
  for (ElemId x = 0; x < n; ++x) {
    const auto k = g.element_order(x);
    if (k == 2) invol.push_back(x);
    else if (k == 3) order3.push_back(x);
  }
  std::vector<std::vector<std::uint32_t>> member_of(n);
  auto shared = [&](ElemId a, ElemId b) {
    for (auto s : member_of[a])
      if (std::find(member_of[b].begin(), member_of[b].end(), s) != member_of[b].end()) return true;
    return false;
  };
  for (ElemId u : invol) {
    for (ElemId v : order3) {
      if (shared(u, v)) continue;
      if (c.scanned_pairs >= pair_budget) {
        c.complete = false;
        goto done;
      }
      ++c.scanned_pairs;
      if (g.element_order(g.mul(u, v)) != 5) continue;
      auto tuple = evaluate_words(g.identity(), u, v, [&](ElemId x, ElemId y) { return g.mul(x, y); });
      auto s = detail::subgroup_from_tuple(tuple);
      const auto idx = static_cast<std::uint32_t>(c.subgroups.size());
      for (ElemId x : s.elements) member_of[x].push_back(idx);
      c.subgroups.push_back(std::move(s));
    }
  }
done:
  std::sort(c.subgroups.begin(), c.subgroups.end(),
            [](const auto& a, const auto& b) { return a.elements < b.elements; });
  return c;
}

/// Concrete census: subgroups of permutations, translated from an abstract
/// census over the sorted elements of an enumerated group.
inline Census<Perm> to_perm_census(const Census<ElemId>& c, const std::vector<Perm>& sorted_elements) {
  Census<Perm> out;
  out.complete = c.complete;
  out.method = c.method;
  out.scanned_pairs = c.scanned_pairs;
  for (const auto& s : c.subgroups) {
    A5Subgroup<Perm> p;
    for (ElemId x : s.elements) p.elements.push_back(sorted_elements.at(x));
    // Ids are positions in a sorted list, so the order carries over.
    p.listings = s.listings;
    p.table = s.table;
    out.subgroups.push_back(std::move(p));
  }
  return out;
}

}  // namespace cfpo
