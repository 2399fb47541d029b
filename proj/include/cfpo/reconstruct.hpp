// The interpretation pipeline: RepPoint pairs, EqRepPoint classes, B on the
// classes and optionally an order, plus comparison with a concrete instance
// up to isomorphism.

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "abstract_group.hpp"
#include "crosscheck.hpp"
#include "order_formulas.hpp"
#include "point_formulas.hpp"
#include "semantic.hpp"
#include "structural_census.hpp"
#include "syntactic.hpp"

namespace cfpo {

struct ReconstructedStructure {
  std::string mode;  // "abstract" or "semi-abstract"
  std::size_t census_subgroups = 0;
  bool census_complete = true;
  std::vector<PointRep> rep_pairs;
  bool eq_is_equivalence = true;
  std::vector<std::vector<PointRep>> classes;  // sorted, ordered by least member
  std::vector<std::array<std::size_t, 3>> betweenness;  // (z, x, y) with B(z; x, y)
  std::shared_ptr<const PointRelations> relations;
  std::vector<Point> represented;  // semi-abstract only: the point of each class

  // order, when reconstructed
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> order;
  std::string order_mode;
  std::optional<std::pair<std::size_t, std::size_t>> order_parameters;
  bool order_conclusive = true;

  std::size_t size() const { return classes.size(); }
  bool complete() const { return census_complete && order_conclusive; }
};

namespace detail {

/// Groups RepPoint pairs into EqRepPoint classes after checking that the
/// relation is an equivalence on them.
template <class Eq>
void quotient(ReconstructedStructure& r, Eq eq) {
  const std::size_t n = r.rep_pairs.size();
  std::vector<std::vector<bool>> e(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i][j] = eq(r.rep_pairs[i], r.rep_pairs[j]);
  for (std::size_t i = 0; i < n && r.eq_is_equivalence; ++i) {
    if (!e[i][i]) r.eq_is_equivalence = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (e[i][j] != e[j][i]) r.eq_is_equivalence = false;
      // transitive iff related rows coincide
      if (e[i][j] && e[i] != e[j]) r.eq_is_equivalence = false;
    }
  }
  if (!r.eq_is_equivalence) throw error("EqRepPoint is not an equivalence relation on the RepPoint pairs");
  std::vector<bool> done(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::vector<PointRep> cls;
    for (std::size_t j = i; j < n; ++j)
      if (e[i][j]) cls.push_back(r.rep_pairs[j]), done[j] = true;
    r.classes.push_back(std::move(cls));
  }
}

inline void tabulate_betweenness(ReconstructedStructure& r, const PointTemplates& t) {
  r.relations = std::make_shared<PointRelations>(t);
  const std::size_t n = r.size();
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (r.relations->b(z, x, y)) r.betweenness.push_back({z, x, y});
}

}  // namespace detail

/// Pipeline over a syntactic model: RepPoint pairs, EqRepPoint classes and
/// the path templates all come from the group multiplication.
inline ReconstructedStructure reconstruct_betweenness(const SyntacticModel& syn) {
  ReconstructedStructure r;
  r.mode = "abstract";
  r.census_subgroups = syn.size();
  r.census_complete = syn.complete();
  for (std::size_t s = 0; s < syn.size(); ++s)
    for (std::size_t t = 0; t < syn.size(); ++t)
      if (syn.rep_point(s, t)) r.rep_pairs.push_back({s, t});
  detail::quotient(r, [&](PointRep p, PointRep q) { return syn.eq_rep_point(p.first, p.second, q.first, q.second); });
  SyntacticTemplates templates(syn, r.classes);
  detail::tabulate_betweenness(r, templates);
  return r;
}

/// Full pipeline from the multiplication of an abstract group alone.
inline ReconstructedStructure reconstruct_betweenness(const AbstractGroup& g, const Bounds& b = {}) {
  if (g.order() > b.group_order) throw error("group order exceeds the enumeration bound");
  const Census<ElemId> census = find_a5_tuples(g, b.census);
  const SyntacticModel syn(g, census);
  return reconstruct_betweenness(syn);
}

/// Where the semi-abstract pipeline reads Temp1PB and Temp2PB from: the turn
/// tags of paths, or the displayed formulas over the semantic disj.
enum class TemplateSource { paths, formulas };

inline const char* to_string(TemplateSource s) { return s == TemplateSource::paths ? "paths" : "formulas"; }

/// Semi-abstract pipeline over a census of the concrete group: RepPoint and
/// EqRepPoint are read from supports, the templates from `src`.
inline ReconstructedStructure reconstruct_betweenness_semi(const Cfpo& m, const Census<Perm>& census,
                                                           TemplateSource src = TemplateSource::paths) {
  ReconstructedStructure r;
  r.mode = "semi-abstract";
  const SemanticModel sem(m, census);
  r.census_subgroups = census.subgroups.size();
  r.census_complete = census.complete;
  for (std::size_t s = 0; s < sem.size(); ++s)
    for (std::size_t t = 0; t < sem.size(); ++t)
      if (sem.rep_point(s, t)) r.rep_pairs.push_back({s, t});
  detail::quotient(r, [&](PointRep p, PointRep q) { return sem.eq_rep_point(p.first, p.second, q.first, q.second); });
  for (const auto& c : r.classes) r.represented.push_back(*sem.represented_point(c[0].first, c[0].second));
  if (src == TemplateSource::paths) {
    SemanticTemplates templates(m, r.represented);
    detail::tabulate_betweenness(r, templates);
  } else {
    DisjTemplates<SemanticModel> templates(sem, r.classes);
    detail::tabulate_betweenness(r, templates);
  }
  return r;
}

/// The census comes from the action: a pair scan when Aut(M) enumerates
/// within the bound, cone classes otherwise.
inline Census<Perm> concrete_census(const Cfpo& m, const Bounds& b = {}) {
  auto group = automorphism_group(m, b.group_order);
  if (group.enumerated()) {
    OracleGroup og(*group.elements);
    return to_perm_census(find_a5_tuples(og, b.census), *group.elements);
  }
  return structural_census(m, b.structural_subgroups);
}

inline ReconstructedStructure reconstruct_betweenness_semi(const Cfpo& m, const Bounds& b = {},
                                                           TemplateSource src = TemplateSource::paths) {
  return reconstruct_betweenness_semi(m, concrete_census(m, b), src);
}

/// Order from the parameter pair (y1, y2): x1 < x2 iff order_iff holds.
inline void reconstruct_order(ReconstructedStructure& r, std::size_t y1, std::size_t y2, OrderOptions o = {}) {
  OrderFormulas f(*r.relations, y1, y2, o);
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; b < r.size(); ++b)
      if (f.order_iff(a, b)) rel.emplace_back(a, b);
  r.order = std::move(rel);
  r.order_mode = "parameter-pair";
  r.order_parameters = std::pair(y1, y2);
  r.order_conclusive = f.conclusive();
}

/// Order from x ⋖_n y.
inline void reconstruct_order_kn(ReconstructedStructure& r, std::size_t n, LessdotVariant v) {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; b < r.size(); ++b)
      if (r.relations->lessdot(a, b, n, v)) rel.emplace_back(a, b);
  r.order = std::move(rel);
  r.order_mode = std::string("kn:") + std::to_string(n) + ":" + to_string(v);
  r.order_parameters.reset();
  r.order_conclusive = true;
}

/// Strict partial order check of a binary relation on n elements.
inline bool is_strict_partial_order(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& rel) {
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (auto [a, b] : rel) m[a][b] = true;
  for (std::size_t a = 0; a < n; ++a) {
    if (m[a][a]) return false;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (m[a][b] && m[b][c] && !m[a][c]) return false;
  }
  return true;
}

enum class Compare { betweenness, order, order_or_reverse };

struct IsoResult {
  bool ok = false;
  std::vector<Point> mapping;  // class -> point
  bool reversed = false;
  std::string reason;
};

namespace detail {

struct Relations {
  std::size_t n = 0;
  std::vector<bool> ternary;  // [z][x][y]
  std::vector<bool> binary;   // [x][y]
  bool t(std::size_t z, std::size_t x, std::size_t y) const { return ternary[(z * n + x) * n + y]; }
  bool b(std::size_t x, std::size_t y) const { return binary[x * n + y]; }
};

inline std::optional<std::vector<std::size_t>> backtrack_iso(const Relations& a, const Relations& b, bool use_t,
                                                             bool use_b) {
  const std::size_t n = a.n;
  // invariants: per-element counts of each role
  auto inv = [&](const Relations& r, std::size_t x) {
    std::array<std::size_t, 5> c{};
    for (std::size_t p = 0; p < n; ++p) {
      if (use_b) c[0] += r.b(x, p), c[1] += r.b(p, x);
      if (use_t)
        for (std::size_t q = 0; q < n; ++q) c[2] += r.t(x, p, q), c[3] += r.t(p, x, q), c[4] += r.t(p, q, x);
    }
    return c;
  };
  std::vector<std::array<std::size_t, 5>> ia(n), ib(n);
  for (std::size_t i = 0; i < n; ++i) ia[i] = inv(a, i), ib[i] = inv(b, i);
  std::vector<std::size_t> map(n, SIZE_MAX);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t p = 0; p < n; ++p) {
      if (used[p] || ia[i] != ib[p]) continue;
      map[i] = p;
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) {
        if (use_b) ok = a.b(i, j) == b.b(p, map[j]) && a.b(j, i) == b.b(map[j], p);
        if (use_t)
          for (std::size_t k = 0; k <= i && ok; ++k)
            ok = a.t(i, j, k) == b.t(p, map[j], map[k]) && a.t(j, i, k) == b.t(map[j], p, map[k]) &&
                 a.t(j, k, i) == b.t(map[j], map[k], p);
      }
      if (!ok) continue;
      used[p] = true;
      if (go(i + 1)) return true;
      used[p] = false;
    }
    map[i] = SIZE_MAX;
    return false;
  };
  if (!go(0)) return std::nullopt;
  return map;
}

}  // namespace detail

/// Isomorphism search between the reconstruction and the chosen reduct of
/// the instance restricted to its representable points.
inline IsoResult compare_up_to_iso(const ReconstructedStructure& r, const Cfpo& m, Compare which) {
  const PointSet pts = representable_points(m);
  IsoResult out;
  if (pts.size() != r.size()) {
    out.reason = "reconstructed " + std::to_string(r.size()) + " points, instance has " + std::to_string(pts.size()) +
                 " representable points";
    return out;
  }
  const std::size_t n = pts.size();
  const bool use_t = which == Compare::betweenness;
  if (!use_t && !r.order) {
    out.reason = "no order was reconstructed";
    return out;
  }
  detail::Relations a{n, std::vector<bool>(n * n * n), std::vector<bool>(n * n)};
  detail::Relations truth = a;
  for (auto [z, x, y] : r.betweenness) a.ternary[(z * n + x) * n + y] = true;
  if (r.order)
    for (auto [x, y] : *r.order) a.binary[x * n + y] = true;
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x) {
      truth.binary[z * n + x] = m.order_less(pts[z], pts[x]);
      for (std::size_t y = 0; y < n; ++y) truth.ternary[(z * n + x) * n + y] = m.betweenness(pts[z], pts[x], pts[y]);
    }
  auto attempt = [&](const detail::Relations& t, bool reversed) {
    auto map = detail::backtrack_iso(a, t, use_t, !use_t);
    if (!map) return false;
    out.ok = true;
    out.reversed = reversed;
    for (auto i : *map) out.mapping.push_back(pts[i]);
    return true;
  };
  if (attempt(truth, false)) return out;
  if (which == Compare::order_or_reverse) {
    detail::Relations rev = truth;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) rev.binary[x * n + y] = truth.binary[y * n + x];
    if (attempt(rev, true)) return out;
  }
  out.reason = "exhaustive search found no isomorphism";
  return out;
}

}  // namespace cfpo
