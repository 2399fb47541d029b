// Ground-truth evaluation of the subgroup predicates from supports, orbits
// and extended components in the concrete instance.

#pragma once

#include <optional>
#include <vector>

#include "a5_tuple.hpp"
#include "census.hpp"
#include "instance.hpp"

namespace cfpo {

namespace semantic {

/// Indec: one extended component and every orbit shorter than 30.
inline bool indec(const TupleProfile& p) { return p.eccs.components.size() == 1 && p.max_orbit < 30; }

inline bool meets(const PointSet& a, const PointSet& b) {
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    *i < *j ? ++i : ++j;
  }
  return false;
}

inline bool disj(const TupleProfile& f, const TupleProfile& g) {
  return indec(f) && indec(g) && !meets(f.support, g.support);
}

inline bool subseteq(const TupleProfile& f, const TupleProfile& g) {
  return indec(f) && indec(g) && meets(f.support, g.support) &&
         std::includes(g.support.begin(), g.support.end(), f.support.begin(), f.support.end());
}

inline bool subset(const TupleProfile& f, const TupleProfile& g) { return subseteq(f, g) && !subseteq(g, f); }

/// Same attachment point and same side of it.
inline bool same_pd(const TupleProfile& f, const TupleProfile& g) {
  return f.attachment && g.attachment && *f.attachment == *g.attachment && f.direction && g.direction &&
         *f.direction == *g.direction;
}

/// A disjoint pair attached at one point from opposite sides.
inline bool rep_point(const TupleProfile& f0, const TupleProfile& f1) {
  return disj(f0, f1) && f0.attachment && f1.attachment && *f0.attachment == *f1.attachment && f0.direction &&
         f1.direction && *f0.direction != *f1.direction;
}

inline bool eq_rep_point(const TupleProfile& f0, const TupleProfile& f1, const TupleProfile& g0,
                         const TupleProfile& g1) {
  return rep_point(f0, f1) && rep_point(g0, g1) && *f0.attachment == *g0.attachment;
}

}  // namespace semantic

/// Semantic predicates over the subgroups of a census. Every predicate is
/// invariant under re-listing, so arguments are subgroup indices.
class SemanticModel {
 public:
  SemanticModel(const Cfpo& m, const Census<Perm>& c) : m_(m), census_(c) {
    for (const auto& s : c.subgroups) profiles_.push_back(profile_of(m, s));
  }

  const Cfpo& instance() const { return m_; }
  const Census<Perm>& census() const { return census_; }
  std::size_t size() const { return profiles_.size(); }
  const TupleProfile& profile(std::size_t s) const { return profiles_.at(s); }

  bool comm(std::size_t s, std::size_t t) const {
    const auto& a = census_.subgroups[s];
    const auto& b = census_.subgroups[t];
    for (auto x : {A5Model::a, A5Model::b})
      for (auto y : {A5Model::a, A5Model::b})
        if (!commute(a.entry(0, x), b.entry(0, y))) return false;
    return true;
  }
  bool indec(std::size_t s) const { return semantic::indec(profile(s)); }
  bool disj(std::size_t s, std::size_t t) const { return semantic::disj(profile(s), profile(t)); }
  bool subseteq(std::size_t s, std::size_t t) const { return semantic::subseteq(profile(s), profile(t)); }
  bool subset(std::size_t s, std::size_t t) const { return semantic::subset(profile(s), profile(t)); }
  bool same_pd(std::size_t s, std::size_t t) const { return semantic::same_pd(profile(s), profile(t)); }
  bool rep_point(std::size_t s, std::size_t t) const { return semantic::rep_point(profile(s), profile(t)); }
  bool eq_rep_point(std::size_t f0, std::size_t f1, std::size_t g0, std::size_t g1) const {
    return semantic::eq_rep_point(profile(f0), profile(f1), profile(g0), profile(g1));
  }
  /// x_f for a representing pair.
  std::optional<Point> represented_point(std::size_t s, std::size_t t) const {
    if (!rep_point(s, t)) return std::nullopt;
    return profile(s).attachment;
  }

 private:
  const Cfpo& m_;
  const Census<Perm>& census_;
  std::vector<TupleProfile> profiles_;
};

}  // namespace cfpo
