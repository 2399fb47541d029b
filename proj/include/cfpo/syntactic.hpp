// Formula evaluation from the multiplication of an abstract group alone.
//
// Quantifiers over A5 tuples range over the census listings. Every formula
// evaluated here is invariant under re-listing its arguments (conjugation by
// phi permutes listings of phi S phi^-1, and a decomposition of one listing
// transports to any other), so the model works with subgroup indices and
// precomputes, for every phi, the subgroup phi S phi^-1 and whether phi
// centralizes S.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abstract_group.hpp"
#include "census.hpp"

namespace cfpo {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }
  std::size_t size() const { return n_; }
  bool operator==(const Bitset& o) const { return w_ == o.w_; }
  /// Some i with this[i] and not other[i].
  bool any_and_not(const Bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return true;
    return false;
  }
  bool intersects_union(const Bitset& a, const Bitset& b) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & (a.w_[k] | b.w_[k])) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// The three readings of the inclusion formula's second and third clauses.
struct SubsetForms {
  bool not_exists = false;       // the definition as stated (negated existentials)
  bool for_all = false;          // universal rendering with the implication corrected
  bool for_all_printed = false;  // universal rendering of clause 3 exactly as printed
};

class SyntacticModel {
 public:
  static constexpr std::uint32_t npos = UINT32_MAX;

  SyntacticModel(const AbstractGroup& g, const Census<ElemId>& c) : g_(g), census_(c), n_(c.subgroups.size()) {
    complete_ = c.complete;
    const std::size_t order = g.order();
    member_of_.resize(order);
    for (std::uint32_t s = 0; s < n_; ++s)
      for (ElemId x : c.subgroups[s].elements) member_of_[x].push_back(s);
    for (std::uint32_t s = 0; s < n_; ++s) gens_.push_back({gen(s, A5Model::a), gen(s, A5Model::b)});
    // commuting pairs
    comm_.assign(n_ * n_, false);
    for (std::size_t s = 0; s < n_; ++s)
      for (std::size_t t = 0; t < n_; ++t) comm_[s * n_ + t] = generators_commute(s, t);
    // conjugates and centralizers
    conj_.assign(order * n_, npos);
    centralizes_.assign(n_, Bitset(order));
    for (ElemId phi = 0; phi < order; ++phi)
      for (std::uint32_t s = 0; s < n_; ++s) {
        const auto [u, v] = gens_[s];
        const ElemId cu = g.conjugate(u, phi), cv = g.conjugate(v, phi);
        if (cu == u && cv == v) centralizes_[s].set(phi);
        conj_[phi * n_ + s] = containing(cu, cv);
        if (conj_[phi * n_ + s] == npos) complete_ = false;
      }
    indec_.resize(n_);
    for (std::size_t s = 0; s < n_; ++s) indec_[s] = compute_indec(s);
    disj_.assign(n_ * n_, false);
    for (std::size_t s = 0; s < n_; ++s)
      for (std::size_t t = 0; t < n_; ++t) disj_[s * n_ + t] = indec(s) && indec(t) && comm_[s * n_ + t];
    moved_disjoint_.assign(n_, Bitset(order));
    for (std::size_t s = 0; s < n_; ++s)
      for (ElemId phi = 0; phi < order; ++phi) {
        const auto c2 = conj_[phi * n_ + s];
        if (c2 != npos && disj(c2, s)) moved_disjoint_[s].set(phi);
      }
    subseteq_.assign(n_ * n_, false);
    for (std::size_t s = 0; s < n_; ++s)
      for (std::size_t t = 0; t < n_; ++t) subseteq_[s * n_ + t] = subseteq_forms(s, t).not_exists;
    below_.assign(n_, Bitset(n_));
    for (std::size_t f = 0; f < n_; ++f)
      for (std::size_t h = 0; h < n_; ++h)
        if (subset(h, f)) below_[f].set(h);
    same_pd_.assign(n_, Bitset(n_));
    for (std::size_t f = 0; f < n_; ++f)
      for (std::size_t h = 0; h < n_; ++h)
        if (below_[f] == below_[h]) same_pd_[f].set(h);
    meets_.assign(n_, Bitset(n_));
    for (std::size_t s = 0; s < n_; ++s)
      for (std::size_t t = 0; t < n_; ++t)
        if (!disj(s, t)) meets_[s].set(t);
  }

  const AbstractGroup& group() const { return g_; }
  const Census<ElemId>& census() const { return census_; }
  std::size_t size() const { return n_; }
  /// False when the census or some conjugate of a census subgroup is missing.
  bool complete() const { return complete_; }

  bool comm(std::size_t s, std::size_t t) const { return comm_[s * n_ + t]; }
  bool indec(std::size_t s) const { return indec_.at(s).value; }
  /// A decomposition witnessing that s is not Indec.
  const std::string& indec_witness(std::size_t s) const { return indec_.at(s).witness; }
  bool disj(std::size_t s, std::size_t t) const { return disj_[s * n_ + t]; }

  SubsetForms subseteq_forms(std::size_t s, std::size_t t) const {
    SubsetForms r;
    const bool base = indec(s) && indec(t) && !disj(s, t);
    if (!base) return r;
    const Bitset& ds = moved_disjoint_[s];
    const Bitset& dt = moved_disjoint_[t];
    const Bitset& cs = centralizes_[s];
    const Bitset& ct = centralizes_[t];
    // negated existentials, word-parallel
    r.not_exists = !dt.any_and_not(ds) && !cs.any_and_not(ct);
    // universal renderings, element by element
    bool clause2 = true, clause3 = true, clause3_printed = true;
    for (ElemId phi = 0; phi < g_.order(); ++phi) {
      if (dt.test(phi) && !ds.test(phi)) clause2 = false;
      if (cs.test(phi) && !ct.test(phi)) clause3 = false;
      if (!ct.test(phi) && !cs.test(phi)) clause3_printed = false;
    }
    r.for_all = clause2 && clause3;
    r.for_all_printed = clause2 && clause3_printed;
    return r;
  }
  bool subseteq(std::size_t s, std::size_t t) const { return subseteq_[s * n_ + t]; }
  bool subset(std::size_t s, std::size_t t) const { return subseteq(s, t) && !subseteq(t, s); }
  bool same_pd(std::size_t f, std::size_t g) const { return same_pd_[f].test(g); }

  bool rep_point(std::size_t f0, std::size_t f1) const {
    if (!disj(f0, f1)) return false;
    for (std::size_t g = 0; g < n_; ++g)
      if (!meets_[g].intersects_union(same_pd_[f0], same_pd_[f1])) return false;
    return true;
  }

  bool eq_rep_point(std::size_t f0, std::size_t f1, std::size_t g0, std::size_t g1) const {
    return rep_point(f0, f1) && rep_point(g0, g1) &&
           ((same_pd(f0, g0) && same_pd(f1, g1)) || (same_pd(f0, g1) && same_pd(f1, g0)));
  }

  /// Index of phi S phi^-1, or npos when it is missing from the census.
  std::uint32_t conjugate_subgroup(std::size_t s, ElemId phi) const { return conj_[phi * n_ + s]; }
  bool centralizes(ElemId phi, std::size_t s) const { return centralizes_[s].test(phi); }

 private:
  struct IndecResult {
    bool value = true;
    std::string witness;
  };

  ElemId gen(std::size_t s, std::size_t i) const { return census_.subgroups[s].entry(0, i); }

  bool generators_commute(std::size_t s, std::size_t t) const {
    for (ElemId x : {gens_[s].first, gens_[s].second})
      for (ElemId y : {gens_[t].first, gens_[t].second})
        if (g_.mul(x, y) != g_.mul(y, x)) return false;
    return true;
  }

  std::uint32_t containing(ElemId u, ElemId v) const {
    for (auto s : member_of_[u])
      for (auto t : member_of_[v])
        if (s == t) return s;
    return npos;
  }

  /// Searches census listings g, h with Comm(g, h) and g * h = f, where f is
  /// listing 0 of s: for each listing g of a subgroup commuting with some
  /// other subgroup H, the entries g_i^-1 f_i must form a listing of H.
  IndecResult compute_indec(std::size_t s) const {
    const auto& S = census_.subgroups[s];
    std::vector<ElemId> f = S.tuple(0);
    for (std::size_t G = 0; G < n_; ++G)
      for (std::size_t H = 0; H < n_; ++H) {
        if (!comm(G, H)) continue;
        const auto& SG = census_.subgroups[G];
        const auto& SH = census_.subgroups[H];
        for (std::size_t l = 0; l < SG.listings.size(); ++l) {
          std::vector<ElemId> h(60);
          bool ok = true;
          for (std::size_t i = 0; i < 60 && ok; ++i) {
            h[i] = g_.mul(g_.inverse(SG.entry(l, i)), f[i]);
            ok = i != A5Model::b || (SH.contains(h[A5Model::a]) && SH.contains(h[A5Model::b]));
          }
          if (!ok) continue;
          if (auto lh = SH.listing_of(h))
            return {false, "s" + std::to_string(G) + "/l" + std::to_string(l) + " * s" + std::to_string(H) + "/l" +
                               std::to_string(*lh)};
        }
      }
    return {};
  }

  const AbstractGroup& g_;
  const Census<ElemId>& census_;
  std::size_t n_;
  bool complete_ = true;
  std::vector<std::vector<std::uint32_t>> member_of_;
  std::vector<std::pair<ElemId, ElemId>> gens_;
  std::vector<bool> comm_;
  std::vector<std::uint32_t> conj_;
  std::vector<Bitset> centralizes_;
  std::vector<IndecResult> indec_;
  std::vector<bool> disj_;
  std::vector<Bitset> moved_disjoint_;
  std::vector<bool> subseteq_;
  std::vector<Bitset> below_;
  std::vector<Bitset> same_pd_;
  std::vector<Bitset> meets_;
};

}  // namespace cfpo
