// Formulas over represented points: the two path-between templates, Related,
// B and the antichain formula x ⋖_n y. Points are EqRepPoint classes; the
// templates come from a backend and everything above them is evaluated
// literally from the templates.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "instance.hpp"
#include "syntactic.hpp"

namespace cfpo {

/// A RepPoint pair of census subgroup indices.
struct PointRep {
  std::size_t first = 0, second = 0;
  auto operator<=>(const PointRep&) const = default;
};

/// Source of the two templates on classes 0..size()-1.
class PointTemplates {
 public:
  virtual ~PointTemplates() = default;
  virtual std::size_t size() const = 0;
  virtual bool temp1(std::size_t g, std::size_t h, std::size_t k) const = 0;
  virtual bool temp2(std::size_t g, std::size_t h, std::size_t k) const = 0;
};

/// Templates read from the instance: temp1 holds when x_g lies on the path
/// from x_h to x_k and is not an interior turning point (endpoints count),
/// temp2 when x_g is an interior local maximum or minimum of that path.
class SemanticTemplates final : public PointTemplates {
 public:
  SemanticTemplates(const Cfpo& m, std::vector<Point> points) : n_(points.size()) {
    t1_.assign(n_ * n_ * n_, false);
    t2_.assign(n_ * n_ * n_, false);
    std::vector<int> where(m.size(), -1);
    for (std::size_t i = 0; i < n_; ++i) where[points[i]] = static_cast<int>(i);
    for (std::size_t h = 0; h < n_; ++h)
      for (std::size_t k = 0; k < n_; ++k) {
        const auto p = m.path(points[h], points[k]);
        for (std::size_t i = 0; i < p.sequence.size(); ++i) {
          const int g = where[p.sequence[i]];
          if (g < 0) continue;
          const bool interior = i > 0 && i + 1 < p.sequence.size();
          const bool turn = interior && (p.turns[i - 1] == Turn::local_max || p.turns[i - 1] == Turn::local_min);
          (turn ? t2_ : t1_)[idx(static_cast<std::size_t>(g), h, k)] = true;
        }
      }
  }
  std::size_t size() const override { return n_; }
  bool temp1(std::size_t g, std::size_t h, std::size_t k) const override { return t1_[idx(g, h, k)]; }
  bool temp2(std::size_t g, std::size_t h, std::size_t k) const override { return t2_[idx(g, h, k)]; }

 private:
  std::size_t idx(std::size_t g, std::size_t h, std::size_t k) const { return (g * n_ + h) * n_ + k; }
  std::size_t n_;
  std::vector<bool> t1_, t2_;
};

/// Templates from the displayed formulas over the census, using only disj
/// of the given backend. h, k and l are represented by their least
/// PointRep; g ranges over every PointRep of its class (the witness of
/// Temp1PB, the configuration of Temp2PB). An endpoint of the path counts
/// as on the path, and the three points of Temp2PB are distinct classes.
template <class Model>
class DisjTemplates final : public PointTemplates {
 public:
  DisjTemplates(const Model& syn, std::vector<std::vector<PointRep>> classes)
      : syn_(syn), classes_(std::move(classes)) {}

  std::size_t size() const override { return classes_.size(); }

  bool temp1(std::size_t g, std::size_t h, std::size_t k) const override {
    return g == h || g == k || temp1_pb(g, rep(h), rep(k));
  }

  bool temp2(std::size_t g, std::size_t h, std::size_t k) const override {
    if (g == h || g == k || h == k) return false;
    for (const PointRep& gr : classes_[g]) {
      std::optional<std::size_t> out = phi(gr, rep(h), rep(k));
      if (!out) continue;
      // every l in the configuration, with supports meeting the outward support of g
      bool all = true;
      for (std::size_t l = 0; l < classes_.size() && all; ++l) {
        if (l == h || l == k) continue;
        const PointRep lr = rep(l);
        if (syn_.disj(lr.first, *out) || syn_.disj(lr.second, *out)) continue;
        if (!phi(lr, rep(h), rep(k))) continue;
        all = temp1(g, l, k) && temp1(g, l, h);
      }
      if (all) return true;
    }
    return false;
  }

  /// Literal Temp1PB(g; h, k) without the endpoint closure.
  bool temp1_pb(std::size_t g, PointRep h, PointRep k) const {
    for (const PointRep& l : classes_[g])
      if (!syn_.disj(l.first, h.first) && !syn_.disj(l.first, h.second) && !syn_.disj(l.second, k.first) &&
          !syn_.disj(l.second, k.second))
        return true;
    return false;
  }

 private:
  PointRep rep(std::size_t c) const { return classes_[c].front(); }

  /// The turning-point configuration: one component of g meets all four
  /// supports of h and k and the other is disjoint from all four. Returns
  /// the disjoint component.
  std::optional<std::size_t> phi(PointRep gr, PointRep hr, PointRep kr) const {
    for (int swap = 0; swap < 2; ++swap) {
      const std::size_t in = swap ? gr.first : gr.second, out = swap ? gr.second : gr.first;
      bool ok = true;
      for (std::size_t s : {hr.first, hr.second, kr.first, kr.second})
        ok = ok && !syn_.disj(s, in) && syn_.disj(s, out);
      if (ok) return out;
    }
    return std::nullopt;
  }

  const Model& syn_;
  std::vector<std::vector<PointRep>> classes_;
};

using SyntacticTemplates = DisjTemplates<SyntacticModel>;

enum class LessdotVariant { as_written, disjunctive };

inline const char* to_string(LessdotVariant v) { return v == LessdotVariant::as_written ? "as-written" : "disjunctive"; }

/// PathBetween, Related and B tabulated from a template source.
class PointRelations {
 public:
  explicit PointRelations(const PointTemplates& t) : n_(t.size()) {
    pb_.assign(n_ * n_ * n_, false);
    t1_.assign(n_ * n_ * n_, false);
    for (std::size_t g = 0; g < n_; ++g)
      for (std::size_t h = 0; h < n_; ++h)
        for (std::size_t k = 0; k < n_; ++k) {
          t1_[idx(g, h, k)] = t.temp1(g, h, k);
          pb_[idx(g, h, k)] = t1_[idx(g, h, k)] || t.temp2(g, h, k);
        }
    rel_.assign(n_ * n_, true);
    for (std::size_t f = 0; f < n_; ++f)
      for (std::size_t g = 0; g < n_; ++g)
        for (std::size_t h = 0; h < n_; ++h)
          if (pb_[idx(h, f, g)] && !t1_[idx(h, f, g)]) rel_[f * n_ + g] = false;
    b_.assign(n_ * n_ * n_, false);
    for (std::size_t h = 0; h < n_; ++h)
      for (std::size_t f = 0; f < n_; ++f)
        for (std::size_t g = 0; g < n_; ++g)
          b_[idx(h, f, g)] = pb_[idx(h, f, g)] && related(f, g) && related(f, h) && related(g, h);
  }

  std::size_t size() const { return n_; }
  bool temp1(std::size_t g, std::size_t h, std::size_t k) const { return t1_[idx(g, h, k)]; }
  bool path_between(std::size_t g, std::size_t h, std::size_t k) const { return pb_[idx(g, h, k)]; }
  /// ∀h (PathBetween(h; f, g) → Temp1PB(h; f, g))
  bool related(std::size_t f, std::size_t g) const { return rel_[f * n_ + g]; }
  /// B(h; f, g) = PathBetween(h; f, g) ∧ Related on all three pairs
  bool b(std::size_t h, std::size_t f, std::size_t g) const { return b_[idx(h, f, g)]; }

  /// x ⋖_n y: Related(x, y) and an antichain x_0..x_n of points related to x
  /// with x on every path between two of them and, per variant, x off the
  /// path from y to x_0 (as written) or to some x_i (disjunctive).
  bool lessdot(std::size_t x, std::size_t y, std::size_t n, LessdotVariant v) const {
    if (!related(x, y)) return false;
    std::vector<std::size_t> cand;
    for (std::size_t c = 0; c < n_; ++c)
      if (related(x, c)) cand.push_back(c);
    std::vector<std::size_t> chosen;
    if (v == LessdotVariant::as_written) {
      for (std::size_t c : cand) {
        if (path_between(x, y, c)) continue;
        chosen = {c};
        if (extend(x, cand, chosen, n + 1, 0, [](const std::vector<std::size_t>&) { return true; })) return true;
      }
      return false;
    }
    return extend(x, cand, chosen, n + 1, 0, [&](const std::vector<std::size_t>& s) {
      for (std::size_t c : s)
        if (!path_between(x, y, c)) return true;
      return false;
    });
  }

 private:
  std::size_t idx(std::size_t g, std::size_t h, std::size_t k) const { return (g * n_ + h) * n_ + k; }

  bool compatible(std::size_t x, std::size_t a, std::size_t b) const {
    return a != b && !related(a, b) && !related(b, a) && path_between(x, a, b) && path_between(x, b, a);
  }

  bool extend(std::size_t x, const std::vector<std::size_t>& cand, std::vector<std::size_t>& chosen, std::size_t want,
              std::size_t from, const std::function<bool(const std::vector<std::size_t>&)>& accept) const {
    if (chosen.size() == want) return accept(chosen);
    for (std::size_t i = from; i < cand.size(); ++i) {
      const std::size_t c = cand[i];
      bool ok = true;
      for (std::size_t d : chosen) ok = ok && compatible(x, c, d);
      if (!ok) continue;
      chosen.push_back(c);
      if (extend(x, cand, chosen, want, i + 1, accept)) return true;
      chosen.pop_back();
    }
    return false;
  }

  std::size_t n_;
  std::vector<bool> pb_, t1_, rel_, b_;
};

}  // namespace cfpo
