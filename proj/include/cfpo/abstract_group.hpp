// Groups presented only through multiplication of opaque element ids.

#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <unordered_map>
#include <vector>

#include "instance.hpp"
#include "perm.hpp"

namespace cfpo {

using ElemId = std::uint32_t;

class AbstractGroup {
 public:
  virtual ~AbstractGroup() = default;
  virtual std::size_t order() const = 0;
  virtual ElemId identity() const = 0;
  virtual ElemId mul(ElemId a, ElemId b) const = 0;

  ElemId inverse(ElemId a) const {
    ensure_inverses();
    return inverses_[a];
  }
  ElemId conjugate(ElemId x, ElemId phi) const { return mul(mul(phi, x), inverse(phi)); }
  std::size_t element_order(ElemId a) const {
    std::size_t k = 1;
    for (ElemId p = a; p != identity(); p = mul(p, a)) ++k;
    return k;
  }

 private:
  void ensure_inverses() const {
    if (!inverses_.empty()) return;
    const std::size_t n = order();
    inverses_.assign(n, 0);
    std::vector<bool> done(n, false);
    for (ElemId a = 0; a < n; ++a) {
      if (done[a]) continue;
      // Walk the cyclic subgroup: the inverse of a is a^(k-1).
      ElemId prev = identity();
      for (ElemId p = a; p != identity(); p = mul(p, a)) prev = p;
      inverses_[a] = prev;
      inverses_[prev] = a;
      done[a] = done[prev] = true;
    }
  }
  mutable std::vector<ElemId> inverses_;
};

/// Group read from a Cayley table.
class TableGroup final : public AbstractGroup {
 public:
  /// Checks closure, a two-sided identity, inverses and associativity.
  /// Associativity is checked exhaustively up to `exhaustive_limit` triples,
  /// otherwise on a fixed-seed sample of that many triples.
  explicit TableGroup(std::vector<std::vector<ElemId>> table, std::uint64_t exhaustive_limit = 200'000'000)
      : n_(table.size()) {
    if (n_ == 0) throw error("group table is empty");
    flat_.reserve(n_ * n_);
    for (const auto& row : table) {
      if (row.size() != n_) throw error("group table is not square");
      for (ElemId x : row) {
        if (x >= n_) throw error("group table entry " + std::to_string(x) + " out of range");
        flat_.push_back(x);
      }
    }
    bool found = false;
    for (ElemId e = 0; e < n_ && !found; ++e) {
      bool ok = true;
      for (ElemId a = 0; a < n_ && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
      if (ok) identity_ = e, found = true;
    }
    if (!found) throw error("group table has no identity");
    for (ElemId a = 0; a < n_; ++a) {
      std::vector<bool> seen(n_, false);
      for (ElemId b = 0; b < n_; ++b) {
        if (seen[at(a, b)]) throw error("group table row " + std::to_string(a) + " is not a permutation");
        seen[at(a, b)] = true;
      }
    }
    const std::uint64_t triples = static_cast<std::uint64_t>(n_) * n_ * n_;
    if (triples <= exhaustive_limit) {
      for (ElemId a = 0; a < n_; ++a)
        for (ElemId b = 0; b < n_; ++b)
          for (ElemId c = 0; c < n_; ++c)
            if (at(at(a, b), c) != at(a, at(b, c))) throw error("group table is not associative");
      associativity_exhaustive_ = true;
    } else {
      std::mt19937_64 rng(20260101);
      std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(n_ - 1));
      for (std::uint64_t t = 0; t < exhaustive_limit; ++t) {
        ElemId a = pick(rng), b = pick(rng), c = pick(rng);
        if (at(at(a, b), c) != at(a, at(b, c))) throw error("group table is not associative");
      }
    }
  }

  std::size_t order() const override { return n_; }
  ElemId identity() const override { return identity_; }
  ElemId mul(ElemId a, ElemId b) const override { return at(a, b); }
  bool associativity_exhaustive() const { return associativity_exhaustive_; }

 private:
  ElemId at(ElemId a, ElemId b) const { return flat_[static_cast<std::size_t>(a) * n_ + b]; }
  std::size_t n_;
  std::vector<ElemId> flat_;
  ElemId identity_ = 0;
  bool associativity_exhaustive_ = false;
};

/// Multiplication oracle over an enumerated permutation group. Element ids
/// are positions in the sorted element list; the permutations themselves
/// are not exposed.
class OracleGroup final : public AbstractGroup {
 public:
  explicit OracleGroup(std::vector<Perm> sorted_elements) : elements_(std::move(sorted_elements)) {
    if (elements_.empty()) throw error("oracle group has no elements");
    index_.reserve(elements_.size() * 2);
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<ElemId>(i));
    identity_ = index_.at(identity_perm(elements_.front().size()));
  }

  std::size_t order() const override { return elements_.size(); }
  ElemId identity() const override { return identity_; }
  ElemId mul(ElemId a, ElemId b) const override {
    auto it = index_.find(compose(elements_[a], elements_[b]));
    if (it == index_.end()) throw error("oracle group is not closed under multiplication");
    return it->second;
  }

 private:
  std::vector<Perm> elements_;
  std::unordered_map<Perm, ElemId, PermHash> index_;
  ElemId identity_ = 0;
};

/// Cayley table of an enumerated permutation group, rows and columns in the
/// sorted element order.
inline std::vector<std::vector<ElemId>> cayley_table(const std::vector<Perm>& sorted_elements) {
  OracleGroup g(sorted_elements);
  std::vector<std::vector<ElemId>> t(g.order(), std::vector<ElemId>(g.order()));
  for (ElemId a = 0; a < g.order(); ++a)
    for (ElemId b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
  return t;
}

/// Z_n1 x Z_n2 x ... in mixed-radix element numbering.
inline std::vector<std::vector<ElemId>> abelian_table(const std::vector<std::size_t>& moduli) {
  std::size_t n = 1;
  for (auto m : moduli) n *= m;
  auto digits = [&](ElemId x) {
    std::vector<std::size_t> d;
    for (auto m : moduli) d.push_back(x % m), x /= static_cast<ElemId>(m);
    return d;
  };
  std::vector<std::vector<ElemId>> t(n, std::vector<ElemId>(n));
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = 0; b < n; ++b) {
      auto da = digits(a), db = digits(b);
      ElemId r = 0, scale = 1;
      for (std::size_t i = 0; i < moduli.size(); ++i) {
        r += static_cast<ElemId>((da[i] + db[i]) % moduli[i]) * scale;
        scale *= static_cast<ElemId>(moduli[i]);
      }
      t[a][b] = r;
    }
  return t;
}

}  // namespace cfpo
