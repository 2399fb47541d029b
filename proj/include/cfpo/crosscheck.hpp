// Paired evaluation of the subgroup formulas in both backends, and the
// context object that owns an instance, its group and its census.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "abstract_group.hpp"
#include "automorphism.hpp"
#include "census.hpp"
#include "semantic.hpp"
#include "structural_census.hpp"
#include "syntactic.hpp"

namespace cfpo {

struct Bounds {
  std::uint64_t group_order = 1'000'000;  // enumerate Aut(M) up to this order
  std::uint64_t census = UINT64_MAX;      // pair budget of the census scan
  std::size_t structural_subgroups = 5000;
  std::size_t n_max = 6;
};

/// Instance, automorphism group, census and both backends.
struct GroupContext {
  std::unique_ptr<Cfpo> instance;
  PermGroup group;
  std::unique_ptr<OracleGroup> oracle;
  Census<ElemId> census;
  Census<Perm> perm_census;
  std::unique_ptr<SyntacticModel> syntactic;  // present when the group was enumerated
  std::unique_ptr<SemanticModel> semantic;

  bool enumerated() const { return oracle != nullptr; }
};

inline std::unique_ptr<GroupContext> make_context(const CfpoInstance& inst, const Bounds& b = {}) {
  auto ctx = std::make_unique<GroupContext>();
  ctx->instance = std::make_unique<Cfpo>(inst);
  ctx->group = automorphism_group(*ctx->instance, b.group_order);
  if (ctx->group.enumerated()) {
    ctx->oracle = std::make_unique<OracleGroup>(*ctx->group.elements);
    ctx->census = find_a5_tuples(*ctx->oracle, b.census);
    ctx->perm_census = to_perm_census(ctx->census, *ctx->group.elements);
    ctx->syntactic = std::make_unique<SyntacticModel>(*ctx->oracle, ctx->census);
  } else {
    ctx->perm_census = structural_census(*ctx->instance, b.structural_subgroups);
  }
  ctx->semantic = std::make_unique<SemanticModel>(*ctx->instance, ctx->perm_census);
  return ctx;
}

struct Verdict {
  std::string formula;
  std::vector<std::size_t> args;  // census subgroup indices
  bool semantic = false;
  std::optional<bool> syntactic;
  bool complete = true;
  std::string witness;

  bool discrepancy() const { return syntactic && *syntactic != semantic; }
};

inline const std::vector<std::string>& crosscheck_formulas() {
  static const std::vector<std::string> f{"Indec", "disj", "subseteq", "subset", "SamePD", "RepPoint", "EqRepPoint"};
  return f;
}

inline std::size_t formula_arity(const std::string& f) {
  if (f == "Indec") return 1;
  if (f == "EqRepPoint") return 4;
  if (f == "disj" || f == "subseteq" || f == "subset" || f == "SamePD" || f == "RepPoint") return 2;
  throw error("unknown formula " + f);
}

namespace detail {

inline std::string describe(const SemanticModel& sem, std::size_t s) {
  const auto& p = sem.profile(s);
  std::ostringstream o;
  o << "s" << s << "{supp=" << p.support.size() << ",eccs=" << p.eccs.components.size() << ",orbit=" << p.max_orbit;
  if (p.attachment) o << ",x=" << *p.attachment;
  if (p.direction) o << "," << to_string(*p.direction);
  o << "}";
  return o.str();
}

template <class Model>
bool evaluate(const Model& m, const std::string& f, const std::vector<std::size_t>& a) {
  if (f == "Indec") return m.indec(a[0]);
  if (f == "disj") return m.disj(a[0], a[1]);
  if (f == "subseteq") return m.subseteq(a[0], a[1]);
  if (f == "subset") return m.subset(a[0], a[1]);
  if (f == "SamePD") return m.same_pd(a[0], a[1]);
  if (f == "RepPoint") return m.rep_point(a[0], a[1]);
  return m.eq_rep_point(a[0], a[1], a[2], a[3]);
}

}  // namespace detail

/// Evaluates one formula in the semantic backend and, when available, the
/// syntactic one.
inline Verdict cross_check(const GroupContext& ctx, const std::string& formula, const std::vector<std::size_t>& args) {
  if (args.size() != formula_arity(formula)) throw error("wrong number of arguments for " + formula);
  for (auto s : args)
    if (s >= ctx.semantic->size()) throw error("subgroup index " + std::to_string(s) + " out of range");
  Verdict v;
  v.formula = formula;
  v.args = args;
  v.semantic = detail::evaluate(*ctx.semantic, formula, args);
  if (ctx.syntactic) {
    v.syntactic = detail::evaluate(*ctx.syntactic, formula, args);
    v.complete = ctx.syntactic->complete();
    if (formula == "Indec" && !*v.syntactic) v.witness = "decomposition " + ctx.syntactic->indec_witness(args[0]);
  } else {
    v.complete = false;
  }
  if (v.witness.empty()) {
    for (auto s : args) v.witness += (v.witness.empty() ? "" : " ") + detail::describe(*ctx.semantic, s);
  }
  return v;
}

struct CrossCheckSummary {
  std::map<std::string, std::size_t> evaluated;
  std::map<std::string, std::size_t> disagreements;
  std::vector<Verdict> discrepancies;  // the first few per formula
  std::size_t subseteq_forall_differs = 0;  // universal vs negated-existential rendering
  std::size_t subseteq_printed_differs = 0; // clause 3 as printed vs the definition
  bool complete = true;

  std::size_t total_disagreements() const {
    std::size_t n = 0;
    for (const auto& [f, k] : disagreements) n += k;
    return n;
  }
};

/// Every formula on every argument tuple of its domain: all subgroups for
/// Indec, disj and inclusion; pairs Indec in both backends for SamePD; pairs
/// that are representing in either backend for EqRepPoint.
inline CrossCheckSummary cross_check_all(const GroupContext& ctx, std::size_t keep_per_formula = 5) {
  if (!ctx.syntactic) throw error("cross-check needs an enumerated automorphism group");
  const auto& sem = *ctx.semantic;
  const auto& syn = *ctx.syntactic;
  CrossCheckSummary out;
  out.complete = syn.complete();
  const std::size_t n = sem.size();
  auto record = [&](const std::string& f, std::vector<std::size_t> args) {
    ++out.evaluated[f];
    const bool a = detail::evaluate(sem, f, args), b = detail::evaluate(syn, f, args);
    if (a == b) return;
    auto& k = out.disagreements[f];
    if (k++ < keep_per_formula) out.discrepancies.push_back(cross_check(ctx, f, args));
  };
  for (const auto& f : crosscheck_formulas()) out.evaluated[f] = 0, out.disagreements[f] = 0;
  std::vector<std::pair<std::size_t, std::size_t>> rep;
  for (std::size_t s = 0; s < n; ++s) {
    record("Indec", {s});
    for (std::size_t t = 0; t < n; ++t) {
      record("disj", {s, t});
      record("subseteq", {s, t});
      record("subset", {s, t});
      if (sem.indec(s) && sem.indec(t) && syn.indec(s) && syn.indec(t)) record("SamePD", {s, t});
      record("RepPoint", {s, t});
      if (sem.rep_point(s, t) || syn.rep_point(s, t)) rep.emplace_back(s, t);
      const auto forms = syn.subseteq_forms(s, t);
      out.subseteq_forall_differs += forms.for_all != forms.not_exists;
      out.subseteq_printed_differs += forms.for_all_printed != forms.not_exists;
    }
  }
  for (auto [a, b] : rep)
    for (auto [c, d] : rep) record("EqRepPoint", {a, b, c, d});
  return out;
}

}  // namespace cfpo
