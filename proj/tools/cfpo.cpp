// cfpo: generate instances, run lemma suites, reconstruct, cross-check.
// Exit codes: 0 pass, 1 counterexample, 2 inconclusive, 3 usage error.

#include <algorithm>
#include <cctype>
#include <future>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "cfpo/io.hpp"
#include "cfpo/lemmas.hpp"

using namespace cfpo;

namespace {

constexpr int exit_pass = 0, exit_counterexample = 1, exit_inconclusive = 2, exit_usage = 3;

struct RunConfig {
  std::string instance;
  std::string table;
  std::vector<std::string> lemmas;
  std::vector<std::string> formulas;
  std::string backend = "both";
  std::string variant = "as-written";
  std::string alpha5 = "on";
  std::string templates = "paths";
  std::string mode = "auto";
  std::string order = "none";
  std::string out;
  Bounds bounds;
  std::size_t lessdot_n = 5;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

void add_bounds(CLI::App* c, RunConfig& cfg) {
  c->add_option("--bounds.group-order", cfg.bounds.group_order, "enumerate Aut(M) up to this order")
      ->check(CLI::PositiveNumber);
  c->add_option("--bounds.census", cfg.bounds.census, "pair budget of the census scan");
  c->add_option("--bounds.structural", cfg.bounds.structural_subgroups, "cap on structurally built subgroups")
      ->check(CLI::PositiveNumber);
  c->add_option("--n-max", cfg.bounds.n_max, "deepest level of the order formulas");
}

void add_switches(CLI::App* c, RunConfig& cfg) {
  c->add_option("--variant.lessdot", cfg.variant, "reading of the antichain formula")
      ->check(CLI::IsMember({"as-written", "disjunctive"}));
  c->add_option("--lessdot-n", cfg.lessdot_n, "antichain size parameter n")->check(CLI::PositiveNumber);
  c->add_option("--alpha5", cfg.alpha5, "include the fifth disjunct of the level-1 order formula")
      ->check(CLI::IsMember({"on", "off"}));
  c->add_option("--templates", cfg.templates, "template source in semi-abstract mode")
      ->check(CLI::IsMember({"paths", "formulas"}));
}

LemmaOptions lemma_options(const RunConfig& cfg) {
  LemmaOptions o;
  o.bounds = cfg.bounds;
  o.variant = cfg.variant == "disjunctive" ? LessdotVariant::disjunctive : LessdotVariant::as_written;
  o.lessdot_n = cfg.lessdot_n;
  o.alpha5 = cfg.alpha5 == "on";
  o.templates = cfg.templates == "formulas" ? TemplateSource::formulas : TemplateSource::paths;
  return o;
}

void emit(const Json& j, const RunConfig& cfg) {
  if (!cfg.out.empty()) write_json(j, cfg.out);
}

int worst(int a, int b) {
  if (a == exit_counterexample || b == exit_counterexample) return exit_counterexample;
  return std::max(a, b);
}

int cmd_generate(const std::string& spec, const RunConfig& cfg) {
  const CfpoInstance m = generate(spec);
  if (auto d = validate(m); !d.empty()) throw error(d.front().detail);
  std::cout << m.name << ": " << m.point_count << " points, " << m.edges.size() << " edges\n";
  if (cfg.out.empty()) std::cout << to_json(m).dump(2) << "\n";
  emit(to_json(m), cfg);
  return exit_pass;
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<std::string> names;
  for (const auto& l : cfg.lemmas) {
    if (l == "all") {
      const auto all = lemma_names();
      names.insert(names.end(), all.begin(), all.end());
    } else {
      const auto all = lemma_names();
      if (std::find(all.begin(), all.end(), l) == all.end()) throw CLI::ValidationError("--lemma", "unknown lemma '" + l + "'");
      names.push_back(l);
    }
  }
  LemmaWorkspace ws(load_instance(cfg.instance), lemma_options(cfg));
  // shared state is built before the suites run side by side
  if (ws.context().syntactic) ws.crosscheck();
  ws.reconstruction();
  std::vector<LemmaReport> reports(names.size());
  for (std::size_t start = 0; start < names.size(); start += cfg.jobs) {
    std::vector<std::future<LemmaReport>> batch;
    for (std::size_t i = start; i < std::min(names.size(), start + cfg.jobs); ++i)
      batch.push_back(std::async(std::launch::async, [&, i] { return run_lemma(names[i], ws); }));
    for (std::size_t i = 0; i < batch.size(); ++i) reports[start + i] = batch[i].get();
  }
  int code = exit_pass;
  Json all = Json::array();
  for (const auto& r : reports) {
    std::cout << r.lemma << " on " << r.instance << ": " << r.status() << " (checked " << r.checked << ", failures "
              << r.failures << ", inconclusive " << r.inconclusive << ")\n";
    for (const auto& line : r.lines) std::cout << "  " << line << "\n";
    code = worst(code, r.exit_code());
    all.push_back(to_json(r));
  }
  emit(all, cfg);
  return code;
}

int cmd_reconstruct(const RunConfig& cfg) {
  const OrderOptions oo{cfg.alpha5 == "on", cfg.bounds.n_max};
  const auto lo = lemma_options(cfg);
  auto add_order = [&](ReconstructedStructure& r) {
    if (cfg.order == "none" || !r.relations) return;
    if (cfg.order == "lessdot") {
      reconstruct_order_kn(r, cfg.lessdot_n, lo.variant);
      return;
    }
    // the least Related pair of distinct classes, read as y1 < y2
    for (std::size_t a = 0; a < r.size(); ++a)
      for (std::size_t b = a + 1; b < r.size(); ++b)
        if (r.relations->related(a, b)) {
          reconstruct_order(r, a, b, oo);
          return;
        }
  };
  auto print = [](const ReconstructedStructure& r) {
    std::cout << r.mode << " reconstruction: " << r.census_subgroups << " census subgroups"
              << (r.census_complete ? "" : " (partial)") << ", " << r.rep_pairs.size() << " RepPoint pairs, "
              << r.size() << " points\n";
    if (r.order)
      std::cout << "order (" << r.order_mode << "): " << r.order->size() << " pairs"
                << (r.order_conclusive ? "" : ", not conclusive at n_max") << "\n";
  };

  if (!cfg.table.empty()) {
    TableGroup g(load_table(cfg.table));
    ReconstructedStructure r = reconstruct_betweenness(g, cfg.bounds);
    add_order(r);
    print(r);
    emit(to_json(r), cfg);
    return r.complete() ? exit_pass : exit_inconclusive;
  }

  LemmaWorkspace ws(load_instance(cfg.instance), lo);
  const Cfpo& m = ws.instance();
  if (cfg.mode == "abstract" && !ws.context().syntactic) {
    std::cout << "Aut(M) does not enumerate within --bounds.group-order; abstract mode is unavailable\n";
    return exit_inconclusive;
  }
  Reconstruction rec;
  if (cfg.mode == "semi-abstract") {
    rec.structure = reconstruct_betweenness_semi(m, ws.context().perm_census, lo.templates);
    for (Point p : rec.structure.represented) rec.located.push_back(p);
  } else {
    rec = ws.reconstruction();
  }
  add_order(rec.structure);
  print(rec.structure);
  const IsoResult iso = compare_up_to_iso(rec.structure, m, Compare::betweenness);
  std::cout << "betweenness comparison with the representable points: " << (iso.ok ? "isomorphic" : iso.reason)
            << "\n";
  int code = iso.ok ? exit_pass : exit_counterexample;
  Json j = to_json(rec.structure, iso, rec.located);
  if (rec.structure.order) {
    const IsoResult ord = compare_up_to_iso(rec.structure, m, Compare::order_or_reverse);
    std::cout << "order comparison: "
              << (ord.ok ? (ord.reversed ? "isomorphic to the reverse order" : "isomorphic") : ord.reason) << "\n";
    j["order_comparison"] = {{"ok", ord.ok}, {"reversed", ord.reversed}, {"reason", ord.reason}};
    if (!ord.ok) code = exit_counterexample;
  }
  if (code == exit_pass && !rec.structure.complete()) code = exit_inconclusive;
  emit(j, cfg);
  return code;
}

std::string canonical_formula(std::string f) {
  std::string k;
  for (char c : f)
    if (c != '_' && c != '-') k += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const auto& name : crosscheck_formulas()) {
    std::string n;
    for (char c : name) n += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (k == n || k == "supp" + n) return name;
  }
  throw CLI::ValidationError("--formulas", "unknown formula '" + f + "'");
}

int cmd_crosscheck(const RunConfig& cfg) {
  std::vector<std::string> formulas;
  for (const auto& f : cfg.formulas) formulas.push_back(canonical_formula(f));
  if (formulas.empty()) formulas = crosscheck_formulas();
  auto ctx = make_context(load_instance(cfg.instance), cfg.bounds);
  std::cout << "census: " << ctx->perm_census.subgroups.size() << " subgroups by " << ctx->perm_census.method
            << (ctx->perm_census.complete ? ", complete" : ", incomplete") << "\n";
  if (!ctx->syntactic) {
    std::cout << "Aut(M) does not enumerate within the bound; only the semantic backend ran\n";
    return exit_inconclusive;
  }
  const auto s = cross_check_all(*ctx);
  Json verdicts = Json::array(), evaluated = Json::object(), disagreements = Json::object();
  std::size_t bad = 0;
  for (const auto& f : formulas) {
    evaluated[f] = s.evaluated.at(f);
    disagreements[f] = s.disagreements.at(f);
    std::cout << f << ": " << s.evaluated.at(f) << " argument tuples, " << s.disagreements.at(f) << " discrepancies\n";
    bad += s.disagreements.at(f);
    for (const auto& v : s.discrepancies)
      if (v.formula == f) {
        std::cout << "  DISCREPANCY " << f << "(";
        for (std::size_t i = 0; i < v.args.size(); ++i) std::cout << (i ? "," : "") << v.args[i];
        std::cout << ") semantic=" << v.semantic << " syntactic=" << *v.syntactic << " " << v.witness << "\n";
        for (auto& rec : to_json(v, cfg.backend)) verdicts.push_back(rec);
      }
  }
  emit({{"instance", ctx->instance->name()},
        {"census_complete", s.complete},
        {"evaluated", evaluated},
        {"disagreements", disagreements},
        {"discrepancies", verdicts}},
       cfg);
  if (bad) return exit_counterexample;
  return s.complete ? exit_pass : exit_inconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpretation of a cone-transitive CFPO in its automorphism group, at desk scale"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string spec;

  auto* gen = app.add_subcommand("generate", "write an instance file for a generator spec");
  gen->add_option("spec", spec, "star:u,d | alt:r1,r2,k | chain-dec:...")->required();
  gen->add_option("--out", cfg.out, "instance JSON path");

  auto* ver = app.add_subcommand("verify", "run lemma property suites on an instance");
  ver->add_option("--lemma", cfg.lemmas, "lemma label, repeatable, or 'all'")->required()->delimiter(',');
  ver->add_option("--instance", cfg.instance, "generator spec or instance file")->required();
  ver->add_option("--jobs", cfg.jobs, "suites run side by side")->check(CLI::PositiveNumber);
  ver->add_option("--out", cfg.out, "report JSON path");
  add_bounds(ver, cfg);
  add_switches(ver, cfg);

  auto* rec = app.add_subcommand("reconstruct", "recover the points and their betweenness from the group");
  auto* src = rec->add_option_group("input");
  src->add_option("--instance", cfg.instance, "generator spec or instance file");
  src->add_option("--table", cfg.table, "group table JSON {order, table}");
  src->require_option(1);
  rec->add_option("--mode", cfg.mode, "abstract needs an enumerated group")
      ->check(CLI::IsMember({"auto", "abstract", "semi-abstract"}));
  rec->add_option("--order", cfg.order, "also reconstruct the order")
      ->check(CLI::IsMember({"none", "parameters", "lessdot"}));
  rec->add_option("--out", cfg.out, "reconstruction JSON path");
  add_bounds(rec, cfg);
  add_switches(rec, cfg);

  auto* cc = app.add_subcommand("crosscheck", "compare the semantic and syntactic formula backends");
  cc->add_option("--instance", cfg.instance, "generator spec or instance file")->required();
  cc->add_option("--formulas", cfg.formulas, "formula names, default all")->delimiter(',');
  cc->add_option("--backend", cfg.backend, "backends listed in the verdict records")
      ->check(CLI::IsMember({"semantic", "syntactic", "both"}));
  cc->add_option("--out", cfg.out, "verdict JSON path");
  add_bounds(cc, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*gen) return cmd_generate(spec, cfg);
    if (*ver) return cmd_verify(cfg);
    if (*rec) return cmd_reconstruct(cfg);
    return cmd_crosscheck(cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
}
