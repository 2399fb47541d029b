// JSON encodings of instances, permutations, groups, tables, censuses,
// verdicts and reports.

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "abstract_group.hpp"
#include "automorphism.hpp"
#include "census.hpp"
#include "crosscheck.hpp"
#include "instance.hpp"
#include "lemmas.hpp"
#include "reconstruct.hpp"

namespace cfpo {

using Json = nlohmann::ordered_json;

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw error(what + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Instances

inline Json to_json(const CfpoInstance& m) {
  Json pts = Json::array();
  for (Point p = 0; p < m.point_count; ++p) pts.push_back(p);
  auto edges = m.edges;
  std::sort(edges.begin(), edges.end());
  Json e = Json::array();
  for (const auto& [lo, hi] : edges) e.push_back({lo, hi});
  return {{"name", m.name}, {"points", pts}, {"edges", e}};
}

inline CfpoInstance instance_from_json(const Json& j) {
  try {
    CfpoInstance m;
    m.name = j.at("name").get<std::string>();
    auto pts = j.at("points").get<std::vector<std::int64_t>>();
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (pts[i] != static_cast<std::int64_t>(i)) throw error("instance points must be 0 .. n-1 without repeats");
    m.point_count = pts.size();
    for (const auto& e : j.at("edges")) {
      const auto pr = e.get<std::vector<std::int64_t>>();
      if (pr.size() != 2 || pr[0] < 0 || pr[1] < 0) throw error("an edge must be a pair [lower, upper]");
      m.edges.emplace_back(static_cast<Point>(pr[0]), static_cast<Point>(pr[1]));
    }
    if (auto d = validate(m); !d.empty()) throw error("invalid CFPO: " + d.front().invariant + ": " + d.front().detail);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string("malformed instance file: ") + e.what());
  }
}

/// A generator spec such as "alt:5,5,2", or the path of an instance file.
inline CfpoInstance load_instance(const std::string& spec_or_path) {
  if (std::ifstream(spec_or_path).good())
    return instance_from_json(parse_json(read_text(spec_or_path), "instance file"));
  return generate(spec_or_path);
}

// ---------------------------------------------------------------------------
// Permutations, groups and tables

inline Json to_json(const Perm& p) { return {{"images", p.images}}; }

inline Perm perm_from_json(const Json& j) {
  Perm p;
  try {
    p.images = j.at("images").get<std::vector<Point>>();
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string("malformed permutation: ") + e.what());
  }
  if (!is_bijection(p)) throw error("permutation images are not a bijection");
  return p;
}

inline Json to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const Perm& p : g.generators) gens.push_back(to_json(p));
  Json out{{"generators", gens}, {"degree", g.degree}};
  if (g.order) out["order"] = *g.order;
  return out;
}

inline std::vector<Perm> generators_from_json(const Json& j) {
  std::vector<Perm> out;
  try {
    for (const auto& p : j.at("generators")) out.push_back(perm_from_json(p));
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string("malformed group file: ") + e.what());
  }
  for (const Perm& p : out)
    if (p.size() != out.front().size()) throw error("group generators have different degrees");
  return out;
}

inline Json table_to_json(const std::vector<std::vector<ElemId>>& t) { return {{"order", t.size()}, {"table", t}}; }

inline std::vector<std::vector<ElemId>> table_from_json(const Json& j) {
  try {
    const auto n = j.at("order").get<std::size_t>();
    auto t = j.at("table").get<std::vector<std::vector<ElemId>>>();
    if (t.size() != n) throw error("table has " + std::to_string(t.size()) + " rows, order is " + std::to_string(n));
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string("malformed group table: ") + e.what());
  }
}

inline std::vector<std::vector<ElemId>> load_table(const std::string& path) {
  return table_from_json(parse_json(read_text(path), "group table file"));
}

// ---------------------------------------------------------------------------
// Censuses

inline Json to_json(const Census<Perm>& c) {
  Json subs = Json::array();
  for (const auto& s : c.subgroups) {
    Json elems = Json::array();
    for (const Perm& p : s.elements) elems.push_back(p.images);
    Json listings = Json::array();
    for (const auto& l : s.listings) listings.push_back(std::vector<int>(l.begin(), l.end()));
    subs.push_back({{"elements", elems}, {"listings", listings}});
  }
  return {{"method", c.method}, {"complete", c.complete}, {"subgroups", subs}};
}

// ---------------------------------------------------------------------------
// Reports

/// One record per backend; the syntactic record is absent when that
/// backend could not run.
inline Json to_json(const Verdict& v, const std::string& backend) {
  Json out = Json::array();
  auto record = [&](const std::string& b, bool value) {
    out.push_back({{"formula", v.formula},
                   {"args", v.args},
                   {"backend", b},
                   {"value", value},
                   {"witness", b == "semantic" ? v.witness : std::string()},
                   {"complete", v.complete},
                   {"discrepancy", v.discrepancy()}});
  };
  if (backend != "syntactic") record("semantic", v.semantic);
  if (backend != "semantic" && v.syntactic) record("syntactic", *v.syntactic);
  return out;
}

inline Json to_json(const LemmaReport& r) {
  return {{"lemma", r.lemma},   {"instance", r.instance},         {"status", r.status()},
          {"checked", r.checked}, {"failures", r.failures}, {"inconclusive", r.inconclusive},
          {"lines", r.lines}};
}

inline Json to_json(const ReconstructedStructure& r, const std::optional<IsoResult>& iso = std::nullopt,
                    const std::vector<std::optional<Point>>& located = {}) {
  Json classes = Json::array();
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    Json reps = Json::array();
    for (const auto& p : r.classes[c]) reps.push_back({p.first, p.second});
    Json cls{{"id", c}, {"rep_pairs", reps}};
    if (c < located.size() && located[c]) cls["point"] = *located[c];
    classes.push_back(cls);
  }
  Json related = Json::array(), between = Json::array();
  if (r.relations) {
    const std::size_t n = r.size();
    for (std::size_t f = 0; f < n; ++f)
      for (std::size_t g = 0; g < n; ++g) {
        if (f < g && r.relations->related(f, g)) related.push_back({f, g});
        for (std::size_t h = 0; h < n; ++h)
          if (g < h && r.relations->b(f, g, h)) between.push_back({f, g, h});
      }
  }
  Json out{{"mode", r.mode},
           {"census_subgroups", r.census_subgroups},
           {"census_complete", r.census_complete},
           {"rep_pairs", r.rep_pairs.size()},
           {"eq_is_equivalence", r.eq_is_equivalence},
           {"classes", classes},
           {"related", related},
           {"betweenness", between}};
  if (r.order) {
    Json ord = Json::array();
    for (const auto& [a, b] : *r.order) ord.push_back({a, b});
    out["order"] = {{"mode", r.order_mode}, {"pairs", ord}, {"conclusive", r.order_conclusive}};
    if (r.order_parameters) out["order"]["parameters"] = {r.order_parameters->first, r.order_parameters->second};
  }
  if (iso) {
    out["comparison"] = {{"ok", iso->ok}, {"reversed", iso->reversed}, {"reason", iso->reason}};
    if (iso->ok) out["comparison"]["mapping"] = iso->mapping;
  }
  out["complete"] = r.complete();
  return out;
}

inline void write_json(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace cfpo
