#include "pcst/io.hpp"

#include <string>

#include "pcst/error.hpp"

namespace pcst {

Rational rational_from_json(const json& value) {
  if (value.is_number_integer()) return parse_rational(value.dump());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw ParseError("expected an integer or a \"p/q\" string, got " + value.dump());
}

json rational_to_json(const Rational& value) { return to_string(value); }

namespace {

const json& field(const json& obj, const char* name, const std::string& where) {
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(where + ": missing '" + name + "'");
  return *it;
}

std::string id_string(const json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where + ": vertex ids must be strings");
  return value.get<std::string>();
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  std::string root = id_string(field(doc, "root", "instance"), "root");
  const json& vertices = field(doc, "vertices", "instance");
  if (!vertices.is_array()) throw ParseError("'vertices' must be an array");

  std::vector<Instance::VertexData> data;
  for (const auto& v : vertices) {
    if (!v.is_object()) throw ParseError("vertex entries must be objects");
    std::string id = id_string(field(v, "id", "vertex"), "vertex");
    std::string where = "vertex '" + id + "'";
    Instance::VertexData d{id, rational_from_json(field(v, "cost", where)),
                           rational_from_json(field(v, "penalty", where)), std::nullopt};
    if (auto it = v.find("profit"); it != v.end() && !it->is_null()) d.profit = rational_from_json(*it);
    data.push_back(std::move(d));
  }

  std::vector<std::pair<std::string, std::string>> edges;
  if (auto it = doc.find("edges"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("'edges' must be an array");
    for (const auto& e : *it) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edges must be two-element arrays");
      edges.emplace_back(id_string(e[0], "edge"), id_string(e[1], "edge"));
    }
  }
  return Instance::create(std::move(data), root, edges);
}

json instance_to_json(const Instance& inst) {
  json vertices = json::array();
  for (Vertex v = 0; v < inst.size(); ++v) {
    json entry{{"id", inst.id(v)}, {"cost", rational_to_json(inst.cost(v))},
               {"penalty", rational_to_json(inst.penalty(v))}};
    if (inst.has_profits()) entry["profit"] = rational_to_json(inst.profit(v));
    vertices.push_back(std::move(entry));
  }
  json edges = json::array();
  for (auto [a, b] : inst.edges()) edges.push_back({inst.id(a), inst.id(b)});
  return {{"root", inst.id(inst.root())}, {"vertices", vertices}, {"edges", edges}};
}

json vertex_set_to_json(const Instance& inst, const VertexSet& set) {
  json out = json::array();
  for (Vertex v : set) out.push_back(inst.id(v));
  return out;
}

VertexSet vertex_set_from_json(const Instance& inst, const json& value) {
  if (!value.is_array()) throw ParseError("vertex sets must be arrays of ids");
  VertexSet out;
  for (const auto& id : value) {
    auto v = inst.index_of(id_string(id, "vertex set"));
    if (!v) throw ParseError("unknown vertex id " + id.dump());
    out.push_back(*v);
  }
  normalize(out);
  return out;
}

json dual_to_json(const Instance& inst, const DualSolution& dual) {
  json out = json::array();
  for (const auto& e : dual) {
    json entry{{"set", vertex_set_to_json(inst, e.set)}, {"y", rational_to_json(e.y)}};
    if (!e.core.empty()) entry["core"] = vertex_set_to_json(inst, e.core);
    out.push_back(std::move(entry));
  }
  return out;
}

DualSolution dual_from_json(const Instance& inst, const json& value) {
  if (!value.is_array()) throw ParseError("dual must be an array");
  DualSolution out;
  for (const auto& e : value) {
    if (!e.is_object()) throw ParseError("dual entries must be objects");
    DualEntry entry{vertex_set_from_json(inst, field(e, "set", "dual entry")),
                    rational_from_json(field(e, "y", "dual entry")),
                    {}};
    if (auto it = e.find("core"); it != e.end()) entry.core = vertex_set_from_json(inst, *it);
    out.push_back(std::move(entry));
  }
  return out;
}

namespace {

const char* kind_name(DualViolation::Kind kind) {
  switch (kind) {
    case DualViolation::Kind::Negative:
      return "negative";
    case DualViolation::Kind::Cost:
      return "cost";
    case DualViolation::Kind::Penalty:
      return "penalty";
    case DualViolation::Kind::Domain:
      return "domain";
  }
  return "unknown";
}

json strings(const std::vector<std::string>& items) {
  json out = json::array();
  for (const auto& s : items) out.push_back(s);
  return out;
}

}  // namespace

json violations_to_json(const Instance& inst, const std::vector<DualViolation>& violations) {
  json out = json::array();
  for (const auto& v : violations) {
    out.push_back({{"kind", kind_name(v.kind)},
                   {"where", vertex_set_to_json(inst, v.where)},
                   {"lhs", rational_to_json(v.lhs)},
                   {"rhs", rational_to_json(v.rhs)},
                   {"message", v.describe(inst)}});
  }
  return out;
}

json charge_to_json(const Instance& inst, const ChargeEntry& charge) {
  return {{"core", vertex_set_to_json(inst, charge.core_vertices)},
          {"component", charge.core},
          {"c1", rational_to_json(charge.c1)},
          {"c2", rational_to_json(charge.c2)},
          {"c3", rational_to_json(charge.c3)},
          {"phi", rational_to_json(charge.total())},
          {"age", rational_to_json(charge.age)},
          {"cvtx_depth", charge.cvtx_depth}};
}

json trace_event_to_json(const Instance& inst, const TraceEvent& event) {
  json out{{"kind", to_string(event.kind)}, {"tau", rational_to_json(event.tau)}};
  if (event.vertex) out["vertex"] = inst.id(*event.vertex);
  if (event.set) out["set"] = *event.set;
  if (!event.set_vertices.empty()) out["vertices"] = vertex_set_to_json(inst, event.set_vertices);
  if (event.star) {
    out["star"] = {{"holds", event.star->holds},
                   {"loaders", event.star->loaders},
                   {"age_sum", rational_to_json(event.star->age_sum)},
                   {"threshold", rational_to_json(event.star->threshold)}};
  }
  if (event.kind == TraceEvent::Kind::BuildTree) out["root_adjacent"] = event.root_adjacent;
  if (event.core_age) out["core_age"] = rational_to_json(*event.core_age);
  if (event.closed_form_age) out["closed_form_age"] = rational_to_json(*event.closed_form_age);
  return out;
}

json solution_to_json(const Instance& inst, const SolutionReport& report, bool with_trace) {
  json phases = json::array();
  for (std::size_t i = 0; i < report.phases.size(); ++i) {
    const PhaseRecord& rec = report.phases[i];
    const PhaseOutcome& o = rec.outcome;
    json comps = json::array();
    for (const auto& c : rec.components) {
      Rational age = 0;
      for (const auto& [id, a] : o.ages) {
        if (id == c.id) age = a;
      }
      comps.push_back({{"id", c.id},
                       {"vertices", vertex_set_to_json(inst, c.vertices)},
                       {"reduced_penalty", rational_to_json(c.reduced_penalty)},
                       {"age", rational_to_json(age)}});
    }
    json phase{{"index", rec.index},
               {"outcome", o.kind == PhaseOutcome::Kind::TreeBuilt ? "tree_built" : "all_inactive"},
               {"end_time", rational_to_json(o.end_time)},
               {"components", comps},
               {"root_block", vertex_set_to_json(inst, rec.root_block)},
               {"dual", dual_to_json(inst, canonicalize(o.dual))},
               {"dual_value", rational_to_json(dual_value(o.dual))},
               {"restricted_dual_value", rational_to_json(dual_value(report.restricted_duals[i]))},
               {"joined_root", rec.joined_root}};
    if (o.tree) {
      json charges = json::array();
      for (const auto& c : o.tree->charges) charges.push_back(charge_to_json(inst, c));
      phase["tree"] = vertex_set_to_json(inst, o.tree->tree.vertices);
      phase["center"] = inst.id(o.tree->tree.center);
      phase["charges"] = charges;
    }
    if (with_trace) {
      json trace = json::array();
      for (const auto& ev : o.trace) trace.push_back(trace_event_to_json(inst, ev));
      phase["trace"] = trace;
      if (o.tree) {
        json calls = json::array();
        for (const auto& c : o.tree->calls) {
          calls.push_back({{"set", c.set},
                           {"component", c.core},
                           {"terminals", vertex_set_to_json(inst, c.terminals)},
                           {"depth", c.depth},
                           {"direct", c.direct}});
        }
        phase["fst_calls"] = calls;
      }
    }
    phases.push_back(std::move(phase));
  }
  json best = nullptr;
  if (report.best_restricted) best = *report.best_restricted + 1;
  return {{"tree", vertex_set_to_json(inst, report.tree)},
          {"objective", rational_to_json(report.objective)},
          {"cost_part", rational_to_json(report.cost_part)},
          {"penalty_part", rational_to_json(report.penalty_part)},
          {"fixed_dual", rational_to_json(report.fixed_dual)},
          {"phases", phases},
          {"best_restricted_phase", best},
          {"last_dual_value", rational_to_json(dual_value(report.last_dual))},
          {"violations", strings(report.violations)}};
}

json lmp_to_json(const Instance& inst, const LmpReport& report, bool with_trace) {
  const LmpCertificate& c = report.certificate;
  json penalties = json::object();
  for (Vertex v = 0; v < inst.size(); ++v) penalties[inst.id(v)] = rational_to_json(report.transformed.penalty(v));
  return {{"tree", vertex_set_to_json(inst, report.base.tree)},
          {"original_objective", rational_to_json(report.original_objective)},
          {"transformed_penalties", penalties},
          {"base", solution_to_json(report.transformed, report.base, with_trace)},
          {"combined_dual", dual_to_json(inst, report.combined_dual)},
          {"certificate",
           {{"tree_reduced_cost", rational_to_json(c.tree_reduced_cost)},
            {"best_restricted_value", rational_to_json(c.best_restricted_value)},
            {"outside_reduced_penalty", rational_to_json(c.outside_reduced_penalty)},
            {"last_dual_value", rational_to_json(c.last_dual_value)},
            {"combined_value", rational_to_json(c.combined_value)},
            {"alpha", rational_to_json(c.alpha)},
            {"lhs", rational_to_json(c.lhs)},
            {"rhs", rational_to_json(c.rhs)},
            {"cost_inequality_holds", c.cost_inequality_holds},
            {"penalty_inequality_holds", c.penalty_inequality_holds},
            {"combined_holds", c.combined_holds}}}};
}

json baseline_to_json(const Instance& inst, const BaselineReport& report, bool with_trace) {
  json out{{"dual_total", rational_to_json(report.dual_total)},
           {"y_total", rational_to_json(report.y_total)},
           {"fixed_dual", rational_to_json(report.fixed_dual)},
           {"root_component", vertex_set_to_json(inst, report.root_component)},
           {"root_component_objective", rational_to_json(report.root_component_objective)},
           {"dual", dual_to_json(inst, report.dual)}};
  if (with_trace) {
    json trace = json::array();
    for (const auto& s : report.trace) {
      json step{{"tau", rational_to_json(s.tau)},
                {"kind", s.kind == BaselineStep::Kind::Exhausted ? "exhausted" : "merge"},
                {"component", vertex_set_to_json(inst, s.component)}};
      if (s.vertex) step["vertex"] = inst.id(*s.vertex);
      trace.push_back(std::move(step));
    }
    out["trace"] = trace;
  }
  return out;
}

namespace {

json probe_to_json(const Instance& inst, const Probe& p) {
  return {{"lambda", rational_to_json(p.lambda)},
          {"tree", vertex_set_to_json(inst, p.tree)},
          {"cost", rational_to_json(p.cost)},
          {"profit", rational_to_json(p.profit)}};
}

json search_to_json(const Instance& inst, const LagrangianResult& s) {
  return {{"lambda_pair", {rational_to_json(s.lower.lambda), rational_to_json(s.upper.lambda)}},
          {"endpoints", {probe_to_json(inst, s.lower), probe_to_json(inst, s.upper)}},
          {"exact", s.exact},
          {"tolerance", rational_to_json(s.tolerance)},
          {"probes", s.probes}};
}

}  // namespace

json quota_to_json(const Instance& inst, const QuotaReport& report, bool with_trace) {
  json out{{"tree", vertex_set_to_json(inst, report.tree)},
           {"cost", rational_to_json(report.cost)},
           {"profit", rational_to_json(report.profit)},
           {"quota", rational_to_json(report.quota)},
           {"total_profit", rational_to_json(report.total_profit)},
           {"opt_guess", rational_to_json(report.opt_guess)},
           {"pruned_total_profit", rational_to_json(report.pruned_total_profit)},
           {"a1", rational_to_json(report.a1)},
           {"a2", rational_to_json(report.a2)},
           {"deviation_identity", rational_to_json(report.deviation_identity)},
           {"convex_cost", rational_to_json(report.convex_cost)},
           {"chosen", report.chosen},
           {"violations", strings(report.violations)}};
  out["search"] = report.search ? search_to_json(inst, *report.search) : json(nullptr);
  if (with_trace) {
    json cands = json::array();
    for (const auto& c : report.candidates) {
      json entry{{"opt_guess", rational_to_json(c.opt_guess)},
                 {"pruned_total_profit", rational_to_json(c.pruned_total_profit)},
                 {"note", c.note}};
      entry["search"] = c.search ? search_to_json(inst, *c.search) : json(nullptr);
      if (c.merge) {
        json steps = json::array();
        for (const auto& s : c.merge->steps) {
          steps.push_back({{"kind", s.kind == MergeStep::Kind::DropSide ? "drop_side" : "contract"},
                           {"kept", vertex_set_to_json(inst, s.kept)},
                           {"removed", vertex_set_to_json(inst, s.removed)}});
        }
        entry["merge"] = {{"tree", vertex_set_to_json(inst, c.merge->tree)},
                          {"supplement", vertex_set_to_json(inst, c.merge->supplement)},
                          {"path", vertex_set_to_json(inst, c.merge->path)},
                          {"steps", steps}};
      }
      cands.push_back(std::move(entry));
    }
    out["candidates"] = cands;
  }
  return out;
}

json oracle_to_json(const Instance& inst, const OracleResult& result) {
  return {{"value", rational_to_json(result.value)}, {"witness", vertex_set_to_json(inst, result.witness)}};
}

std::string dump(const json& value) { return value.dump(2) + "\n"; }

}  // namespace pcst
