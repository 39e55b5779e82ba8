#pragma once

// JSON views of the library's reports. Kept apart from the algorithms so the
// core headers do not depend on nlohmann/json.

#include <nlohmann/json.hpp>

#include "mincut/classify.hpp"
#include "mincut/cut_structure.hpp"
#include "mincut/experiments.hpp"
#include "mincut/graph.hpp"
#include "mincut/graph_io.hpp"
#include "mincut/mincuts.hpp"
#include "mincut/xoperator.hpp"

namespace mincut {

using nlohmann::json;

inline json to_json(const Graph& g) {
  return {{"n", g.order()}, {"m", g.size()}, {"graph6", to_graph6(g)}};
}

inline json to_json(const Edge& e) { return json::array({e.u, e.v}); }

inline json to_json(const Cut& c) {
  json edges = json::array();
  for (const Edge& e : c.edges) edges.push_back(to_json(e));
  return {{"edges", edges}, {"side_a", c.side_a_vertices()}, {"trivial", c.trivial()}};
}

inline json to_json(const CountBoundReport& b) {
  json j = {{"count", b.count}, {"order", b.order}, {"lambda", b.lambda},
            {"universal", b.universal}, {"satisfied", b.satisfied()}};
  j["even_bound"] = b.even_bound ? json(*b.even_bound) : json(nullptr);
  j["odd_bound"] = b.odd_bound ? json(*b.odd_bound) : json(nullptr);
  return j;
}

inline json to_json(const MincutFamily& f) {
  json cuts = json::array();
  for (const Cut& c : f.cuts) cuts.push_back(to_json(c));
  return {{"lambda", f.lambda}, {"count", f.size()}, {"cuts", cuts}, {"trivial", f.trivial}};
}

inline json to_json(const Outcome& o) {
  json j = {{"kind", std::string(to_string(o.kind))}, {"steps", o.steps}};
  if (o.kind == OutcomeKind::FixedPoint || o.kind == OutcomeKind::Periodic) {
    j["period"] = o.period;
    j["preperiod"] = o.preperiod;
  }
  if (o.kind == OutcomeKind::Unresolved) j["reason"] = o.reason;
  j["label"] = o.describe();
  return j;
}

inline json to_json(const IterationTrace& t) {
  json steps = json::array();
  for (const TraceStep& s : t.steps) {
    json step = {{"n", s.graph.order()}, {"m", s.graph.size()}, {"canonical", s.code.hex()}};
    step["lambda"] = s.lambda ? json(*s.lambda) : json(nullptr);
    step["mincuts"] = s.mincut_count ? json(*s.mincut_count) : json(nullptr);
    steps.push_back(step);
  }
  return {{"steps", steps}, {"outcome", to_json(t.outcome)}};
}

inline json to_json(const ClassificationReport& r) {
  return {{"n", r.order},
          {"lambda", r.lambda},
          {"delta", r.min_degree},
          {"Delta", r.max_degree},
          {"maximally_edge_connected", r.maximally_edge_connected},
          {"super_lambda", r.super_lambda},
          {"regular", r.regular},
          {"fixed_point_predicted", r.fixed_point_predicted},
          {"sufficient_conditions", r.sufficient_conditions},
          {"trivial_cut_count", r.trivial_cut_count},
          {"nontrivial_cut_count", r.nontrivial_cut_count}};
}

inline json to_json(const CrossingReport& r) {
  return {{"lambda", r.lambda},         {"lambda_even", r.lambda_even},
          {"boundary", r.boundary},     {"diagonal", r.diagonal},
          {"quadrant_is_mincut", r.quadrant_is_mincut},
          {"edges_disjoint", r.edges_disjoint}, {"ok", r.ok()}};
}

inline json to_json(const StructureReport& r) {
  return {{"lambda", r.lambda},       {"cuts", r.cut_count},
          {"pairs", r.pairs},         {"nested", r.nested},
          {"crossing", r.crossing},   {"nontrivial_pairs", r.nontrivial_pairs},
          {"bounds", to_json(r.bounds)}, {"violations", r.violations},
          {"ok", r.ok()}};
}

inline json to_json(const std::vector<SweepCounterexample>& list) {
  json out = json::array();
  for (const auto& c : list) out.push_back({{"graph6", c.graph6}, {"detail", c.detail}});
  return out;
}

inline json to_json(const SoundnessReport& r) {
  return {{"n_max", r.n_max},
          {"graphs", r.graphs},
          {"condition_hits", r.condition_hits},
          {"counterexamples", to_json(r.counterexamples)}};
}

inline json to_json(const FixedPointSweepReport& r) {
  return {{"n_min", r.n_min},
          {"n_max", r.n_max},
          {"graphs", r.graphs},
          {"fixed", r.fixed},
          {"counterexamples", to_json(r.counterexamples)}};
}

inline json to_json(const ConvergenceReport& r, bool with_records = true) {
  json totals = json::object();
  for (const auto& [k, v] : r.totals) totals[std::string(to_string(k))] = v;
  json hist = json::object();
  for (const auto& [k, v] : r.steps_histogram) hist[std::to_string(k)] = v;
  json circuits = json::array();
  json records = json::array();
  for (const OrbitRecord& rec : r.records) {
    if (rec.circuit_entry) {
      circuits.push_back({{"input", rec.input.hex()},
                          {"graph6", rec.graph6},
                          {"circuit_entry", rec.circuit_entry->hex()},
                          {"outcome", rec.outcome.describe()}});
    }
    if (with_records) {
      records.push_back({{"input", rec.input.hex()},
                         {"graph6", rec.graph6},
                         {"outcome", rec.outcome.describe()},
                         {"multiplicity", rec.multiplicity},
                         {"trivial_vertex_ratio", rec.trivial_vertex_ratio}});
    }
  }
  json j = {{"ensemble", r.ensemble},
            {"generator", r.generator},
            {"seed", r.seed},
            {"max_steps", r.max_steps},
            {"drawn", r.stats.drawn},
            {"accepted", r.stats.accepted},
            {"discarded_disconnected", r.stats.discarded},
            {"totals", totals},
            {"null_fraction", r.null_fraction()},
            {"steps_histogram", hist},
            {"circuits", circuits}};
  if (with_records) j["records"] = records;
  return j;
}

inline json to_json(const PeriodicityCensus& c) {
  json periods = json::object();
  for (const auto& [p, b] : c.periods) {
    periods[std::to_string(p)] = {{"count", b.count}, {"exemplars", b.exemplars}};
  }
  return {{"periods", periods}, {"null", c.null_count}, {"unresolved", c.unresolved_count}};
}

/// Step histogram as CSV ("steps,count").
inline std::string histogram_csv(const ConvergenceReport& r) {
  std::string out = "steps,count\n";
  for (const auto& [k, v] : r.steps_histogram) out += std::to_string(k) + "," + std::to_string(v) + "\n";
  return out;
}

}  // namespace mincut
