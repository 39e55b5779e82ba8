#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mincut/canonical.hpp"
#include "mincut/error.hpp"
#include "mincut/graph.hpp"
#include "mincut/mincuts.hpp"

namespace mincut {

/// Intersection graph of an already enumerated mincut family.
inline Graph mincut_graph(const MincutFamily& family) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < family.size(); ++i) {
    for (Vertex j = i + 1; j < family.size(); ++j) {
      if (family.cuts[i].shares_edge_with(family.cuts[j])) es.push_back({i, j});
    }
  }
  return Graph::from_edges(family.size(), es);
}

/// X(G): one vertex per mincut, adjacent when the cuts share an edge.
/// Disconnected graphs and n <= 1 map to K_0.
inline Graph mincut_graph(const Graph& g, std::size_t budget = kDefaultEnumerationBudget) {
  return mincut_graph(enumerate_mincuts(g, budget));
}

enum class OutcomeKind { FixedPoint, Periodic, Null, Unresolved };

inline std::string_view to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::FixedPoint: return "FixedPoint";
    case OutcomeKind::Periodic: return "Periodic";
    case OutcomeKind::Null: return "Null";
    case OutcomeKind::Unresolved: return "Unresolved";
  }
  return "?";
}

/// How an orbit ended. `steps` is the index of the graph that resolved it:
/// the K_0 for Null, the first repeated graph for FixedPoint and Periodic.
struct Outcome {
  OutcomeKind kind = OutcomeKind::Unresolved;
  std::size_t period = 0;
  std::size_t preperiod = 0;
  std::size_t steps = 0;
  std::string reason;

  bool resolved() const { return kind != OutcomeKind::Unresolved; }

  std::string describe() const {
    switch (kind) {
      case OutcomeKind::FixedPoint: return "FixedPoint(" + std::to_string(preperiod) + ")";
      case OutcomeKind::Periodic:
        return "Periodic(" + std::to_string(period) + "," + std::to_string(preperiod) + ")";
      case OutcomeKind::Null: return "Null(" + std::to_string(steps) + ")";
      case OutcomeKind::Unresolved: return "Unresolved(" + reason + ")";
    }
    return {};
  }
};

struct TraceStep {
  Graph graph;
  CanonicalCode code;
  std::optional<std::size_t> lambda;        // unset when never enumerated
  std::optional<std::size_t> mincut_count;
};

/// The orbit G, X(G), X^2(G), ... up to the first repeat, K_0 or the budget.
struct IterationTrace {
  std::vector<TraceStep> steps;
  Outcome outcome;
};

inline constexpr std::size_t kDefaultMaxSteps = 20;

inline IterationTrace iterate(const Graph& g, std::size_t max_steps = kDefaultMaxSteps,
                              std::size_t budget = kDefaultEnumerationBudget) {
  if (max_steps == 0) throw Error(ErrorCode::InvalidSpec, "max_steps must be positive");
  IterationTrace trace;
  auto unresolved = [&trace](std::string why) {
    trace.outcome = {OutcomeKind::Unresolved, 0, 0, trace.steps.size() - 1, std::move(why)};
    return trace;
  };

  try {
    trace.steps.push_back({g, canonical_form(g), std::nullopt, std::nullopt});
  } catch (const Error& e) {
    trace.steps.push_back({g, {}, std::nullopt, std::nullopt});
    return unresolved(e.what());
  }
  if (g.empty()) {
    trace.steps.back().lambda = 0;
    trace.steps.back().mincut_count = 0;
    trace.outcome = {OutcomeKind::Null, 0, 0, 0, {}};
    return trace;
  }

  for (std::size_t step = 1; step <= max_steps; ++step) {
    TraceStep& current = trace.steps.back();
    Graph next;
    CanonicalCode code;
    try {
      const MincutFamily family = enumerate_mincuts(current.graph, budget);
      current.lambda = family.lambda;
      current.mincut_count = family.size();
      next = mincut_graph(family);
      code = canonical_form(next);
    } catch (const Error& e) {
      return unresolved(e.what());
    }

    std::optional<std::size_t> seen;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      if (trace.steps[i].code == code) {
        seen = i;
        break;
      }
    }
    trace.steps.push_back({std::move(next), std::move(code), std::nullopt, std::nullopt});
    TraceStep& added = trace.steps.back();

    if (added.graph.empty()) {
      added.lambda = 0;
      added.mincut_count = 0;
      trace.outcome = {OutcomeKind::Null, 0, 0, step, {}};
      return trace;
    }
    if (seen) {
      added.lambda = trace.steps[*seen].lambda;
      added.mincut_count = trace.steps[*seen].mincut_count;
      const std::size_t period = step - *seen;
      trace.outcome = {period == 1 ? OutcomeKind::FixedPoint : OutcomeKind::Periodic, period,
                       *seen, step, {}};
      return trace;
    }
  }
  return unresolved("step budget " + std::to_string(max_steps) + " exhausted");
}

}  // namespace mincut
