#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mincut/bits.hpp"
#include "mincut/canonical.hpp"
#include "mincut/classify.hpp"
#include "mincut/cut_structure.hpp"
#include "mincut/error.hpp"
#include "mincut/graph.hpp"
#include "mincut/graph_io.hpp"
#include "mincut/mincuts.hpp"
#include "mincut/xoperator.hpp"

namespace mincut {

// ---------------------------------------------------------------------------
// Random source. std::mt19937_64 has a fully specified output sequence; the
// helpers below avoid the implementation-defined std distributions so a
// given seed reproduces the same graphs on every platform.

class Rng {
 public:
  static constexpr std::string_view kName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool coin(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

inline Graph gnp_graph(Rng& rng, std::size_t n, double p) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (rng.coin(p)) es.push_back({u, v});
    }
  }
  return Graph::from_edges(n, es);
}

/// Connected G(n, p) sample, redrawing until connected.
inline Graph random_connected_graph(Rng& rng, std::size_t n, double p) {
  if (n == 0) throw Error(ErrorCode::InvalidSpec, "random connected graph needs n >= 1");
  for (;;) {
    Graph g = gnp_graph(rng, n, p);
    if (is_connected(g)) return g;
  }
}

/// Uniform random Pruefer tree on n >= 2 vertices.
inline Graph random_tree(Rng& rng, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidSpec, "random tree needs n >= 2");
  std::vector<Vertex> seq(n - 2);
  for (Vertex& x : seq) x = static_cast<Vertex>(rng.below(n));
  return tree_from_pruefer(seq);
}

/// Pairing model: shuffle n*r half-edges, pair consecutively, redraw on
/// loops or repeated edges.
inline Graph random_regular_graph(Rng& rng, std::size_t n, std::size_t r,
                                  std::size_t max_attempts = 100000) {
  if ((n * r) % 2 != 0 || r >= std::max<std::size_t>(n, 1)) {
    throw Error(ErrorCode::InvalidSpec, "random regular graph needs n*r even and r < n");
  }
  std::vector<Vertex> points;
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), r, v);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    for (std::size_t i = points.size(); i > 1; --i) std::swap(points[i - 1], points[rng.below(i)]);
    std::vector<Edge> es;
    std::set<Edge> used;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < points.size() && ok; i += 2) {
      if (points[i] == points[i + 1]) ok = false;
      else ok = used.insert(make_edge(points[i], points[i + 1])).second;
    }
    if (ok) return Graph::from_edges(n, std::vector<Edge>(used.begin(), used.end()));
  }
  throw Error(ErrorCode::InvalidSpec, "pairing model did not produce a simple graph");
}

// ---------------------------------------------------------------------------
// Ensembles

struct Gnp {
  std::size_t n = 0;
  double p = 0.0;
};
struct RandomRegular {
  std::size_t n = 0;
  std::size_t r = 0;
};
struct AllConnected {
  std::size_t n = 0;
  bool deduplicate = true;
};

struct EnsembleSpec {
  std::variant<Gnp, RandomRegular, AllConnected> model;
  std::size_t count = 0;  // draws; ignored for AllConnected
  std::uint64_t seed = 0;

  std::string describe() const {
    return std::visit(
        [](const auto& m) -> std::string {
          using M = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<M, Gnp>) {
            return "gnp(n=" + std::to_string(m.n) + ",p=" + std::to_string(m.p) + ")";
          } else if constexpr (std::is_same_v<M, RandomRegular>) {
            return "random_regular(n=" + std::to_string(m.n) + ",r=" + std::to_string(m.r) + ")";
          } else {
            return "all_connected(n=" + std::to_string(m.n) + (m.deduplicate ? ",iso" : ",labeled") + ")";
          }
        },
        model);
  }
};

struct EnsembleStats {
  std::size_t drawn = 0;
  std::size_t accepted = 0;
  std::size_t discarded = 0;  // disconnected draws
};

inline void validate(const EnsembleSpec& spec) {
  std::visit(
      [](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Gnp>) {
          if (!(m.p >= 0.0 && m.p <= 1.0)) throw Error(ErrorCode::InvalidSpec, "p must lie in [0, 1]");
        } else if constexpr (std::is_same_v<M, RandomRegular>) {
          if ((m.n * m.r) % 2 != 0) throw Error(ErrorCode::InvalidSpec, "n*r must be even");
          if (m.r >= m.n) throw Error(ErrorCode::InvalidSpec, "r must be below n");
        } else {
          if (m.n > 7) throw Error(ErrorCode::InvalidSpec, "all_connected is capped at n = 7");
        }
      },
      spec.model);
}

/// Streams the ensemble's connected graphs to `fn`; disconnected draws are
/// dropped and counted.
template <typename Fn>
EnsembleStats for_each_in_ensemble(const EnsembleSpec& spec, Fn&& fn) {
  validate(spec);
  EnsembleStats stats;
  Rng rng(spec.seed);
  auto offer = [&](Graph g) {
    ++stats.drawn;
    if (!is_connected(g)) {
      ++stats.discarded;
      return;
    }
    ++stats.accepted;
    fn(g);
  };
  if (const auto* m = std::get_if<Gnp>(&spec.model)) {
    for (std::size_t i = 0; i < spec.count; ++i) offer(gnp_graph(rng, m->n, m->p));
  } else if (const auto* m = std::get_if<RandomRegular>(&spec.model)) {
    for (std::size_t i = 0; i < spec.count; ++i) offer(random_regular_graph(rng, m->n, m->r));
  } else {
    const auto& all = std::get<AllConnected>(spec.model);
    if (all.deduplicate) {
      for_each_connected_class(all.n, [&](const Graph& g) { offer(g); });
    } else {
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (Vertex v = 1; v < all.n; ++v) {
        for (Vertex u = 0; u < v; ++u) pairs.emplace_back(u, v);
      }
      std::vector<VertexMask> adj(all.n);
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s) {
        std::fill(adj.begin(), adj.end(), 0);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          if ((s >> k) & 1U) {
            adj[pairs[k].first] |= bit(pairs[k].second);
            adj[pairs[k].second] |= bit(pairs[k].first);
          }
        }
        if (all.n > 0 && is_connected_set(adj, low_bits(all.n))) {
          ++stats.drawn;
          ++stats.accepted;
          fn(Graph::from_masks(adj));
        }
      }
    }
  }
  return stats;
}

inline std::vector<Graph> generate_ensemble(const EnsembleSpec& spec, EnsembleStats* stats = nullptr) {
  std::vector<Graph> out;
  EnsembleStats s = for_each_in_ensemble(spec, [&](const Graph& g) { out.push_back(g); });
  if (stats) *stats = s;
  return out;
}

// ---------------------------------------------------------------------------
// Convergence survey

struct OrbitRecord {
  CanonicalCode input;
  std::string graph6;
  Outcome outcome;
  std::optional<CanonicalCode> circuit_entry;  // first graph of the cycle
  double trivial_vertex_ratio = 0.0;
  std::size_t multiplicity = 1;  // labeled copies folded into this record
};

struct ConvergenceReport {
  std::string ensemble;
  std::string generator{Rng::kName};
  std::uint64_t seed = 0;
  std::size_t max_steps = 0;
  EnsembleStats stats;
  std::map<OutcomeKind, std::size_t> totals;
  std::map<std::size_t, std::size_t> steps_histogram;
  std::vector<OrbitRecord> records;  // sorted by input code

  std::size_t processed() const {
    std::size_t s = 0;
    for (const auto& [k, v] : totals) s += v;
    return s;
  }
  double null_fraction() const {
    const std::size_t p = processed();
    if (p == 0) return 0.0;
    auto it = totals.find(OutcomeKind::Null);
    return it == totals.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(p);
  }
  std::size_t count(OutcomeKind k) const {
    auto it = totals.find(k);
    return it == totals.end() ? 0 : it->second;
  }
};

inline ConvergenceReport survey(const EnsembleSpec& spec, std::size_t max_steps = kDefaultMaxSteps,
                                std::size_t budget = kDefaultEnumerationBudget) {
  ConvergenceReport report;
  report.ensemble = spec.describe();
  report.seed = spec.seed;
  report.max_steps = max_steps;
  for (OutcomeKind k : {OutcomeKind::FixedPoint, OutcomeKind::Periodic, OutcomeKind::Null,
                        OutcomeKind::Unresolved}) {
    report.totals[k] = 0;
  }

  std::map<CanonicalCode, OrbitRecord> by_code;
  report.stats = for_each_in_ensemble(spec, [&](const Graph& g) {
    CanonicalCode code = canonical_form(g);
    OrbitRecord* rec = nullptr;
    if (auto it = by_code.find(code); it != by_code.end()) {
      rec = &it->second;
      ++rec->multiplicity;
    } else {
      OrbitRecord fresh;
      fresh.input = code;
      fresh.graph6 = to_graph6(g);
      const IterationTrace trace = iterate(g, max_steps, budget);
      fresh.outcome = trace.outcome;
      if (trace.outcome.kind == OutcomeKind::FixedPoint || trace.outcome.kind == OutcomeKind::Periodic) {
        fresh.circuit_entry = trace.steps[trace.outcome.preperiod].code;
      }
      const std::size_t lambda = trace.steps.front().lambda.value_or(0);
      fresh.trivial_vertex_ratio =
          g.empty() ? 0.0
                    : static_cast<double>(trivial_vertices(g, lambda).size()) / static_cast<double>(g.order());
      rec = &by_code.emplace(code, std::move(fresh)).first->second;
    }
    ++report.totals[rec->outcome.kind];
    if (rec->outcome.resolved()) ++report.steps_histogram[rec->outcome.steps];
  });
  for (auto& [code, rec] : by_code) report.records.push_back(std::move(rec));
  return report;
}

struct PeriodBucket {
  std::size_t count = 0;
  std::vector<std::string> exemplars;  // graph6 of inputs, at most kMaxExemplars
};

struct PeriodicityCensus {
  std::map<std::size_t, PeriodBucket> periods;
  std::size_t null_count = 0;
  std::size_t unresolved_count = 0;
};

inline constexpr std::size_t kMaxExemplars = 5;

/// Groups the resolved, non-null orbits of a survey by period.
inline PeriodicityCensus periodicity_census(const ConvergenceReport& report) {
  PeriodicityCensus census;
  for (const OrbitRecord& rec : report.records) {
    switch (rec.outcome.kind) {
      case OutcomeKind::Null: census.null_count += rec.multiplicity; break;
      case OutcomeKind::Unresolved: census.unresolved_count += rec.multiplicity; break;
      default: {
        PeriodBucket& b = census.periods[rec.outcome.period];
        b.count += rec.multiplicity;
        if (b.exemplars.size() < kMaxExemplars) b.exemplars.push_back(rec.graph6);
      }
    }
  }
  return census;
}

inline PeriodicityCensus periodicity_census(const EnsembleSpec& spec,
                                            std::size_t max_steps = kDefaultMaxSteps,
                                            std::size_t budget = kDefaultEnumerationBudget) {
  return periodicity_census(survey(spec, max_steps, budget));
}

}  // namespace mincut
