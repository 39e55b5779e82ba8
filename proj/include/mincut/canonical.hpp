#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mincut/bits.hpp"
#include "mincut/error.hpp"
#include "mincut/graph.hpp"

namespace mincut {

inline constexpr std::size_t kDefaultIsoBudget = 64;

/// Isomorphism-class key: n followed by the upper triangle of the canonically
/// relabeled adjacency matrix, row-major, packed MSB first.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

  std::size_t order() const noexcept { return bytes_.empty() ? 0 : bytes_[0]; }

  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (std::uint8_t b : bytes_) {
      out += kDigits[b >> 4];
      out += kDigits[b & 15];
    }
    return out;
  }

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

namespace detail {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;
using Permutation = std::vector<Vertex>;

// Splits cells by neighbour counts into each splitter cell until the ordered
// partition is equitable. Only the partition's shape steers the splitting, so
// the result commutes with relabeling.
inline void refine(Partition& cells, const std::vector<VertexMask>& adj) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      VertexMask splitter = 0;
      for (Vertex v : cells[s]) splitter |= bit(v);
      Partition next;
      next.reserve(cells.size() + 4);
      for (const Cell& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<int, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) keyed.emplace_back(popcount(adj[v] & splitter), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        Cell current{keyed[0].second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(current));
            current.clear();
          }
          current.push_back(keyed[i].second);
        }
        next.push_back(std::move(current));
      }
      if (next.size() != cells.size()) {
        cells = std::move(next);
        changed = true;
      }
    }
  }
}

inline std::vector<std::uint8_t> encode(const Permutation& lab, const std::vector<VertexMask>& adj) {
  const std::size_t n = lab.size();
  std::vector<std::uint8_t> out(1 + (n * (n > 0 ? n - 1 : 0) / 2 + 7) / 8, 0);
  out[0] = static_cast<std::uint8_t>(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      if (contains(adj[lab[i]], lab[j])) out[1 + k / 8] |= static_cast<std::uint8_t>(0x80U >> (k % 8));
    }
  }
  return out;
}

struct Leaf {
  std::vector<std::uint8_t> code;
  Permutation lab;   // position -> vertex
  std::vector<Vertex> path;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const std::vector<VertexMask>& adj) : adj_(adj) {}

  Leaf run() {
    Partition cells;
    if (!adj_.empty()) {
      Cell all(adj_.size());
      std::iota(all.begin(), all.end(), Vertex{0});
      cells.push_back(std::move(all));
    }
    std::vector<Vertex> path;
    search(cells, path);
    return best_ ? *best_ : Leaf{encode({}, adj_), {}, {}};
  }

 private:
  static constexpr std::size_t kNoJump = static_cast<std::size_t>(-1);

  // Returns the depth the search should resume at, or kNoJump.
  std::size_t search(Partition cells, std::vector<Vertex>& path) {
    refine(cells, adj_);
    if (cells.size() == adj_.size()) return visit_leaf(cells, path);

    std::size_t target = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > cells[target].size()) target = i;
    }
    Cell candidates = cells[target];
    std::sort(candidates.begin(), candidates.end());

    const std::size_t depth = path.size();
    std::vector<Vertex> explored;
    for (Vertex v : candidates) {
      if (same_orbit_as_explored(v, explored, path)) continue;
      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        Cell rest;
        for (Vertex w : cells[i]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      path.push_back(v);
      const std::size_t jump = search(std::move(child), path);
      path.pop_back();
      explored.push_back(v);
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  std::size_t visit_leaf(const Partition& cells, const std::vector<Vertex>& path) {
    Permutation lab;
    lab.reserve(cells.size());
    for (const Cell& c : cells) lab.push_back(c[0]);
    std::vector<std::uint8_t> code = encode(lab, adj_);
    if (!first_) {
      first_ = Leaf{code, lab, path};
      best_ = first_;
      return kNoJump;
    }
    for (const Leaf* ref : {&*first_, &*best_}) {
      if (code == ref->code) {
        Permutation gamma(adj_.size());
        for (std::size_t i = 0; i < lab.size(); ++i) gamma[ref->lab[i]] = lab[i];
        automorphisms_.push_back(std::move(gamma));
        std::size_t k = 0;
        while (k < path.size() && k < ref->path.size() && path[k] == ref->path[k]) ++k;
        return k;
      }
    }
    if (code < best_->code) best_ = Leaf{std::move(code), std::move(lab), path};
    return kNoJump;
  }

  // Orbits of the group generated by the known automorphisms that fix the
  // current path pointwise.
  bool same_orbit_as_explored(Vertex v, const std::vector<Vertex>& explored,
                              const std::vector<Vertex>& path) const {
    if (explored.empty() || automorphisms_.empty()) return false;
    std::vector<Vertex> parent(adj_.size());
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&parent](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Permutation& gamma : automorphisms_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](Vertex p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (Vertex x = 0; x < gamma.size(); ++x) {
        Vertex a = find(x);
        Vertex b = find(gamma[x]);
        if (a != b) parent[a] = b;
      }
    }
    const Vertex root = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](Vertex e) { return find(e) == root; });
  }

  const std::vector<VertexMask>& adj_;
  std::optional<Leaf> first_;
  std::optional<Leaf> best_;
  std::vector<Permutation> automorphisms_;
};

inline void check_iso_budget(const Graph& g, std::size_t budget) {
  const std::size_t limit = std::min(budget, kMaskCapacity);
  if (g.order() > limit) {
    throw Error(ErrorCode::TooLarge, "canonical form limited to n <= " + std::to_string(limit) +
                                         ", got " + std::to_string(g.order()));
  }
}

}  // namespace detail

inline CanonicalCode canonical_form(const Graph& g, std::size_t budget = kDefaultIsoBudget) {
  detail::check_iso_budget(g, budget);
  const auto adj = g.masks();
  return CanonicalCode(detail::CanonicalSearch(adj).run().code);
}

/// Canonical relabeling: result[v] is the position of v in the canonical order.
inline std::vector<Vertex> canonical_labeling(const Graph& g, std::size_t budget = kDefaultIsoBudget) {
  detail::check_iso_budget(g, budget);
  const auto adj = g.masks();
  const auto leaf = detail::CanonicalSearch(adj).run();
  std::vector<Vertex> pos(g.order());
  for (std::size_t i = 0; i < leaf.lab.size(); ++i) pos[leaf.lab[i]] = static_cast<Vertex>(i);
  return pos;
}

inline bool are_isomorphic(const Graph& g, const Graph& h, std::size_t budget = kDefaultIsoBudget) {
  if (g.order() != h.order() || g.size() != h.size()) {
    detail::check_iso_budget(g, budget);
    detail::check_iso_budget(h, budget);
    return false;
  }
  return canonical_form(g, budget) == canonical_form(h, budget);
}

}  // namespace mincut
