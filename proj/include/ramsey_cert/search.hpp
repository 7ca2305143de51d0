#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ramsey_cert/errors.hpp"
#include "ramsey_cert/graph.hpp"

// Exact searches over a Graph: components, chromatic number, k-vertex paths and
// cycles, and subgraph embeddings. All searches are complete and break ties by
// lowest vertex index, so results are deterministic for a fixed input.

namespace ramsey {

inline constexpr int kDefaultChromaticLimit = 32;
inline constexpr std::uint64_t kUnlimitedNodes = std::numeric_limits<std::uint64_t>::max();

/// Connected components, each sorted ascending, listed by lowest member.
inline std::vector<VertexList> components(const Graph& g) {
  std::vector<VertexList> out;
  VertexBits seen(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen.contains(s)) continue;
    VertexBits comp(g.order());
    VertexBits frontier(g.order());
    frontier.insert(s);
    while (!frontier.empty()) {
      comp |= frontier;
      VertexBits next(g.order());
      frontier.for_each([&](Vertex v) { next |= g.row(v); });
      next.subtract(comp);
      frontier = std::move(next);
    }
    seen |= comp;
    out.push_back(comp.to_list());
  }
  return out;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

namespace detail {

class Colourer {
 public:
  Colourer(const Graph& g, int colours)
      : g_(g), n_(g.order()), colours_(colours), colour_(n_, -1),
        nbr_count_(static_cast<std::size_t>(n_) * colours, 0) {}

  bool solve() { return solve(0, 0); }

  /// DSATUR greedy; returns a proper colouring using at most n colours.
  std::vector<int> greedy() {
    for (int placed = 0; placed < n_; ++placed) {
      const Vertex v = pick();
      int c = 0;
      while (count(v, c) > 0) ++c;
      assign(v, c, +1);
    }
    return colour_;
  }

  const std::vector<int>& colouring() const { return colour_; }

 private:
  int& count(Vertex v, int c) { return nbr_count_[static_cast<std::size_t>(v) * colours_ + c]; }

  int saturation(Vertex v) {
    int s = 0;
    for (int c = 0; c < colours_; ++c) s += count(v, c) > 0 ? 1 : 0;
    return s;
  }

  Vertex pick() {
    Vertex best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      const int sat = saturation(v);
      const int deg = g_.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  void assign(Vertex v, int c, int delta) {
    colour_[v] = delta > 0 ? c : -1;
    g_.neighbourhood(v).for_each([&](Vertex w) { count(w, c) += delta; });
  }

  bool solve(int placed, int used) {
    if (placed == n_) return true;
    const Vertex v = pick();
    const int top = std::min(used + 1, colours_);
    for (int c = 0; c < top; ++c) {
      if (count(v, c) > 0) continue;
      assign(v, c, +1);
      if (solve(placed + 1, std::max(used, c + 1))) return true;
      assign(v, c, -1);
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int colours_;
  std::vector<int> colour_;
  std::vector<int> nbr_count_;
};

inline int greedy_clique_size(const Graph& g) {
  VertexList order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  VertexList clique;
  for (Vertex v : order) {
    if (std::all_of(clique.begin(), clique.end(), [&](Vertex u) { return g.has_edge(u, v); })) {
      clique.push_back(v);
    }
  }
  return static_cast<int>(clique.size());
}

}  // namespace detail

/// A proper colouring with the minimum number of colours (colour ids 0..chi-1).
inline std::vector<int> optimal_coloring(const Graph& g, int limit = kDefaultChromaticLimit) {
  if (g.order() == 0) throw InvalidInput("chromatic number needs at least one vertex");
  if (g.order() > limit) {
    throw SizeLimitError("exact colouring limited to " + std::to_string(limit) + " vertices, got " +
                         std::to_string(g.order()));
  }
  std::vector<int> best = detail::Colourer(g, g.order()).greedy();
  const int upper = *std::max_element(best.begin(), best.end()) + 1;
  const int lower = std::max(1, detail::greedy_clique_size(g));
  for (int c = lower; c < upper; ++c) {
    detail::Colourer attempt(g, c);
    if (attempt.solve()) return attempt.colouring();
  }
  return best;
}

inline int chromatic_number(const Graph& g, int limit = kDefaultChromaticLimit) {
  const auto colouring = optimal_coloring(g, limit);
  return *std::max_element(colouring.begin(), colouring.end()) + 1;
}

/// Colour classes of a colouring, each sorted ascending, empty classes dropped.
inline std::vector<VertexList> colour_classes(const std::vector<int>& colouring) {
  const int colours = colouring.empty() ? 0 : *std::max_element(colouring.begin(), colouring.end()) + 1;
  std::vector<VertexList> classes(colours);
  for (Vertex v = 0; v < static_cast<Vertex>(colouring.size()); ++v) classes[colouring[v]].push_back(v);
  std::erase_if(classes, [](const VertexList& c) { return c.empty(); });
  return classes;
}

namespace detail {

// Number of vertices reachable from `from` through vertices in `allowed`
// (excluding `from` itself), stopping early once `needed` is reached.
inline int reach_at_least(const Graph& g, Vertex from, const VertexBits& allowed, int needed) {
  VertexBits reach(g.order());
  VertexBits frontier = VertexBits::from_span(g.row(from), g.order());
  frontier &= allowed;
  int total = 0;
  while (!frontier.empty()) {
    reach |= frontier;
    total = reach.count();
    if (total >= needed) return total;
    VertexBits next(g.order());
    frontier.for_each([&](Vertex v) { next |= g.row(v); });
    next &= allowed;
    next.subtract(reach);
    frontier = std::move(next);
  }
  return total;
}

class PathSearch {
 public:
  PathSearch(const Graph& g, int k, std::uint64_t node_limit)
      : g_(g), k_(k), node_limit_(node_limit), free_(VertexBits::all(g.order())) {}

  std::optional<VertexList> run() {
    for (const auto& comp : components(g_)) {
      if (static_cast<int>(comp.size()) < k_) continue;
      for (Vertex s : comp) {
        path_.assign(1, s);
        free_.erase(s);
        if (extend()) return path_;
        free_.insert(s);
      }
    }
    return std::nullopt;
  }

 private:
  bool extend() {
    const int have = static_cast<int>(path_.size());
    if (have == k_) return true;
    if (++nodes_ > node_limit_) throw BudgetExceeded("path search node limit exceeded");
    const Vertex end = path_.back();
    if (k_ - have > 1 && reach_at_least(g_, end, free_, k_ - have) < k_ - have) return false;
    VertexBits next = VertexBits::from_span(g_.row(end), g_.order());
    next &= free_;
    for (Vertex w : next.to_list()) {
      path_.push_back(w);
      free_.erase(w);
      if (extend()) return true;
      free_.insert(w);
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  VertexBits free_;
  VertexList path_;
};

class CycleSearch {
 public:
  CycleSearch(const Graph& g, int k, std::uint64_t node_limit)
      : g_(g), k_(k), node_limit_(node_limit) {}

  std::optional<VertexList> run() {
    for (Vertex s = 0; s < g_.order(); ++s) {
      // s is the lowest vertex of the cycle.
      free_ = VertexBits(g_.order());
      for (Vertex v = s + 1; v < g_.order(); ++v) {
        if (g_.degree(v) >= 2) free_.insert(v);
      }
      if (free_.count() < k_ - 1 || g_.degree(s) < 2) continue;
      start_ = s;
      path_.assign(1, s);
      if (extend()) return path_;
    }
    return std::nullopt;
  }

 private:
  bool extend() {
    const int have = static_cast<int>(path_.size());
    const Vertex end = path_.back();
    if (have == k_) return g_.has_edge(end, start_) && path_[1] < end;
    if (++nodes_ > node_limit_) throw BudgetExceeded("cycle search node limit exceeded");
    if (k_ - have > 1 && reach_at_least(g_, end, free_, k_ - have) < k_ - have) return false;
    VertexBits next = VertexBits::from_span(g_.row(end), g_.order());
    next &= free_;
    if (have == k_ - 1) next &= g_.row(start_);
    for (Vertex w : next.to_list()) {
      path_.push_back(w);
      free_.erase(w);
      if (extend()) return true;
      free_.insert(w);
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  Vertex start_ = 0;
  VertexBits free_;
  VertexList path_;
};

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& pattern, const Graph& host, std::uint64_t node_limit)
      : pattern_(pattern), host_(host), node_limit_(node_limit),
        used_(host.order()), image_(pattern.order(), -1) {
    build_order();
    host_degree_.resize(host.order());
    for (Vertex v = 0; v < host.order(); ++v) host_degree_[v] = host.degree(v);
  }

  std::optional<Embedding> run() {
    if (!degrees_dominate()) return std::nullopt;
    if (!place(0)) return std::nullopt;
    return Embedding{image_};
  }

 private:
  // Pattern vertices ordered so that each one has as many earlier neighbours as
  // possible; the first of each component is its highest-degree vertex.
  void build_order() {
    const int n = pattern_.order();
    std::vector<bool> placed(n, false);
    std::vector<int> links(n, 0);
    for (int step = 0; step < n; ++step) {
      Vertex best = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best < 0 || links[v] > links[best] ||
            (links[v] == links[best] && pattern_.degree(v) > pattern_.degree(best))) {
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      VertexList anchors;
      for (Vertex w : pattern_.neighbours(best)) {
        if (placed[w]) anchors.push_back(w);
        else ++links[w];
      }
      anchors_.push_back(std::move(anchors));
    }
  }

  // The i-th largest pattern degree must fit under the i-th largest host degree.
  bool degrees_dominate() const {
    std::vector<int> p(pattern_.order());
    for (Vertex v = 0; v < pattern_.order(); ++v) p[v] = pattern_.degree(v);
    std::vector<int> h = host_degree_;
    std::sort(p.begin(), p.end(), std::greater<>());
    std::sort(h.begin(), h.end(), std::greater<>());
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] > h[i]) return false;
    }
    return true;
  }

  bool place(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (++nodes_ > node_limit_) throw BudgetExceeded("embedding search node limit exceeded");
    const Vertex p = order_[depth];
    const int need = pattern_.degree(p);
    VertexBits cand = VertexBits::all(host_.order());
    for (Vertex a : anchors_[depth]) cand &= host_.row(image_[a]);
    cand.subtract(used_);
    for (Vertex h : cand.to_list()) {
      if (host_degree_[h] < need) continue;
      image_[p] = h;
      used_.insert(h);
      if (place(depth + 1)) return true;
      used_.erase(h);
      image_[p] = -1;
    }
    return false;
  }

  const Graph& pattern_;
  const Graph& host_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  VertexBits used_;
  VertexList image_;
  VertexList order_;
  std::vector<VertexList> anchors_;
  std::vector<int> host_degree_;
};

}  // namespace detail

/// A path on k vertices, or nullopt only if none exists.
inline std::optional<VertexList> find_path(const Graph& g, int k,
                                           std::uint64_t node_limit = kUnlimitedNodes) {
  if (k < 1) throw InvalidInput("path length must be at least 1 vertex");
  if (k > g.order()) return std::nullopt;
  if (k == 1) return VertexList{0};
  return detail::PathSearch(g, k, node_limit).run();
}

/// A cycle on k vertices starting at its lowest vertex, or nullopt only if none exists.
inline std::optional<VertexList> find_cycle(const Graph& g, int k,
                                            std::uint64_t node_limit = kUnlimitedNodes) {
  if (k < 3) throw InvalidInput("cycle length must be at least 3");
  if (k > g.order()) return std::nullopt;
  return detail::CycleSearch(g, k, node_limit).run();
}

/// An injective edge-preserving map of `pattern` into `host` (not necessarily
/// induced), or nullopt only if none exists.
inline std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& host,
                                               std::uint64_t node_limit = kUnlimitedNodes) {
  if (pattern.order() > host.order()) return std::nullopt;
  if (pattern.edge_count() > host.edge_count()) return std::nullopt;
  return detail::EmbeddingSearch(pattern, host, node_limit).run();
}

/// True iff `e` is injective into host's vertex range and preserves every edge.
inline bool is_valid_embedding(const Graph& pattern, const Graph& host, const Embedding& e) {
  if (static_cast<int>(e.map.size()) != pattern.order()) return false;
  VertexBits seen(host.order());
  for (Vertex h : e.map) {
    if (h < 0 || h >= host.order() || seen.contains(h)) return false;
    seen.insert(h);
  }
  for (auto [u, v] : pattern.edges()) {
    if (!host.has_edge(e.map[u], e.map[v])) return false;
  }
  return true;
}

inline bool is_path(const Graph& g, std::span<const Vertex> path) {
  VertexBits seen(g.order());
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex v = path[i];
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
    if (i > 0 && !g.has_edge(path[i - 1], v)) return false;
  }
  return true;
}

inline bool is_cycle(const Graph& g, std::span<const Vertex> cycle) {
  return cycle.size() >= 3 && is_path(g, cycle) && g.has_edge(cycle.back(), cycle.front());
}

}  // namespace ramsey
