#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ramsey_cert/errors.hpp"
#include "ramsey_cert/graph.hpp"
#include "ramsey_cert/search.hpp"
#include "ramsey_cert/witness.hpp"

// Ground truth for every certificate: witness validation, complete witness
// search, and exhaustive enumeration of all colourings of small K_N.

namespace ramsey {

/// The single validation authority for witnesses.
inline bool check_witness(const ColoredComplete& coloring, int k, const Graph& h, const Witness& w) {
  const int n = coloring.order();
  if (const auto* cycle = std::get_if<RedCycle>(&w)) {
    const auto& c = cycle->vertices;
    if (k < 3 || static_cast<int>(c.size()) != k) return false;
    VertexBits seen(n);
    for (Vertex v : c) {
      if (v < 0 || v >= n || seen.contains(v)) return false;
      seen.insert(v);
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!coloring.is_red(c[i], c[(i + 1) % c.size()])) return false;
    }
    return true;
  }
  const auto& map = std::get<BlueCopy>(w).embedding.map;
  if (static_cast<int>(map.size()) != h.order()) return false;
  VertexBits seen(n);
  for (Vertex v : map) {
    if (v < 0 || v >= n || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (auto [a, b] : h.edges()) {
    if (!coloring.is_blue(map[a], map[b])) return false;
  }
  return true;
}

struct BruteForceBudget {
  int max_order = 64;
  std::uint64_t max_nodes = 20'000'000;  // per search
};

/// A red C_k or blue copy of h if either exists, by complete search. Red is
/// tried first when red edges are at least half of all pairs.
inline std::optional<Witness> brute_force_witness(const ColoredComplete& coloring, int k, const Graph& h,
                                                  const BruteForceBudget& budget = {}) {
  const int n = coloring.order();
  if (n > budget.max_order) {
    throw BudgetExceeded("brute-force witness search limited to order " + std::to_string(budget.max_order) +
                         ", got " + std::to_string(n));
  }
  if (k < 3) throw InvalidInput("cycle length must be at least 3");
  auto red_cycle = [&]() -> std::optional<Witness> {
    if (auto c = find_cycle(coloring.red(), k, budget.max_nodes)) return RedCycle{std::move(*c)};
    return std::nullopt;
  };
  auto blue_copy = [&]() -> std::optional<Witness> {
    if (auto e = find_embedding(h, coloring.blue(), budget.max_nodes)) return BlueCopy{std::move(*e)};
    return std::nullopt;
  };
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (2 * coloring.red().edge_count() >= pairs) {
    if (auto w = red_cycle()) return w;
    return blue_copy();
  }
  if (auto w = blue_copy()) return w;
  return red_cycle();
}

/// Pairs (u, v), u < v, in lexicographic order; bit i of a colouring index
/// set means pair i is red.
inline std::vector<Edge> lex_pairs(int n) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) out.emplace_back(u, v);
  }
  return out;
}

inline ColoredComplete coloring_from_index(int n, std::uint64_t index) {
  ColoredComplete c(n);
  const auto pairs = lex_pairs(n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((index >> i) & 1U) c.set_red(pairs[i].first, pairs[i].second);
  }
  return c;
}

inline std::uint64_t coloring_index(const ColoredComplete& c) {
  const auto pairs = lex_pairs(c.order());
  if (pairs.size() > 64) throw InvalidInput("colouring index needs at most 64 pairs");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (c.is_red(pairs[i].first, pairs[i].second)) index |= std::uint64_t{1} << i;
  }
  return index;
}

struct VerifyOptions {
  unsigned jobs = 1;
  int max_pairs = 24;
};

struct VerifyResult {
  bool verified = false;
  std::uint64_t colorings = 0;  // size of the enumerated space
  std::optional<std::uint64_t> counterexample_index;
  std::optional<ColoredComplete> counterexample;
};

/// Decides whether every colouring of K_n holds a red C_k or a blue h. On
/// failure the counterexample is the one with the smallest index.
inline VerifyResult exhaustive_verify(int k, const Graph& h, int n, const VerifyOptions& opts = {}) {
  if (n < 0) throw InvalidInput("order must be non-negative");
  const auto pairs = lex_pairs(n);
  if (static_cast<int>(pairs.size()) > opts.max_pairs) {
    throw BudgetExceeded("K_" + std::to_string(n) + " has " + std::to_string(pairs.size()) +
                         " pairs; exhaustive budget is " + std::to_string(opts.max_pairs));
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  const unsigned jobs = std::max(1U, std::min<unsigned>(opts.jobs, static_cast<unsigned>(std::min<std::uint64_t>(total, 256))));
  const BruteForceBudget unbounded{n, kUnlimitedNodes};

  std::atomic<std::uint64_t> first_bad{total};
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    ColoredComplete c(n);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      if (idx >= first_bad.load(std::memory_order_relaxed)) return;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((idx >> i) & 1U) c.set_red(pairs[i].first, pairs[i].second);
        else c.set_blue(pairs[i].first, pairs[i].second);
      }
      if (!brute_force_witness(c, k, h, unbounded)) {
        std::uint64_t seen = first_bad.load();
        while (idx < seen && !first_bad.compare_exchange_weak(seen, idx)) {
        }
        return;
      }
    }
  };

  if (jobs == 1) {
    work(0, total);
  } else {
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
      const std::uint64_t begin = std::min(total, j * chunk);
      const std::uint64_t end = std::min(total, begin + chunk);
      workers.emplace_back(work, begin, end);
    }
    for (auto& w : workers) w.join();
  }

  VerifyResult result;
  result.colorings = total;
  result.verified = first_bad.load() == total;
  if (!result.verified) {
    result.counterexample_index = first_bad.load();
    result.counterexample = coloring_from_index(n, *result.counterexample_index);
  }
  return result;
}

struct RamseyResult {
  int value = 0;
  /// A colouring of K_{value-1} with no witness (absent when value <= 1).
  std::optional<ColoredComplete> lower_certificate;
};

/// Least n in [min_order, max_order] for which every colouring of K_n has a
/// witness, together with a witness-free colouring of K_{n-1}.
inline RamseyResult ramsey_number_exact(int k, const Graph& h, int min_order, int max_order,
                                        const VerifyOptions& opts = {}) {
  if (min_order < 1 || max_order < min_order) throw InvalidInput("invalid order range");
  std::optional<ColoredComplete> below;
  for (int n = min_order; n <= max_order; ++n) {
    auto r = exhaustive_verify(k, h, n, opts);
    if (!r.verified) {
      below = std::move(r.counterexample);
      continue;
    }
    if (!below && n > 1) {
      auto prev = exhaustive_verify(k, h, n - 1, opts);
      if (prev.verified) {
        throw RangeError("order " + std::to_string(min_order) + " already verified; range does not bracket");
      }
      below = std::move(prev.counterexample);
    }
    return RamseyResult{n, std::move(below)};
  }
  throw RangeError("no order up to " + std::to_string(max_order) + " verified");
}

}  // namespace ramsey
