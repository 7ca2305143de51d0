#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ramsey_cert/errors.hpp"
#include "ramsey_cert/graph.hpp"
#include "ramsey_cert/integer_math.hpp"
#include "ramsey_cert/search.hpp"
#include "ramsey_cert/target.hpp"

// Red path versus blue complete multipartite graph. In a colouring of K_N with
// N >= k(t-1) + sum(n_i) there is a red P_k or a blue K_{n_1,...,n_t}; since H
// sits inside the multipartite graph spanned by its colour classes, this also
// yields a red P_k or a blue H once N >= |H| + k(chi(H) - 1).

namespace ramsey {

struct RedPath {
  VertexList vertices;

  friend bool operator==(const RedPath&, const RedPath&) = default;
};

struct BluePartite {
  std::vector<VertexList> parts;

  friend bool operator==(const BluePartite&, const BluePartite&) = default;
};

using PathOrPartite = std::variant<RedPath, BluePartite>;
using PathOrCopy = std::variant<RedPath, Embedding>;

struct MultipartiteSpec {
  std::vector<int> part_sizes;

  int t() const noexcept { return static_cast<int>(part_sizes.size()); }
  int total() const { return std::accumulate(part_sizes.begin(), part_sizes.end(), 0); }

  void validate() const {
    if (part_sizes.empty()) throw InvalidInput("multipartite spec needs at least one part");
    for (int s : part_sizes) {
      if (s < 1) throw InvalidInput("multipartite part sizes must be positive");
    }
  }
};

/// |H| + k (chi(H) - 1).
inline std::int64_t bound_chi(int k, int n, int chi) {
  if (k < 1 || chi < 1) throw InvalidInput("bound_chi needs k >= 1 and chi >= 1");
  return static_cast<std::int64_t>(n) + static_cast<std::int64_t>(k) * (chi - 1);
}

/// |H| + ceil(k sqrt(2 e(H))), exact.
inline std::int64_t bound_sqrt(int k, int n, std::int64_t m) {
  if (k < 1 || m < 1) throw InvalidInput("bound_sqrt needs k >= 1 and m >= 1");
  return static_cast<std::int64_t>(n) +
         static_cast<std::int64_t>(ceil_k_sqrt_2m(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(m)));
}

/// k(t-1) + sum(n_i).
inline std::int64_t multipartite_bound(int k, const MultipartiteSpec& spec) {
  return static_cast<std::int64_t>(k) * (spec.t() - 1) + spec.total();
}

namespace detail {

// Lexicographically first pair (A, B), |A| = a, |B| = b, disjoint, with every
// A-B pair blue. A is enumerated; B is the lowest part of A's common blue
// neighbourhood, which never contains a member of A.
inline std::optional<std::pair<VertexList, VertexList>> find_blue_biclique(const Graph& blue, int a, int b) {
  const int n = blue.order();
  if (a + b > n) return std::nullopt;
  VertexList chosen;
  std::optional<std::pair<VertexList, VertexList>> found;
  auto recurse = [&](auto&& self, Vertex next, const VertexBits& common) -> bool {
    if (static_cast<int>(chosen.size()) == a) {
      if (common.count() < b) return false;
      VertexList side = common.to_list();
      side.resize(b);
      found.emplace(chosen, std::move(side));
      return true;
    }
    for (Vertex v = next; v < n; ++v) {
      VertexBits narrowed = common;
      narrowed &= blue.row(v);
      if (narrowed.count() < b) continue;
      chosen.push_back(v);
      if (self(self, v + 1, narrowed)) return true;
      chosen.pop_back();
    }
    return false;
  };
  recurse(recurse, 0, VertexBits::all(n));
  return found;
}

}  // namespace detail

/// Red P_k, or disjoint sets of sizes n1, n2 with every cross pair blue.
/// Needs N >= k + n1 + n2 - 2, where such an outcome always exists.
inline PathOrPartite base_bipartite(const ColoredComplete& coloring, int k, int n1, int n2) {
  if (k < 1 || n1 < 1 || n2 < 1) throw InvalidInput("base_bipartite needs k, n1, n2 >= 1");
  if (static_cast<std::int64_t>(coloring.order()) < static_cast<std::int64_t>(k) + n1 + n2 - 2) {
    throw SizeLimitError("colouring of order " + std::to_string(coloring.order()) +
                         " is below k + n1 + n2 - 2 = " + std::to_string(k + n1 + n2 - 2));
  }
  if (auto path = find_path(coloring.red(), k)) return RedPath{std::move(*path)};
  const int a = std::min(n1, n2);
  const int b = std::max(n1, n2);
  auto found = detail::find_blue_biclique(coloring.blue(), a, b);
  if (!found) {
    throw ContractViolation("no red P_" + std::to_string(k) + " and no blue K_{" + std::to_string(n1) +
                            "," + std::to_string(n2) + "} in K_" + std::to_string(coloring.order()));
  }
  if (n1 <= n2) return BluePartite{{std::move(found->first), std::move(found->second)}};
  return BluePartite{{std::move(found->second), std::move(found->first)}};
}

/// Red P_k, or t disjoint sets with sizes spec.part_sizes and every cross pair
/// blue. For t >= 3 the first two parts are merged into one of size
/// n1 + n2 + k, solved recursively, and the merged part is then split by the
/// bipartite base case.
inline PathOrPartite red_path_or_blue_multipartite(const ColoredComplete& coloring, int k,
                                                   const MultipartiteSpec& spec) {
  spec.validate();
  if (k < 1) throw InvalidInput("path length must be at least 1");
  // The bipartite base needs only k + n1 + n2 - 2, and merging keeps that slack.
  const std::int64_t need = multipartite_bound(k, spec) - (spec.t() >= 2 ? 2 : 0);
  if (coloring.order() < need) {
    throw SizeLimitError("colouring of order " + std::to_string(coloring.order()) +
                         " is below k(t-1) + sum - 2 = " + std::to_string(need));
  }
  const auto& sizes = spec.part_sizes;
  if (spec.t() == 1) {
    VertexList part(sizes[0]);
    std::iota(part.begin(), part.end(), 0);
    return BluePartite{{std::move(part)}};
  }
  if (spec.t() == 2) return base_bipartite(coloring, k, sizes[0], sizes[1]);

  MultipartiteSpec merged;
  merged.part_sizes.push_back(sizes[0] + sizes[1] + k);
  merged.part_sizes.insert(merged.part_sizes.end(), sizes.begin() + 2, sizes.end());
  auto outer = red_path_or_blue_multipartite(coloring, k, merged);
  if (std::holds_alternative<RedPath>(outer)) return outer;
  auto& parts = std::get<BluePartite>(outer).parts;

  const SubColoring big = coloring.restrict_to(parts[0]);
  auto inner = base_bipartite(big.coloring, k, sizes[0], sizes[1]);
  if (auto* path = std::get_if<RedPath>(&inner)) return RedPath{big.lift(path->vertices)};
  auto& split = std::get<BluePartite>(inner).parts;
  BluePartite out;
  out.parts.push_back(big.lift(split[0]));
  out.parts.push_back(big.lift(split[1]));
  out.parts.insert(out.parts.end(), parts.begin() + 1, parts.end());
  return out;
}

/// Red P_k or a blue copy of `h`, given a proper colouring of h. Each colour
/// class is mapped onto its blue part in ascending order.
inline PathOrCopy red_path_or_blue_H(const ColoredComplete& coloring, int k, const Graph& h,
                                     const std::vector<int>& h_colouring) {
  if (h.order() == 0) return Embedding{};
  const auto classes = colour_classes(h_colouring);
  MultipartiteSpec spec;
  for (const auto& c : classes) spec.part_sizes.push_back(static_cast<int>(c.size()));
  auto result = red_path_or_blue_multipartite(coloring, k, spec);
  if (auto* path = std::get_if<RedPath>(&result)) return std::move(*path);
  const auto& parts = std::get<BluePartite>(result).parts;
  Embedding e{VertexList(h.order(), -1)};
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t i = 0; i < classes[c].size(); ++i) e.map[classes[c][i]] = parts[c][i];
  }
  return e;
}

inline PathOrCopy red_path_or_blue_H(const ColoredComplete& coloring, int k, const Graph& h,
                                     int chromatic_limit = kDefaultChromaticLimit) {
  if (h.order() == 0) return Embedding{};
  return red_path_or_blue_H(coloring, k, h, optimal_coloring(h, chromatic_limit));
}

inline PathOrCopy red_path_or_blue_H(const ColoredComplete& coloring, int k, const TargetGraph& h) {
  return red_path_or_blue_H(coloring, k, h.graph(), h.colouring());
}

}  // namespace ramsey
