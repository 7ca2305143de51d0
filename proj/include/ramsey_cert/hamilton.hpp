#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ramsey_cert/errors.hpp"
#include "ramsey_cert/graph.hpp"

namespace ramsey {

namespace detail {

// Extends the path at both ends with unvisited neighbours until neither
// endpoint has one.
inline void extend_maximal(const Graph& g, VertexList& path, VertexBits& on_path) {
  for (bool grew = true; grew;) {
    grew = false;
    for (int side = 0; side < 2; ++side) {
      for (;;) {
        VertexBits next = VertexBits::from_span(g.row(path.back()), g.order());
        next.subtract(on_path);
        const Vertex w = next.first();
        if (w < 0) break;
        path.push_back(w);
        on_path.insert(w);
        grew = true;
      }
      std::reverse(path.begin(), path.end());
    }
  }
}

// Turns a maximal path into a cycle on the same vertex set. Requires
// deg(front) + deg(back) >= path length, which the Dirac condition gives.
inline VertexList close_path(const Graph& g, const VertexList& path) {
  const Vertex a = path.front();
  const Vertex b = path.back();
  if (g.has_edge(a, b)) return path;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (g.has_edge(a, path[i + 1]) && g.has_edge(b, path[i])) {
      // a .. p_i, b .. p_{i+1}
      VertexList cycle(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      cycle.insert(cycle.end(), path.rbegin(), path.rend() - static_cast<std::ptrdiff_t>(i) - 1);
      return cycle;
    }
  }
  throw ContractViolation("no rotation closes the maximal path");
}

}  // namespace detail

/// Hamiltonian cycle of a graph with minimum degree >= |g|/2, built by
/// rotation-extension: grow a maximal path, rotate it into a cycle, then open
/// the cycle at a vertex adjacent to an unvisited one and repeat.
inline VertexList hamiltonian_cycle_dirac(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw DegreeConditionError("Hamiltonian cycle needs at least 3 vertices");
  if (2 * g.min_degree() < n) {
    throw DegreeConditionError("minimum degree " + std::to_string(g.min_degree()) +
                               " is below half of " + std::to_string(n));
  }
  VertexList path{0};
  VertexBits on_path(n);
  on_path.insert(0);
  for (;;) {
    detail::extend_maximal(g, path, on_path);
    VertexList cycle = detail::close_path(g, path);
    if (static_cast<int>(cycle.size()) == n) return cycle;

    // Lowest-index pivot on the cycle with a neighbour off it.
    std::size_t pivot = cycle.size();
    Vertex outside = -1;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      VertexBits off = VertexBits::from_span(g.row(cycle[i]), n);
      off.subtract(on_path);
      if (!off.empty() && (pivot == cycle.size() || cycle[i] < cycle[pivot])) {
        pivot = i;
        outside = off.first();
      }
    }
    if (outside < 0) throw ContractViolation("Dirac graph is disconnected");
    path.assign(1, outside);
    for (std::size_t j = 0; j < cycle.size(); ++j) path.push_back(cycle[(pivot + j) % cycle.size()]);
    on_path.insert(outside);
  }
}

}  // namespace ramsey
