#pragma once

#include <span>
#include <string>
#include <vector>

#include "ramsey_cert/errors.hpp"
#include "ramsey_cert/graph.hpp"
#include "ramsey_cert/search.hpp"

namespace ramsey {

/// Closes a path of k-1 vertices inside N(v) into the k-cycle v, p_1, ..., p_{k-1}.
inline VertexList cycle_from_first_neighbourhood(const Graph& g, Vertex v, std::span<const Vertex> path) {
  if (v < 0 || v >= g.order()) throw InvalidInput("hub vertex out of range");
  if (path.size() < 2) throw InvalidInput("first-neighbourhood path needs at least 2 vertices");
  if (!is_path(g, path)) throw InvalidInput("first-neighbourhood path is not a path of the graph");
  for (Vertex p : path) {
    if (!g.has_edge(v, p)) {
      throw InvalidInput("path vertex " + std::to_string(p) + " is not adjacent to hub " + std::to_string(v));
    }
  }
  VertexList cycle{v};
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

/// Which branch of the second-neighbourhood construction produced the cycle.
enum class SecondNeighbourhoodCase {
  distinct_connectors,  // some u_j != u_{j+k-4}
  first_pair_differs,   // u_1 != u_2
  second_pair_differs,  // u_2 != u_3
  single_connector,     // u_1 = u_{k-1}
};

struct SecondNeighbourhoodCycle {
  VertexList cycle;
  SecondNeighbourhoodCase which;
  int j = 0;  // 1-based index for distinct_connectors, else 0
};

/// Given a path v_1..v_{2k} in the second neighbourhood of v (k >= 5), returns
/// a k-cycle. Each v_i is joined to v through u_i, the lowest-index common
/// neighbour of v and v_i.
inline SecondNeighbourhoodCycle cycle_from_second_neighbourhood(const Graph& g, Vertex v,
                                                                std::span<const Vertex> path) {
  if (path.size() % 2 != 0) throw InvalidInput("second-neighbourhood path must have 2k vertices");
  const int k = static_cast<int>(path.size()) / 2;
  if (k < 5) throw InvalidInput("second-neighbourhood construction needs k >= 5");
  if (v < 0 || v >= g.order()) throw InvalidInput("hub vertex out of range");
  if (!is_path(g, path)) throw InvalidInput("second-neighbourhood path is not a path of the graph");

  // 1-based views: at(i) = v_i, conn(i) = u_i.
  auto at = [&](int i) { return path[i - 1]; };
  VertexList connector(2 * k + 1, -1);
  for (int i = 1; i <= 2 * k; ++i) {
    const Vertex x = at(i);
    if (x == v || g.has_edge(v, x)) {
      throw InvalidInput("path vertex " + std::to_string(x) + " is not in the second neighbourhood");
    }
    VertexBits common = g.neighbourhood(v);
    common &= g.row(x);
    connector[i] = common.first();
    if (connector[i] < 0) {
      throw InvalidInput("path vertex " + std::to_string(x) + " has no common neighbour with the hub");
    }
  }
  auto conn = [&](int i) { return connector[i]; };

  auto finish = [&](VertexList cycle, SecondNeighbourhoodCase which, int j) {
    if (static_cast<int>(cycle.size()) != k || !is_cycle(g, cycle)) {
      throw ContractViolation("second-neighbourhood construction produced an invalid cycle");
    }
    return SecondNeighbourhoodCycle{std::move(cycle), which, j};
  };

  for (int j = 1; j <= k; ++j) {
    if (conn(j) != conn(j + k - 4)) {
      VertexList cycle{v, conn(j)};
      for (int i = j; i <= j + k - 4; ++i) cycle.push_back(at(i));
      cycle.push_back(conn(j + k - 4));
      return finish(std::move(cycle), SecondNeighbourhoodCase::distinct_connectors, j);
    }
  }

  if (conn(1) != conn(k - 3) || conn(k - 3) != conn(2 * k - 7) || conn(2) != conn(k - 2) ||
      conn(k - 2) != conn(2 * k - 6) || conn(3) != conn(k - 1) || conn(k - 1) != conn(2 * k - 5)) {
    throw ContractViolation("connector equalities do not follow from u_j = u_{j+k-4}");
  }

  if (conn(1) != conn(2)) {
    VertexList cycle{conn(1), at(1), at(2), conn(2)};
    for (int i = k - 2; i <= 2 * k - 7; ++i) cycle.push_back(at(i));
    return finish(std::move(cycle), SecondNeighbourhoodCase::first_pair_differs, 0);
  }
  if (conn(2) != conn(3)) {
    VertexList cycle{conn(2), at(2), at(3), conn(3)};
    for (int i = k - 1; i <= 2 * k - 6; ++i) cycle.push_back(at(i));
    return finish(std::move(cycle), SecondNeighbourhoodCase::second_pair_differs, 0);
  }
  VertexList cycle{conn(1)};
  for (int i = 1; i <= k - 1; ++i) cycle.push_back(at(i));
  return finish(std::move(cycle), SecondNeighbourhoodCase::single_connector, 0);
}

inline const char* to_string(SecondNeighbourhoodCase c) {
  switch (c) {
    case SecondNeighbourhoodCase::distinct_connectors: return "distinct_connectors";
    case SecondNeighbourhoodCase::first_pair_differs: return "first_pair_differs";
    case SecondNeighbourhoodCase::second_pair_differs: return "second_pair_differs";
    case SecondNeighbourhoodCase::single_connector: return "single_connector";
  }
  return "unknown";
}

}  // namespace ramsey
