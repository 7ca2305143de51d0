#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ramsey_cert/graph.hpp"

namespace fixtures {

using ramsey::Graph;
using ramsey::Vertex;
using ramsey::VertexList;

struct SecondNeighbourhood {
  Graph g;
  Vertex hub = 0;
  VertexList path;  // v_1 .. v_{2k}
};

// Hub 0, connectors 1..r, path vertices after them. pattern[i-1] is the
// connector index (0-based) joined to v_i; it is v_i's only connector.
inline SecondNeighbourhood from_pattern(int k, const std::vector<int>& pattern) {
  const int r = *std::max_element(pattern.begin(), pattern.end()) + 1;
  SecondNeighbourhood f{Graph(1 + r + 2 * k), 0, {}};
  for (int c = 0; c < r; ++c) f.g.add_edge(0, 1 + c);
  for (int i = 0; i < 2 * k; ++i) {
    const Vertex x = 1 + r + i;
    f.path.push_back(x);
    if (i > 0) f.g.add_edge(x - 1, x);
    f.g.add_edge(x, 1 + pattern[i]);
  }
  return f;
}

// u_i distinct for every i.
inline SecondNeighbourhood private_connectors(int k) {
  std::vector<int> p(2 * k);
  std::iota(p.begin(), p.end(), 0);
  return from_pattern(k, p);
}

// Connectors repeat with period k - 4; offset shifts which one v_1 sees.
inline SecondNeighbourhood periodic_connectors(int k, std::vector<int> period) {
  std::vector<int> p(2 * k);
  for (int i = 0; i < 2 * k; ++i) p[i] = period[i % period.size()];
  return from_pattern(k, p);
}

inline SecondNeighbourhood shared_connector(int k) { return from_pattern(k, std::vector<int>(2 * k, 0)); }

// The first j with u_j != u_{j+k-4} is exactly `j` (1-based).
inline SecondNeighbourhood distinct_at(int k, int j) {
  std::vector<int> p(2 * k, 0);
  p[j + k - 4 - 1] = 1;
  return from_pattern(k, p);
}

// Random graph with a planted P_{2k} in the second neighbourhood of the hub,
// relabelled by a random permutation.
inline SecondNeighbourhood planted(int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> conn_count(1, 2 * k);
  const int r = conn_count(rng);
  const int extra = static_cast<int>(rng() % 8);
  const int n = 1 + r + 2 * k + extra;
  const Vertex hub = 0;
  VertexList conns(r), path(2 * k), others(extra);
  std::iota(conns.begin(), conns.end(), 1);
  std::iota(path.begin(), path.end(), 1 + r);
  std::iota(others.begin(), others.end(), 1 + r + 2 * k);

  Graph g(n);
  for (Vertex c : conns) g.add_edge(hub, c);
  for (int i = 1; i < 2 * k; ++i) g.add_edge(path[i - 1], path[i]);
  std::uniform_int_distribution<int> pick_conn(0, r - 1);
  std::bernoulli_distribution sometimes(0.15);
  for (Vertex x : path) {
    g.add_edge(x, conns[pick_conn(rng)]);
    if (sometimes(rng)) g.add_edge(x, conns[pick_conn(rng)]);
  }
  // noise that never touches the hub
  for (Vertex a = 1; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (!g.has_edge(a, b) && sometimes(rng) && sometimes(rng)) g.add_edge(a, b);

  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  SecondNeighbourhood f{Graph(n), perm[hub], {}};
  for (auto [a, b] : g.edges()) f.g.add_edge(perm[a], perm[b]);
  for (Vertex x : path) f.path.push_back(perm[x]);
  return f;
}

}  // namespace fixtures
