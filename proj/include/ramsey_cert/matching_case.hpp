#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ramsey_cert/errors.hpp"
#include "ramsey_cert/graph.hpp"
#include "ramsey_cert/hamilton.hpp"
#include "ramsey_cert/matching.hpp"
#include "ramsey_cert/search.hpp"
#include "ramsey_cert/witness.hpp"

// R(C_k, mK_2) = 2m + floor((k-1)/2) for m >= k >= 3: the extremal colouring
// and the constructive extractor.

namespace ramsey {

inline int matching_ramsey_order(int k, int m) { return 2 * m + (k - 1) / 2; }

/// Parts of the red complete multipartite graph F: vertices drawn from distinct
/// components of (blue - S), so every cross-part pair is red.
struct PartiteSelection {
  std::vector<VertexList> parts;

  int total() const {
    int t = 0;
    for (const auto& p : parts) t += static_cast<int>(p.size());
    return t;
  }
};

/// Colouring of K_{N-1}, N = 2m + floor((k-1)/2): blue clique on vertices
/// 0..2m-2, every other pair red. It has no red C_k and no blue mK_2.
inline ColoredComplete lower_bound_coloring(int k, int m) {
  if (k < 3 || m < k) throw InvalidInput("lower_bound_coloring needs m >= k >= 3");
  const int order = matching_ramsey_order(k, m) - 1;
  const int clique = 2 * m - 1;
  ColoredComplete c(order);
  for (Vertex u = 0; u < order; ++u) {
    for (Vertex v = u + 1; v < order; ++v) {
      if (v >= clique) c.set_red(u, v);
    }
  }
  return c;
}

/// Picks k vertices round-robin across components (largest first, one vertex
/// per component per sweep). Needs at least floor((k+1)/2) + 1 components
/// spanning at least k vertices; the resulting parts then number at least
/// floor((k+1)/2) + 1 with none above floor((k-1)/2).
inline PartiteSelection select_partite(std::vector<VertexList> comps, int k) {
  std::stable_sort(comps.begin(), comps.end(),
                   [](const VertexList& a, const VertexList& b) { return a.size() > b.size(); });
  PartiteSelection sel;
  sel.parts.resize(comps.size());
  int chosen = 0;
  for (std::size_t round = 0; chosen < k; ++round) {
    bool progressed = false;
    for (std::size_t c = 0; c < comps.size() && chosen < k; ++c) {
      if (round < comps[c].size()) {
        sel.parts[c].push_back(comps[c][round]);
        ++chosen;
        progressed = true;
      }
    }
    if (!progressed) throw ContractViolation("components span fewer than k vertices");
  }
  std::erase_if(sel.parts, [](const VertexList& p) { return p.empty(); });

  const int min_parts = (k + 1) / 2 + 1;
  const int max_part = (k - 1) / 2;
  if (static_cast<int>(sel.parts.size()) < min_parts) {
    throw ContractViolation("partite selection has " + std::to_string(sel.parts.size()) + " parts, needs " +
                            std::to_string(min_parts));
  }
  for (const auto& p : sel.parts) {
    if (static_cast<int>(p.size()) > max_part) {
      throw ContractViolation("partite selection part of size " + std::to_string(p.size()) + " exceeds " +
                              std::to_string(max_part));
    }
  }
  return sel;
}

/// Blue mK_2 (embedding of matching_graph(m)) or a red C_k. When the blue
/// maximum matching is short, the Tutte-Berge set S leaves many components in
/// blue - S; k vertices spread over them span a red complete multipartite
/// graph of minimum degree >= k/2, whose Hamiltonian cycle is the red C_k.
inline Witness matching_witness(const ColoredComplete& coloring, int k, int m) {
  const int n = coloring.order();
  if (k < 3 || m < k) throw InvalidInput("matching_witness needs m >= k >= 3");
  if (k % 2 == 0) throw InvalidInput("matching_witness needs odd k");
  if (n < matching_ramsey_order(k, m)) {
    throw InvalidInput("colouring of order " + std::to_string(n) + " is below 2m + floor((k-1)/2) = " +
                       std::to_string(matching_ramsey_order(k, m)));
  }
  const Graph blue = coloring.blue();
  const MatchingCertificate cert = tutte_berge_witness(blue);
  if (static_cast<int>(cert.matching.size()) >= m) {
    Embedding e{VertexList(2 * m)};
    for (int i = 0; i < m; ++i) {
      e.map[2 * i] = cert.matching[i].first;
      e.map[2 * i + 1] = cert.matching[i].second;
    }
    return BlueCopy{std::move(e)};
  }

  const int s = static_cast<int>(cert.witness_set.size());
  if (cert.odd_components < n - 2 * m + 2 + s) {
    throw ContractViolation("odd(G - S) = " + std::to_string(cert.odd_components) + " is below N - 2m + 2 + |S|");
  }
  if (2 * s > n) throw ContractViolation("Tutte-Berge set exceeds N/2");
  if (n - s < k) throw ContractViolation("fewer than k vertices outside the Tutte-Berge set");

  VertexList rest;
  VertexBits in_s(n);
  for (Vertex v : cert.witness_set) in_s.insert(v);
  for (Vertex v = 0; v < n; ++v) {
    if (!in_s.contains(v)) rest.push_back(v);
  }
  SubColoring outside = coloring.restrict_to(rest);
  std::vector<VertexList> comps;
  for (const auto& comp : components(outside.coloring.blue())) comps.push_back(outside.lift(comp));

  const PartiteSelection sel = select_partite(std::move(comps), k);
  VertexList f_vertices;
  std::vector<int> part_of;
  for (std::size_t p = 0; p < sel.parts.size(); ++p) {
    for (Vertex v : sel.parts[p]) {
      f_vertices.push_back(v);
      part_of.push_back(static_cast<int>(p));
    }
  }
  Graph f(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (part_of[i] == part_of[j]) continue;
      if (!coloring.is_red(f_vertices[i], f_vertices[j])) {
        throw ContractViolation("blue pair between distinct components of blue - S");
      }
      f.add_edge(i, j);
    }
  }
  RedCycle cycle;
  for (int i : hamiltonian_cycle_dirac(f)) cycle.vertices.push_back(f_vertices[i]);
  return cycle;
}

}  // namespace ramsey
