#pragma once

#include <queue>
#include <string>
#include <vector>

#include "ramsey_cert/errors.hpp"
#include "ramsey_cert/graph.hpp"
#include "ramsey_cert/search.hpp"

namespace ramsey {

/// A maximum matching together with a Tutte-Berge witness set S realising
///   |matching| = (N - odd(G - S) + |S|) / 2.
struct MatchingCertificate {
  std::vector<Edge> matching;
  VertexList witness_set;
  int odd_components = 0;
};

namespace detail {

// Edmonds' blossom algorithm, single-root alternating tree per search.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order()), mate_(n_, -1), parent_(n_), base_(n_), even_(n_), in_blossom_(n_) {}

  void solve() {
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (Vertex w : g_.neighbours(v)) {
        if (mate_[w] == -1) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      const Vertex end = grow(v);
      if (end != -1) augment(end);
    }
  }

  /// Grows the alternating tree rooted at `root`; returns the exposed vertex
  /// ending an augmenting path, or -1. After a failed search, even()
  /// marks every vertex reachable from root by an even alternating path.
  Vertex grow(Vertex root) {
    std::fill(even_.begin(), even_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    even_[root] = true;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (Vertex to : g_.neighbours(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          const Vertex cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!even_[i]) {
              even_[i] = true;
              queue.push(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          even_[mate_[to]] = true;
          queue.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  const std::vector<Vertex>& mate() const { return mate_; }
  const std::vector<bool>& even() const { return even_; }

  std::vector<Edge> matching() const {
    std::vector<Edge> out;
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] > v) out.emplace_back(v, mate_[v]);
    }
    return out;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  void augment(Vertex v) {
    while (v != -1) {
      const Vertex pv = parent_[v];
      const Vertex next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> even_;
  std::vector<bool> in_blossom_;
};

}  // namespace detail

inline std::vector<Edge> maximum_matching(const Graph& g) {
  detail::Blossom b(g);
  b.solve();
  return b.matching();
}

/// Maximum matching plus the Edmonds-Gallai witness: D is the set of vertices
/// missed by some maximum matching, found as the union of even vertices of the
/// alternating trees grown from each exposed vertex; S = N(D) \ D.
inline MatchingCertificate tutte_berge_witness(const Graph& g) {
  detail::Blossom b(g);
  b.solve();
  const int n = g.order();
  VertexBits missable(n);
  for (Vertex r = 0; r < n; ++r) {
    if (b.mate()[r] != -1) continue;
    if (b.grow(r) != -1) throw ContractViolation("augmenting path found after maximum matching");
    for (Vertex v = 0; v < n; ++v) {
      if (b.even()[v]) missable.insert(v);
    }
  }
  VertexBits s(n);
  missable.for_each([&](Vertex v) { s |= g.row(v); });
  s.subtract(missable);

  MatchingCertificate cert;
  cert.matching = b.matching();
  cert.witness_set = s.to_list();

  VertexList rest;
  for (Vertex v = 0; v < n; ++v) {
    if (!s.contains(v)) rest.push_back(v);
  }
  for (const auto& comp : components(g.induced(rest))) {
    if (comp.size() % 2 == 1) ++cert.odd_components;
  }
  const int lhs = n - cert.odd_components + static_cast<int>(cert.witness_set.size());
  if (lhs != 2 * static_cast<int>(cert.matching.size())) {
    throw ContractViolation("Tutte-Berge equality failed: (" + std::to_string(n) + " - " +
                            std::to_string(cert.odd_components) + " + " +
                            std::to_string(cert.witness_set.size()) + ")/2 != " +
                            std::to_string(cert.matching.size()));
  }
  return cert;
}

}  // namespace ramsey
