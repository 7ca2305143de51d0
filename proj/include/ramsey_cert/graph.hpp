#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ramsey_cert/errors.hpp"

namespace ramsey {

using Vertex = int;
using VertexList = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(int order) {
  return (static_cast<std::size_t>(order) + kWordBits - 1) / kWordBits;
}

/// Fixed-capacity set of vertices 0..capacity-1 stored as machine words.
class VertexBits {
 public:
  VertexBits() = default;
  explicit VertexBits(int capacity) : capacity_(capacity), words_(words_for(capacity), 0) {}

  static VertexBits from_span(std::span<const Word> row, int capacity) {
    VertexBits out(capacity);
    std::copy(row.begin(), row.end(), out.words_.begin());
    return out;
  }

  static VertexBits all(int capacity) {
    VertexBits out(capacity);
    for (Vertex v = 0; v < capacity; ++v) out.insert(v);
    return out;
  }

  int capacity() const noexcept { return capacity_; }
  std::span<const Word> words() const noexcept { return words_; }

  bool contains(Vertex v) const { return (words_[v / kWordBits] >> (v % kWordBits)) & 1U; }
  void insert(Vertex v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(Vertex v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

  int count() const {
    int total = 0;
    for (Word w : words_) total += std::popcount(w);
    return total;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  /// Lowest member, or -1.
  Vertex first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
    }
    return -1;
  }

  VertexBits& operator&=(std::span<const Word> other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other[i];
    return *this;
  }
  VertexBits& operator&=(const VertexBits& other) { return *this &= other.words(); }
  VertexBits& operator|=(std::span<const Word> other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other[i];
    return *this;
  }
  VertexBits& operator|=(const VertexBits& other) { return *this |= other.words(); }
  VertexBits& subtract(std::span<const Word> other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other[i];
    return *this;
  }
  VertexBits& subtract(const VertexBits& other) { return subtract(other.words()); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        f(static_cast<Vertex>(i * kWordBits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  VertexList to_list() const {
    VertexList out;
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const VertexBits&, const VertexBits&) = default;

 private:
  int capacity_ = 0;
  std::vector<Word> words_;
};

inline int count_common(std::span<const Word> a, std::span<const Word> b) {
  int total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

/// Undirected simple graph on vertices 0..order-1 with one bit row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order) : order_(order), words_(words_for(order)), bits_(words_ * order, 0) {
    if (order < 0) throw InvalidInput("graph order must be non-negative");
  }

  static Graph from_edges(int order, std::span<const Edge> edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }
  static Graph from_edges(int order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return order_; }
  std::size_t words() const noexcept { return words_; }

  bool has_edge(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    set_bit(u, v);
    set_bit(v, u);
  }

  void remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    clear_bit(u, v);
    clear_bit(v, u);
  }

  std::span<const Word> row(Vertex v) const { return {bits_.data() + v * words_, words_}; }

  VertexBits neighbourhood(Vertex v) const { return VertexBits::from_span(row(v), order_); }
  VertexList neighbours(Vertex v) const { return neighbourhood(v).to_list(); }

  int degree(Vertex v) const {
    int d = 0;
    for (Word w : row(v)) d += std::popcount(w);
    return d;
  }

  int min_degree() const {
    int best = order_ == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < order_; ++v) best = std::min(best, degree(v));
    return best;
  }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (Word w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total / 2;
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order_; ++u) {
      for (Vertex v = u + 1; v < order_; ++v) {
        if (has_edge(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }

  Graph complement() const {
    Graph out(order_);
    for (Vertex u = 0; u < order_; ++u) {
      for (Vertex v = u + 1; v < order_; ++v) {
        if (!has_edge(u, v)) {
          out.set_bit(u, v);
          out.set_bit(v, u);
        }
      }
    }
    return out;
  }

  /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const {
    const int size = static_cast<int>(vertices.size());
    Graph out(size);
    for (int i = 0; i < size; ++i) {
      for (int j = i + 1; j < size; ++j) {
        if (has_edge(vertices[i], vertices[j])) {
          out.set_bit(i, j);
          out.set_bit(j, i);
        }
      }
    }
    return out;
  }

  bool has_isolated_vertex() const {
    for (Vertex v = 0; v < order_; ++v) {
      if (degree(v) == 0) return true;
    }
    return false;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= order_) {
      throw InvalidInput("vertex " + std::to_string(v) + " out of range for order " +
                         std::to_string(order_));
    }
  }
  void set_bit(Vertex u, Vertex v) { bits_[u * words_ + v / kWordBits] |= Word{1} << (v % kWordBits); }
  void clear_bit(Vertex u, Vertex v) {
    bits_[u * words_ + v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }

  int order_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

/// Injective map from pattern vertices (indices) to host vertices.
struct Embedding {
  VertexList map;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

class ColoredComplete;

/// A colouring restricted to a vertex subset, with the table back to the parent.
struct SubColoring;

/// Red-blue colouring of K_N. Red edges are stored; blue is the complement.
class ColoredComplete {
 public:
  ColoredComplete() = default;
  explicit ColoredComplete(int order) : red_(order) {}
  explicit ColoredComplete(Graph red) : red_(std::move(red)) {}

  int order() const noexcept { return red_.order(); }
  const Graph& red() const noexcept { return red_; }
  Graph blue() const { return red_.complement(); }

  bool is_red(Vertex u, Vertex v) const { return u != v && red_.has_edge(u, v); }
  bool is_blue(Vertex u, Vertex v) const { return u != v && !red_.has_edge(u, v); }

  void set_red(Vertex u, Vertex v) { red_.add_edge(u, v); }
  void set_blue(Vertex u, Vertex v) { red_.remove_edge(u, v); }

  inline SubColoring restrict_to(std::span<const Vertex> vertices) const;

  friend bool operator==(const ColoredComplete&, const ColoredComplete&) = default;

 private:
  Graph red_;
};

struct SubColoring {
  ColoredComplete coloring;
  VertexList to_parent;

  Vertex parent(Vertex v) const { return to_parent[v]; }
  VertexList lift(std::span<const Vertex> vertices) const {
    VertexList out;
    out.reserve(vertices.size());
    for (Vertex v : vertices) out.push_back(to_parent[v]);
    return out;
  }
};

SubColoring ColoredComplete::restrict_to(std::span<const Vertex> vertices) const {
  return SubColoring{ColoredComplete(red_.induced(vertices)), VertexList(vertices.begin(), vertices.end())};
}

// Standard graphs.

inline Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

/// Parts are consecutive index blocks in the order given.
inline Graph complete_multipartite(std::span<const int> part_sizes) {
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 0) throw InvalidInput("negative part size");
    n += part_sizes[p];
    part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
  }
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
    }
  }
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  const int sizes[] = {a, b};
  return complete_multipartite(sizes);
}

/// K_{1,leaves}; the centre is vertex 0.
inline Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

/// mK_2 with edges (2i, 2i+1).
inline Graph matching_graph(int m) {
  Graph g(2 * m);
  for (int i = 0; i < m; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

inline Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

/// Disjoint union; vertices of `b` are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
  return g;
}

}  // namespace ramsey
