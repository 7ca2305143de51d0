#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ramsey_cert/errors.hpp"
#include "ramsey_cert/graph.hpp"
#include "ramsey_cert/search.hpp"

namespace ramsey {

/// The graph H sought in blue: no isolated vertices, with |H|, e(H) and an
/// optimal proper colouring cached. The colouring is only computed when
/// |H| is within the exact-colouring limit.
class TargetGraph {
 public:
  explicit TargetGraph(Graph g, int chromatic_limit = kDefaultChromaticLimit) : graph_(std::move(g)) {
    if (graph_.order() == 0) throw InvalidInput("target graph must have at least one vertex");
    if (graph_.has_isolated_vertex()) throw InvalidInput("target graph has an isolated vertex");
    m_ = graph_.edge_count();
    if (graph_.order() <= chromatic_limit) colouring_ = optimal_coloring(graph_, chromatic_limit);
  }

  const Graph& graph() const noexcept { return graph_; }
  int n() const noexcept { return graph_.order(); }
  std::size_t m() const noexcept { return m_; }

  /// 2m/n as an exact ratio.
  std::pair<std::size_t, int> avg_degree() const noexcept { return {2 * m_, n()}; }

  bool has_chi() const noexcept { return colouring_.has_value(); }
  int chi() const { return static_cast<int>(colour_classes(colouring()).size()); }
  const std::vector<int>& colouring() const {
    if (!colouring_) throw SizeLimitError("target graph too large for an exact colouring");
    return *colouring_;
  }

 private:
  Graph graph_;
  std::size_t m_ = 0;
  std::optional<std::vector<int>> colouring_;
};

}  // namespace ramsey
