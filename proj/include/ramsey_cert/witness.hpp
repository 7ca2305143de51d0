#pragma once

#include <variant>

#include "ramsey_cert/graph.hpp"

namespace ramsey {

/// k distinct vertices, consecutive (cyclically) pairs red.
struct RedCycle {
  VertexList vertices;

  friend bool operator==(const RedCycle&, const RedCycle&) = default;
};

/// Embedding of H whose edges all land on blue pairs.
struct BlueCopy {
  Embedding embedding;

  friend bool operator==(const BlueCopy&, const BlueCopy&) = default;
};

using Witness = std::variant<RedCycle, BlueCopy>;

inline bool is_red_cycle(const Witness& w) { return std::holds_alternative<RedCycle>(w); }
inline bool is_blue_copy(const Witness& w) { return std::holds_alternative<BlueCopy>(w); }

}  // namespace ramsey
