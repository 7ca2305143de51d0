#pragma once

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "ramsey_cert/errors.hpp"
#include "ramsey_cert/graph.hpp"
#include "ramsey_cert/graph6.hpp"

namespace ramsey {

/// Parses an edge list such as "0-1,1-2,2-0"; the order is one more than the
/// largest vertex mentioned.
inline Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int order = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    const std::size_t dash = item.find('-');
    if (dash == std::string_view::npos) throw ParseError("edge list item without '-'", pos);
    try {
      std::size_t used_a = 0;
      std::size_t used_b = 0;
      const std::string a(item.substr(0, dash));
      const std::string b(item.substr(dash + 1));
      const int u = std::stoi(a, &used_a);
      const int v = std::stoi(b, &used_b);
      if (used_a != a.size() || used_b != b.size() || u < 0 || v < 0) throw std::invalid_argument("edge");
      if (u == v) throw ParseError("self-loop in edge list", pos);
      edges.emplace_back(u, v);
      order = std::max({order, u + 1, v + 1});
    } catch (const std::logic_error&) {
      throw ParseError("malformed edge list item", pos);
    }
    pos = end + 1;
  }
  return Graph::from_edges(order, edges);
}

/// Target graph from a name (K5, C5, P4, 3K2, K2,3), an edge list, or graph6.
inline Graph parse_graph_spec(const std::string& text) {
  std::smatch match;
  static const std::regex complete(R"(K(\d+))");
  static const std::regex bipartite(R"(K(\d+),(\d+))");
  static const std::regex cycle(R"(C(\d+))");
  static const std::regex path(R"(P(\d+))");
  static const std::regex matching(R"((\d+)K2)");
  if (std::regex_match(text, match, matching)) return matching_graph(std::stoi(match[1]));
  if (std::regex_match(text, match, bipartite)) return complete_bipartite(std::stoi(match[1]), std::stoi(match[2]));
  if (std::regex_match(text, match, complete)) return complete_graph(std::stoi(match[1]));
  if (std::regex_match(text, match, cycle)) return cycle_graph(std::stoi(match[1]));
  if (std::regex_match(text, match, path)) return path_graph(std::stoi(match[1]));
  if (text.find('-') != std::string::npos) return parse_edge_list(text);
  return parse_graph6(text);
}

/// Colouring file: first line N, second line the red graph in graph6.
inline ColoredComplete read_coloring(std::istream& in) {
  std::string first;
  std::string second;
  if (!std::getline(in, first)) throw ParseError("colouring file is empty", 0);
  int order = 0;
  try {
    std::size_t used = 0;
    order = std::stoi(first, &used);
    while (used < first.size() && std::isspace(static_cast<unsigned char>(first[used]))) ++used;
    if (used != first.size() || order < 0) throw std::invalid_argument("order");
  } catch (const std::logic_error&) {
    throw ParseError("colouring order line is not a non-negative integer", 0);
  }
  if (!std::getline(in, second)) throw ParseError("colouring file lacks the graph6 line", first.size() + 1);
  Graph red = parse_graph6(second);
  if (red.order() != order) {
    throw ParseError("graph6 order " + std::to_string(red.order()) + " differs from declared " +
                         std::to_string(order),
                     first.size() + 1);
  }
  return ColoredComplete(std::move(red));
}

inline void write_coloring(std::ostream& out, const ColoredComplete& c) {
  out << c.order() << '\n' << emit_graph6(c.red()) << '\n';
}

inline std::string coloring_to_string(const ColoredComplete& c) {
  std::ostringstream out;
  write_coloring(out, c);
  return out.str();
}

}  // namespace ramsey
