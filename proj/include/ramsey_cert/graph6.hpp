#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ramsey_cert/errors.hpp"
#include "ramsey_cert/graph.hpp"

// graph6: N(n) followed by the upper triangle x(0,1), x(0,2), x(1,2), x(0,3),
// ... packed six bits per byte, big-endian within each byte, each byte offset
// by 63. N(n) is one byte for n <= 62, '~' plus 3 bytes for n <= 258047, and
// "~~" plus 6 bytes beyond.

namespace ramsey {

namespace detail {

inline void put_bits(std::string& out, std::uint64_t value, int groups) {
  for (int g = groups - 1; g >= 0; --g) out.push_back(static_cast<char>(63 + ((value >> (6 * g)) & 0x3F)));
}

}  // namespace detail

inline std::string emit_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    detail::put_bits(out, n, 3);
  } else {
    out.append("~~");
    detail::put_bits(out, n, 6);
  }
  int filled = 0;
  int byte = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      byte = (byte << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + byte));
        filled = 0;
        byte = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (byte << (6 - filled))));
  return out;
}

/// Parses one graph6 line. An optional ">>graph6<<" header and trailing
/// whitespace are accepted; padding bits must be zero.
inline Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) pos = header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  auto sixbits = [&](std::size_t at) -> int {
    if (at >= text.size()) throw ParseError("graph6 line truncated", at);
    const int c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character", at);
    return c - 63;
  };
  auto read_groups = [&](int groups) {
    std::uint64_t v = 0;
    for (int i = 0; i < groups; ++i) v = (v << 6) | static_cast<std::uint64_t>(sixbits(pos++));
    return v;
  };

  if (pos >= text.size()) throw ParseError("empty graph6 line", pos);
  std::uint64_t n = 0;
  if (text[pos] != '~') {
    n = read_groups(1);
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    pos += 2;
    n = read_groups(6);
  } else {
    ++pos;
    n = read_groups(3);
  }
  if (n > 100000) throw ParseError("graph6 order " + std::to_string(n) + " too large", pos);

  const std::uint64_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw ParseError("graph6 line truncated", text.size());
  if (text.size() - pos > bytes) throw ParseError("graph6 line has trailing data", pos + bytes);

  Graph g(static_cast<int>(n));
  std::uint64_t bit = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int value = sixbits(pos + bit / 6);
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + bytes - 1;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (sixbits(last) & pad_mask) throw ParseError("nonzero graph6 padding bits", last);
  }
  return g;
}

}  // namespace ramsey
