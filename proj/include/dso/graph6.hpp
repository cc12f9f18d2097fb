#pragma once

// graph6 codec: one-byte order (63+n, n <= 62) followed by the upper
// triangle of the adjacency matrix in column order, packed 6 bits per
// byte with each byte offset by 63.

#include <string>
#include <string_view>

#include "dso/graph.hpp"

namespace dso {

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) {
    throw std::invalid_argument(
        "graph6 encoding supports order <= 62, got " + std::to_string(n));
  }
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int group = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) {
    group <<= (6 - bits);
    out.push_back(static_cast<char>(63 + group));
  }
  return out;
}

inline Graph from_graph6(std::string_view text) {
  if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
  if (text.empty()) throw std::invalid_argument("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) {
      throw std::invalid_argument("graph6 byte out of range [63,126]");
    }
  }
  const int n = text[0] - 63;
  if (n == 63) {
    throw std::invalid_argument("graph6 long-form orders (> 62) unsupported");
  }
  const int pair_count = n * (n - 1) / 2;
  const std::size_t expected = 1 + (pair_count + 5) / 6;
  if (text.size() != expected) {
    throw std::invalid_argument(
        "graph6 string has length " + std::to_string(text.size()) +
        ", expected " + std::to_string(expected) + " for order " +
        std::to_string(n));
  }
  if (n == 0) {
    throw std::invalid_argument("graph6 order 0 unsupported (order >= 1)");
  }
  std::vector<VertexPair> edges;
  int bit_index = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit_index) {
      int byte = text[1 + bit_index / 6] - 63;
      if ((byte >> (5 - bit_index % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits beyond the triangle must be zero.
  for (int k = bit_index; k < static_cast<int>(expected - 1) * 6; ++k) {
    int byte = text[1 + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) {
      throw std::invalid_argument("graph6 padding bits must be zero");
    }
  }
  return Graph(n, edges);
}

}  // namespace dso
