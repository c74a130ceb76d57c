#include "uniconn/graph6.hpp"

#include <stdexcept>

namespace uniconn {

// Bits of the upper triangle in column-major order (columns 1..n-1, rows
// 0..col-1), packed six per byte, each byte offset by 63.

std::string graph6_encode(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kGraph6MaxVertices) {
    throw std::invalid_argument(
        "graph6_encode: long form (n > 62) not supported");
  }
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, nbits = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) {
    acc <<= (6 - nbits);
    out.push_back(static_cast<char>(acc + 63));
  }
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("graph6_decode: empty text");
  for (char c : text) {
    if (c < 63 || c > 126) {
      throw std::invalid_argument("graph6_decode: byte out of range");
    }
  }
  const int n = text[0] - 63;
  if (n > kGraph6MaxVertices) {
    throw std::invalid_argument(
        "graph6_decode: long form (n > 62) not supported");
  }
  const int pairs = n * (n - 1) / 2;
  const std::size_t want = 1 + (pairs + 5) / 6;
  if (text.size() != want) {
    throw std::invalid_argument("graph6_decode: wrong length for n=" +
                                std::to_string(n));
  }
  std::vector<Edge> edges;
  int bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      const int byte = text[1 + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
    }
  }
  // Padding bits past the triangle must be zero.
  for (int b = bit; b % 6 != 0; ++b) {
    const int byte = text[1 + b / 6] - 63;
    if ((byte >> (5 - b % 6)) & 1) {
      throw std::invalid_argument("graph6_decode: nonzero padding");
    }
  }
  return Graph(n, edges);
}

}  // namespace uniconn
