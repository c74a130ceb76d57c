#pragma once

#include <string>
#include <string_view>

#include "uniconn/graph.hpp"

namespace uniconn {

// Short-form graph6 text.  Only graphs with at most 62 vertices are
// supported; the long forms are never needed at the sizes this library
// works with.
inline constexpr int kGraph6MaxVertices = 62;

std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

}  // namespace uniconn
