#pragma once

#include <string>
#include <string_view>

#include "extremal/graph.hpp"

namespace extremal {

// graph6 codec (the standard printable interchange format: header byte(s)
// encode n, then the upper triangle in column-major order packed 6 bits per
// byte, offset by 63). Encoding is bit-exact and strict: parsing rejects
// out-of-range bytes, wrong body length and non-zero padding, naming the
// byte offset; orders beyond the library cap are refused explicitly.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

}  // namespace extremal
