#include "extremal/graph6.hpp"

#include <vector>

namespace extremal {

namespace {
constexpr int kBias = 63;
constexpr int kMaxByte = 126;

std::size_t body_bits(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }
std::size_t body_bytes(int n) { return (body_bits(n) + 5) / 6; }
}  // namespace

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    // 18-bit big-endian extended header, covers every n this library allows.
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  std::size_t pos = 0;
  auto take = [&](const char* what) -> int {
    if (pos >= text.size()) throw ParseError(std::string("graph6: truncated ") + what, pos);
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > kMaxByte)
      throw ParseError("graph6: byte out of printable range", pos);
    ++pos;
    return c - kBias;
  };

  long long n;
  if (text[0] == '~') {
    ++pos;
    if (pos < text.size() && text[pos] == '~')
      throw ParseError("graph6: 36-bit order form not supported", pos);
    long long a = take("order"), b = take("order"), c = take("order");
    n = (a << 12) | (b << 6) | c;
  } else {
    n = take("order");
  }
  if (n > kMaxVertices)
    throw BudgetError("graph6: order " + std::to_string(n) + " exceeds the library cap of " +
                      std::to_string(kMaxVertices) + " vertices");

  int order = static_cast<int>(n);
  std::size_t need = body_bytes(order);
  if (text.size() - pos < need)
    throw ParseError("graph6: body shorter than the " + std::to_string(need) +
                         " bytes the order requires",
                     text.size());
  if (text.size() - pos > need)
    throw ParseError("graph6: trailing bytes after graph body", pos + need);

  std::vector<std::pair<int, int>> edges;
  int u = 0, v = 1;
  std::size_t bits_left = body_bits(order);
  while (bits_left > 0) {
    std::size_t byte_at = pos;
    int val = take("body");
    for (int k = 5; k >= 0; --k) {
      int bit = (val >> k) & 1;
      if (bits_left == 0) {
        if (bit) throw ParseError("graph6: non-zero padding bit", byte_at);
        continue;
      }
      if (bit) edges.emplace_back(u, v);
      --bits_left;
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return Graph(order, std::span<const std::pair<int, int>>(edges));
}

}  // namespace extremal
