#include <string>

#include "hchroma/error.hpp"
#include "hchroma/graph.hpp"

namespace hchroma {

// graph6: a size header (one byte n+63 for n <= 62, otherwise '~' followed by
// three 6-bit bytes), then the upper triangle of the adjacency matrix in
// column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte,
// most significant bit first, each byte offset by 63.
SimpleGraph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError(0, "empty graph6 text");

  auto sextet = [&](std::size_t pos) -> unsigned {
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError(pos, "byte outside graph6 range 63..126");
    return c - 63U;
  };

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') throw ParseError(1, "graph order exceeds 64");
    if (text.size() < 4) throw ParseError(text.size(), "truncated graph6 size header");
    n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
    pos = 4;
  } else {
    n = sextet(0);
    pos = 1;
  }
  if (n > static_cast<std::uint64_t>(SimpleGraph::kMaxOrder)) {
    throw ParseError(0, "graph order " + std::to_string(n) + " exceeds 64");
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError(text.size() < pos + bytes ? text.size() : pos + bytes,
                     "expected " + std::to_string(bytes) + " body bytes");
  }

  SimpleGraph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const unsigned v = sextet(pos + k / 6);
      if ((v >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const unsigned last = sextet(pos + bytes - 1);
    if (last & ((1U << (6 - k % 6)) - 1)) throw ParseError(pos + bytes - 1, "nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const SimpleGraph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  unsigned acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace hchroma
