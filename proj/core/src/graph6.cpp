#include "turan/graph6.hpp"

#include <string>

#include "turan/error.hpp"

namespace turan {

namespace {

constexpr int kBias = 63;
constexpr int kMaxSingleByteOrder = 62;

std::size_t data_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxSingleByteOrder) {
    throw Error(ErrorCode::kGraph6UnsupportedSize,
                "graph6 multi-byte size header (n > 62) is not supported");
  }
  std::string out;
  out.reserve(1 + data_bytes(n));
  out.push_back(static_cast<char>(kBias + n));

  int acc = 0;
  int filled = 0;
  // Column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::kGraph6MalformedHeader, "empty graph6 record");

  const int head = static_cast<unsigned char>(text[0]);
  if (head == 126) {
    throw Error(ErrorCode::kGraph6UnsupportedSize,
                "graph6 multi-byte size header (n > 62) is not supported");
  }
  if (head < kBias + 1 || head > kBias + kMaxSingleByteOrder) {
    throw Error(ErrorCode::kGraph6MalformedHeader,
                "graph6 size byte " + std::to_string(head) + " is not a vertex count in 1..62");
  }
  const int n = head - kBias;
  const std::size_t need = data_bytes(n);
  if (text.size() - 1 < need) {
    throw Error(ErrorCode::kGraph6Truncated,
                "graph6 record has " + std::to_string(text.size() - 1) + " data bytes, expected " +
                    std::to_string(need));
  }
  if (text.size() - 1 > need) {
    throw Error(ErrorCode::kGraph6TrailingGarbage,
                "graph6 record has " + std::to_string(text.size() - 1 - need) +
                    " bytes after the adjacency data");
  }

  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  std::size_t pos = 1;
  int acc = 0;
  int left = 0;
  auto next_bit = [&]() {
    if (left == 0) {
      const int ch = static_cast<unsigned char>(text[pos++]);
      if (ch < kBias || ch > kBias + 63) {
        throw Error(ErrorCode::kGraph6InvalidCharacter,
                    "graph6 byte " + std::to_string(ch) + " outside 63..126");
      }
      acc = ch - kBias;
      left = 6;
    }
    --left;
    return (acc >> left) & 1;
  };
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (next_bit()) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  // Remaining bits of the last byte are padding and must be zero.
  if ((acc & ((1 << left) - 1)) != 0) {
    throw Error(ErrorCode::kGraph6PaddingBits, "graph6 padding bits beyond the triangle are set");
  }
  return Graph::from_rows(rows);
}

}  // namespace turan
