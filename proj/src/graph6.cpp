#include "rankbrittle/graph6.hpp"

#include "rankbrittle/errors.hpp"

namespace rankbrittle {

namespace {

constexpr int kShortFormMax = 62;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kShortFormMax) throw InputError("graph6 short form supports at most 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw FormatError("empty graph6 string", base);

  auto byte_at = [&](std::size_t i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw FormatError("graph6 byte outside 63..126", base + i);
    return c - 63;
  };

  const int n = byte_at(0);
  if (n == 63) throw FormatError("graph6 long form (n > 62) is not supported", base);

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() < expected) throw FormatError("graph6 string truncated", base + text.size());
  if (text.size() > expected) throw FormatError("trailing bytes after graph6 data", base + expected);

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int word = byte_at(1 + k / 6);
      if ((word >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = expected - 1;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((byte_at(last) & ((1 << pad) - 1)) != 0) throw FormatError("nonzero graph6 padding bits", base + last);
  }
  return g;
}

}  // namespace rankbrittle
