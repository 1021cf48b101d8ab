#include "swg/graph6.hpp"

namespace swg {

std::string write_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int nbits = pair_count(n);
  // Colex pair order x(0,1), x(0,2), x(1,2), x(0,3), ... matches the edge
  // bit indexing directly; pack big-endian into 6-bit groups.
  for (int base = 0; base < nbits; base += 6) {
    int group = 0;
    for (int b = 0; b < 6; ++b) {
      int k = base + b;
      if (k < nbits && g.bits().test(k)) group |= 1 << (5 - b);
    }
    out.push_back(static_cast<char>(group + 63));
  }
  return out;
}

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("empty graph6 line", 0);
  unsigned char c0 = static_cast<unsigned char>(line[0]);
  if (c0 == 126)
    throw Graph6Error("extended size header implies n > 62, unsupported", 0);
  if (c0 < 63 || c0 > 126) throw Graph6Error("byte outside graph6 range", 0);
  int n = c0 - 63;
  if (n > kMaxVertices)
    throw Graph6Error("vertex count " + std::to_string(n) + " exceeds " +
                          std::to_string(kMaxVertices), 0);
  int nbits = pair_count(n);
  std::size_t expected = 1 + (nbits + 5) / 6;
  if (line.size() != expected)
    throw Graph6Error("wrong line length for n=" + std::to_string(n),
                      line.size() < expected ? line.size() : expected);
  EdgeBits bits;
  for (std::size_t pos = 1; pos < line.size(); ++pos) {
    unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) throw Graph6Error("byte outside graph6 range", pos);
    int group = c - 63;
    for (int b = 0; b < 6; ++b) {
      if (!(group & (1 << (5 - b)))) continue;
      int k = static_cast<int>(pos - 1) * 6 + b;
      if (k >= nbits) throw Graph6Error("nonzero padding bits", pos);
      bits.set(k);
    }
  }
  return Graph(n, bits);
}

}  // namespace swg
