// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <string>

#include "pathwl/errors.hpp"
#include "pathwl/graph.hpp"

namespace pathwl {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::uint8_t sextet(std::string_view s, std::size_t pos, std::size_t base) {
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6: byte " + std::to_string(c) + " at offset " +
                         std::to_string(base + pos) +
                         " is outside the printable range 63..126",
                     base + pos);
  }
  return static_cast<std::uint8_t>(c - 63);
}

}  // namespace

SimpleGraph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.starts_with(kHeader)) {
    line.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) throw ParseError("graph6: empty input", base);

  // Order header: 1, 4 or 8 bytes.
  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (static_cast<unsigned char>(line[0]) != 126) {
    n = sextet(line, 0, base);
    pos = 1;
  } else if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126) {
    if (line.size() < 8) {
      throw ParseError("graph6: truncated 8-byte length header", base);
    }
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(line, i, base);
    pos = 8;
  } else {
    if (line.size() < 4) {
      throw ParseError("graph6: truncated 4-byte length header", base);
    }
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(line, i, base);
    pos = 4;
  }

  const std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (line.size() - pos != body) {
    throw ParseError("graph6: expected " + std::to_string(body) +
                         " data bytes for n=" + std::to_string(n) + ", found " +
                         std::to_string(line.size() - pos) + " (offset " +
                         std::to_string(base + pos) + ")",
                     base + pos);
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + k / 6;
      const auto x = sextet(line, at, base);
      if ((x >> (5 - k % 6)) & 1u) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t at = line.size() - 1;
    const auto x = sextet(line, at, base);
    const unsigned pad = 6 - bits % 6;
    if (x & ((1u << pad) - 1u)) {
      throw ParseError("graph6: padding bits set in final byte at offset " +
                           std::to_string(base + at),
                       base + at);
    }
  }
  // Validate every body byte even when n is tiny and no bit is read from it.
  for (std::size_t i = pos; i < line.size(); ++i) sextet(line, i, base);

  return SimpleGraph::from_edges(n, edges);
}

std::string encode_graph6(const SimpleGraph &g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

std::vector<SimpleGraph> read_graph6_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::vector<SimpleGraph> graphs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError &e) {
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": " +
                           e.what(),
                       e.position());
    }
  }
  return graphs;
}

}  // namespace pathwl
