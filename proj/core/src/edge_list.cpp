// SPDX-License-Identifier: Apache-2.0
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "pathwl/errors.hpp"
#include "pathwl/graph.hpp"

namespace pathwl {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t to_index(std::string_view tok, std::size_t lineno) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("edge list line " + std::to_string(lineno) +
                         ": expected a non-negative integer, got '" +
                         std::string(tok) + "'",
                     lineno);
  }
  return value;
}

}  // namespace

SimpleGraph parse_edge_list(std::string_view text) {
  std::optional<std::uint64_t> n;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim(text.substr(start, end - start));
    ++lineno;
    start = end + 1;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    auto tokens = split_ws(line);
    if (!n) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw ParseError("edge list line " + std::to_string(lineno) +
                             ": expected header 'n <count>'",
                         lineno);
      }
      n = to_index(tokens[1], lineno);
    } else {
      if (tokens.size() != 2) {
        throw ParseError("edge list line " + std::to_string(lineno) +
                             ": expected 'u v'",
                         lineno);
      }
      const auto u = to_index(tokens[0], lineno);
      const auto v = to_index(tokens[1], lineno);
      if (u >= *n || v >= *n) {
        throw ParseError("edge list line " + std::to_string(lineno) +
                             ": vertex index out of range for n=" +
                             std::to_string(*n),
                         lineno);
      }
      if (u == v) {
        throw ParseError("edge list line " + std::to_string(lineno) +
                             ": self-loop at vertex " + std::to_string(u),
                         lineno);
      }
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (end == text.size()) break;
  }
  if (!n) throw ParseError("edge list: missing 'n <count>' header", lineno);
  return SimpleGraph::from_edges(*n, edges);
}

std::string encode_edge_list(const SimpleGraph &g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

SimpleGraph read_graph_file(const std::filesystem::path &path,
                            std::size_t index) {
  const auto ext = path.extension().string();
  if (ext == ".g6" || ext == ".graph6") {
    auto graphs = read_graph6_file(path);
    if (index >= graphs.size()) {
      throw InputError(path.string() + ": graph index " +
                       std::to_string(index) + " out of range (file has " +
                       std::to_string(graphs.size()) + " graphs)");
    }
    return std::move(graphs[index]);
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

}  // namespace pathwl
