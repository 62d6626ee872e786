// SPDX-License-Identifier: Apache-2.0
#include "pathwl/serialize.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>

#include "pathwl/errors.hpp"

namespace pathwl {
namespace {

class LineReader {
 public:
  explicit LineReader(std::istream &in) : in_(in) {}

  bool next(std::string &line) {
    if (!std::getline(in_, line)) return false;
    ++number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  std::string expect(const char *what) {
    std::string line;
    if (!next(line)) fail(std::string("unexpected end of file, expected ") + what);
    return line;
  }

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError("PCX line " + std::to_string(number_) + ": " + msg, number_);
  }

  std::size_t number() const { return number_; }

 private:
  std::istream &in_;
  std::size_t number_ = 0;
};

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::uint64_t number(const LineReader &r, std::string_view tok, const char *what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    r.fail(std::string("bad ") + what + " '" + std::string(tok) + "'");
  return v;
}

std::string_view after_prefix(const LineReader &r, std::string_view tok,
                              std::string_view prefix) {
  if (tok.substr(0, prefix.size()) != prefix)
    r.fail("expected '" + std::string(prefix) + "...'");
  return tok.substr(prefix.size());
}

// Parses "<id>: a b c" and checks the id.
std::vector<std::uint64_t> id_row(const LineReader &r, std::string_view line,
                                  std::uint64_t expected_id) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) r.fail("expected '<id>: ...'");
  const auto id = number(r, line.substr(0, colon), "member id");
  if (id != expected_id)
    r.fail("expected id " + std::to_string(expected_id) + ", found " + std::to_string(id));
  std::vector<std::uint64_t> out;
  for (auto tok : split(line.substr(colon + 1))) out.push_back(number(r, tok, "integer"));
  return out;
}

}  // namespace

void write_complex(std::ostream &out, const HigherOrderComplex &c) {
  out << "PCX v1 kind=" << to_string(c.kind()) << " n=" << c.source().order()
      << " maxdim=" << c.max_dim() << '\n';
  for (int p = 0; p <= c.max_dim(); ++p) {
    out << "dim " << p << " count " << c.count(p) << '\n';
    for (MemberId id = c.first_id(p); id < c.end_id(p); ++id) {
      out << id << ':';
      for (Vertex v : c.carrier(id)) out << ' ' << v;
      out << '\n';
    }
  }
  out << "boundaries\n";
  for (MemberId id = 0; id < c.member_count(); ++id) {
    out << id << ':';
    for (MemberId b : c.boundary(id)) out << ' ' << b;
    out << '\n';
  }
}

std::string serialize_complex(const HigherOrderComplex &c) {
  std::ostringstream out;
  write_complex(out, c);
  return out.str();
}

HigherOrderComplex read_complex(std::istream &in) {
  LineReader r(in);
  const std::string header_line = r.expect("header");
  const auto header = split(header_line);
  if (header.size() != 5 || header[0] != "PCX") r.fail("missing PCX header");
  if (header[1] != "v1") r.fail("unsupported version '" + std::string(header[1]) + "'");
  ComplexKind kind;
  try {
    kind = parse_complex_kind(after_prefix(r, header[2], "kind="));
  } catch (const InputError &e) {
    r.fail(e.what());
  }
  const auto n = number(r, after_prefix(r, header[3], "n="), "vertex count");
  const auto max_dim = number(r, after_prefix(r, header[4], "maxdim="), "maxdim");
  if (n > std::numeric_limits<Vertex>::max()) r.fail("vertex count too large");
  if (max_dim > 64) r.fail("maxdim out of range");

  std::vector<Level> levels(max_dim + 1);
  std::vector<Edge> edges;
  std::uint64_t next_id = 0;
  std::vector<Vertex> carrier;
  for (std::uint64_t p = 0; p <= max_dim; ++p) {
    const std::string section = r.expect("dim section");
    const auto tok = split(section);
    if (tok.size() != 4 || tok[0] != "dim" || tok[2] != "count") r.fail("expected 'dim <p> count <m>'");
    if (number(r, tok[1], "dimension") != p) r.fail("dimensions must appear in order");
    const auto count = number(r, tok[3], "count");
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto row = id_row(r, r.expect("member line"), next_id++);
      const bool ring = kind == ComplexKind::cell && p == 2;
      if (ring ? row.size() < 3 : row.size() != p + 1)
        r.fail("carrier has the wrong length for dimension " + std::to_string(p));
      carrier.clear();
      for (auto v : row) {
        if (v >= n) r.fail("vertex " + std::to_string(v) + " out of range");
        carrier.push_back(static_cast<Vertex>(v));
      }
      if (canonical_carrier(kind, static_cast<int>(p), carrier) != carrier)
        r.fail("carrier is not in canonical form");
      if (p == 1) edges.emplace_back(carrier[0], carrier[1]);
      levels[p].push(carrier);
    }
  }
  if (r.expect("'boundaries'") != "boundaries") r.fail("expected 'boundaries'");
  Csr<MemberId> boundary;
  for (std::uint64_t id = 0; id < next_id; ++id) {
    for (auto b : id_row(r, r.expect("boundary line"), id)) {
      if (b >= next_id) r.fail("dangling boundary id " + std::to_string(b));
      boundary.values.push_back(static_cast<MemberId>(b));
    }
    boundary.push_row();
  }
  std::string extra;
  while (r.next(extra))
    if (!extra.empty()) r.fail("trailing content after boundaries");

  try {
    return HigherOrderComplex(kind, SimpleGraph::from_edges(n, edges),
                              static_cast<int>(max_dim), std::move(levels),
                              std::move(boundary));
  } catch (const InputError &e) {
    throw ParseError(std::string("PCX: ") + e.what(), r.number());
  }
}

HigherOrderComplex deserialize_complex(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_complex(in);
}

void save_complex(const std::filesystem::path &path, const HigherOrderComplex &c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  write_complex(out, c);
  if (!out) throw InputError("failed writing " + path.string());
}

HigherOrderComplex load_complex(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  return read_complex(in);
}

}  // namespace pathwl
