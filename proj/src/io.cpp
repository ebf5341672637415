#include "orientflip/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace orientflip {

namespace {

// Content with '#' comment lines stripped.
std::string strip_comments(std::istream& in) {
  std::string out, line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

UndirectedMultigraph read_graph(std::istream& in) {
  std::istringstream data(strip_comments(in));
  long long n = 0, m = 0;
  if (!(data >> n >> m)) fail(Errc::parse_error, "expected header line 'n m'");
  if (n < 0 || m < 0) fail(Errc::parse_error, "negative n or m");
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(data >> u >> v)) fail(Errc::parse_error, "expected " + std::to_string(m) + " edge lines");
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Errc::parse_error, "edge endpoint out of range on edge " + std::to_string(i));
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  long long extra;
  if (data >> extra) fail(Errc::parse_error, "trailing data after edge list");
  try {
    return build(static_cast<int>(n), edges);
  } catch (const Error& e) {
    fail(Errc::parse_error, e.what());
  }
}

void write_graph(std::ostream& out, const UndirectedMultigraph& g) {
  out << g.n << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
}

Orientation read_orientation(std::istream& in, GraphPtr g) {
  const std::string data = strip_comments(in);
  Orientation d(std::move(g));
  int e = 0;
  for (char c : data) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '0' && c != '1') fail(Errc::parse_error, std::string("unexpected character '") + c + "' in orientation");
    if (e >= d.m()) fail(Errc::parse_error, "more direction bits than edges");
    d.rev[e++] = (c == '1');
  }
  if (e != d.m())
    fail(Errc::parse_error, "expected " + std::to_string(d.m()) + " direction bits, got " + std::to_string(e));
  return d;
}

void write_orientation(std::ostream& out, const Orientation& d) { out << orientation_bits(d) << '\n'; }

std::string orientation_bits(const Orientation& d) {
  std::string s(d.m(), '0');
  for (int e = 0; e < d.m(); ++e)
    if (d.rev[e]) s[e] = '1';
  return s;
}

UndirectedMultigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  return read_graph(in);
}

Orientation read_orientation_file(const std::string& path, GraphPtr g) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  return read_orientation(in, std::move(g));
}

}  // namespace orientflip
