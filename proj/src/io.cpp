#include <algorithm>
#include <charconv>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "htp/coloring.hpp"
#include "htp/error.hpp"

namespace htp {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view s, int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

int expect_int(std::string_view s, int line) {
  int value = 0;
  if (!parse_int(s, value)) throw ParseError(line, "expected integer, got '" + std::string(s) + "'");
  return value;
}

// Calls fn(line_number, content) for each non-blank, non-comment line.
template <typename F>
void for_each_line(std::string_view text, F&& fn) {
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') fn(number, line);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

EdgeColoring parse_coloring(std::string_view text) {
  bool have_header = false;
  int n = 0;
  int r = 0;
  std::vector<ColoredEdge> edges;
  std::set<Edge> seen;
  for_each_line(text, [&](int line, std::string_view content) {
    auto tok = split_ws(content);
    if (!have_header) {
      if (tok.size() != 2) throw ParseError(line, "header must be 'n r'");
      n = expect_int(tok[0], line);
      r = expect_int(tok[1], line);
      if (n < 1) throw ParseError(line, "vertex count must be positive");
      if (r < 0) throw ParseError(line, "color count must be non-negative");
      have_header = true;
      return;
    }
    if (tok.size() != 3) throw ParseError(line, "edge line must be 'u v c'");
    const int u = expect_int(tok[0], line);
    const int v = expect_int(tok[1], line);
    const int col = expect_int(tok[2], line);
    if (!(0 <= u && u < v && v < n))
      throw ParseError(line, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") needs 0 <= u < v < n");
    if (col < 1 || col > r) throw ParseError(line, "color " + std::to_string(col) + " outside 1.." + std::to_string(r));
    if (!seen.insert({u, v}).second)
      throw ParseError(line, "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    edges.push_back({u, v, col});
  });
  if (!have_header) throw ParseError(0, "missing header");
  const bool complete = static_cast<std::int64_t>(edges.size()) == choose2(n);
  return EdgeColoring(n, r, std::move(edges), complete);
}

EdgeColoring load_coloring(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_coloring(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path);
  }
}

std::string format_coloring(const EdgeColoring& c) {
  std::ostringstream out;
  out << c.vertex_count() << ' ' << c.color_count() << '\n';
  for (const auto& e : c.edges()) out << e.u << ' ' << e.v << ' ' << e.color << '\n';
  return out.str();
}

void save_coloring(const EdgeColoring& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << format_coloring(c);
  if (!out) throw Error(ErrorCode::Io, "write failed: " + path);
}

TreePartition parse_partition(const EdgeColoring& c, std::string_view text) {
  TreePartition p;
  for_each_line(text, [&](int line, std::string_view content) {
    auto tok = split_ws(content);
    if (tok.empty() || tok[0] != "tree") throw ParseError(line, "expected 'tree'");
    Tree t;
    std::size_t i = 1;
    for (; i < tok.size() && tok[i] != ";"; ++i) t.vertices.push_back(expect_int(tok[i], line));
    if (i == tok.size()) throw ParseError(line, "missing ';'");
    ++i;
    if (i == tok.size() || tok[i] != "edges") throw ParseError(line, "expected 'edges' after ';'");
    for (++i; i < tok.size(); ++i) {
      std::string_view e = tok[i];
      const auto comma = e.find(',');
      if (e.size() < 5 || e.front() != '(' || e.back() != ')' || comma == std::string_view::npos)
        throw ParseError(line, "malformed edge '" + std::string(e) + "'");
      int u = expect_int(e.substr(1, comma - 1), line);
      int v = expect_int(e.substr(comma + 1, e.size() - comma - 2), line);
      if (u > v) std::swap(u, v);
      const Color col = c.color(u, v);
      if (col == 0) throw ParseError(line, "edge " + std::string(e) + " not in the coloring");
      t.edges.push_back({u, v, col});
    }
    p.trees.push_back(std::move(t));
  });
  return p;
}

std::string format_partition(const TreePartition& p) {
  std::ostringstream out;
  for (const auto& t : p.trees) {
    out << "tree";
    for (Vertex v : t.vertices) out << ' ' << v;
    out << " ; edges";
    for (const auto& e : t.edges) out << " (" << e.u << ',' << e.v << ')';
    out << '\n';
  }
  return out.str();
}

}  // namespace htp
