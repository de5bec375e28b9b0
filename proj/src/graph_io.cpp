#include "fanramsey/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace fanramsey {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + (column > 0 ? ", byte " + std::to_string(column) : "") +
                         ": " + what),
      line_(line),
      column_(column) {}

GraphFormat parse_format(std::string_view name) {
  if (name == "edgelist" || name == "edges") return GraphFormat::EdgeList;
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::size_t skip_space(std::string_view s, std::size_t pos) {
  while (pos < s.size() && is_space(s[pos])) ++pos;
  return pos;
}

// Parses a non-negative integer at `pos`; on success advances `pos`.
bool read_int(std::string_view s, std::size_t& pos, long long& out) {
  const char* first = s.data() + pos;
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr == first) return false;
  pos += static_cast<std::size_t>(ptr - first);
  return true;
}

constexpr std::string_view kVerticesTag = "vertices:";

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  long long declared = -1;
  long long max_id = -1;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
      std::string_view comment = line.substr(hash + 1);
      std::size_t pos = skip_space(comment, 0);
      if (comment.substr(pos, kVerticesTag.size()) == kVerticesTag) {
        pos = skip_space(comment, pos + kVerticesTag.size());
        long long value = 0;
        if (!read_int(comment, pos, value) || value < 0) {
          throw ParseError("malformed vertex-count directive", line_no, static_cast<int>(hash + 2 + pos));
        }
        declared = value;
      }
      line = line.substr(0, hash);
    }
    std::size_t pos = skip_space(line, 0);
    if (pos < line.size()) {
      long long u = 0;
      long long v = 0;
      const std::size_t u_pos = pos;
      if (!read_int(line, pos, u)) throw ParseError("expected vertex id", line_no, static_cast<int>(u_pos + 1));
      pos = skip_space(line, pos);
      const std::size_t v_pos = pos;
      if (!read_int(line, pos, v)) throw ParseError("expected second vertex id", line_no, static_cast<int>(v_pos + 1));
      pos = skip_space(line, pos);
      if (pos != line.size()) throw ParseError("trailing characters after edge", line_no, static_cast<int>(pos + 1));
      if (u == v) throw ParseError("loop at vertex " + std::to_string(u), line_no, static_cast<int>(u_pos + 1));
      if (u > 1'000'000 || v > 1'000'000) throw ParseError("vertex id too large", line_no, static_cast<int>(u_pos + 1));
      const Edge e = make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      if (!seen.insert(e).second) {
        throw ParseError("duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second), line_no,
                         static_cast<int>(u_pos + 1));
      }
      edges.push_back(e);
      max_id = std::max({max_id, u, v});
    }
    start = end + 1;
  }
  if (declared >= 0 && max_id >= declared) {
    throw ParseError("vertex id " + std::to_string(max_id) + " exceeds declared order " + std::to_string(declared), 0,
                     0);
  }
  const int n = static_cast<int>(declared >= 0 ? declared : max_id + 1);
  return Graph::from_edges(n, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# vertices: " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

Graph parse_graph6_line(std::string_view line, int line_no) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.substr(0, 10) == ">>graph6<<") line.remove_prefix(10);
  std::size_t pos = 0;
  auto next = [&](const char* what) -> int {
    if (pos >= line.size()) throw ParseError(std::string("truncated graph6 ") + what, line_no, static_cast<int>(pos + 1));
    const int c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range", line_no, static_cast<int>(pos + 1));
    ++pos;
    return c - 63;
  };
  long long n = next("header");
  if (n == 63) {
    int width = 3;
    if (pos < line.size() && line[pos] == 126) {
      ++pos;
      width = 6;
    }
    n = 0;
    for (int i = 0; i < width; ++i) n = (n << 6) | next("header");
  }
  if (n > 100'000) throw ParseError("graph6 order too large", line_no, 1);
  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * static_cast<std::size_t>(order > 0 ? order - 1 : 0) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (line.size() - pos != body) {
    throw ParseError("graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " +
                         std::to_string(body),
                     line_no, static_cast<int>(pos + 1));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  int chunk = 0;
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) chunk = next("body");
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0 && (chunk & ((1 << (6 - k % 6)) - 1)) != 0) {
    throw ParseError("nonzero graph6 padding bits", line_no, static_cast<int>(pos));
  }
  return Graph::from_edges(order, edges);
}

}  // namespace

Graph parse_graph6(std::string_view line) { return parse_graph6_line(line, 1); }

std::string format_graph6(const Graph& g) {
  std::string out;
  const long long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

std::vector<Graph> parse_graph6_all(std::string_view text) {
  std::vector<Graph> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      out.push_back(parse_graph6_line(line, line_no));
    }
    start = end + 1;
  }
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return parse_edge_list(text);
  auto all = parse_graph6_all(text);
  if (all.empty()) throw ParseError("no graph6 record found", 1, 0);
  return std::move(all.front());
}

std::string format_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::EdgeList ? format_edge_list(g) : format_graph6(g) + "\n";
}

Graph read_graph(const std::string& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), format);
}

void write_graph(const std::string& path, const Graph& g, GraphFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << format_graph(g, format);
  if (!out) throw IoError("write to '" + path + "' failed");
}

TwoColoring read_coloring(const std::string& path, GraphFormat format) {
  return TwoColoring(read_graph(path, format));
}

void write_coloring(const std::string& path, const TwoColoring& k, GraphFormat format) {
  write_graph(path, k.red(), format);
}

}  // namespace fanramsey
