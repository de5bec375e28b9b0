#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fanramsey/graph.hpp"

namespace fanramsey {

enum class GraphFormat { EdgeList, Graph6 };

GraphFormat parse_format(std::string_view name);

/// Malformed input. `line` is 1-based; `column` is the 1-based byte offset
/// within that line (0 when the error is not tied to a byte).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge list: one "u v" pair per line, 0-based ids, '#' starts a comment.
// A comment of the form "# vertices: N" fixes the order so isolated
// trailing vertices survive a round trip; otherwise the order is max id + 1.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// graph6, one graph per line.
Graph parse_graph6(std::string_view line);
std::string format_graph6(const Graph& g);
std::vector<Graph> parse_graph6_all(std::string_view text);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string format_graph(const Graph& g, GraphFormat format);

/// Throws IoError when the file cannot be opened, ParseError on bad content.
Graph read_graph(const std::string& path, GraphFormat format);
void write_graph(const std::string& path, const Graph& g, GraphFormat format);

/// Colourings are stored as their red graph.
TwoColoring read_coloring(const std::string& path, GraphFormat format);
void write_coloring(const std::string& path, const TwoColoring& k, GraphFormat format);

}  // namespace fanramsey
