#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "adhc/graph.hpp"

namespace adhc {

// Text interchange format, UTF-8 and line oriented:
//   - lines starting with '#' are comments, blank lines are skipped
//   - first content line:  "n <N>"
//   - every other content line:  "<u> <v>"  meaning the arc u -> v (0-based)
// Duplicate arcs, loops and 2-cycles are hard errors.

enum class ParseFault {
  MissingHeader,
  MalformedHeader,
  BadArcLine,
  VertexOutOfRange,
  Loop,
  TwoCycle,
  DuplicateArc,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseFault fault, int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), fault_(fault), line_(line) {}
  ParseFault fault() const { return fault_; }
  int line() const { return line_; }

 private:
  ParseFault fault_;
  int line_;
};

OrientedGraph read_graph(std::istream& in);
OrientedGraph read_graph_text(std::string_view text);
OrientedGraph read_graph_file(const std::filesystem::path& path);

std::string write_graph(const OrientedGraph& g);
void write_graph_file(const OrientedGraph& g, const std::filesystem::path& path);

}  // namespace adhc
