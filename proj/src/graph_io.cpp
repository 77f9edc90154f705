#include "adhc/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace adhc {

namespace {

bool content_line(const std::string& line, std::string& trimmed) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return false;
  if (line[first] == '#') return false;
  const auto last = line.find_last_not_of(" \t\r");
  trimmed = line.substr(first, last - first + 1);
  return true;
}

}  // namespace

OrientedGraph read_graph(std::istream& in) {
  std::string line, content;
  int lineno = 0;
  int n = -1;
  // arcs applied incrementally so errors carry the offending line number
  std::vector<std::uint64_t> out, in_rows;

  while (std::getline(in, line)) {
    ++lineno;
    if (!content_line(line, content)) continue;

    std::istringstream fields(content);
    if (n < 0) {
      std::string tag;
      long value = -1;
      std::string extra;
      if (!(fields >> tag >> value) || tag != "n" || (fields >> extra))
        throw ParseError(ParseFault::MalformedHeader, lineno, "expected header \"n <N>\", got \"" + content + "\"");
      if (value < 0 || value > kMaxVertices)
        throw ParseError(ParseFault::MalformedHeader, lineno,
                         "vertex count " + std::to_string(value) + " outside [0," + std::to_string(kMaxVertices) + "]");
      n = static_cast<int>(value);
      out.assign(static_cast<std::size_t>(n), 0);
      in_rows.assign(static_cast<std::size_t>(n), 0);
      continue;
    }

    long u = -1, v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra))
      throw ParseError(ParseFault::BadArcLine, lineno, "expected \"<u> <v>\", got \"" + content + "\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(ParseFault::VertexOutOfRange, lineno,
                       "arc (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" + std::to_string(n));
    if (u == v) throw ParseError(ParseFault::Loop, lineno, "loop at vertex " + std::to_string(u));
    const auto ui = static_cast<std::size_t>(u), vi = static_cast<std::size_t>(v);
    if (out[ui] & bit_of(static_cast<int>(v)))
      throw ParseError(ParseFault::DuplicateArc, lineno,
                       "duplicate arc " + std::to_string(u) + "->" + std::to_string(v));
    if (out[vi] & bit_of(static_cast<int>(u)))
      throw ParseError(ParseFault::TwoCycle, lineno,
                       "2-cycle between " + std::to_string(u) + " and " + std::to_string(v));
    out[ui] |= bit_of(static_cast<int>(v));
    in_rows[vi] |= bit_of(static_cast<int>(u));
  }

  if (n < 0) throw ParseError(ParseFault::MissingHeader, lineno, "no \"n <N>\" header found");

  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v : set_bits(out[static_cast<std::size_t>(u)])) arcs.push_back({u, v});
  return OrientedGraph::from_arcs(n, arcs);
}

OrientedGraph read_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

OrientedGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_graph(in);
}

std::string write_graph(const OrientedGraph& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (const Arc& a : g.arcs()) out << a.tail << " " << a.head << "\n";
  return out.str();
}

void write_graph_file(const OrientedGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << write_graph(g);
}

}  // namespace adhc
