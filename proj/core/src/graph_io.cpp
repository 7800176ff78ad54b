#include "k2l/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace k2l {

namespace {

// Next non-comment, non-blank line; false at EOF.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw FormatError("empty graph input");
  std::istringstream head(line);
  long long n = -1, m = -1;
  if (!(head >> n >> m) || n < 0 || m < 0)
    throw FormatError("expected header line 'n m', got: " + line);
  std::string extra;
  if (head >> extra) throw FormatError("trailing tokens after 'n m': " + line);

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line))
      throw FormatError("expected " + std::to_string(m) + " edges, got " +
                        std::to_string(i));
    std::istringstream es(line);
    long long u, v;
    if (!(es >> u >> v)) throw FormatError("bad edge line: " + line);
    if (es >> extra) throw FormatError("trailing tokens on edge line: " + line);
    if (u >= v)
      throw FormatError("edge line must satisfy u < v: " + line);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return build_graph(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

}  // namespace k2l
