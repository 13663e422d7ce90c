#include "rigidity/edge_list.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rigidity {

namespace {

// Strips comments and blank lines; returns payload lines.
std::vector<std::string> significant_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) out.push_back(line);
  }
  return out;
}

int parse_header(const std::string& line) {
  std::istringstream is(line);
  std::string tag;
  int n = 0;
  if (!(is >> tag >> n) || tag != "n" || n < 1)
    throw std::runtime_error("edge list: expected header line \"n <count>\"");
  return n;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  auto lines = significant_lines(in);
  if (lines.empty()) throw std::runtime_error("edge list: empty input");
  Graph g(parse_header(lines[0]));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream is(lines[i]);
    int u = 0, v = 0;
    if (!(is >> u >> v))
      throw std::runtime_error("edge list: bad edge line: " + lines[i]);
    g.add_edge(u, v);
  }
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

SquaredLengthMap read_lengths(std::istream& in, int* n_out) {
  auto lines = significant_lines(in);
  if (lines.empty()) throw std::runtime_error("lengths: empty input");
  int n = parse_header(lines[0]);
  if (n_out) *n_out = n;
  SquaredLengthMap m;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream is(lines[i]);
    int u = 0, v = 0;
    double value = 0;
    if (!(is >> u >> v >> value) || value <= 0)
      throw std::runtime_error("lengths: bad line: " + lines[i]);
    m[{std::min(u, v), std::max(u, v)}] = value;
  }
  return m;
}

void write_lengths(std::ostream& out, int n, const SquaredLengthMap& lengths) {
  out << "n " << n << "\n";
  out.precision(17);
  for (const auto& [e, value] : lengths)
    out << e.first << " " << e.second << " " << value << "\n";
}

}  // namespace rigidity
