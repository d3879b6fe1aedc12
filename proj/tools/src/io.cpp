#include "io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace coverideal::cli {

namespace {

// Strips a trailing comment and surrounding whitespace.
std::string strip(const std::string& raw) {
  std::string line = raw;
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!line.empty() && is_space(static_cast<unsigned char>(line.back()))) line.pop_back();
  std::size_t start = 0;
  while (start < line.size() && is_space(static_cast<unsigned char>(line[start]))) ++start;
  return line.substr(start);
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in, const std::string& source) {
  int n = -1;
  std::vector<std::vector<int>> edges;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(raw);
    if (line.empty()) continue;
    std::istringstream tokens(line);
    std::string directive;
    tokens >> directive;
    if (directive == "n") {
      if (n >= 0) throw ParseError(source, line_no, "duplicate vertex count line");
      if (!(tokens >> n) || n < 1)
        throw ParseError(source, line_no, "expected a positive vertex count after 'n'");
      std::string extra;
      if (tokens >> extra)
        throw ParseError(source, line_no, "unexpected token '" + extra + "' after vertex count");
    } else if (directive == "e") {
      if (n < 0) throw ParseError(source, line_no, "edge line before the 'n' line");
      std::vector<int> edge;
      int v = 0;
      while (tokens >> v) {
        if (v < 1 || v > n)
          throw ParseError(source, line_no,
                           "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        edge.push_back(v - 1);
      }
      if (!tokens.eof())
        throw ParseError(source, line_no, "expected 1-based vertex numbers after 'e'");
      std::sort(edge.begin(), edge.end());
      edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
      if (edge.size() < 2)
        throw ParseError(source, line_no, "an edge needs at least two distinct vertices");
      edges.push_back(std::move(edge));
    } else {
      throw ParseError(source, line_no, "unknown directive '" + directive + "'");
    }
  }
  if (n < 0) throw ParseError(source, line_no, "missing 'n' line");
  return Hypergraph(n, edges, EdgePolicy::Minimalize);
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return read_hypergraph(in, path);
}

std::string write_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << "n " << h.vertex_count() << "\n";
  for (const auto& edge : h.edges()) {
    out << "e";
    for (int v : edge) out << " " << v + 1;
    out << "\n";
  }
  return out.str();
}

}  // namespace coverideal::cli
