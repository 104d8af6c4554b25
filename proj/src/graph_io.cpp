#include <sstream>

#include "s3real/graph.hpp"

namespace s3real {

std::string to_edge_list(const MultiGraph& g) {
  std::ostringstream out;
  for (Vertex v : g.vertices())
    if (g.degree(v) == 0) out << v << '\n';
  for (const Edge& e : g.edge_instances()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

MultiGraph parse_edge_list(const std::string& text) {
  MultiGraph g;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<long long> ids;
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size())
        throw precondition_error("line " + std::to_string(lineno) + ": bad vertex id '" + tok + "'");
      ids.push_back(value);
    }
    if (ids.empty()) continue;
    if (ids.size() > 2)
      throw precondition_error("line " + std::to_string(lineno) + ": expected 'u v' or 'v'");
    if (ids.size() == 1) {
      g.add_vertex(static_cast<Vertex>(ids[0]));
    } else {
      if (ids[0] == ids[1]) throw precondition_error("line " + std::to_string(lineno) + ": loop");
      g.add_edge(static_cast<Vertex>(ids[0]), static_cast<Vertex>(ids[1]));
    }
  }
  return g;
}

std::string to_dot(const MultiGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (Vertex v : g.vertices()) out << "  " << v << ";\n";
  for (const Edge& e : g.edge_instances()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace s3real
