#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "s3real/sequences.hpp"

namespace s3real {

using Vertex = int;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u{};
  Vertex v{};

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Loopless multigraph on stable integer vertex ids.
///
/// Parallel edges are stored as multiplicities. Edge instances are enumerated
/// in canonical order: by (u, v) with u < v, parallel copies adjacent.
class MultiGraph {
 public:
  MultiGraph() = default;

  static MultiGraph from_edge_list(std::span<const std::pair<Vertex, Vertex>> pairs,
                                   std::span<const Vertex> extra_vertices = {});

  void add_vertex(Vertex v);
  void add_edge(Vertex a, Vertex b, int count = 1);
  void remove_edge(Vertex a, Vertex b, int count = 1);
  void remove_vertex(Vertex v);

  [[nodiscard]] bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }
  [[nodiscard]] int multiplicity(Vertex a, Vertex b) const;
  [[nodiscard]] int degree(Vertex v) const;
  [[nodiscard]] std::size_t vertex_count() const { return adj_.size(); }
  [[nodiscard]] long long edge_count() const { return edge_count_; }

  /// Ascending vertex ids.
  [[nodiscard]] std::vector<Vertex> vertices() const;
  /// Distinct neighbours in ascending order.
  [[nodiscard]] std::vector<Vertex> neighbors(Vertex v) const;
  /// Adjacency with multiplicities.
  [[nodiscard]] const std::map<Vertex, int>& incident(Vertex v) const;
  /// Distinct edges with their multiplicity, canonical order.
  [[nodiscard]] std::vector<std::pair<Edge, int>> edges() const;
  /// One entry per edge instance, canonical order.
  [[nodiscard]] std::vector<Edge> edge_instances() const;

  [[nodiscard]] Vertex max_vertex() const;
  /// max id + 1, or 1 for the empty graph.
  [[nodiscard]] Vertex fresh_vertex() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  std::map<Vertex, std::map<Vertex, int>> adj_;
  long long edge_count_ = 0;
};

/// Cyclic vertex order; consecutive vertices (with wraparound) are adjacent.
struct HamCycleWitness {
  std::vector<Vertex> order;
};

/// One bit per edge instance of `edge_instances()`; false keeps the canonical
/// direction u -> v, true reverses it.
using Orientation = std::vector<bool>;

struct ContractResult {
  MultiGraph graph;
  /// Old id -> id in the quotient. A merged class takes its smallest id.
  std::map<Vertex, Vertex> mapping;
};

struct ClosureResult {
  MultiGraph closure;
  std::vector<Edge> added;  // insertion order
};

// Construction helpers.
MultiGraph complete_graph(int n, Vertex first = 1);
MultiGraph cycle_graph(int n, Vertex first = 1);
MultiGraph parallel_edges(int m);  // mK2 on {1, 2}
MultiGraph wheel_graph(int rim);   // hub 1, rim 2..rim+1

DegreeSequence degree_sequence(const MultiGraph& g);
bool is_simple(const MultiGraph& g);
bool is_connected(const MultiGraph& g);

MultiGraph delete_vertex(const MultiGraph& g, Vertex v);
MultiGraph induced_subgraph(const MultiGraph& g, std::span<const Vertex> vertices);
/// Removes one instance per listed edge.
MultiGraph remove_edges(const MultiGraph& g, std::span<const Edge> edges);

/// G - u + vw. Needs d(u) >= 4, uv and uw present, v != w.
MultiGraph lift(const MultiGraph& g, Vertex u, Vertex v, Vertex w);

/// Identifies the ends of each listed edge instance and drops the loops.
ContractResult contract(const MultiGraph& g, std::span<const Edge> edge_set);
/// Contracts every edge induced by `vertices`.
ContractResult contract_vertices(const MultiGraph& g, std::span<const Vertex> vertices);

MultiGraph join(const MultiGraph& g, const MultiGraph& h);
MultiGraph complement(const MultiGraph& g);

/// Bondy-Chvatal closure. Pairs are swept in lexicographic order, repeatedly,
/// with degrees updated after each insertion; the order is reproducible.
ClosureResult bc_closure(const MultiGraph& g);

bool is_hamiltonian_cycle(const MultiGraph& g, const HamCycleWitness& cycle);

/// Closure unwinding when the closure is complete, bounded backtracking
/// otherwise. Returns nullopt when no cycle exists or the search cap is hit
/// (`exhausted` is false only in the latter case).
std::optional<HamCycleWitness> hamiltonian_cycle(const MultiGraph& g,
                                                 long long search_cap = 5'000'000,
                                                 bool* exhausted = nullptr);

/// New vertex adjacent to exactly `targets` (>= 4 distinct vertices).
MultiGraph inverse_layoff(const MultiGraph& g, std::span<const Vertex> targets,
                          Vertex* added = nullptr);

/// New vertex adjacent to targets and both ends of split_edge, which is removed.
MultiGraph inverse_lift(const MultiGraph& g, std::span<const Vertex> targets, Edge split_edge,
                        Vertex* added = nullptr);

struct K6Expansion {
  MultiGraph graph;
  std::vector<Vertex> k6;  // v_1..v_6; v_1 reuses the id of the replaced vertex
};

/// Replaces u by a K6; u's neighbours in ascending order are dealt out in
/// blocks of quotas[i] to v_1..v_k.
K6Expansion expand_k6(const MultiGraph& g, Vertex u, std::span<const int> quotas);

bool is_strongly_connected(const MultiGraph& g, const Orientation& orientation);

/// Text edge list: one "u v" per line (repeats give multiplicity), a lone
/// "v" declares an isolated vertex, '#' starts a comment.
std::string to_edge_list(const MultiGraph& g);
MultiGraph parse_edge_list(const std::string& text);
std::string to_dot(const MultiGraph& g, const std::string& name = "G");

}  // namespace s3real
