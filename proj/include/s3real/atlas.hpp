#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "s3real/graph.hpp"

namespace s3real {

enum class Claim { s3_connected, z3_connected };

std::string to_string(Claim c);

struct LiftStep {
  Vertex u{}, v{}, w{};
  friend bool operator==(const LiftStep&, const LiftStep&) = default;
};

struct LiftScript {
  std::vector<LiftStep> steps;
  std::string kernel;  // "K4*" or "K(1,3,3)"
  friend bool operator==(const LiftScript&, const LiftScript&) = default;
};

/// Z3-connected solid part plus a Hamiltonian cycle on the remaining edges.
struct Decomposition {
  std::string solid_entry;  // atlas name of the solid part
  HamCycleWitness cycle;
};

struct AtlasEntry {
  std::string name;
  MultiGraph graph;
  Claim claim = Claim::s3_connected;
  std::optional<Decomposition> decomposition;
  std::optional<LiftScript> script;
  std::uint64_t checksum = 0;  // FNV-1a over to_edge_list(graph)
};

/// Throws precondition_error for an unknown key.
const AtlasEntry& get_entry(const std::string& name);
const AtlasEntry* find_entry(const std::string& name);
std::vector<std::string> list_entries();

/// Atlas Z3 graphs keyed by degree sequence.
const AtlasEntry* z3_entry_for(const DegreeSequence& seq);

std::uint64_t fnv1a64(const std::string& text);

/// Applies the steps in order; throws precondition_error naming the first step
/// whose lift precondition fails.
MultiGraph replay_script(const MultiGraph& g, const LiftScript& script);

/// Cycle edges removed: the Z3-connected part of a decomposition.
MultiGraph solid_part(const MultiGraph& g, const HamCycleWitness& cycle);

struct JoinFamily {
  MultiGraph graph;
  LiftScript script;
  Vertex u1 = 1, u2 = 2, u = 3;
  std::vector<int> cycle_lengths;
};

/// K2{u1,u2} joined with d = (d3-2)/2 cycles sharing hub u. All cycles carry
/// two further vertices except the last, which takes the rest. Cycle vertices
/// are numbered from 4 in cycle order.
JoinFamily build_join_family(int n, int d3);

}  // namespace s3real
