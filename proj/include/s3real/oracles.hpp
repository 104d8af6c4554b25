#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "s3real/graph.hpp"

namespace s3real {

inline constexpr int kDefaultEdgeCap = 26;
/// Boundary classes are indexed by 3^(n-1); beyond this the bitmaps get silly.
inline constexpr int kOracleMaxVertices = 16;

class cap_exceeded : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

/// Vertex -> residue in {0,1,2}, zero total.
struct BoundaryFunction {
  std::map<Vertex, int> residues;

  static BoundaryFunction zero(const MultiGraph& g);
  [[nodiscard]] bool is_valid_for(const MultiGraph& g) const;
};

/// d+(v) - d-(v) mod 3 for every vertex.
BoundaryFunction boundary_of(const MultiGraph& g, const Orientation& orientation);

/// Base-3 index of the residues of the first n-1 vertices (ascending ids).
std::size_t boundary_class(const MultiGraph& g, const BoundaryFunction& beta);
BoundaryFunction boundary_from_class(const MultiGraph& g, std::size_t cls);

struct OracleOptions {
  int edge_cap = kDefaultEdgeCap;
  /// 0 picks std::thread::hardware_concurrency(). Results do not depend on it.
  unsigned threads = 0;
};

struct AchievabilityReport {
  std::size_t class_count = 0;
  std::vector<std::uint8_t> unrestricted;  // per boundary class
  std::vector<std::uint8_t> strong;        // per class; all zero unless requested
  std::vector<std::uint64_t> counts;       // orientations landing in each class
  std::map<std::size_t, Orientation> witnesses;
  bool strong_requested = false;

  [[nodiscard]] std::uint64_t total_orientations() const;
  [[nodiscard]] bool all_unrestricted() const;
  [[nodiscard]] bool all_strong() const;
};

/// Full enumeration of all 2^m orientations, bucketed by boundary class.
/// Witnesses are recorded for `witness_classes` (strong ones when
/// require_strong is set).
AchievabilityReport achievable_boundaries(const MultiGraph& g, bool require_strong,
                                          const OracleOptions& opts = {},
                                          const std::vector<std::size_t>& witness_classes = {});

bool is_s3_connected(const MultiGraph& g, const OracleOptions& opts = {});
bool is_z3_connected(const MultiGraph& g, const OracleOptions& opts = {});

/// Pruned backtracking over edge directions in canonical order; the first
/// witness found is returned.
std::optional<Orientation> find_beta_orientation(const MultiGraph& g, const BoundaryFunction& beta,
                                                 bool require_strong,
                                                 const OracleOptions& opts = {});

/// Backtracking realization on vertices 1..n (vertex i gets d_i). n <= 8.
std::optional<MultiGraph> brute_force_realization(const DegreeSequence& seq, bool simple_only);

/// Directed pairs (tail, head) in canonical edge order.
std::vector<std::pair<Vertex, Vertex>> directed_edges(const MultiGraph& g,
                                                      const Orientation& orientation);

}  // namespace s3real
