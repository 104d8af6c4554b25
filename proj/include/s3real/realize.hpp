#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "s3real/certificates.hpp"
#include "s3real/graph.hpp"
#include "s3real/sequences.hpp"

namespace s3real {

struct RealizeOptions {
  /// Search states the Z3 builder may expand per call.
  long long budget = 200'000;
  /// Edge cap for oracle leaves and the swap fallback.
  int oracle_cap = kDefaultEdgeCap;
  std::uint64_t seed = 1;
};

/// The Z3 builder gave up. Existence is not in question, only construction.
class z3_build_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Z3Build {
  MultiGraph graph;
  Z3Certificate certificate;
};

/// Simple Z3-connected realization of a Z3-realizable sequence.
///
/// Memoized search over degree multisets with two reverse moves: collapse a
/// hub and four rims into one vertex (undoing a W4 expansion), or drop a
/// vertex of degree t >= 2 and decrement t other entries (undoing an attach).
/// Leaves are atlas Z3 graphs, K1, or small graphs confirmed by the oracle.
/// When the search fails within budget and the sequence fits the oracle cap,
/// seeded random double-edge swaps from a Havel-Hakimi realization are tried.
Z3Build build_z3_realization(const DegreeSequence& seq, const RealizeOptions& opts = {});

/// Havel-Hakimi realization on vertices 1..n (vertex i gets d_i).
MultiGraph havel_hakimi(const DegreeSequence& seq);

struct RealizationResult {
  MultiGraph graph;
  Certificate certificate;
  std::vector<std::string> trace;
};

struct RealizeOutcome {
  std::optional<RealizationResult> result;
  std::string rejection;  // set when result is empty

  [[nodiscard]] bool accepted() const { return result.has_value(); }
};

/// Simple S3-connected realization with certificate, or the reason none
/// exists. Vertex ids of the result are 1..n.
RealizeOutcome realize(const DegreeSequence& seq, const RealizeOptions& opts = {});

/// d_1 = d_2 = n-1, d_n >= 4, sum >= 6n-4, n >= 7.
RealizationResult realize_two_large(const DegreeSequence& seq, const RealizeOptions& opts = {});

/// d_n >= 5, sum = 6n-4, n >= 7.
RealizationResult realize_min5_tight(const DegreeSequence& seq, const RealizeOptions& opts = {});

/// Z3-connected realization of seq - 2 plus a Hamiltonian cycle of its
/// complement.
RealizationResult build_z3_plus_ham(const DegreeSequence& seq, const RealizeOptions& opts = {});

/// Order-preserving relabelling onto 1..n, applied to graph and certificate.
RealizationResult normalize_ids(RealizationResult r);

struct SweepReport {
  int n = 0;
  long long graphic = 0;     // graphic sequences enumerated (entries >= 0)
  long long qualifying = 0;  // d_n >= 4 and sum >= 6n-4
  long long realized = 0;    // simple, exact degrees, certificate verified
  long long rejected = 0;    // non-qualifying sequences rejected
  std::vector<std::string> failures;
  std::map<std::string, long long> labels;  // trace label -> occurrences

  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Realizes and verifies every qualifying graphic sequence of length n and
/// checks that the rest are rejected. threads = 0 uses all cores.
SweepReport sweep(int n, const RealizeOptions& opts = {}, unsigned threads = 0);

}  // namespace s3real
