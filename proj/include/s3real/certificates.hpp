#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "s3real/atlas.hpp"
#include "s3real/graph.hpp"
#include "s3real/oracles.hpp"

namespace s3real {

inline constexpr int kCertificateSchema = 1;

enum class Z3Kind { kernel, w4_contract, attach, oracle };

/// Z3-connectivity proof tree. Child graphs are re-derived by the verifier.
///
///   kernel       spanning supergraph of the atlas Z3 graph `kernel`
///   w4_contract  `vertices` span a W4; children[0] proves the quotient
///   attach       `vertex` has >= 2 edges; children[0] proves g - vertex
///   oracle       exhaustive check, edge count within the cap
///
/// attach rests on contraction closure: g - vertex Z3-connected and a
/// quotient of two vertices joined by >= 2 parallel edges.
struct Z3Certificate {
  Z3Kind kind = Z3Kind::oracle;
  std::string kernel;
  std::vector<Vertex> vertices;
  Vertex vertex{};
  std::vector<Z3Certificate> children;

  static Z3Certificate make_kernel(std::string name);
  static Z3Certificate make_w4(std::vector<Vertex> five, Z3Certificate quotient);
  static Z3Certificate make_attach(Vertex v, Z3Certificate rest);
  static Z3Certificate make_oracle();
};

enum class S3Kind {
  kernel,
  lift_expansion,
  layoff_expansion,
  contract,
  k6_expansion,
  z3_plus_ham,
  script_reduction
};

/// S3-connectivity proof tree.
///
///   kernel            "K(1,3,3)", "K4*", "mK2" (m >= 4) or "Kn" (n >= 7)
///   lift_expansion    children[0] proves lift(g, u, v, w)
///   layoff_expansion  d(u) >= 4; children[0] proves g - u
///   contract          children = {inner on G[vertices], quotient}
///   k6_expansion      `vertices` span a proper K6; children[0] proves G/K6
///   z3_plus_ham       `cycle` is Hamiltonian; z3[0] proves g - E(cycle)
///   script_reduction  replaying `script` lands on a graph spanning its kernel
struct Certificate {
  S3Kind kind = S3Kind::kernel;
  std::string kernel;
  Vertex u{}, v{}, w{};
  std::vector<Vertex> vertices;
  HamCycleWitness cycle;
  LiftScript script;
  std::vector<Certificate> children;
  std::vector<Z3Certificate> z3;

  static Certificate make_kernel(std::string name);
  static Certificate make_lift(Vertex u, Vertex v, Vertex w, Certificate child);
  static Certificate make_layoff(Vertex u, Certificate child);
  static Certificate make_contract(std::vector<Vertex> inner_vertices, Certificate inner,
                                   Certificate quotient);
  static Certificate make_k6(std::vector<Vertex> six, Certificate quotient);
  static Certificate make_z3_plus_ham(HamCycleWitness cycle, Z3Certificate solid);
  static Certificate make_script(LiftScript script);
};

struct Verdict {
  bool ok = true;
  std::string locus;   // path to the failing step, e.g. "$/child/quotient"
  std::string reason;
  explicit operator bool() const { return ok; }
};

struct VerifyOptions {
  OracleOptions oracle;
};

Verdict verify(const MultiGraph& g, const Certificate& cert, const VerifyOptions& opts = {});
Verdict verify_z3(const MultiGraph& g, const Z3Certificate& cert, const VerifyOptions& opts = {});

/// True if some bijection V(kernel) -> V(g) maps every edge multiplicity of
/// the kernel to at most the corresponding multiplicity in g. Both S3 and Z3
/// connectivity survive adding edges, so this is the kernel match.
bool spans_kernel(const MultiGraph& g, const MultiGraph& kernel);

/// Structural S3 kernel test for the names accepted by verify.
bool matches_s3_kernel(const MultiGraph& g, const std::string& name);

std::string to_string(S3Kind k);
std::string to_string(Z3Kind k);

nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const Z3Certificate& cert);
/// Wraps a certificate with the schema version.
nlohmann::json certificate_document(const Certificate& cert);
/// Throws precondition_error on malformed input.
Certificate certificate_from_json(const nlohmann::json& doc);
Z3Certificate z3_certificate_from_json(const nlohmann::json& node);

/// Number of steps in the tree, for reporting.
std::size_t certificate_size(const Certificate& cert);

}  // namespace s3real
