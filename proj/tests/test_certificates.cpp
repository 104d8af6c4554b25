#include <doctest.h>

#include <random>

#include "s3real/atlas.hpp"
#include "s3real/certificates.hpp"
#include "s3real/realize.hpp"
#include "tamper.hpp"

using namespace s3real;

TEST_CASE("kernel matching") {
  CHECK(matches_s3_kernel(complete_graph(7), "Kn"));
  CHECK(matches_s3_kernel(complete_graph(9), "Kn"));
  CHECK_FALSE(matches_s3_kernel(complete_graph(6), "Kn"));
  CHECK(matches_s3_kernel(parallel_edges(4), "mK2"));
  CHECK_FALSE(matches_s3_kernel(parallel_edges(3), "mK2"));
  CHECK(matches_s3_kernel(get_entry("K4*").graph, "K4*"));
  CHECK_FALSE(matches_s3_kernel(complete_graph(4), "K4*"));
  MultiGraph k133 = get_entry("K(1,3,3)").graph;
  k133.add_edge(1, 3);
  CHECK(matches_s3_kernel(k133, "K(1,3,3)"));
  CHECK(spans_kernel(complete_graph(5), wheel_graph(4)));
  CHECK_FALSE(spans_kernel(cycle_graph(5), wheel_graph(4)));
}

TEST_CASE("atlas certificates verify") {
  const AtlasEntry& f4 = get_entry("(7^4,4^4)");
  CHECK(verify(f4.graph, Certificate::make_script(*f4.script)));
  const AtlasEntry& f5 = get_entry("(6^3,5^4)");
  CHECK(verify(f5.graph, Certificate::make_z3_plus_ham(f5.decomposition->cycle,
                                                       Z3Certificate::make_kernel("(4^3,3^4)"))));
}

TEST_CASE("tampered script fails at the step") {
  const AtlasEntry& f4 = get_entry("(7^4,4^4)");
  LiftScript bad = *f4.script;
  // Point the first lift at a non-neighbour of its vertex.
  const LiftStep s = bad.steps.front();
  for (Vertex x : f4.graph.vertices()) {
    if (x != s.u && x != s.v && f4.graph.multiplicity(s.u, x) == 0) {
      bad.steps.front().w = x;
      break;
    }
  }
  Verdict v = verify(f4.graph, Certificate::make_script(bad));
  CHECK_FALSE(v.ok);
  CHECK(v.locus == "$");
  CHECK(v.reason.find("step 1") != std::string::npos);
}

TEST_CASE("Z3 certificates") {
  CHECK(verify_z3(get_entry("W4").graph, Z3Certificate::make_kernel("W4")));
  const MultiGraph& fig2 = get_entry("(4^5,3^4)").graph;
  MultiGraph quotient = contract_vertices(fig2, std::vector<Vertex>{5, 6, 7, 8, 9}).graph;
  CHECK(quotient.vertex_count() == 5);
  CHECK(spans_kernel(quotient, wheel_graph(4)));
  CHECK(verify_z3(fig2, Z3Certificate::make_w4({5, 6, 7, 8, 9}, Z3Certificate::make_kernel("W4"))));
  CHECK_FALSE(verify_z3(fig2, Z3Certificate::make_w4({1, 2, 3, 4, 5}, Z3Certificate::make_kernel("W4"))));

  MultiGraph pendant = get_entry("W4").graph;
  pendant.add_edge(5, 10);
  Verdict v = verify_z3(pendant, Z3Certificate::make_attach(10, Z3Certificate::make_kernel("W4")));
  CHECK_FALSE(v.ok);
  pendant.add_edge(6, 10);
  CHECK(verify_z3(pendant, Z3Certificate::make_attach(10, Z3Certificate::make_kernel("W4"))));
  CHECK(verify_z3(wheel_graph(4), Z3Certificate::make_oracle()));
  CHECK_FALSE(verify_z3(complete_graph(4), Z3Certificate::make_oracle()));
}

TEST_CASE("K6 expansion steps need a proper K6") {
  MultiGraph k7 = complete_graph(7);
  k7.remove_edge(6, 7);
  CHECK(verify(k7, Certificate::make_k6({1, 2, 3, 4, 5, 6}, Certificate::make_kernel("mK2"))));
  // In K6 plus a pendant vertex no path leaves and re-enters the K6.
  MultiGraph k6 = complete_graph(6);
  k6.add_edge(1, 7, 4);
  CHECK_FALSE(verify(k6, Certificate::make_k6({1, 2, 3, 4, 5, 6}, Certificate::make_kernel("mK2"))));
}

TEST_CASE("contraction steps") {
  // Two K7s joined by a 4-edge matching.
  MultiGraph g = complete_graph(7);
  for (int v = 8; v <= 14; ++v)
    for (int w = v + 1; w <= 14; ++w) g.add_edge(v, w);
  for (int i = 0; i < 4; ++i) g.add_edge(1 + i, 8 + i);
  std::vector<Vertex> inner{1, 2, 3, 4, 5, 6, 7};
  Certificate good = Certificate::make_contract(
      inner, Certificate::make_kernel("Kn"),
      Certificate::make_layoff(1, Certificate::make_kernel("Kn")));
  CHECK(verify(g, good));
  Certificate bad = Certificate::make_contract(inner, Certificate::make_kernel("Kn"),
                                               Certificate::make_kernel("Kn"));
  Verdict v = verify(g, bad);
  CHECK_FALSE(v.ok);
  CHECK(v.locus == "$/quotient");
  std::vector<Vertex> split{1, 8};
  CHECK_FALSE(verify(g, Certificate::make_contract(split, Certificate::make_kernel("mK2"),
                                                   Certificate::make_kernel("Kn"))));
}

TEST_CASE("JSON round trip") {
  auto out = realize(parse_sequence("6^6,5^4"));
  REQUIRE(out.accepted());
  nlohmann::json doc = certificate_document(out.result->certificate);
  CHECK(doc["schema_version"] == kCertificateSchema);
  Certificate back = certificate_from_json(doc);
  CHECK(certificate_document(back) == doc);
  CHECK(verify(out.result->graph, back));
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::object()), precondition_error);
  nlohmann::json wrong = doc;
  wrong["schema_version"] = 99;
  CHECK_THROWS_AS(certificate_from_json(wrong), precondition_error);
}

TEST_CASE("property: tampered certificates are rejected") {
  std::mt19937_64 rng(3);
  std::vector<RealizationResult> pool;
  for (const char* s : {"6^8", "6^6,5^4", "7^2,6^2,5^2,4^2", "8^3,5^10", "10^3,4^8", "6^4,5^2,4",
                        "9,8,7,6^5,5^2,4"})
    pool.push_back(*realize(parse_sequence(s)).result);
  int done = 0;
  for (int trial = 0; done < 200; ++trial) {
    RealizationResult r = pool[static_cast<std::size_t>(trial) % pool.size()];
    if (!testing::tamper(r.certificate, trial, rng)) continue;
    ++done;
    CAPTURE(trial);
    CHECK_FALSE(verify(r.graph, r.certificate).ok);
  }
}
