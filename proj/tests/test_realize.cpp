#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "s3real/atlas.hpp"
#include "s3real/oracles.hpp"
#include "s3real/realize.hpp"

using namespace s3real;

namespace {

RealizationResult must_realize(const char* text) {
  RealizeOutcome out = realize(parse_sequence(text));
  REQUIRE_MESSAGE(out.accepted(), text);
  const RealizationResult& r = *out.result;
  CHECK(is_simple(r.graph));
  CHECK(degree_sequence(r.graph) == parse_sequence(text));
  Verdict v = verify(r.graph, r.certificate);
  CHECK_MESSAGE(v.ok, v.locus << ": " << v.reason);
  std::vector<Vertex> expect(r.graph.vertex_count());
  std::iota(expect.begin(), expect.end(), 1);
  CHECK(r.graph.vertices() == expect);
  return r;
}

bool traced(const RealizationResult& r, const std::string& label) {
  return std::find(r.trace.begin(), r.trace.end(), label) != r.trace.end();
}

}  // namespace

TEST_CASE("small explicit bases") {
  RealizationResult k7 = must_realize("6^7");
  CHECK(k7.graph == complete_graph(7));
  CHECK(traced(k7, "two-large:K7"));

  RealizationResult two = must_realize("6^4,5^2,4");
  MultiGraph expect = complete_graph(7);
  expect.remove_edge(5, 7);
  expect.remove_edge(6, 7);
  CHECK(two.graph == expect);

  RealizationResult one = must_realize("6^5,5^2");
  CHECK(one.graph.edge_count() == 20);
}

TEST_CASE("rejections name the violated condition") {
  RealizeOutcome a = realize(parse_sequence("5^8"));
  CHECK_FALSE(a.accepted());
  CHECK(a.rejection == "sum = 40 < 6n-4 = 44");
  RealizeOutcome b = realize(parse_sequence("7^3,6^4,3"));
  CHECK_FALSE(b.accepted());
  CHECK(b.rejection == "d_n = 3 < 4");
  CHECK(realize(parse_sequence("6^5,3,3")).rejection == "not graphic");
  CHECK(realize(parse_sequence("3,3,1,1")).rejection == "not graphic");
}

TEST_CASE("(6^8) inserts into the (6^3,5^4) atlas graph") {
  RealizationResult r = must_realize("6^8");
  CHECK(traced(r, "main:regular6:inverse-lift"));
  CHECK(traced(r, "two-large:atlas"));
  REQUIRE(r.certificate.kind == S3Kind::lift_expansion);
  const Certificate& c = r.certificate;
  // The split edge 3-4 of the atlas graph avoids its four degree-5 vertices.
  CHECK(c.v == 3);
  CHECK(c.w == 4);
  CHECK(lift(r.graph, c.u, c.v, c.w) == get_entry("(6^3,5^4)").graph);
}

TEST_CASE("named routes") {
  CHECK(traced(must_realize("10^3,4^8"), "two-large:tight:script"));
  CHECK(traced(must_realize("6^4,5^4"), "tight:d1=6:atlas"));
  CHECK(traced(must_realize("8^3,5^10"), "tight:d3>=n-5:z3+ham"));
  RealizationResult z = must_realize("6^6,5^4");
  CHECK(traced(z, "z3+ham:(4^6,3^4)"));
  // (d1, d2, 5^(n-2)) with sum 6n-2.
  CHECK(traced(must_realize("11,9,5^10"), "main:min=5:z3+ham"));
}

TEST_CASE("join family route") {
  // ((n-1)^2, 12, 4^(n-3)) with n = 17: sum = 32 + 12 + 56 = 100 >= 6n-2.
  std::vector<int> v{16, 16, 12};
  v.insert(v.end(), 14, 4);
  DegreeSequence s(v);
  REQUIRE(is_graphic(s));
  RealizeOutcome out = realize(s);
  REQUIRE(out.accepted());
  CHECK(std::find(out.result->trace.begin(), out.result->trace.end(), "two-large:join-family") !=
        out.result->trace.end());
  CHECK(verify(out.result->graph, out.result->certificate));
}

TEST_CASE("K6 expansion with k = 2 at n = 20") {
  // d1 + d2 - 10 = 7, remaining entries chosen to give sum 6n-4 = 116 with d3 <= n-6.
  std::vector<int> v{9, 8};
  v.insert(v.end(), 9, 6);
  v.insert(v.end(), 9, 5);
  DegreeSequence s(v);
  REQUIRE(s.sum() == 116);
  REQUIRE(is_graphic(s));
  RealizeOutcome out = realize(s);
  REQUIRE(out.accepted());
  CHECK(out.result->certificate.kind == S3Kind::k6_expansion);
  CHECK(std::find(out.result->trace.begin(), out.result->trace.end(), "tight:k6:k=2") !=
        out.result->trace.end());
  CHECK(verify(out.result->graph, out.result->certificate));
  // The quotient realizes (7, d3, ..., d16).
  std::vector<int> reduced{7};
  reduced.insert(reduced.end(), v.begin() + 2, v.end() - 4);
  MultiGraph q = contract_vertices(out.result->graph, out.result->certificate.vertices).graph;
  CHECK(degree_sequence(q) == DegreeSequence(reduced));
}

TEST_CASE("K6 expansion with k >= 3") {
  // (7^5,5^9): d1 + d2 - 10 = 4 and 7+7+7 - 15 = 6, so k = 3.
  std::vector<int> v(5, 7);
  v.insert(v.end(), 9, 5);
  DegreeSequence s(v);
  REQUIRE(s.sum() == 6 * 14 - 4);
  RealizeOutcome out = realize(s);
  REQUIRE(out.accepted());
  CHECK(out.result->certificate.kind == S3Kind::k6_expansion);
  CHECK(verify(out.result->graph, out.result->certificate));
  CHECK(std::find(out.result->trace.begin(), out.result->trace.end(), "tight:k6:k=3") !=
        out.result->trace.end());
}

TEST_CASE("Z3 builder") {
  Z3Build w4 = build_z3_realization(parse_sequence("4,3^4"));
  CHECK(degree_sequence(w4.graph) == parse_sequence("4,3^4"));
  CHECK(w4.certificate.kind == Z3Kind::kernel);
  CHECK(w4.certificate.kernel == "W4");
  Z3Build fig2 = build_z3_realization(parse_sequence("4^5,3^4"));
  CHECK(fig2.certificate.kernel == "(4^5,3^4)");
  Z3Build b = build_z3_realization(parse_sequence("4^6,3^4"));
  CHECK(degree_sequence(b.graph) == parse_sequence("4^6,3^4"));
  CHECK(is_simple(b.graph));
  CHECK(verify_z3(b.graph, b.certificate));
  CHECK(is_z3_connected(b.graph));
  CHECK_THROWS_AS(build_z3_realization(parse_sequence("5,3^5")), precondition_error);
  CHECK_THROWS_AS(build_z3_plus_ham(parse_sequence("7,5^5")), precondition_error);
}

TEST_CASE("Z3 builder covers the solid parts met in realization") {
  for (int n = 5; n <= 10; ++n) {
    for (const auto& s : graphic_sequences(n, 2)) {
      if (s.sum() < 4LL * n - 4 || s.sum() > 4LL * n + 8 || in_z3_exceptions(s)) continue;
      CAPTURE(s.to_string());
      Z3Build b = build_z3_realization(s);
      CHECK(degree_sequence(b.graph) == s);
      CHECK(is_simple(b.graph));
      CHECK(verify_z3(b.graph, b.certificate));
    }
  }
}

TEST_CASE("determinism") {
  for (const char* s : {"6^8", "8^3,5^10", "7^2,6^2,5^2,4^2", "6^6,5^4"}) {
    auto a = realize(parse_sequence(s));
    auto b = realize(parse_sequence(s));
    CHECK(a.result->graph == b.result->graph);
    CHECK(to_json(a.result->certificate) == to_json(b.result->certificate));
    CHECK(a.result->trace == b.result->trace);
  }
}

TEST_CASE("sweep at n = 7 and n = 8") {
  SweepReport r7 = sweep(7);
  CHECK(r7.ok());
  CHECK(r7.qualifying == 4);
  CHECK(r7.realized == 4);
  CHECK(r7.rejected == r7.graphic - 4);
  SweepReport r8 = sweep(8);
  CHECK(r8.ok());
  CHECK(r8.realized == r8.qualifying);
}

TEST_CASE("property: random qualifying sequences up to n = 40") {
  std::mt19937_64 rng(17);
  int done = 0;
  while (done < 300) {
    const int n = std::uniform_int_distribution<int>(13, 40)(rng);
    const int base = std::uniform_int_distribution<int>(4, 6)(rng);
    std::vector<int> v(static_cast<std::size_t>(n), base);
    long long sum = static_cast<long long>(base) * n;
    long long target = std::max(6LL * n - 4 + 2 * std::uniform_int_distribution<int>(0, 3)(rng), sum + sum % 2);
    while (sum < target) {
      // A third of the increments go to the first three entries.
      const auto i = static_cast<std::size_t>(rng() % 3 == 0 ? rng() % 3 : rng() % static_cast<unsigned>(n));
      if (v[i] < n - 1) ++v[i], ++sum;
    }
    DegreeSequence s(v);
    if (!is_graphic(s)) continue;
    ++done;
    CAPTURE(s.to_string());
    RealizeOutcome out = realize(s);
    REQUIRE(out.accepted());
    CHECK(is_simple(out.result->graph));
    CHECK(degree_sequence(out.result->graph) == s);
    CHECK(verify(out.result->graph, out.result->certificate));
  }
}
